#include "sencalc/exactalg/padic.hpp"

#include <fmt/format.h>

#include "sencalc/errors.hpp"

namespace sencalc::exactalg {

PAdicScalar::PAdicScalar(long p, int precision, const Integer& value)
    : p_(p), precision_(precision) {
    require_prime(p);
    if (precision < 1) throw InvalidInput("precision must be at least 1");
    residue_ = mod_floor(value, modulus());
}

Integer PAdicScalar::modulus() const { return prime_power(p_, static_cast<unsigned long>(precision_)); }

int PAdicScalar::valuation() const {
    if (residue_ == 0) return precision_;
    return exactalg::valuation(residue_, p_);
}

bool PAdicScalar::is_unit() const { return valuation() == 0; }

PAdicScalar PAdicScalar::inverse() const {
    return PAdicScalar(p_, precision_, inverse_mod(residue_, modulus()));
}

PAdicScalar PAdicScalar::pow(unsigned long exponent) const {
    Integer r;
    const Integer m = modulus();
    mpz_powm_ui(r.get_mpz_t(), residue_.get_mpz_t(), exponent, m.get_mpz_t());
    return PAdicScalar(p_, precision_, r);
}

PAdicScalar PAdicScalar::operator-() const { return PAdicScalar(p_, precision_, -residue_); }

PAdicScalar& PAdicScalar::operator+=(const PAdicScalar& other) {
    check_compatible(other);
    residue_ = mod_floor(residue_ + other.residue_, modulus());
    return *this;
}

PAdicScalar& PAdicScalar::operator-=(const PAdicScalar& other) {
    check_compatible(other);
    residue_ = mod_floor(residue_ - other.residue_, modulus());
    return *this;
}

PAdicScalar& PAdicScalar::operator*=(const PAdicScalar& other) {
    check_compatible(other);
    residue_ = mod_floor(residue_ * other.residue_, modulus());
    return *this;
}

std::string PAdicScalar::to_string() const {
    return fmt::format("{} mod {}^{}", residue_.get_str(), p_, precision_);
}

void PAdicScalar::check_compatible(const PAdicScalar& other) const {
    if (p_ != other.p_ || precision_ != other.precision_) {
        throw InvalidInput(fmt::format("mixed rings Z/{}^{} and Z/{}^{}", p_, precision_, other.p_,
                                       other.precision_));
    }
}

}  // namespace sencalc::exactalg
