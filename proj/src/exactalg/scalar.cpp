#include "sencalc/exactalg/scalar.hpp"

#include <fmt/format.h>

#include "sencalc/errors.hpp"

namespace sencalc::exactalg {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

void require_prime(long p) {
    if (!is_prime(p)) throw InvalidInput(fmt::format("{} is not a prime", p));
}

int valuation(const Integer& a, long p) {
    if (a == 0) return kInfiniteValuation;
    Integer x = abs(a);
    int v = 0;
    const Integer pz(p);
    while (mpz_divisible_p(x.get_mpz_t(), pz.get_mpz_t())) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
        ++v;
    }
    return v;
}

int valuation(const Rational& a, long p) {
    if (a == 0) return kInfiniteValuation;
    return valuation(a.get_num(), p) - valuation(a.get_den(), p);
}

Integer power(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational power(const Rational& base, unsigned long exponent) {
    Rational r(power(base.get_num(), exponent), power(base.get_den(), exponent));
    r.canonicalize();
    return r;
}

Integer prime_power(long p, unsigned long exponent) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), exponent);
    return r;
}

Integer factorial(unsigned long k) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

long factorial_valuation(long p, long k) {
    require_prime(p);
    if (k < 0) throw InvalidInput("factorial_valuation needs k >= 0");
    long digit_sum = 0;
    for (long d : base_digits(k, p)) digit_sum += d;
    return (k - digit_sum) / (p - 1);
}

std::vector<long> base_digits(long m, long p) {
    std::vector<long> digits;
    while (m > 0) {
        digits.push_back(m % p);
        m /= p;
    }
    return digits;
}

Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer symmetric_residue(const Integer& a, const Integer& m) {
    Integer r = mod_floor(a, m);
    if (2 * r > m) r -= m;
    return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        if (m == 1) return 0;
        throw InvalidInput(fmt::format("{} is not invertible mod {}", a.get_str(), m.get_str()));
    }
    return r;
}

Rational fraction(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidInput("zero denominator");
    Rational out(num, den);
    out.canonicalize();
    return out;
}

bool is_integral(const Rational& a) { return a.get_den() == 1; }

bool is_p_integral(const Rational& a, long p) {
    return mpz_divisible_ui_p(a.get_den().get_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

Integer reduce_p_integral(const Rational& a, const Integer& m) {
    if (a.get_den() == 1) return mod_floor(a.get_num(), m);
    return mod_floor(a.get_num() * inverse_mod(a.get_den(), m), m);
}

std::string to_string(const Integer& a) { return a.get_str(); }

std::string to_string(const Rational& a) { return a.get_str(); }

long to_long(const Integer& a) {
    if (!a.fits_slong_p()) throw InvalidInput("integer does not fit in a machine word");
    return a.get_si();
}

}  // namespace sencalc::exactalg
