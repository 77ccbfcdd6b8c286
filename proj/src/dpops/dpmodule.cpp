#include "sencalc/dpops/dpmodule.hpp"

#include <fmt/format.h>

#include "sencalc/errors.hpp"

namespace sencalc::dpops {

using exactalg::binomial;

std::string DPBasisMonomial::to_string() const {
    std::string out;
    auto append = [&](const std::string& s) {
        if (!out.empty()) out += ' ';
        out += s;
    };
    if (a > 0) append(fmt::format("g{}", a));
    if (b == 1) append("theta");
    if (b > 1) append(fmt::format("theta^{}", b));
    if (c == 1) append("eps");
    return out.empty() ? "1" : out;
}

DPModule::DPModule(DPWeights weights, int degree_bound, EpsilonPart part)
    : weights_(weights), bound_(degree_bound), part_(part) {
    if (weights.gamma < 0 || weights.theta < 0 || weights.epsilon < 0) throw InvalidInput("negative generator weight");
    if (degree_bound < 0) throw InvalidInput("negative degree bound");
    if (weights.epsilon == 0 && part == EpsilonPart::odd) throw InvalidInput("odd part requested without epsilon");
    basis_.resize(static_cast<std::size_t>(bound_) + 1);

    std::vector<int> cs;
    if (part != EpsilonPart::odd) cs.push_back(0);
    if (part != EpsilonPart::even && weights.epsilon > 0) cs.push_back(1);
    for (int d = 0; d <= bound_; ++d) {
        for (long b = 0; b == 0 || (weights.theta > 0 && b * weights.theta <= d); ++b) {
            for (int c : cs) {
                const long rest = d - b * weights.theta - c * weights.epsilon;
                if (rest < 0) continue;
                long a = 0;
                if (weights.gamma == 0) {
                    if (rest != 0) continue;
                } else {
                    if (rest % weights.gamma != 0) continue;
                    a = rest / weights.gamma;
                }
                const DPBasisMonomial m{a, b, c};
                index_[m] = basis_[d].size();
                basis_[d].push_back(m);
            }
        }
    }
}

long DPModule::degree(const DPBasisMonomial& m) const {
    return m.a * weights_.gamma + m.b * weights_.theta + m.c * weights_.epsilon;
}

bool DPModule::contains(const DPBasisMonomial& m) const { return index_.count(m) > 0; }

const std::vector<DPBasisMonomial>& DPModule::basis(int degree) const {
    static const std::vector<DPBasisMonomial> empty;
    if (degree < 0 || degree > bound_) return empty;
    return basis_[degree];
}

std::optional<std::size_t> DPModule::index_of(const DPBasisMonomial& m) const {
    const auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Integer dp_multiply(long i, long j) {
    if (i < 0 || j < 0) throw InvalidInput("divided power index must be non-negative");
    return binomial(i + j, i);
}

Integer factorization_unit(long m, long p) {
    Integer denominator = 1;
    const auto digits = exactalg::base_digits(m, p);
    for (std::size_t k = 0; k < digits.size(); ++k) {
        denominator *= exactalg::power(exactalg::factorial(exactalg::prime_power(p, k).get_ui()),
                                       static_cast<unsigned long>(digits[k]));
    }
    return exactalg::factorial(static_cast<unsigned long>(m)) / denominator;
}

DPElement dp_monomial(const DPBasisMonomial& m, const Rational& c) {
    DPElement out;
    if (c != 0) out[m] = c;
    return out;
}

void dp_accumulate(DPElement& into, const DPElement& x, const Rational& scale) {
    for (const auto& [m, c] : x) {
        Rational& slot = into[m];
        slot += c * scale;
        if (slot == 0) into.erase(m);
    }
}

DPElement dp_product(const DPElement& x, const DPElement& y) {
    DPElement out;
    for (const auto& [mx, cx] : x) {
        for (const auto& [my, cy] : y) {
            if (mx.c + my.c > 1) continue;
            const DPBasisMonomial m{mx.a + my.a, mx.b + my.b, mx.c + my.c};
            dp_accumulate(out, dp_monomial(m, cx * cy * Rational(dp_multiply(mx.a, my.a))));
        }
    }
    return out;
}

std::string dp_to_string(const DPElement& x) {
    if (x.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : x) {
        if (!out.empty()) out += " + ";
        out += c == 1 ? m.to_string() : fmt::format("{} {}", c.get_str(), m.to_string());
    }
    return out;
}

GradedLinearMap::GradedLinearMap(DPModule source, DPModule target, int degree_drop)
    : source_(std::move(source)), target_(std::move(target)), drop_(degree_drop) {}

void GradedLinearMap::set_image(const DPBasisMonomial& m, DPElement image) {
    if (!source_.contains(m)) throw InvalidInput("monomial " + m.to_string() + " is not in the source");
    const long expected = source_.degree(m) - drop_;
    for (const auto& [t, c] : image) {
        if (target_.degree(t) != expected) {
            throw InvalidInput(fmt::format("image term {} of {} has degree {}, expected {}", t.to_string(),
                                           m.to_string(), target_.degree(t), expected));
        }
        if (!target_.contains(t) && expected <= target_.degree_bound()) {
            throw InvalidInput("image term " + t.to_string() + " is not in the target");
        }
    }
    // Terms beyond the target's degree bound are dropped.
    if (expected > target_.degree_bound()) image.clear();
    images_[m] = std::move(image);
}

const DPElement& GradedLinearMap::image(const DPBasisMonomial& m) const {
    static const DPElement zero;
    const auto it = images_.find(m);
    return it == images_.end() ? zero : it->second;
}

DPElement GradedLinearMap::apply(const DPElement& x) const {
    DPElement out;
    for (const auto& [m, c] : x) dp_accumulate(out, image(m), c);
    return out;
}

IntMatrix GradedLinearMap::matrix(int degree, const ScalarRing& ring) const {
    const auto& cols = source_.basis(degree);
    const auto& rows = target_.basis(degree - drop_);
    IntMatrix out(rows.size(), cols.size(), ring);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (const auto& [t, c] : image(cols[j])) {
            const auto i = target_.index_of(t);
            if (!i) throw InternalError("image term outside the target basis");
            out.add_to(*i, j, ring.from_rational(c));
        }
    }
    return out;
}

bool GradedLinearMap::is_zero() const {
    for (const auto& [m, image] : images_) {
        if (!image.empty()) return false;
    }
    return true;
}

GradedLinearMap pd_derivation_extend(long p, const DerivationValues& values, const DPModule& source,
                                     const DPModule& target, int degree_drop) {
    exactalg::require_prime(p);
    GradedLinearMap out(source, target, degree_drop);

    auto gamma_value = [&](int k) -> const DPElement& {
        static const DPElement zero;
        const auto it = values.gamma.find(k);
        return it == values.gamma.end() ? zero : it->second;
    };

    for (int d = 0; d <= source.degree_bound(); ++d) {
        for (const DPBasisMonomial& m : source.basis(d)) {
            DPElement image;
            // gamma part: D(gamma_a) theta^b eps^c
            const auto digits = exactalg::base_digits(m.a, p);
            for (std::size_t k = 0; k < digits.size(); ++k) {
                if (digits[k] == 0) continue;
                const long pk = exactalg::prime_power(p, k).get_si();
                const Rational coefficient = Rational(digits[k]) / Rational(binomial(m.a, pk));
                const DPElement rest = dp_monomial({m.a - pk, m.b, m.c}, coefficient);
                dp_accumulate(image, dp_product(rest, gamma_value(static_cast<int>(k))));
            }
            // theta part: gamma_a b theta^{b-1} D(theta) eps^c
            if (m.b > 0) {
                const DPElement rest = dp_monomial({m.a, m.b - 1, m.c}, Rational(m.b));
                dp_accumulate(image, dp_product(rest, values.theta));
            }
            out.set_image(m, std::move(image));
        }
    }
    return out;
}

}  // namespace sencalc::dpops
