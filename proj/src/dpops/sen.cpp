#include "sencalc/dpops/sen.hpp"

#include <fmt/format.h>

#include "sencalc/errors.hpp"

namespace sencalc::dpops {

using exactalg::prime_power;

namespace {

// eps * prod_{j=1}^{k-1} gamma_{p^j}^{p-1}
DPElement perfectoid_generator_value(long p, int k) {
    DPElement value = dp_monomial({0, 0, 1});
    for (int j = 1; j < k; ++j) {
        const DPElement factor = dp_monomial({prime_power(p, j).get_si(), 0, 0});
        for (long e = 0; e < p - 1; ++e) value = dp_product(value, factor);
    }
    return value;
}

}  // namespace

GradedLinearMap serre_differential(long p, const Integer& scale, const Integer& theta_value, int degree_bound) {
    exactalg::require_prime(p);
    const DPWeights weights{2, static_cast<int>(2 * p), static_cast<int>(2 * p - 1)};
    const DPModule source(weights, degree_bound, EpsilonPart::even);
    const DPModule target(weights, degree_bound, EpsilonPart::odd);
    DerivationValues values;
    for (int k = 1; 2 * prime_power(p, k) <= degree_bound; ++k) {
        DPElement value;
        dp_accumulate(value, perfectoid_generator_value(p, k), Rational(scale));
        values.gamma[k] = value;
    }
    values.theta = dp_monomial({0, 0, 1}, Rational(theta_value));
    return pd_derivation_extend(p, values, source, target, 1);
}

ThetaPerfectoid theta_perfectoid(long p, int degree_bound) {
    ThetaPerfectoid out{serre_differential(p, 1, p, degree_bound), true};
    for (int k = 1; 2 * prime_power(p, k) <= degree_bound; ++k) {
        const long pk = prime_power(p, k).get_si();
        // u^{1-p} d/du (gamma_{p^k}) = (p^k - p)! / (p^k - 1)! gamma_{p^k - p}
        const Rational informal = exactalg::fraction(exactalg::factorial(pk - p), exactalg::factorial(pk - 1));
        const DPElement value = perfectoid_generator_value(p, k);
        const auto it = value.find({pk - p, 0, 1});
        if (value.size() != 1 || it == value.end()) {
            out.valuation_identity = false;
            continue;
        }
        if (exactalg::valuation(informal, p) != 0 || exactalg::valuation(it->second, p) != 0) {
            out.valuation_identity = false;
        }
    }
    return out;
}

GradedLinearMap theta_zpn(long p, int n, int degree_bound) {
    exactalg::require_prime(p);
    if (p == 2) throw Unsupported("the Z/p^n Serre differential is defined for odd p only");
    if (n < 2) throw InvalidInput("theta_zpn needs n >= 2");
    return serre_differential(p, prime_power(p, n - 1), p, degree_bound);
}

GradedLinearMap bokstedt_operator(long p, BokstedtVariant variant, int degree_bound) {
    exactalg::require_prime(p);
    const int weight = variant == BokstedtVariant::T1 ? static_cast<int>(2 * p) : 2;
    const DPModule module({0, weight, 0}, degree_bound, EpsilonPart::even);
    DerivationValues values;
    values.theta = dp_monomial({0, 0, 0}, variant == BokstedtVariant::T1 ? Rational(p) : Rational(1));
    return pd_derivation_extend(p, values, module, module, weight);
}

GradedLinearMap serre_cmn_differential(long p, int n, int degree_bound) {
    exactalg::require_prime(p);
    if (n < 1) throw InvalidInput("serre_cmn needs n >= 1");
    const int weight = 2 * static_cast<int>(prime_power(p, n).get_si());
    const DPWeights weights{0, weight, weight - 1};
    DerivationValues values;
    values.theta = dp_monomial({0, 0, 1}, Rational(p));
    return pd_derivation_extend(p, values, DPModule(weights, degree_bound, EpsilonPart::even),
                                DPModule(weights, degree_bound, EpsilonPart::odd), 1);
}

GradedLinearMap divided_power_d_du(long p, int degree_bound) {
    const DPModule module({2, 0, 0}, degree_bound, EpsilonPart::even);
    DerivationValues values;
    for (int k = 0; 2 * prime_power(p, k) <= degree_bound; ++k) {
        values.gamma[k] = dp_monomial({prime_power(p, k).get_si() - 1, 0, 0});
    }
    return pd_derivation_extend(p, values, module, module, 2);
}

}  // namespace sencalc::dpops
