#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sencalc/exactalg/series.hpp"
#include "sencalc/witt/witt.hpp"

namespace sencalc::witt {

struct CartierReport {
    exactalg::Series f;  // exp(sum_m a_m t^{p^m} / p^m)
    exactalg::Series g;  // prod_j F^j(f)(x_j T^{p^j}), a series in T
    bool integral = true;
    std::optional<std::string> first_non_integral;
    // log g has coefficient a_m w_m(x) / p^m at T^{p^m} and no other terms.
    bool log_matches_witt_polynomials = false;
};

// `ghost` holds a_0..a_{n-1}; x has length n over Z. In strict mode a non-integral
// coefficient raises IntegralityViolation.
CartierReport cartier_character(const std::vector<Rational>& ghost, const WittVector& x, std::size_t degree_bound,
                                bool strict = true);

// g(x +_W x') == g(x) g(x') to the degree bound.
bool cartier_additivity(const std::vector<Rational>& ghost, const WittVector& x, const WittVector& x_prime,
                        std::size_t degree_bound);

using FrobeniusLift = std::function<Integer(long p, const Integer&)>;

struct DworkFactorization {
    std::vector<Integer> factors;  // r_1..r_D at indices 1..D; index 0 unused
    exactalg::Series product;      // prod_j (1 - r_j t^j)
};

// x_seq holds x_1..x_D at indices 1..D (index 0 ignored); the base ring is Z.
DworkFactorization dwork_factorization(const std::vector<Integer>& x_seq, std::size_t degree_bound,
                                       const FrobeniusLift& lift = {});

}  // namespace sencalc::witt
