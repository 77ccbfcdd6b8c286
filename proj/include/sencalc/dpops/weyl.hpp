#pragma once

#include <vector>

#include "sencalc/exactalg/matrix.hpp"

namespace sencalc::dpops {

// d^{[k]} x^m = C(m, k) x^{m-k} on span{x^0, ..., x^{size-1}}.
exactalg::IntMatrix divided_derivative(long k, std::size_t size);
// x * x^m = x^{m+1}; the top basis vector maps to 0.
exactalg::IntMatrix multiplication_by_x(std::size_t size);

struct WeylReport {
    long p = 0;
    int n = 0;
    int monomial_bound = 0;
    std::vector<bool> commutator;  // [d^{[p^j]}, x] = d^{[p^j - 1]} on x^m, m <= M
    std::vector<bool> valuation;   // v_p C(m, p^j - 1) = v_p of prod_{k<j} (d^{[p^k]})^{p-1} on x^m

    bool holds() const;
};

WeylReport dp_weyl_operators(long p, int n, int monomial_bound);

}  // namespace sencalc::dpops
