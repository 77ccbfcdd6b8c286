#pragma once

#include <vector>

#include "sencalc/exactalg/matrix.hpp"

namespace sencalc::exactalg {

struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    IntMatrix V_inverse;
    // d_1 | d_2 | ..., one per diagonal slot; zero entries included.
    std::vector<Integer> divisors;
    // Over Z/p^N: e_i with d_i = p^{e_i}, N for zero slots.
    std::vector<int> exponents;

    // Number of nonzero divisors.
    std::size_t rank() const;
};

// U * A * V = D with the pivot chosen as the leftmost entry of minimal size (Z)
// or minimal valuation (Z/p^N).
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Orders of the cyclic summands of coker(a) over Z, or Z/p^N; 0 marks a free Z summand.
std::vector<Integer> cokernel_invariants(const IntMatrix& a);

}  // namespace sencalc::exactalg
