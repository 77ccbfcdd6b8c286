#pragma once

#include <optional>
#include <string>

#include "sencalc/witt/witt.hpp"

namespace sencalc::witt {

// Outcome of solving F(x) = y for x.
struct FrobeniusPreimage {
    bool solved = false;
    std::optional<WittVector> x;  // length L + 1 over Z/p^P
    int verified_precision = 0;   // P

    // Side conditions on a solution.
    Integer x0_residue;            // x_0 mod p
    bool higher_components_divisible = false;  // x_j in pZ for j >= 1
    bool all_components_divisible = false;
    bool ghost_units = false;                  // every w_j(x) = 1 mod p

    // First unsolvable congruence p^stage x_stage = witness_residue (mod witness_modulus).
    int stage = 0;
    Integer witness_residue;
    Integer witness_modulus;
    std::string witness;
};

// Digit-by-digit solution with guard digits; y over Z uses precision L + 4,
// y over Z/p^N needs N >= L + 2.
FrobeniusPreimage solve_frobenius(const WittVector& y);

struct FrobeniusOfPReport {
    long p = 0;
    int length = 0;
    bool frobenius_identity = false;  // F([p] + V(y)) = p
    bool teichmuller_p_power = false; // [p^p] = p(1 - y)
    bool teichmuller_p_square = false;  // [p^2] = p(1 - y)
    WittVector p_times_one_minus_y;
    WittVector teichmuller_p_to_p;
    WittVector teichmuller_p_squared;
};

FrobeniusOfPReport frobenius_of_p_identity(long p, int length);

}  // namespace sencalc::witt
