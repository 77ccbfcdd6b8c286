#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sencalc/exactalg/series.hpp"

namespace sencalc::dpops {

// Q[[h]] / h^K with h = q - 1, phi(q) = q^p, d = [p]_q.
struct DeltaRingContext {
    long p = 3;
    int truncation = 18;  // K
    int precision = 12;   // N: largest p-power denominator allowed in the lattice basis
};

struct DeltaStep {
    int k = 0;
    bool phi_divisible = false;       // phi(delta^k t) / d in the lattice
    bool relation_divisible = false;  // (delta^k(t)^p + p delta^{k+1}(t)) / d in the lattice
    bool naive_phi = false;           // every h-coefficient of the quotient is p-integral
    bool naive_relation = false;
};

struct DeltaRingReport {
    long p = 0;
    int n = 0;
    int iterations = 0;
    DeltaRingContext context;
    std::vector<DeltaStep> steps;
    std::size_t lattice_rank = 0;
    int lowest_lattice_valuation = 0;
    std::vector<std::pair<std::string, bool>> controls;  // element, membership (expected false)

    bool divisible() const;
    bool controls_rejected() const;
};

// t = x / [p]_q with x = (q - 1)^{n(p-1)}; checks k = 0..B.
DeltaRingReport delta_ring_check(long p, int n, int iterations, const DeltaRingContext& context);
// Same with an explicit numerator x in Q[[h]] / h^K.
DeltaRingReport delta_ring_check(const exactalg::Series& numerator, int iterations, const DeltaRingContext& context);

}  // namespace sencalc::dpops
