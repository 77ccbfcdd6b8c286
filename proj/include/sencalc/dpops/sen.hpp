#pragma once

#include "sencalc/dpops/dpmodule.hpp"

namespace sencalc::dpops {

// Odd differential on Z_p<u> (x) Z_p[theta] (x) Lambda[eps], |u| = 2, |theta| = 2p, |eps| = 2p - 1:
// gamma_{p^k}(u) -> scale * eps * prod_{j=1}^{k-1} gamma_{p^j}(u)^{p-1} for k >= 1, gamma_1 -> 0, theta -> theta_value * eps.
GradedLinearMap serre_differential(long p, const Integer& scale, const Integer& theta_value, int degree_bound);

struct ThetaPerfectoid {
    GradedLinearMap map;
    // v_p((p^k - p)! / (p^k - 1)!) and v_p of the generator-value coefficient, for each p^k <= bound / 2.
    bool valuation_identity = false;
};

ThetaPerfectoid theta_perfectoid(long p, int degree_bound);
// Generator values scaled by p^{n-1}; p odd, n >= 2.
GradedLinearMap theta_zpn(long p, int n, int degree_bound);

enum class BokstedtVariant { T1, Jp };

// T1: theta^j -> j p theta^{j-1} with |theta| = 2p. Jp: x^j -> j x^{j-1} with |x| = 2.
GradedLinearMap bokstedt_operator(long p, BokstedtVariant variant, int degree_bound);

// y^m -> m p y^{m-1} x on Z_p[x, y] / x^2 with |x| = 2p^n - 1, |y| = 2p^n.
GradedLinearMap serre_cmn_differential(long p, int n, int degree_bound);

// The PD derivation d/du: gamma_m -> gamma_{m-1}, on Z_p<u> with |u| = 2.
GradedLinearMap divided_power_d_du(long p, int degree_bound);

}  // namespace sencalc::dpops
