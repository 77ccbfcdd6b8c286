#pragma once

#include <vector>

#include "sencalc/exactalg/truncpoly.hpp"

namespace sencalc::fgl {

using exactalg::TruncPoly;

// Graded variables v_1..v_N, t_1..t_N or l_1..l_N with |x_n| = 2p^n - 2.
std::vector<exactalg::Variable> bp_variables(long p, int count, const char* prefix);

struct HazewinkelGenerators {
    long p = 0;
    int count = 0;
    std::vector<TruncPoly> v_in_l;  // index n - 1 holds v_n over Q[l_1..l_N]
    std::vector<TruncPoly> l_in_v;  // index n - 1 holds l_n over Q[v_1..v_N]
};

HazewinkelGenerators hazewinkel_generators(long p, int count);

// Polynomials over the variable list t_1..t_N, v_1..v_N.
struct RightUnit {
    long p = 0;
    int count = 0;
    std::vector<exactalg::Variable> variables;
    std::vector<TruncPoly> eta_v;  // eta_R(v_n) at index n - 1
    std::vector<TruncPoly> eta_l;  // eta_R(l_n) at index n - 1, over Q

    TruncPoly v(int n) const;
    TruncPoly t(int n) const;
    // eta_R(f) by substituting eta_R(v_n) for v_n.
    TruncPoly apply(const TruncPoly& f) const;
    // eta_R(f) through the logarithm coordinates: f(v(l)) with l_n -> eta_R(l_n).
    TruncPoly apply_through_logarithm(const TruncPoly& f) const;
};

RightUnit bp_right_unit(long p, int count);

// (1/2)((eta_R(v_1^4) - v_1^4)/8 - (eta_R(v_1 v_2) - v_1 v_2)) at p = 2.
TruncPoly b4_cobar_class();

}  // namespace sencalc::fgl
