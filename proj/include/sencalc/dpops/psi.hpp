#pragma once

#include <vector>

#include "sencalc/exactalg/scalar.hpp"

namespace sencalc::dpops {

// Witt components of the integer m: psi_j(m) with w_j(psi) = m for j < n.
std::vector<Integer> psi_eigenvalues(long p, int n, const Integer& m);

// (m/p^2)(1 - m^{p^2-1} - p^{1-p} sum_{j=0}^{p} (-1)^j C(p,j) m^{(p-1)(j+1)})
Rational psi_two_closed_form(long p, const Integer& m);

// psi(a + b) equals the Witt sum of psi(a) and psi(b).
bool psi_tensor_check(long p, int n, const Integer& a, const Integer& b);

}  // namespace sencalc::dpops
