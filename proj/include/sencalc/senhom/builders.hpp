#pragma once

#include <map>
#include <vector>

#include "sencalc/dpops/sen.hpp"
#include "sencalc/fgl/fgl.hpp"
#include "sencalc/senhom/report.hpp"

namespace sencalc::senhom {

// Fiber of the Bokstedt operator on Z_p[theta], degrees 0..degree_bound.
HomologyReport build_bokstedt(long p, dpops::BokstedtVariant variant, int degree_bound);

// Z_p[x, y] / x^2 with d(y^m) = m p y^{m-1} x.
HomologyReport build_serre_cmn(long p, int n, int degree_bound);

struct PerfectoidReport {
    HomologyReport homology;
    std::map<int, std::size_t> kernel_ranks;  // degree 2kp -> rank of the kernel out of it
};

PerfectoidReport build_perfectoid_serre(long p, int degree_bound);

// Homology of the Serre differential for the double loop space of the Moore space; p odd, n >= 2.
HomologyReport build_zpn_serre(long p, int n, int degree_bound);

// Cohomology of Z_p<x>[c] / (x - p^{n-1} c), |x| = |c| = 2, in degrees 0..degree_bound.
HomologyReport omega2yn_cohomology(long p, int n, int degree_bound);

// Per weight m = 0..W: degree 0 is the kernel and degree 1 the cokernel of <m>(h) on A[[h]] / h^K.
std::vector<HomologyReport> fderham_cohomology(const fgl::FormalGroupLaw& law, int weight_bound, int truncation);

}  // namespace sencalc::senhom
