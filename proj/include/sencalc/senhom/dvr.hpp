#pragma once

#include <map>
#include <string>
#include <vector>

#include "sencalc/exactalg/matrix.hpp"
#include "sencalc/senhom/report.hpp"

namespace sencalc::senhom {

// R = Z/p^N[u] / E(u) for an Eisenstein polynomial E, as a free Z/p^N-module on 1, pi, ..., pi^{e-1}.
struct DVRDescriptor {
    long p = 0;
    int precision = 0;
    std::vector<Integer> eisenstein;  // constant term first, monic

    // Comma-separated coefficients, leading coefficient first: "1,0,-3" is u^2 - 3.
    static DVRDescriptor parse(long p, int precision, const std::string& coefficients);

    // Throws InvalidInput unless E is monic Eisenstein of degree >= 1.
    void validate() const;
    int ramification() const { return static_cast<int>(eisenstein.size()) - 1; }
    exactalg::ScalarRing ring() const;
    exactalg::IntMatrix uniformizer() const;
    exactalg::IntMatrix derivative() const;  // multiplication by E'(pi)
    // v_pi(E'(pi)), the p-adic valuation of the norm of E'(pi).
    int derivative_valuation() const;
    // log_p |R / (j E'(pi))|
    int expected_order_exponent(long j) const;
    std::string polynomial() const;
};

struct DvrSquareReport {
    HomologyReport nabla;
    HomologyReport total;
    // Minimal number of R-module generators of each total homology group.
    std::map<int, std::size_t> generators;
};

// Square of the commuting PD derivations on R<s>[x], |s| = |x| = 2:
// nabla: s -> E'(pi), x -> 0 and Theta: s -> 1, x -> 1.
DvrSquareReport build_dvr_square(const DVRDescriptor& desc, int degree_bound);

}  // namespace sencalc::senhom
