#include "sencalc/senhom/builders.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "sencalc/errors.hpp"
#include "sencalc/exactalg/smith.hpp"
#include "sencalc/fgl/derham.hpp"
#include "sencalc/senhom/homology.hpp"

namespace sencalc::senhom {

using exactalg::prime_power;
using exactalg::valuation;

namespace {

// Torsion margin over the largest expected exponent.
constexpr int kPrecisionMargin = 4;

ScalarRing padic(long p, int expected_exponent) {
    return ScalarRing::residues(p, expected_exponent + kPrecisionMargin);
}

const char* variant_name(dpops::BokstedtVariant variant) {
    return variant == dpops::BokstedtVariant::T1 ? "T1" : "Jp";
}

int max_valuation_up_to(long p, long count, long factor = 1) {
    int out = 0;
    for (long j = 1; j <= count; ++j) out = std::max(out, valuation(Integer(j * factor), p));
    return out;
}

HomologyReport serre_report(long p, const Integer& scale, int degree_bound, const ScalarRing& ring) {
    const auto map = dpops::serre_differential(p, scale, p, degree_bound + 1);
    return two_term_homology(TwoTermComplex::from_map(map, ring), degree_bound, "zpn_serre");
}

}  // namespace

HomologyReport build_bokstedt(long p, dpops::BokstedtVariant variant, int degree_bound) {
    exactalg::require_prime(p);
    if (degree_bound < 0) throw InvalidInput("negative degree bound");
    const bool t1 = variant == dpops::BokstedtVariant::T1;
    const long weight = t1 ? 2 * p : 2;
    const long top = (degree_bound + 1) / weight;
    const ScalarRing ring = padic(p, max_valuation_up_to(p, top) + (t1 ? 1 : 0));
    const auto map = dpops::bokstedt_operator(p, variant, degree_bound + 1);
    HomologyReport report = two_term_homology(TwoTermComplex::from_map(map, ring), degree_bound, "bokstedt");
    report.params = Json{{"p", p}, {"variant", variant_name(variant)}, {"degree_bound", degree_bound}};
    return report;
}

HomologyReport build_serre_cmn(long p, int n, int degree_bound) {
    exactalg::require_prime(p);
    if (n < 1) throw InvalidInput("serre_cmn needs n >= 1");
    if (degree_bound < 0) throw InvalidInput("negative degree bound");
    const long weight = 2 * prime_power(p, n).get_si();
    const ScalarRing ring = padic(p, max_valuation_up_to(p, (degree_bound + 1) / weight + 1, p));
    const auto map = dpops::serre_cmn_differential(p, n, degree_bound + 1);
    HomologyReport report = two_term_homology(TwoTermComplex::from_map(map, ring), degree_bound, "serre_cmn");
    report.params = Json{{"p", p}, {"n", n}, {"degree_bound", degree_bound}};
    return report;
}

PerfectoidReport build_perfectoid_serre(long p, int degree_bound) {
    exactalg::require_prime(p);
    if (degree_bound < 0) throw InvalidInput("negative degree bound");
    const ScalarRing ring = padic(p, 0);
    const auto theta = dpops::theta_perfectoid(p, degree_bound + 1);
    if (!theta.valuation_identity) throw InternalError("perfectoid generator values lost their valuations");
    const TwoTermComplex complex = TwoTermComplex::from_map(theta.map, ring);
    PerfectoidReport out{two_term_homology(complex, degree_bound, "perfectoid_serre"), {}};
    out.homology.params = Json{{"p", p}, {"degree_bound", degree_bound}};
    for (long d = 2 * p; d <= degree_bound; d += 2 * p) {
        out.kernel_ranks[static_cast<int>(d)] = kernel_rank(complex.map(static_cast<int>(d)));
    }
    return out;
}

HomologyReport build_zpn_serre(long p, int n, int degree_bound) {
    exactalg::require_prime(p);
    if (p == 2) throw Unsupported("the Z/p^n Serre computation is defined for odd p only");
    if (n < 2) throw InvalidInput("zpn_serre needs n >= 2");
    if (degree_bound < 0) throw InvalidInput("negative degree bound");
    const ScalarRing ring = padic(p, max_valuation_up_to(p, (degree_bound + 1) / 2));
    HomologyReport report = serre_report(p, prime_power(p, n), degree_bound, ring);
    report.params = Json{{"p", p}, {"n", n}, {"degree_bound", degree_bound}};
    report.notes.push_back("the sum over i = 0..j of Z/gcd(j, p^n) for pi_j THH(Z/p^n) is inconsistent at j = 0; "
                           "this report gives the homology of the double loop space instead");

    const HomologyReport literal = serre_report(p, prime_power(p, n - 1), degree_bound, ring);
    std::vector<int> differing;
    for (const auto& h : report.degrees) {
        if (!(literal.at(h.degree) == h)) differing.push_back(h.degree);
    }
    if (!differing.empty()) {
        report.notes.push_back(fmt::format("generator values scaled by p^(n-1) instead of p^n change degrees {}",
                                           fmt::join(differing, ",")));
    }
    return report;
}

HomologyReport omega2yn_cohomology(long p, int n, int degree_bound) {
    exactalg::require_prime(p);
    if (n < 2) throw InvalidInput("omega2yn_cohomology needs n >= 2");
    if (degree_bound < 0) throw InvalidInput("negative degree bound");
    const int top = degree_bound / 2;
    const ScalarRing ring = padic(p, max_valuation_up_to(p, top));
    const Integer step = prime_power(p, n - 1);

    // Column j: gamma_j(y) c^{k-j} in the basis gamma_i(x) c^{k-i}, y = x - p^{n-1} c.
    auto basis_change = [&](int k) {
        IntMatrix b(k + 1, k + 1, ring);
        for (int j = 0; j <= k; ++j) {
            for (int i = 0; i <= j; ++i) {
                const Rational entry = exactalg::fraction(exactalg::power(Integer(-step), i), exactalg::factorial(i));
                if (!exactalg::is_p_integral(entry, p)) {
                    throw InvalidInput(fmt::format("basis change entry {} is not p-integral", entry.get_str()));
                }
                b.set(j - i, j, ring.from_rational(entry));
            }
        }
        return b;
    };

    HomologyReport report;
    report.builder = "omega2yn_cohomology";
    report.params = Json{{"p", p}, {"n", n}, {"degree_bound", degree_bound}};
    report.precision = ring.precision;
    report.notes.push_back("cohomological grading");
    for (int d = 0; d <= degree_bound; ++d) {
        if (d % 2 == 1 || d == 0) {
            DegreeHomology h{d, d == 0 ? 1U : 0U, {}};
            report.degrees.push_back(h);
            continue;
        }
        const int k = d / 2;
        // y * gamma_i(x) c^{k-1-i} = (i + 1) gamma_{i+1}(x) c^{k-1-i} - p^{n-1} gamma_i(x) c^{k-i}
        IntMatrix relations(k + 1, k, ring);
        IntMatrix expected(k + 1, k, ring);
        for (int i = 0; i < k; ++i) {
            relations.set(i + 1, i, Integer(i + 1));
            relations.set(i, i, ring.normalize(-step));
            expected.set(i + 1, i, Integer(i + 1));
        }
        const IntMatrix b = basis_change(k);
        if (exactalg::valuation(b.determinant(), p) != 0) throw InternalError("basis change is not invertible");
        if (!(relations * basis_change(k - 1) == b * expected)) {
            throw InternalError(fmt::format("basis change does not carry the relations to j gamma_j(y) in degree {}", d));
        }
        DegreeHomology h = cokernel_homology(relations, d);
        if (!(cokernel_homology(expected, d) == h)) {
            throw InternalError(fmt::format("presentations disagree in degree {}", d));
        }
        report.degrees.push_back(std::move(h));
    }
    return report;
}

std::vector<HomologyReport> fderham_cohomology(const fgl::FormalGroupLaw& law, int weight_bound, int truncation) {
    const fgl::FDerhamComplex complex = fgl::f_derham_complex(law, weight_bound, truncation);
    std::vector<HomologyReport> out;
    for (std::size_t m = 0; m < complex.weight_maps.size(); ++m) {
        const IntMatrix& d = complex.weight_maps[m];
        HomologyReport report;
        report.builder = "fderham";
        report.params = Json{{"law", fgl::to_string(law.kind())}, {"ring", complex.ring.name()},
                             {"weight", m}, {"truncation", truncation}};
        report.precision = complex.ring.is_residues() ? complex.ring.precision : 0;
        report.notes.push_back("cohomological grading");
        report.degrees.push_back({0, kernel_rank(d), {}});
        // No one-forms of weight 0.
        report.degrees.push_back(m == 0 ? DegreeHomology{1, 0, {}} : cokernel_homology(d, 1));
        out.push_back(std::move(report));
    }
    return out;
}

}  // namespace sencalc::senhom
