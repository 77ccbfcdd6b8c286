#include <fmt/format.h>

#include "checks.hpp"
#include "sencalc/dpops/sen.hpp"
#include "sencalc/senhom/builders.hpp"
#include "sencalc/senhom/dvr.hpp"

namespace sencalc::cli::detail {

using senhom::DegreeHomology;
using senhom::HomologyReport;

namespace {

int vp(long m, long p) { return exactalg::valuation(Integer(m), p); }

// Torsion exponents v_p(1), ..., v_p(k).
std::vector<int> harmonic_exponents(long k, long p) {
    std::vector<int> out;
    for (long j = 1; j <= k; ++j) out.push_back(vp(j, p));
    return out;
}

}  // namespace

Check bokstedt_check(long p, const std::string& variant, int degree_bound, const Targets& targets) {
    return run_check(fmt::format("sen.bokstedt variant={} p={} D={}", variant, p, degree_bound), [&](Check& check) {
        const bool t1 = variant == "T1";
        const auto report = senhom::build_bokstedt(p, t1 ? dpops::BokstedtVariant::T1 : dpops::BokstedtVariant::Jp, degree_bound);
        // T1: Z/p^{v_p(j)+1} in degree 2pj - 1; Jp: Z/p^{v_p(j)} in degree 2j - 1.
        const long period = t1 ? 2 * p : 2;
        for (int d = 0; d <= degree_bound; ++d) {
            DegreeHomology expected{d, d == 0 ? 1U : 0U, {}};
            if (d > 0 && (d + 1) % period == 0) {
                const long j = (d + 1) / period;
                expected = group(d, 0, {vp(j, p) + (t1 ? 1 : 0)}, p);
            }
            expect_group(check, report, expected);
        }
        expect_table(check, report, targets, fmt::format("sen.bokstedt.{}.p{}", variant, p));
        attach(check, report);
    });
}

Check cmn_check(long p, int n, int degree_bound, const Targets& targets) {
    if (n < 1) throw InvalidInput("cmn needs n >= 1");
    return run_check(fmt::format("sen.cmn p={} n={} D={}", p, n, degree_bound), [&](Check& check) {
        const auto report = senhom::build_serre_cmn(p, n, degree_bound);
        const long q = exactalg::prime_power(p, static_cast<unsigned long>(n)).get_si();
        for (int d = 0; d <= degree_bound; ++d) {
            DegreeHomology expected{d, d == 0 ? 1U : 0U, {}};
            if (d > 0 && (d + 1) % (2 * q) == 0) expected = group(d, 0, {vp(p * ((d + 1) / (2 * q)), p)}, p);
            expect_group(check, report, expected);
        }
        expect_table(check, report, targets, fmt::format("sen.cmn.p{}.n{}", p, n));
        attach(check, report);
    });
}

Check perfectoid_check(long p, int degree_bound, const Targets& targets) {
    return run_check(fmt::format("sen.perfectoid p={} D={}", p, degree_bound), [&](Check& check) {
        const auto out = senhom::build_perfectoid_serre(p, degree_bound);
        for (int d = 0; d <= degree_bound; ++d) expect_group(check, out.homology, DegreeHomology{d, d % 2 == 0 ? 1U : 0U, {}});
        const auto expected_kernels = static_cast<std::size_t>(degree_bound / (2 * p));
        check.expect(out.kernel_ranks.size() == expected_kernels,
                     fmt::format("{} kernel ranks, expected {}", out.kernel_ranks.size(), expected_kernels));
        Json kernels = Json::object();
        for (const auto& [degree, rank] : out.kernel_ranks) {
            check.expect(rank == 1, fmt::format("kernel out of degree {} has rank {}", degree, rank));
            kernels[std::to_string(degree)] = rank;
        }
        expect_table(check, out.homology, targets, fmt::format("sen.perfectoid.p{}", p));
        attach(check, out.homology);
        check.payload["kernel_ranks"] = kernels;
        check.lines.push_back(fmt::format("kernels in degrees 2kp have rank 1 ({} degrees)", out.kernel_ranks.size()));
    });
}

Check zpn_check(long p, int n, int degree_bound, const Targets& targets) {
    if (n < 2) throw InvalidInput("zpn needs n >= 2");
    return run_check(fmt::format("sen.zpn p={} n={} D={}", p, n, degree_bound), [&](Check& check) {
        if (p == 2) throw Unsupported("the Z/p^n Serre model needs p odd; p = 2 is skipped");
        const auto report = senhom::build_zpn_serre(p, n, degree_bound);
        for (int d = 0; d <= degree_bound; ++d) {
            if (d % 2 == 0) {
                expect_group(check, report, DegreeHomology{d, 1, {}});
            } else {
                expect_group(check, report, group(d, 0, harmonic_exponents((d + 1) / 2, p), p));
            }
        }
        expect_table(check, report, targets, fmt::format("sen.zpn.p{}.n{}", p, n));
        attach(check, report);
    });
}

Check omega2yn_check(long p, int n, int degree_bound, const Targets& targets) {
    if (n < 2) throw InvalidInput("omega2yn needs n >= 2");
    return run_check(fmt::format("sen.omega2yn p={} n={} D={}", p, n, degree_bound), [&](Check& check) {
        const auto cohomology = senhom::omega2yn_cohomology(p, n, degree_bound);
        for (int d = 0; d <= degree_bound; ++d) {
            if (d % 2 == 1) {
                expect_group(check, cohomology, DegreeHomology{d, 0, {}});
            } else {
                expect_group(check, cohomology, group(d, 1, harmonic_exponents(d / 2, p), p));
            }
        }
        expect_table(check, cohomology, targets, fmt::format("sen.omega2yn.p{}.n{}", p, n));
        attach(check, cohomology, "cohomology");
        if (p == 2) {
            check.note = "no homology model at p = 2, so the universal coefficient comparison is skipped";
            return;
        }
        // Universal coefficients: torsion of H^{2k} is the torsion of H_{2k-1}.
        const auto homology = senhom::build_zpn_serre(p, n, degree_bound);
        for (int d = 2; d <= degree_bound; d += 2) {
            const DegreeHomology& below = homology.at(d - 1);
            check.expect(cohomology.at(d).torsion == below.torsion,
                         fmt::format("H^{} = {} but H_{} = {}", d, describe(cohomology.at(d)), d - 1, describe(below)));
        }
        check.lines.push_back("torsion of H^{2k} equals torsion of H_{2k-1}");
        check.payload["universal_coefficients"] = !check.failed();
    });
}

Check zpn_level_independence_check(long p, int degree_bound) {
    return run_check(fmt::format("sen.zpn n=2 vs n=3 p={} D={}", p, degree_bound), [&](Check& check) {
        const auto h2 = senhom::build_zpn_serre(p, 2, degree_bound);
        const auto h3 = senhom::build_zpn_serre(p, 3, degree_bound);
        const auto c2 = senhom::omega2yn_cohomology(p, 2, degree_bound);
        const auto c3 = senhom::omega2yn_cohomology(p, 3, degree_bound);
        for (int d = 0; d <= degree_bound; ++d) {
            check.expect(h2.at(d) == h3.at(d),
                         fmt::format("H_{}: {} at n = 2, {} at n = 3", d, describe(h2.at(d)), describe(h3.at(d))));
            check.expect(c2.at(d) == c3.at(d),
                         fmt::format("H^{}: {} at n = 2, {} at n = 3", d, describe(c2.at(d)), describe(c3.at(d))));
        }
        check.payload = Json{{"p", p}, {"D", degree_bound}, {"homology_equal", h2.same_groups(h3)},
                             {"cohomology_equal", c2.same_groups(c3)}};
        check.lines.push_back("homology and cohomology agree for n = 2 and n = 3");
    });
}

Check dvr_check(long p, int precision, const std::string& eisenstein, int degree_bound, const Targets& targets) {
    if (eisenstein.empty()) throw InvalidInput("sen dvr needs -E with the coefficients of E(u), leading first");
    std::string compact;
    for (char c : eisenstein) {
        if (c != ' ') compact += c;
    }
    const auto desc = senhom::DVRDescriptor::parse(p, precision, compact);
    return run_check(fmt::format("sen.dvr p={} E={} D={}", p, desc.polynomial(), degree_bound), [&](Check& check) {
        const auto report = senhom::build_dvr_square(desc, degree_bound);
        const int e = desc.ramification();
        const int vd = desc.derivative_valuation();
        Json table = Json::array();
        for (int d = 0; d <= degree_bound; ++d) {
            const DegreeHomology& h = report.total.at(d);
            const DegreeHomology& nabla = report.nabla.at(d);
            if (d % 2 == 0) {
                expect_group(check, report.total, DegreeHomology{d, d == 0 ? static_cast<std::size_t>(e) : 0U, {}});
                expect_group(check, report.nabla, DegreeHomology{d, static_cast<std::size_t>(e), {}});
                continue;
            }
            // R / (j E'(pi)), cyclic; the nabla column alone gives j copies of R / E'(pi).
            const long j = (d + 1) / 2;
            const int order = desc.expected_order_exponent(j);
            check.expect(order == e * vp(j, p) + vd, fmt::format("expected order exponent {} in degree {}", order, d));
            check.expect(h.free_rank == 0, fmt::format("H_{} = {} has a free part", d, describe(h)));
            check.expect(total_exponent(h, p) == order,
                         fmt::format("|H_{}| = p^{}, expected |R/({} E'(pi))| = p^{}", d, total_exponent(h, p), j, order));
            const std::size_t generators = report.generators.at(d);
            check.expect(generators == (order > 0 ? 1U : 0U), fmt::format("H_{} needs {} generators", d, generators));
            check.expect(nabla.free_rank == 0 && total_exponent(nabla, p) == static_cast<int>(j) * vd,
                         fmt::format("nabla part of degree {} is {}, expected {} copies of R/E'(pi)", d, describe(nabla), j));
            table.push_back(Json{{"degree", d}, {"j", j}, {"group", describe(h)}, {"order_exponent", order},
                                 {"generators", generators}});
            check.lines.push_back(fmt::format("H_{:<3} = R/({} E'(pi)) = {}  order p^{}, cyclic", d, j, describe(h), order));
        }
        const int extension = static_cast<int>(2 * p - 1);
        if (extension <= degree_bound) {
            check.expect(total_exponent(report.total.at(extension), p) == e + vd,
                         fmt::format("degree {} has order p^{}, expected |R/pE'(pi)| = p^{}", extension,
                                     total_exponent(report.total.at(extension), p), e + vd));
        }
        expect_table(check, report.total, targets, fmt::format("sen.dvr.p{}.[{}]", p, compact));
        check.payload["E"] = desc.polynomial();
        check.payload["ramification"] = e;
        check.payload["derivative_valuation"] = vd;
        check.payload["odd_degrees"] = table;
        check.payload["total"] = report.total.to_json();
        check.payload["nabla"] = report.nabla.to_json();
    });
}

}  // namespace sencalc::cli::detail
