#include <doctest.h>

#include <numeric>
#include <random>

#include "sencalc/dpops/cube.hpp"
#include "sencalc/dpops/psi.hpp"
#include "sencalc/errors.hpp"
#include "sencalc/exactalg/smith.hpp"
#include "sencalc/fgl/derham.hpp"
#include "sencalc/senhom/builders.hpp"
#include "sencalc/senhom/dvr.hpp"
#include "sencalc/senhom/homology.hpp"

using namespace sencalc;
using namespace sencalc::senhom;
using dpops::BokstedtVariant;
using dpops::OperatorCube;

namespace {

int vp(long m, long p) {
    int v = 0;
    for (; m % p == 0; m /= p) ++v;
    return v;
}

int vp(Integer m, long p) {
    int v = 0;
    for (; m % p == 0; m /= p) ++v;
    return v;
}

Integer ppow(long p, int e) {
    Integer out = 1;
    for (int i = 0; i < e; ++i) out *= p;
    return out;
}

// Expected group from a list of exponents, zeros dropped.
DegreeHomology group(int degree, std::size_t free_rank, std::vector<int> exponents, long p) {
    DegreeHomology out{degree, free_rank, {}};
    std::sort(exponents.begin(), exponents.end());
    for (int e : exponents) {
        if (e > 0) out.torsion.push_back(ppow(p, e));
    }
    return out;
}

DegreeHomology p_part(const DegreeHomology& h, long p) {
    std::vector<int> exponents;
    for (const auto& t : h.torsion) exponents.push_back(vp(t, p));
    return group(h.degree, h.free_rank, exponents, p);
}

int total_exponent(const DegreeHomology& h, long p) {
    int out = 0;
    for (const auto& t : h.torsion) out += vp(t, p);
    return out;
}

// Rank over Q by fraction-free elimination.
std::size_t rational_rank(const IntMatrix& a) {
    std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a.at(i, j);
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && m[pivot][col] == 0) ++pivot;
        if (pivot == a.rows()) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t i = rank + 1; i < a.rows(); ++i) {
            const Rational f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < a.cols(); ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng, long p) {
    std::uniform_int_distribution<int> entry(-6, 6);
    std::uniform_int_distribution<int> lift(0, 3);
    IntMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) out.set(i, j, entry(rng) * ppow(p, lift(rng) == 0 ? 2 : 0));
    }
    return out;
}

TwoTermComplex random_two_term(std::mt19937& rng, long p, int shift) {
    std::uniform_int_distribution<int> rank(0, 4);
    TwoTermComplex c;
    c.shift = shift;
    for (int d = 0; d <= 8; ++d) {
        c.source_ranks[d] = rank(rng);
        c.target_ranks[d] = rank(rng);
    }
    for (int d = 0; d <= 8; ++d) {
        const std::size_t rows = d - shift >= 0 ? c.target_ranks[d - shift] : 0;
        c.maps.emplace(d, random_matrix(rows, c.source_ranks[d], rng, p));
    }
    c.assembled_through = 8;
    return c;
}

TwoTermComplex reduced(TwoTermComplex c, const ScalarRing& ring) {
    c.ring = ring;
    for (auto& [d, m] : c.maps) m = m.reduce(ring);
    return c;
}

}  // namespace

TEST_CASE("two-term homology small cases") {
    TwoTermComplex zero;
    zero.shift = 3;
    zero.source_ranks = {{2, 1}};
    zero.target_ranks = {{2, 1}};
    zero.assembled_through = 10;
    const auto z = two_term_homology(zero, 6);
    CHECK(z.at(2) == DegreeHomology{2, 1, {}});
    CHECK(z.at(4) == DegreeHomology{4, 1, {}});
    CHECK(z.at(3).is_zero());

    TwoTermComplex six;
    six.shift = 1;
    six.source_ranks = {{1, 1}};
    six.target_ranks = {{0, 1}};
    six.maps.emplace(1, IntMatrix::from_rows({{6}}));
    six.assembled_through = 4;
    const auto s = two_term_homology(six, 3);
    CHECK(s.at(0) == DegreeHomology{0, 0, {6}});
    CHECK(s.at(1).is_zero());

    TwoTermComplex diag;
    diag.shift = 1;
    diag.source_ranks = {{1, 2}};
    diag.target_ranks = {{0, 2}};
    diag.maps.emplace(1, IntMatrix::from_rows({{2, 0}, {0, 0}}));
    diag.assembled_through = 4;
    const auto d = two_term_homology(diag, 3);
    CHECK(d.at(1) == DegreeHomology{1, 1, {}});
    CHECK(d.at(0) == DegreeHomology{0, 1, {2}});

    CHECK_THROWS_AS(two_term_homology(diag, 4), PrecisionError);
}

TEST_CASE("two-term homology over Z and Z_p agree with rational ranks and p-parts") {
    std::mt19937 rng(20240917);
    for (long p : {2L, 3L, 5L}) {
        for (int trial = 0; trial < 15; ++trial) {
            const int shift = 1 + trial % 3;
            const TwoTermComplex c = random_two_term(rng, p, shift);
            const auto over_z = two_term_homology(c, 7);
            const auto over_zp = two_term_homology(reduced(c, ScalarRing::residues(p, 20)), 7);
            for (int n = 0; n <= 7; ++n) {
                const IntMatrix out = c.map(n);
                const IntMatrix in = c.map(n + 1);
                const std::size_t source = c.source_ranks.count(n) ? c.source_ranks.at(n) : 0;
                const std::size_t target = n + 1 - shift >= 0 ? c.target_ranks.at(n + 1 - shift) : 0;
                const std::size_t expected_free = source - rational_rank(out) + target - rational_rank(in);
                CHECK(over_z.at(n).free_rank == expected_free);
                CHECK(p_part(over_z.at(n), p) == over_zp.at(n));
            }
        }
    }
}

TEST_CASE("cube total fiber") {
    SUBCASE("zero operators give the exterior pattern") {
        for (int n = 1; n <= 4; ++n) {
            OperatorCube cube{ScalarRing::integers(), {{0, 1}}, {}};
            for (int i = 0; i < n; ++i) cube.operators.push_back({"zero", 0, {}});
            const auto report = cube_total_fiber(cube, -n, 0);
            for (int k = 0; k <= n; ++k) {
                CHECK(report.at(-k) == DegreeHomology{-k, exactalg::binomial(n, k).get_ui(), {}});
            }
        }
    }

    SUBCASE("one operator is the two-term fiber") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 10; ++trial) {
            OperatorCube cube{ScalarRing::integers(), {}, {}};
            dpops::CubeOperator op{"A", 2, {}};
            TwoTermComplex c;
            c.shift = 2;
            for (int d = 0; d <= 10; d += 2) cube.ranks[d] = 1 + trial % 3;
            for (int d = 0; d <= 10; d += 2) {
                const IntMatrix m = random_matrix(d >= 2 ? cube.ranks[d - 2] : 0, cube.ranks[d], rng, 3);
                op.by_degree.emplace(d, m);
                c.maps.emplace(d, m);
            }
            cube.operators.push_back(op);
            c.source_ranks = cube.ranks;
            c.target_ranks = cube.ranks;
            c.assembled_through = 10;
            CHECK(cube_total_fiber(cube, 0, 9).same_groups(two_term_homology(c, 9)));
        }
    }

    SUBCASE("Psi cube is a Koszul complex on the eigenvalues") {
        for (long p : {2L, 3L}) {
            for (long m : {1L, 2L, 6L, 9L, 12L, 45L}) {
                const int n = 3;
                const auto psi = dpops::psi_eigenvalues(p, n, Integer(m));
                Integer g = 0;
                for (const auto& value : psi) g = gcd(g, value);
                const auto over_z = cube_total_fiber(dpops::psi_cube(p, n, Integer(m), 0), -n, 0);
                const auto over_zp = cube_total_fiber(dpops::psi_cube(p, n, Integer(m), 16), -n, 0);
                const int v = vp(g, p);
                for (int k = 0; k <= n; ++k) {
                    const long copies = exactalg::binomial(n - 1, k - 1).get_si();
                    DegreeHomology expected{-k, 0, {}};
                    for (long c = 0; c < copies && g != 1; ++c) expected.torsion.push_back(abs(g));
                    CHECK(over_z.at(-k) == expected);
                    CHECK(over_zp.at(-k) == group(-k, 0, std::vector<int>(copies, v), p));
                }
            }
        }
    }

    SUBCASE("Euler characteristic and order independence") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 10; ++trial) {
            const IntMatrix a = random_matrix(4, 4, rng, 2);
            OperatorCube cube{ScalarRing::integers(), {{0, 4}}, {}};
            cube.operators.push_back({"A", 0, {{0, a}}});
            cube.operators.push_back({"B", 0, {{0, a * a + a}}});
            cube.operators.push_back({"C", 0, {{0, a * a * a}}});
            const auto report = cube_total_fiber(cube, -3, 0);
            long euler = 0;
            for (const auto& h : report.degrees) euler += (h.degree % 2 == 0 ? 1 : -1) * static_cast<long>(h.free_rank);
            CHECK(euler == 0);
        }
    }

    SUBCASE("non-commuting operators are rejected") {
        OperatorCube cube{ScalarRing::integers(), {{0, 2}}, {}};
        cube.operators.push_back({"A", 0, {{0, IntMatrix::from_rows({{0, 1}, {0, 0}})}}});
        cube.operators.push_back({"B", 0, {{0, IntMatrix::from_rows({{0, 0}, {1, 0}})}}});
        CHECK_THROWS_AS(cube_total_fiber(cube, -2, 0), InvalidInput);
    }
}

TEST_CASE("Bokstedt patterns") {
    for (long p : {2L, 3L, 5L}) {
        const int bound = static_cast<int>(2 * p * 20);
        const auto t1 = build_bokstedt(p, BokstedtVariant::T1, bound);
        const auto jp = build_bokstedt(p, BokstedtVariant::Jp, 41);
        for (int d = 0; d <= bound; ++d) {
            if (d == 0) {
                CHECK(t1.at(d) == DegreeHomology{0, 1, {}});
            } else if ((d + 1) % (2 * p) == 0) {
                const long j = (d + 1) / (2 * p);
                CHECK(t1.at(d) == group(d, 0, {vp(j, p) + 1}, p));
            } else {
                CHECK(t1.at(d).is_zero());
            }
        }
        for (int d = 1; d <= 41; ++d) {
            CHECK(jp.at(d) == (d % 2 == 1 ? group(d, 0, {vp((d + 1) / 2, p)}, p) : DegreeHomology{d, 0, {}}));
        }
    }
    const auto t1 = build_bokstedt(3, BokstedtVariant::T1, 20);
    CHECK(t1.at(5) == DegreeHomology{5, 0, {3}});
    CHECK(t1.at(17) == DegreeHomology{17, 0, {9}});
    const auto jp = build_bokstedt(3, BokstedtVariant::Jp, 20);
    CHECK(jp.at(5) == DegreeHomology{5, 0, {3}});
    CHECK(jp.at(3).is_zero());
}

TEST_CASE("Serre differential of Cohen-Moore-Neisendorfer") {
    for (auto [p, n] : std::vector<std::pair<long, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        const long q = ppow(p, n).get_si();
        const int bound = static_cast<int>(2 * 15 * q);
        const auto report = build_serre_cmn(p, n, bound);
        for (int d = 0; d <= bound; ++d) {
            if (d == 0) {
                CHECK(report.at(d) == DegreeHomology{0, 1, {}});
            } else if ((d + 1) % (2 * q) == 0) {
                const long k = (d + 1) / (2 * q);
                CHECK(report.at(d) == group(d, 0, {vp(p * k, p)}, p));
            } else {
                CHECK(report.at(d).is_zero());
            }
        }
    }
    const auto small = build_serre_cmn(2, 1, 12);
    CHECK(small.at(3) == DegreeHomology{3, 0, {2}});
    CHECK(small.at(7) == DegreeHomology{7, 0, {4}});
    CHECK(small.at(11) == DegreeHomology{11, 0, {2}});
    CHECK(build_serre_cmn(3, 2, 18).at(17) == DegreeHomology{17, 0, {3}});
}

TEST_CASE("perfectoid Serre differential") {
    for (long p : {2L, 3L, 5L}) {
        const int bound = static_cast<int>(20 * p);
        const auto out = build_perfectoid_serre(p, bound);
        for (int d = 0; d <= bound; ++d) {
            CHECK(out.homology.at(d) == DegreeHomology{d, d % 2 == 0 ? 1U : 0U, {}});
        }
        CHECK(out.kernel_ranks.size() == 10);
        for (const auto& [degree, rank] : out.kernel_ranks) {
            CHECK(degree % (2 * p) == 0);
            CHECK(rank == 1);
        }
    }
}

TEST_CASE("double loop space of the Moore space") {
    const long p = 3;
    auto expected_odd = [&](int k) {
        std::vector<int> exponents;
        for (long j = 1; j <= k; ++j) exponents.push_back(vp(j, p));
        return exponents;
    };
    const auto n2 = build_zpn_serre(p, 2, 30);
    const auto n3 = build_zpn_serre(p, 3, 30);
    const auto cohomology = omega2yn_cohomology(p, 2, 30);
    CHECK(n2.same_groups(n3));
    CHECK(omega2yn_cohomology(p, 3, 30).same_groups(cohomology));
    for (int k = 1; k <= 15; ++k) {
        CHECK(n2.at(2 * k - 1) == group(2 * k - 1, 0, expected_odd(k), p));
        CHECK(n2.at(2 * k) == DegreeHomology{2 * k, 1, {}});
        CHECK(cohomology.at(2 * k) == group(2 * k, 1, expected_odd(k), p));
        CHECK(cohomology.at(2 * k).torsion == n2.at(2 * k - 1).torsion);
        CHECK(cohomology.at(2 * k - 1).is_zero());
    }
    CHECK(n2.at(5) == DegreeHomology{5, 0, {3}});
    CHECK(n2.at(17) == DegreeHomology{17, 0, {3, 3, 9}});
    CHECK(cohomology.at(0) == DegreeHomology{0, 1, {}});
    CHECK(cohomology.at(6) == DegreeHomology{6, 1, {3}});

    CHECK_THROWS_AS(build_zpn_serre(2, 2, 10), Unsupported);
    CHECK_THROWS_AS(build_zpn_serre(3, 1, 10), InvalidInput);
    CHECK_THROWS_AS(omega2yn_cohomology(3, 1, 10), InvalidInput);
}

namespace {

// The DVR square assembled over Z from scratch: R = Z[u]/E with basis 1, u, ..., u^{e-1}.
OperatorCube integral_dvr_cube(const std::vector<long>& poly, int top) {
    const std::size_t e = poly.size() - 1;
    std::vector<std::vector<long>> u(e, std::vector<long>(e, 0));
    for (std::size_t i = 0; i + 1 < e; ++i) u[i + 1][i] = 1;
    for (std::size_t i = 0; i < e; ++i) u[i][e - 1] = -poly[i];
    auto multiply = [&](const std::vector<std::vector<long>>& a, const std::vector<std::vector<long>>& b) {
        std::vector<std::vector<long>> c(e, std::vector<long>(e, 0));
        for (std::size_t i = 0; i < e; ++i) {
            for (std::size_t j = 0; j < e; ++j) {
                for (std::size_t k = 0; k < e; ++k) c[i][j] += a[i][k] * b[k][j];
            }
        }
        return c;
    };
    std::vector<std::vector<long>> derivative(e, std::vector<long>(e, 0));
    std::vector<std::vector<long>> power(e, std::vector<long>(e, 0));
    for (std::size_t i = 0; i < e; ++i) power[i][i] = 1;
    for (std::size_t k = 1; k <= e; ++k) {
        for (std::size_t i = 0; i < e; ++i) {
            for (std::size_t j = 0; j < e; ++j) derivative[i][j] += static_cast<long>(k) * poly[k] * power[i][j];
        }
        power = multiply(power, u);
    }

    // Degree 2d basis: sigma^[a] x^(d-a) tensor u^i, ordered by (a, i).
    OperatorCube cube{ScalarRing::integers(), {}, {}};
    dpops::CubeOperator nabla{"nabla", 2, {}};
    dpops::CubeOperator theta{"Theta", 2, {}};
    for (int d = 0; d <= top; ++d) {
        cube.ranks[2 * d] = (d + 1) * e;
        if (d == 0) continue;
        IntMatrix n(d * e, (d + 1) * e);
        IntMatrix t(d * e, (d + 1) * e);
        for (int a = 0; a <= d; ++a) {
            for (std::size_t i = 0; i < e; ++i) {
                const std::size_t col = a * e + i;
                if (a > 0) {
                    for (std::size_t r = 0; r < e; ++r) n.set((a - 1) * e + r, col, derivative[r][i]);
                    t.set((a - 1) * e + i, col, 1);
                }
                if (d - a > 0) t.add_to(a * e + i, col, d - a);
            }
        }
        nabla.by_degree.emplace(2 * d, n);
        theta.by_degree.emplace(2 * d, t);
    }
    cube.operators = {nabla, theta};
    return cube;
}

}  // namespace

TEST_CASE("DVR square") {
    struct Case {
        long p;
        std::string coefficients;
        std::vector<long> poly;
    };
    const std::vector<Case> cases{{3, "1,-3", {-3, 1}},
                                  {3, "1,0,-3", {-3, 0, 1}},
                                  {3, "1,0,0,-3", {-3, 0, 0, 1}},
                                  {2, "1,0,-2", {-2, 0, 1}},
                                  {5, "1,5,10", {10, 5, 1}}};
    for (const auto& c : cases) {
        CAPTURE(c.coefficients);
        const auto desc = DVRDescriptor::parse(c.p, 12, c.coefficients);
        const int e = desc.ramification();
        const int bound = 21;
        const auto report = build_dvr_square(desc, bound);
        const auto integral = cube_total_fiber(integral_dvr_cube(c.poly, bound / 2 + 1), 0, bound);

        // v_pi(E'(pi)) from the integral norm
        const int vd = desc.derivative_valuation();
        for (int d = 0; d <= bound; ++d) {
            const DegreeHomology& h = report.total.at(d);
            CHECK(p_part(integral.at(d), c.p) == h);
            if (d == 0) {
                CHECK(h == DegreeHomology{0, static_cast<std::size_t>(e), {}});
                CHECK(report.generators.at(0) == 1);
            } else if (d % 2 == 1) {
                const long j = (d + 1) / 2;
                CHECK(h.free_rank == 0);
                CHECK(total_exponent(h, c.p) == e * vp(j, c.p) + vd);
                CHECK(report.generators.at(d) == (e * vp(j, c.p) + vd > 0 ? 1U : 0U));
            } else {
                CHECK(h.is_zero());
            }

            const DegreeHomology& n = report.nabla.at(d);
            if (d % 2 == 0) {
                CHECK(n == DegreeHomology{d, static_cast<std::size_t>(e), {}});
            } else {
                CHECK(total_exponent(n, c.p) == (d + 1) / 2 * vd);
            }
        }
        // extension at 2p - 1: |R/p| |R/E'| and cyclic
        const int d = static_cast<int>(2 * c.p - 1);
        CHECK(total_exponent(report.total.at(d), c.p) == e + vd);
        CHECK(report.generators.at(d) == 1);
    }

    const auto unramified = build_dvr_square(DVRDescriptor::parse(3, 12, "1,-3"), 30);
    CHECK(unramified.total.same_groups(build_bokstedt(3, BokstedtVariant::Jp, 30)));

    const auto two = build_dvr_square(DVRDescriptor::parse(3, 12, "1,0,-3"), 5);
    CHECK(two.total.at(1) == DegreeHomology{1, 0, {3}});
    CHECK(two.total.at(3) == DegreeHomology{3, 0, {3}});
    CHECK(two.total.at(5) == DegreeHomology{5, 0, {3, 9}});

    CHECK_THROWS_AS(DVRDescriptor::parse(3, 12, "1,0,-9"), InvalidInput);
    CHECK_THROWS_AS(DVRDescriptor::parse(3, 12, "1,1,-3"), InvalidInput);
    CHECK_THROWS_AS(DVRDescriptor::parse(3, 12, "2,0,-3"), InvalidInput);
    CHECK_THROWS_AS(DVRDescriptor::parse(3, 12, "1,x"), InvalidInput);
    CHECK_THROWS_AS(build_dvr_square(DVRDescriptor::parse(3, 2, "1,0,0,-3"), 20), PrecisionError);
    CHECK(DVRDescriptor::parse(2, 8, "1,2,2").polynomial() == "u^2 + 2*u + 2");
}

TEST_CASE("F-de Rham cohomology") {
    const auto additive = fgl::fgl_additive(fgl::CoefficientRing::integers(), 12);
    const auto a = fderham_cohomology(additive, 12, 1);
    CHECK(a[0].at(0) == DegreeHomology{0, 1, {}});
    CHECK(a[0].at(1).is_zero());
    for (int m = 2; m <= 12; ++m) CHECK(a[m].at(1) == DegreeHomology{1, 0, {m}});
    CHECK(a[1].at(1).is_zero());

    const int K = 8;
    const auto mult = fgl::fgl_multiplicative(fgl::CoefficientRing::residues(3, 10), "q-1", 12);
    const auto q = fderham_cohomology(mult, 9, K);
    const ScalarRing ring = ScalarRing::residues(3, 10);
    CHECK(q[0].at(0) == DegreeHomology{0, static_cast<std::size_t>(K), {}});
    for (long m = 1; m <= 9; ++m) {
        // [m]_q = sum_{i<m} (1 + h)^i, coefficient of h^k is C(m, k + 1)
        IntMatrix expected(K, K, ring);
        for (int i = 0; i < K; ++i) {
            for (int j = 0; j <= i; ++j) expected.set(i, j, exactalg::binomial(m, i - j + 1));
        }
        DegreeHomology h{1, 0, {}};
        for (const auto& d : exactalg::cokernel_invariants(expected)) {
            if (d == ring.modulus()) {
                ++h.free_rank;
            } else {
                h.torsion.push_back(ppow(3, vp(d, 3)));
            }
        }
        std::sort(h.torsion.begin(), h.torsion.end());
        CHECK(q[m].at(1) == h);
        CHECK(q[m].at(0).free_rank == 0);
    }
}

TEST_CASE("report serialization") {
    const auto report = build_bokstedt(3, BokstedtVariant::T1, 6);
    const Json j = report.to_json();
    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"builder", "params", "precision", "degrees"});
    CHECK(j["builder"] == "bokstedt");
    CHECK(j["precision"] == 5);
    CHECK(j["degrees"][5].dump() == R"({"degree":5,"free_rank":0,"torsion":[3]})");
    CHECK(j.dump() == report.to_json().dump());
    CHECK(report.to_text().find("H_5    Z/3") != std::string::npos);
    CHECK_THROWS_AS(report.at(7), InvalidInput);
}
