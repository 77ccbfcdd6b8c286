#include <doctest.h>

#include <random>

#include "sencalc/errors.hpp"
#include "sencalc/witt/cartier.hpp"
#include "sencalc/witt/gabber.hpp"
#include "sencalc/witt/witt.hpp"

using namespace sencalc;
using namespace sencalc::witt;
using exactalg::Series;
using exactalg::TruncPoly;

namespace {

WittVector vec(long p, std::vector<Integer> c) {
    const auto ctx = WittContext::over_integers(p, static_cast<int>(c.size()));
    return WittVector(ctx, std::move(c));
}

WittVector random_vector(std::mt19937& rng, const WittContext& ctx, int spread = 20) {
    std::uniform_int_distribution<int> dist(-spread, spread);
    std::vector<Integer> c(ctx.length);
    for (auto& x : c) x = dist(rng);
    return WittVector(ctx, c);
}

// Evaluates structure polynomials at integer points.
std::vector<Integer> evaluate(const std::vector<TruncPoly>& polys, const WittVector& x, const WittVector& y) {
    std::vector<Integer> out;
    for (const auto& poly : polys) {
        Rational value = 0;
        for (const auto& [m, c] : poly.terms()) {
            Rational term = c;
            for (int i = 0; i < x.length(); ++i) {
                term *= Rational(exactalg::power(x[i], m[i]) * exactalg::power(y[i], m[x.length() + i]));
            }
            value += term;
        }
        CHECK(value.get_den() == 1);
        out.push_back(value.get_num());
    }
    return out;
}

}  // namespace

TEST_CASE("structure polynomials") {
    auto s2 = witt_structure_polynomials(2, 3);
    const auto& v2 = s2->variables;
    CHECK(s2->sum[0] == TruncPoly::parse("X_0 + Y_0", v2));
    CHECK(s2->product[0] == TruncPoly::parse("X_0 Y_0", v2));
    CHECK(s2->sum[1] == TruncPoly::parse("X_1 + Y_1 - X_0 Y_0", v2));
    auto s3 = witt_structure_polynomials(3, 2);
    CHECK(s3->sum[1] == TruncPoly::parse("X_1 + Y_1 - X_0^2 Y_0 - X_0 Y_0^2", s3->variables));
    CHECK(witt_structure_polynomials(2, 3).get() == s2.get());
    CHECK_THROWS_AS(witt_structure_polynomials(5, 4), Unsupported);

    for (auto [p, length] : {std::pair{2L, 4}, std::pair{3L, 3}, std::pair{5L, 2}}) {
        auto s = witt_structure_polynomials(p, length);
        const auto& vars = s->variables;
        for (int j = 0; j < length; ++j) {
            TruncPoly sum_ghost(vars), prod_ghost(vars);
            for (int i = 0; i <= j; ++i) {
                const auto e = static_cast<unsigned>(exactalg::prime_power(p, j - i).get_ui());
                sum_ghost += s->sum[i].pow(e) * Rational(exactalg::prime_power(p, i));
                prod_ghost += s->product[i].pow(e) * Rational(exactalg::prime_power(p, i));
            }
            CHECK(sum_ghost == witt_polynomial(p, j, vars, 0) + witt_polynomial(p, j, vars, length));
            CHECK(prod_ghost == witt_polynomial(p, j, vars, 0) * witt_polynomial(p, j, vars, length));
            CHECK(s->sum[j].homogeneous_degree() == static_cast<int>(exactalg::prime_power(p, j).get_ui()));
        }
        std::mt19937 rng(static_cast<unsigned>(p * 10 + length));
        const auto ctx = WittContext::over_integers(p, length);
        for (int trial = 0; trial < 20; ++trial) {
            const WittVector x = random_vector(rng, ctx, 6), y = random_vector(rng, ctx, 6);
            CHECK(witt_add(x, y).components() == evaluate(s->sum, x, y));
            CHECK(witt_mul(x, y).components() == evaluate(s->product, x, y));
        }
    }
}

TEST_CASE("ghost map and inverse") {
    const auto ctx = WittContext::over_integers(3, 4);
    CHECK(ghost_map(teichmuller(5, ctx)).entries() == std::vector<Integer>{5, 125, 1953125, exactalg::power(Integer(5), 27)});
    CHECK(ghost_map(vec(2, {2, -1, -4})).entries() == std::vector<Integer>{2, 2, 2});
    CHECK(ghost_map(vec(2, {2, -1, -2})).entries() == std::vector<Integer>{2, 2, 10});
    const WittVector y = ghost_inverse(GhostVector(WittContext::over_integers(3, 2), {-8, -6560}));
    CHECK(y.components() == std::vector<Integer>{-8, -2016});
    CHECK(ghost_map(verschiebung(vec(3, {-8, -2016, 0}))).entries()[1] == -24);
    CHECK(ghost_inverse(ghost_map(teichmuller(7, ctx))) == teichmuller(7, ctx));
    try {
        ghost_inverse(GhostVector(WittContext::over_integers(2, 2), {1, 0}));
        FAIL("expected a divisibility failure");
    } catch (const NotAWittVector& e) {
        CHECK(e.index() == 1);
    }
    CHECK_THROWS_AS(ghost_inverse(GhostVector(WittContext::over_residues(2, 2, 3), {1, 1})), InvalidInput);
}

TEST_CASE("Witt arithmetic examples") {
    const auto ctx = WittContext::over_integers(2, 2);
    CHECK(witt_add(vec(2, {1, 0}), vec(2, {1, 0})).components() == std::vector<Integer>{2, -1});
    std::mt19937 rng(2);
    const WittVector x = random_vector(rng, WittContext::over_integers(3, 4));
    CHECK(witt_add(x, WittVector::zero(x.context())) == x);
    CHECK(witt_mul(x, teichmuller(1, x.context())) == x);
    const auto c3 = WittContext::over_integers(3, 3);
    CHECK(witt_add(teichmuller(3, c3), verschiebung(gabber_y(3, 3))) == int_to_witt(3, c3));
    CHECK_THROWS_AS(witt_add(x, WittVector::zero(ctx)), InvalidInput);
}

TEST_CASE("Verschiebung, Frobenius, Teichmuller, delta") {
    const auto ctx = WittContext::over_integers(3, 4);
    CHECK(verschiebung(WittVector::zero(ctx)) == WittVector::zero(ctx));
    CHECK(frobenius(teichmuller(4, ctx)) == teichmuller(64, ctx.with_length(3)));
    const auto z27 = WittContext::over_residues(3, 5, 3);
    CHECK(int_to_witt(27, z27) == verschiebung(int_to_witt(9, z27)));
    CHECK(delta(teichmuller(6, ctx)) == WittVector::zero(ctx.with_length(3)));
    CHECK(delta(int_to_witt(2, WittContext::over_integers(2, 2))).components() == std::vector<Integer>{-1});
    CHECK_THROWS_AS(delta(int_to_witt(2, z27)), InvalidInput);

    CHECK(int_to_witt(1, ctx).components() == std::vector<Integer>{1, 0, 0, 0});
    CHECK(int_to_witt(2, WittContext::over_integers(2, 3)).components() == std::vector<Integer>{2, -1, -4});
    CHECK(int_to_witt(3, WittContext::over_integers(2, 3)).components() == std::vector<Integer>{3, -3, -24});
}

TEST_CASE("Gabber's element") {
    CHECK(gabber_y(3, 2).components() == std::vector<Integer>{-8, -2016});
    CHECK(gabber_y(2, 1).components() == std::vector<Integer>{-1});
    for (long p : {2L, 3L, 5L}) {
        for (int length : {5, 6}) {
            const auto ctx = WittContext::over_integers(p, length);
            const WittVector y = gabber_y(p, length);
            for (int j = 0; j < length; ++j) {
                const auto e = exactalg::prime_power(p, j + 1).get_ui() - 1;
                CHECK(ghost_map(y)[j] == 1 - exactalg::prime_power(p, e));
            }
            CHECK(witt_add(teichmuller(p, ctx), verschiebung(y)) == int_to_witt(p, ctx));
        }
    }
}

TEST_CASE("solving F(x) = y") {
    for (long p : {3L, 5L}) {
        const auto r = solve_frobenius(gabber_y(p, 5));
        REQUIRE(r.solved);
        CHECK(r.x0_residue == 1);
        CHECK(r.higher_components_divisible);
        CHECK(r.ghost_units);
    }
    const auto fail = solve_frobenius(gabber_y(2, 5));
    CHECK_FALSE(fail.solved);
    CHECK(fail.stage == 2);
    CHECK(fail.witness_residue == -2);
    CHECK(fail.witness_modulus == 8);
    CHECK(fail.witness == "4x_2 = -2 (mod 8)");
    for (unsigned m : {2U, 3U}) {
        const WittVector y = gabber_y(2, 5);
        const auto r = solve_frobenius(witt_mul(y, teichmuller(exactalg::power(Integer(2), m), y.context())));
        REQUIRE(r.solved);
        CHECK(r.all_components_divisible);
    }
    CHECK_THROWS_AS(solve_frobenius(reduce(gabber_y(3, 5), 6)), PrecisionError);
    CHECK(solve_frobenius(reduce(gabber_y(3, 5), 8)).solved);

    std::mt19937 rng(4);
    for (long p : {2L, 3L, 5L}) {
        for (int trial = 0; trial < 10; ++trial) {
            const WittVector x = random_vector(rng, WittContext::over_integers(p, 5));
            const WittVector y = frobenius(x);
            const auto r = solve_frobenius(y);
            REQUIRE(r.solved);
            CHECK(frobenius(*r.x) == reduce(y, r.verified_precision));
        }
    }
}

TEST_CASE("Frobenius applied to Gabber's identity") {
    const auto two = frobenius_of_p_identity(2, 4);
    CHECK(two.frobenius_identity);
    CHECK(two.teichmuller_p_power);
    CHECK(two.teichmuller_p_square);
    const auto three = frobenius_of_p_identity(3, 4);
    CHECK(three.frobenius_identity);
    CHECK(three.teichmuller_p_power);
    CHECK_FALSE(three.teichmuller_p_square);
    for (long p : {2L, 3L, 5L}) {
        const auto ctx = WittContext::over_integers(p, 4);
        CHECK(frobenius(int_to_witt(p, ctx)) == int_to_witt(p, ctx.with_length(3)));
    }
}

TEST_CASE("Witt ring properties on random samples") {
    std::mt19937 rng(99);
    for (long p : {2L, 3L, 5L}) {
        for (int length = 2; length <= 5; ++length) {
            const auto ctx = WittContext::over_integers(p, length);
            const auto shorter = ctx.with_length(length - 1);
            for (int trial = 0; trial < 6; ++trial) {
                const WittVector x = random_vector(rng, ctx), y = random_vector(rng, ctx);
                const auto gx = ghost_map(x).entries(), gy = ghost_map(y).entries();
                const auto gs = ghost_map(witt_add(x, y)).entries(), gp = ghost_map(witt_mul(x, y)).entries();
                for (int j = 0; j < length; ++j) {
                    CHECK(gs[j] == gx[j] + gy[j]);
                    CHECK(gp[j] == gx[j] * gy[j]);
                }
                CHECK(verschiebung(witt_add(x, y)) == witt_add(verschiebung(x), verschiebung(y)));
                CHECK(frobenius(witt_add(x, y)) == witt_add(frobenius(x), frobenius(y)));
                CHECK(frobenius(witt_mul(x, y)) == witt_mul(frobenius(x), frobenius(y)));
                CHECK(frobenius(verschiebung(x)) == witt_mul(int_to_witt(p, shorter), truncate(x, length - 1)));
                CHECK(truncate(witt_mul(x, verschiebung(y)), length - 1) ==
                      verschiebung(witt_mul(frobenius(x), truncate(y, length - 1))));
                CHECK(witt_mul(teichmuller(x[0], ctx), teichmuller(y[0], ctx)) == teichmuller(x[0] * y[0], ctx));
                const WittVector d = delta(x);
                CHECK(frobenius(x) == witt_add(witt_pow(truncate(x, length - 1), static_cast<unsigned>(p)),
                                               witt_mul(int_to_witt(p, shorter), d)));
                for (int n : {1, 3, 6}) {
                    CHECK(reduce(witt_add(x, y), n) == witt_add(reduce(x, n), reduce(y, n)));
                    CHECK(reduce(witt_mul(x, y), n) == witt_mul(reduce(x, n), reduce(y, n)));
                    CHECK(reduce(frobenius(x), n) == frobenius(reduce(x, n)));
                }
            }
        }
    }
}

TEST_CASE("p^n = V(p^{n-1}) in W(Z/p^n)") {
    for (long p : {2L, 3L}) {
        for (int n = 1; n <= 4; ++n) {
            const auto ctx = WittContext::over_residues(p, 6, n);
            const Integer pn = exactalg::prime_power(p, n);
            CHECK(int_to_witt(pn, ctx) == verschiebung(int_to_witt(pn / p, ctx)));
            const auto zctx = WittContext::over_integers(p, 6);
            const auto diff = witt_sub(int_to_witt(pn, zctx), verschiebung(int_to_witt(pn / p, zctx)));
            CHECK(ghost_map(diff).entries() == std::vector<Integer>{pn, 0, 0, 0, 0, 0});
        }
    }
}

TEST_CASE("Cartier character") {
    const auto ctx2 = WittContext::over_integers(2, 2);
    const WittVector x = vec(2, {3, -5});
    const auto loose = cartier_character({1, 0}, x, 8, false);
    CHECK(loose.log_matches_witt_polynomials);
    CHECK_FALSE(loose.integral);
    CHECK(loose.g.log()[1] == 3);
    CHECK_THROWS_AS(cartier_character({1, 0}, x, 8), IntegralityViolation);
    const auto trivial = cartier_character({0, 0}, x, 8);
    CHECK(trivial.g == Series::one(9));

    // f = exp(a_0 t + a_1 t^2 / 2) expanded as a double sum of factorial terms.
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> dist(-6, 6);
    for (int trial = 0; trial < 20; ++trial) {
        const Integer b0 = dist(rng), b1 = dist(rng);
        const Rational a0 = 2 * b0 + 4 * b1, a1 = 4 * b1;
        const auto report = cartier_character({a0, a1}, vec(2, {dist(rng), dist(rng)}), 8);
        CHECK(report.integral);
        for (int k = 0; k <= 8; ++k) {
            Rational expected = 0;
            for (int j = 0; 2 * j <= k; ++j) {
                const int i = k - 2 * j;
                expected += exactalg::power(a0, i) / Rational(exactalg::factorial(i)) * exactalg::power(a1 / 2, j) /
                            Rational(exactalg::factorial(j));
            }
            CHECK(report.f[k] == expected);
        }
    }

    for (long p : {2L, 3L}) {
        const int n = 3;
        const auto ctx = WittContext::over_integers(p, n);
        std::uniform_int_distribution<int> small(-4, 4);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Integer> b(n);
            for (auto& v : b) v = small(rng);
            std::vector<Rational> a(n);
            for (int m = 0; m < n; ++m) {
                Integer s = 0;
                for (int i = m; i < n; ++i) s += exactalg::prime_power(p, i + 1) * b[i];
                a[m] = s;
            }
            const WittVector x1 = random_vector(rng, ctx, 5), x2 = random_vector(rng, ctx, 5);
            const auto report = cartier_character(a, x1, 10);
            CHECK(report.integral);
            CHECK(report.log_matches_witt_polynomials);
            CHECK(cartier_additivity(a, x1, x2, 10));
        }
    }
    (void)ctx2;
}

TEST_CASE("Dwork factorization") {
    std::vector<Integer> ones(9, -1);
    const auto one_minus_t = dwork_factorization(ones, 8);
    CHECK(one_minus_t.factors[1] == 1);
    for (int j = 2; j <= 8; ++j) CHECK(one_minus_t.factors[j] == 0);
    const auto zero = dwork_factorization(std::vector<Integer>(9, 0), 8);
    for (int j = 1; j <= 8; ++j) CHECK(zero.factors[j] == 0);

    // Independent oracle: peel factors (1 - r_j t^j) off the exponential one degree at a time.
    std::vector<Integer> xs(9);
    for (int n = 1; n <= 8; ++n) xs[n] = -2 - exactalg::power(Integer(2), n);
    const auto result = dwork_factorization(xs, 8);
    Series f(9);
    for (int n = 1; n <= 8; ++n) f[n] = exactalg::fraction(xs[n], n);
    Series rest = f.exp();
    for (int j = 1; j <= 8; ++j) {
        const Rational r = -rest[j];
        CHECK(r == Rational(result.factors[j]));
        Series factor = Series::one(9);
        factor[j] = -r;
        rest = rest * factor.reciprocal();
    }
    CHECK(result.factors[1] == 4);

    std::vector<Integer> bad(9, 0);
    bad[2] = 1;
    CHECK_THROWS_AS(dwork_factorization(bad, 8), InvalidInput);
}
