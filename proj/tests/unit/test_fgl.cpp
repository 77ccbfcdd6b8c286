#include <doctest.h>

#include <random>

#include "sencalc/errors.hpp"
#include "sencalc/fgl/bp.hpp"
#include "sencalc/fgl/derham.hpp"
#include "sencalc/fgl/fgl.hpp"

using namespace sencalc;
using namespace sencalc::fgl;


using exactalg::TruncPoly;
using exactalg::Truncation;
using exactalg::Variable;

namespace {

Series power_series(std::initializer_list<long> coeffs, std::size_t bound) {
    Series s(bound);
    std::size_t k = 0;
    for (long c : coeffs) s[k++] = c;
    return s;
}

// [n]_q at q = 1 + h, as a series mod h^bound.
Series q_integer(long n, std::size_t bound) {
    Series total(bound);
    Series q_power = Series::one(bound);
    const Series q = power_series({1, 1}, bound);
    for (long i = 0; i < n; ++i) {
        total += q_power;
        q_power = q_power * q;
    }
    return total;
}

// Law whose logarithm is x + sum_{k>=2} r_k x^k, with random small rationals r_k.
FormalGroupLaw law_from_random_log(std::mt19937& rng, int degree_bound, Series* log_out) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
    const auto bound = static_cast<std::size_t>(degree_bound) + 1;
    Series log(bound);
    log[1] = 1;
    for (std::size_t k = 2; k < bound; ++k) log[k] = exactalg::fraction(num(rng), den(rng));
    const Series exp = log.reversion();

    // F(X, Y) = exp(log X + log Y), expanded with the trivariate-free TruncPoly route.
    const std::vector<Variable> vars{{"X", -2, 1}, {"Y", -2, 1}};
    const Truncation trunc{{}, degree_bound};
    TruncPoly sum(vars, trunc);
    for (std::size_t k = 1; k < bound; ++k) {
        sum += TruncPoly::generator(vars, 0, trunc).pow(k) * log[k];
        sum += TruncPoly::generator(vars, 1, trunc).pow(k) * log[k];
    }
    TruncPoly f(vars, trunc);
    TruncPoly power = TruncPoly::constant(vars, 1, trunc);
    for (std::size_t k = 1; k < bound; ++k) {
        power = power * sum;
        f += power * exp[k];
    }
    Bivariate c(degree_bound);
    for (const auto& [m, coeff] : f.terms()) c.at(static_cast<int>(m[0]), static_cast<int>(m[1])) = coeff;
    *log_out = log;
    return fgl_custom(CoefficientRing::rationals(), c);
}

void check_n_series_laws(const FormalGroupLaw& law) {
    for (long a = -5; a <= 5; ++a) {
        const Series na = n_series(law, a);
        for (long b = -5; b <= 5; ++b) {
            const Series nb = n_series(law, b);
            CHECK(n_series(law, a + b) == law.evaluate(na, nb));
            Series composed = na.compose(nb);
            law.ring().normalize(composed);
            CHECK(n_series(law, a * b) == composed);
        }
    }
}

}  // namespace

TEST_CASE("additive and multiplicative n-series") {
    const auto additive = fgl_additive(CoefficientRing::integers(), 12);
    for (long m = -5; m <= 7; ++m) {
        Series expected(13);
        expected[1] = m;
        CHECK(n_series(additive, m) == expected);
        CHECK(divided_n_series(additive, m)[0] == m);
    }
    const auto mult = fgl_multiplicative(CoefficientRing::integers(), "lambda", 12);
    CHECK(n_series(mult, 2) == power_series({0, 2, 1}, 13));
    CHECK(parameter_exponent(mult, 2) == 1);
    CHECK(mult.as_truncpoly().to_string() == "X Y lambda + X + Y");
    check_n_series_laws(mult);
    for (long m = 0; m <= 9; ++m) CHECK(divided_n_series(mult, m)[0] == m);
}

TEST_CASE("divided n-series of the multiplicative law are q-integers") {
    // Oracle: iterate x + y + lambda x y with lambda kept as a polynomial variable.
    const int bound = 21;
    const std::vector<Variable> vars{{"x", -2, 1}, {"lambda", 2, 1}};
    const Truncation trunc{{bound, -1}, -1};
    const TruncPoly x = TruncPoly::generator(vars, 0, trunc);
    const TruncPoly lambda = TruncPoly::generator(vars, 1, trunc);
    const auto law = fgl_multiplicative(CoefficientRing::integers(), "lambda", bound);
    TruncPoly iterate(vars, trunc);
    for (long n = 1; n <= 20; ++n) {
        iterate = iterate + x + lambda * iterate * x;
        const Series divided = divided_n_series(law, n);
        const Series expected = q_integer(n, divided.bound());
        CHECK(divided == expected);
        for (const auto& [m, c] : iterate.terms()) {
            REQUIRE(m[0] >= 1);
            CHECK(m[1] == m[0] - 1);
            CHECK(divided[m[0] - 1] == c);
        }
    }
}

TEST_CASE("Honda laws") {
    const auto honda21 = fgl_honda(2, 1, 12);
    CHECK(n_series(honda21, 2) == power_series({0, 0, 1}, 13));
    CHECK(honda21.parameter().weight == 1);
    check_n_series_laws(fgl_honda(3, 1, 12));

    struct Case {
        long p;
        int n;
    };
    for (const Case c : {Case{2, 1}, Case{2, 2}, Case{2, 3}, Case{2, 6}, Case{3, 1}, Case{3, 2}, Case{3, 3}, Case{5, 1},
                         Case{5, 2}, Case{7, 1}, Case{7, 2}, Case{11, 1}, Case{61, 1}}) {
        CAPTURE(c.p);
        CAPTURE(c.n);
        const long q = exactalg::prime_power(c.p, c.n).get_si();
        const auto law = fgl_honda(c.p, c.n, 64);
        const Series p_series = n_series(law, c.p);
        long pm = c.p;
        long qm = q;
        Series iterated = p_series;
        for (int m = 1; qm <= 64; ++m) {
            CAPTURE(m);
            // Oracle: m-fold composition of [p] against the doubling route.
            const Series direct = n_series(law, pm);
            CHECK(direct == iterated);
            const Series divided = divided_n_series(law, pm);
            for (std::size_t k = 0; k < divided.bound(); ++k) CHECK(divided[k] == (static_cast<long>(k) == qm - 1 ? 1 : 0));
            CHECK(parameter_exponent(law, static_cast<int>(qm)) == (qm - 1) / (q - 1));

            const TateQuotient tate = tate_quotient_series(law, pm, 64);
            REQUIRE(tate.annihilation_exponent.has_value());
            CHECK(*tate.annihilation_exponent == (qm - 1) / (q - 1));
            CHECK(*tate.monomial_degree == qm - 1);

            pm *= c.p;
            qm *= q;
            iterated = iterated.compose(p_series);
            law.ring().normalize(iterated);
        }
    }
    CHECK(tate_quotient_series(fgl_honda(2, 1, 8), 4, 8).annihilation_exponent == 3);
    CHECK_THROWS_AS(tate_quotient_series(fgl_honda(2, 1, 8), 4, 9), PrecisionError);
}

TEST_CASE("custom laws and axiom failures") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 3; ++trial) {
        Series log;
        const auto law = law_from_random_log(rng, 9, &log);
        check_n_series_laws(law);
        const LogExp le = fgl_log_exp(law);
        CHECK(le.log == log);
        CHECK(le.exp.compose(le.log) == power_series({0, 1}, 10));
    }

    Bivariate asymmetric(6);
    asymmetric.at(1, 0) = 1;
    asymmetric.at(0, 1) = 1;
    asymmetric.at(1, 2) = 1;
    try {
        fgl_custom(CoefficientRing::integers(), asymmetric);
        FAIL("expected InvalidFgl");
    } catch (const InvalidFgl& e) {
        CHECK(e.degree() == 3);
    }

    // X + Y + X^2 Y^2: (X + Y)^2 Z^2 differs from X^2 (Y + Z)^2 in degree 4.
    Bivariate nonassociative(6);
    nonassociative.at(1, 0) = 1;
    nonassociative.at(0, 1) = 1;
    nonassociative.at(2, 2) = 1;
    try {
        fgl_custom(CoefficientRing::integers(), nonassociative);
        FAIL("expected InvalidFgl");
    } catch (const InvalidFgl& e) {
        CHECK(e.degree() == 4);
    }

    Bivariate no_unit(4);
    no_unit.at(1, 0) = 1;
    no_unit.at(0, 1) = 1;
    no_unit.at(2, 0) = 1;
    no_unit.at(0, 2) = 1;
    CHECK_THROWS_AS(fgl_custom(CoefficientRing::integers(), no_unit), InvalidFgl);
}

TEST_CASE("logarithms") {
    const auto additive = fgl_additive(CoefficientRing::rationals(), 8);
    CHECK(fgl_log_exp(additive).log == power_series({0, 1}, 9));

    const auto mult = fgl_multiplicative(CoefficientRing::rationals(), "lambda", 8);
    const LogExp le = fgl_log_exp(mult);
    for (std::size_t k = 1; k < 9; ++k) CHECK(le.log[k] == exactalg::fraction(k % 2 == 1 ? 1 : -1, static_cast<long>(k)));
    for (long m = 1; m <= 5; ++m) CHECK(le.log.compose(n_series(mult, m)) == le.log * Rational(m));
    CHECK(le.exp == (power_series({0, 1}, 9).exp() - Series::one(9)));

    CHECK_THROWS_AS(fgl_log_exp(fgl_honda(2, 1, 8)), InvalidInput);
}

TEST_CASE("Tate quotients of additive and multiplicative laws") {
    const auto additive = fgl_additive(CoefficientRing::integers(), 10);
    const TateQuotient a = tate_quotient_series(additive, 3, 10);
    CHECK(a.divided == Series::one(10) * Rational(3));
    CHECK_FALSE(a.annihilation_exponent.has_value());
    const auto mult = fgl_multiplicative(CoefficientRing::integers(), "q-1", 10);
    CHECK(tate_quotient_series(mult, 3, 10).divided == q_integer(3, 10));
}

TEST_CASE("Hazewinkel generators") {
    for (long p : {2L, 3L, 5L}) {
        const auto gens = hazewinkel_generators(p, 3);
        const auto l_vars = bp_variables(p, 3, "l");
        CHECK(gens.v_in_l[0] == TruncPoly::generator(l_vars, 0) * Rational(p));
        const TruncPoly l1 = TruncPoly::generator(l_vars, 0);
        const TruncPoly expected_v2 =
            TruncPoly::generator(l_vars, 1) * Rational(p) - l1.pow(p + 1) * Rational(exactalg::power(Integer(p), p));
        CHECK(gens.v_in_l[1] == expected_v2);
        for (int n = 1; n <= 3; ++n) {
            const int degree = 2 * static_cast<int>(exactalg::prime_power(p, n).get_si()) - 2;
            CHECK(gens.v_in_l[n - 1].homogeneous_degree() == degree);
            CHECK(gens.l_in_v[n - 1].homogeneous_degree() == degree);
            CHECK(gens.v_in_l[n - 1].is_integral());
            // l(v(l)) = l
            TruncPoly roundtrip = gens.l_in_v[n - 1];
            TruncPoly substituted(l_vars);
            for (const auto& [m, c] : roundtrip.terms()) {
                TruncPoly term = TruncPoly::constant(l_vars, c);
                for (std::size_t i = 0; i < m.size(); ++i) term = term * gens.v_in_l[i].pow(m[i]);
                substituted += term;
            }
            CHECK(substituted == TruncPoly::generator(l_vars, n - 1));
        }
    }
    CHECK_THROWS_AS(hazewinkel_generators(2, 5), InvalidInput);
}

TEST_CASE("BP right unit") {
    const RightUnit unit2 = bp_right_unit(2, 2);
    const auto& vars = unit2.variables;
    CHECK(unit2.eta_v[0] == TruncPoly::parse("v_1 + 2t_1", vars));
    const TruncPoly v1sq = unit2.v(1).pow(2);
    CHECK((unit2.apply(v1sq) - v1sq) * Rational(1, 4) == TruncPoly::parse("t_1^2 + v_1 t_1", vars));
    CHECK(unit2.eta_v[1] == TruncPoly::parse("v_2 - 5v_1 t_1^2 - 3v_1^2 t_1 + 2t_2 - 4t_1^3", vars));

    for (long p : {2L, 3L, 5L}) {
        const int count = p == 2 ? 3 : 2;
        const RightUnit unit = bp_right_unit(p, count);
        CHECK(unit.eta_v[0] == unit.v(1) + unit.t(1) * Rational(p));
        for (int n = 1; n <= count; ++n) {
            const TruncPoly& eta = unit.eta_v[n - 1];
            CHECK(eta.homogeneous_degree() == unit.v(n).homogeneous_degree());
            CHECK(eta.is_integral());
            // eta_R(v_n) = v_n mod (p, t_1, t_2, ...)
            TruncPoly reduced = eta;
            for (int k = 1; k <= count; ++k) reduced = reduced.evaluate(k - 1, 0);
            CHECK(reduced.reduce_symmetric(p) == unit.v(n));
        }
        std::vector<TruncPoly> samples{unit.v(1).pow(3), unit.v(1) * unit.v(2), unit.t(1) * unit.v(2) + unit.v(1).pow(2),
                                       unit.v(2).pow(2) * Rational(3)};
        for (const TruncPoly& f : samples) {
            CHECK(unit.apply(f) == unit.apply_through_logarithm(f));
            for (const TruncPoly& g : samples) {
                CHECK(unit.apply(f * g) == unit.apply(f) * unit.apply(g));
                CHECK(unit.apply(f + g) == unit.apply(f) + unit.apply(g));
            }
        }
    }
}

TEST_CASE("b4 cobar class") {
    const TruncPoly b4 = b4_cobar_class();
    const TruncPoly expected = TruncPoly::parse(
        "5t_1^4 + 9t_1^3 v_1 + 7t_1^2 v_1^2 - 2t_1 t_2 + 2t_1 v_1^3 - t_1 v_2 - t_2 v_1", b4.variables());
    CHECK(b4 == expected);
    CHECK(b4.homogeneous_degree() == 8);
    const std::size_t v1 = b4.variable_index("v_1");
    const std::size_t v2 = b4.variable_index("v_2");
    const TruncPoly mod_v1 = b4.evaluate(v1, 0).reduce_symmetric(2);
    CHECK(mod_v1 == TruncPoly::parse("t_1^4 + t_1 v_2", b4.variables()));
    CHECK(mod_v1.evaluate(v2, 0) == TruncPoly::parse("t_1^4", b4.variables()));
}

TEST_CASE("generalized de Rham complex maps") {
    const auto additive = fgl_additive(CoefficientRing::integers(), 8);
    const FDerhamComplex a = f_derham_complex(additive, 5, 8);
    for (int m = 0; m <= 5; ++m) {
        exactalg::IntMatrix expected(8, 8);
        for (std::size_t i = 0; i < 8; ++i) expected.set(i, i, m);
        CHECK(a.weight_maps[m] == expected);
    }
    const auto mult = fgl_multiplicative(CoefficientRing::residues(3, 5), "q-1", 10);
    const FDerhamComplex q = f_derham_complex(mult, 12, 10);
    CHECK(q.weight_maps[0].is_zero());
    for (int m = 1; m <= 12; ++m) {
        const exactalg::IntMatrix& map = q.weight_maps[m];
        const Series expected = q_integer(m, 10);
        for (std::size_t i = 0; i < 10; ++i) {
            for (std::size_t j = 0; j < 10; ++j) {
                const Integer entry = i >= j ? q.ring.from_rational(expected[i - j]) : Integer(0);
                CHECK(map.at(i, j) == entry);
            }
        }
    }
    CHECK_THROWS_AS(f_derham_complex(mult, 3, 11), PrecisionError);
}
