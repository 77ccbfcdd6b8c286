#include <fmt/format.h>

#include "checks.hpp"
#include "sencalc/exactalg/series.hpp"
#include "sencalc/witt/cartier.hpp"
#include "sencalc/witt/gabber.hpp"
#include "sencalc/witt/witt.hpp"

namespace sencalc::cli::detail {

using namespace sencalc::witt;
using exactalg::Series;

namespace {

std::string first_difference(const WittVector& actual, const WittVector& expected) {
    for (std::size_t i = 0; i < actual.components().size(); ++i) {
        if (actual[i] != expected[i]) {
            return fmt::format("component {}: {} instead of {}", i, abbreviate(actual[i]), abbreviate(expected[i]));
        }
    }
    return "vectors differ";
}

WittVector random_vector(Draw& draw, const WittContext& context, long range) {
    std::vector<Integer> components;
    for (int i = 0; i < context.length; ++i) components.emplace_back(draw(-range, range));
    return WittVector(context, components);
}

}  // namespace

Check gabber_check(long p, int length, const Targets& targets) {
    return run_check(fmt::format("witt.gabber p={} L={}", p, length), [&](Check& check) {
        const auto context = WittContext::over_integers(p, length);
        const WittVector y = gabber_y(p, length);
        const WittVector lhs = witt_add(teichmuller(p, context), verschiebung(y));
        const WittVector rhs = int_to_witt(p, context);
        check.expect(lhs == rhs, "[p] + V(y) differs from p at " + first_difference(lhs, rhs));
        check.payload = Json{{"p", p}, {"L", length}, {"y", integers_json(y.components())}};
        check.lines.push_back("y = " + tuple_string(y.components()));
        check.lines.push_back("[p] + V(y) = p in W_L(Z)");

        if (const auto target = targets.lookup(fmt::format("witt.gabber.y.p{}", p))) {
            const auto expected = parse_integers(*target);
            for (std::size_t i = 0; i < expected.size() && i < y.components().size(); ++i) {
                check.expect(y[i] == expected[i],
                             fmt::format("y_{} = {}, target says {}", i, abbreviate(y[i]), abbreviate(expected[i])));
            }
        }
    });
}

Check solve_frobenius_check(long p, int length, const Targets& targets) {
    return run_check(fmt::format("witt.solve-frobenius p={} L={}", p, length), [&](Check& check) {
        const WittVector y = gabber_y(p, length);
        const FrobeniusPreimage r = solve_frobenius(y);
        check.payload = Json{{"p", p}, {"L", length}, {"solved", r.solved}};
        if (p == 2) {
            check.expect(!r.solved, "F(x) = y was solved at p = 2");
            check.expect(r.stage == 2, fmt::format("obstruction at stage {}, expected stage 2", r.stage));
            if (const auto target = targets.lookup("witt.solve_frobenius.witness.p2")) {
                check.expect(r.witness == *target, fmt::format("witness `{}`, target says `{}`", r.witness, *target));
            }
            check.payload["stage"] = r.stage;
            check.payload["witness"] = r.witness;
            check.lines.push_back(fmt::format("no preimage: {} at stage {}", r.witness, r.stage));
            check.note = "at p = 2 the failure is the expected outcome";

            Json twisted = Json::array();
            for (unsigned m : {2U, 3U}) {
                const WittVector scaled = witt_mul(y, teichmuller(exactalg::power(Integer(2), m), y.context()));
                const FrobeniusPreimage s = solve_frobenius(scaled);
                check.expect(s.solved, fmt::format("F(x) = y [2^{}] has no solution", m));
                check.expect(s.all_components_divisible, fmt::format("preimage of y [2^{}] leaves 2Z", m));
                twisted.push_back(Json{{"m", m}, {"solved", s.solved}, {"components_in_2Z", s.all_components_divisible}});
                check.lines.push_back(fmt::format("y [2^{}]: preimage {} with components in 2Z", m,
                                                  s.solved ? "found" : "missing"));
            }
            check.payload["twisted"] = twisted;
            return;
        }
        check.expect(r.solved, "no preimage: " + r.witness);
        if (!r.solved) return;
        check.expect(r.x0_residue == 1, fmt::format("x_0 = {} mod p, expected 1", abbreviate(r.x0_residue)));
        check.expect(r.higher_components_divisible, "some x_j with j >= 1 is not divisible by p");
        check.expect(r.ghost_units, "some ghost component of x is not 1 mod p");
        check.payload["precision"] = r.verified_precision;
        check.payload["x"] = integers_json(r.x->components());
        check.lines.push_back(fmt::format("x = {} mod p^{}", tuple_string(r.x->components()), r.verified_precision));
    });
}

Check pn_vanishing_check(long p, int length, int n_max) {
    if (n_max < 1) throw InvalidInput("pn-vanishing needs n >= 1");
    return run_check(fmt::format("witt.pn-vanishing p={} L={} n<={}", p, length, n_max), [&](Check& check) {
        Json rows = Json::array();
        const auto integers = WittContext::over_integers(p, length);
        for (int n = 1; n <= n_max; ++n) {
            const Integer pn = exactalg::prime_power(p, static_cast<unsigned long>(n));
            const auto residues = WittContext::over_residues(p, length, n);
            const WittVector lhs = int_to_witt(pn, residues);
            const WittVector rhs = verschiebung(int_to_witt(pn / p, residues));
            check.expect(lhs == rhs, fmt::format("n = {}: p^n - V(p^(n-1)) at {}", n, first_difference(lhs, rhs)));

            const auto ghost = ghost_map(witt_sub(int_to_witt(pn, integers), verschiebung(int_to_witt(pn / p, integers))));
            std::vector<Integer> expected(static_cast<std::size_t>(length), 0);
            expected[0] = pn;
            check.expect(ghost.entries() == expected,
                         fmt::format("n = {}: ghost(p^n - V(p^(n-1))) = {}", n, tuple_string(ghost.entries())));
            rows.push_back(Json{{"n", n}, {"p^n", integers_json(lhs.components())}});
            check.lines.push_back(fmt::format("n = {}: p^n = {} = V(p^(n-1)) in W_L(Z/p^n)", n, tuple_string(lhs.components())));
        }
        check.payload = Json{{"p", p}, {"L", length}, {"levels", rows}};
    });
}

Check frobenius_of_p_check(long p, int length) {
    return run_check(fmt::format("witt.frobenius-of-p p={} L={}", p, length), [&](Check& check) {
        const FrobeniusOfPReport r = frobenius_of_p_identity(p, length);
        check.expect(r.frobenius_identity, "F([p] + V(y)) differs from p");
        check.expect(r.teichmuller_p_power, "[p^p] differs from p(1 - y)");
        check.payload = Json{{"p", p},
                             {"L", length},
                             {"frobenius_identity", r.frobenius_identity},
                             {"teichmuller_p_power", r.teichmuller_p_power},
                             {"teichmuller_p_square", r.teichmuller_p_square}};
        check.lines.push_back("F([p] + V(y)) = p and [p^p] = p(1 - y)");
        check.lines.push_back(fmt::format("[p^2] = p(1 - y): {}", r.teichmuller_p_square ? "holds" : "fails"));
        if (!r.teichmuller_p_square) check.note = "[p^2] = p(1 - y) holds only at p = 2";
    });
}

Check cartier_character_check(long p, int samples) {
    return run_check(fmt::format("witt.cartier p={} samples={}", p, samples), [&](Check& check) {
        const int n = 3;
        const std::size_t bound = 10;
        const auto context = WittContext::over_integers(p, n);
        Draw draw(static_cast<std::uint32_t>(1000 + p));
        for (int trial = 0; trial < samples && !check.failed(); ++trial) {
            // a_m = sum_{i >= m} p^{i+1} b_i satisfies the congruences that make f integral.
            std::vector<Integer> b(n);
            for (auto& v : b) v = draw(-4, 4);
            std::vector<Rational> a(n);
            for (int m = 0; m < n; ++m) {
                Integer s = 0;
                for (int i = m; i < n; ++i) s += exactalg::prime_power(p, static_cast<unsigned long>(i + 1)) * b[i];
                a[m] = s;
            }
            const WittVector x1 = random_vector(draw, context, 5);
            const WittVector x2 = random_vector(draw, context, 5);
            const std::string where = fmt::format("b = {}, x = {}, x' = {}", tuple_string(b), tuple_string(x1.components()),
                                                  tuple_string(x2.components()));
            try {
                const CartierReport report = cartier_character(a, x1, bound);
                check.expect(report.integral, "non-integral g at " + where);
                check.expect(report.log_matches_witt_polynomials, "log g misses the Witt polynomials at " + where);
            } catch (const IntegralityViolation& e) {
                check.fail(fmt::format("{} at {}", e.what(), where));
            }
            check.expect(cartier_additivity(a, x1, x2, bound), "g(x + x') != g(x) g(x') at " + where);
        }
        check.payload = Json{{"p", p}, {"samples", samples}, {"length", n}, {"degree_bound", bound}};
        check.lines.push_back(fmt::format("{} random characters: integral, additive, log = Witt polynomials", samples));
    });
}

Check dwork_check(int degree_bound, int instances) {
    return run_check(fmt::format("witt.dwork D={} instances={}", degree_bound, instances), [&](Check& check) {
        const auto bound = static_cast<std::size_t>(degree_bound);
        Draw draw(77);
        for (int instance = 0; instance < instances && !check.failed(); ++instance) {
            std::vector<Integer> r(bound + 1, 0);
            for (std::size_t j = 1; j <= bound; ++j) r[j] = draw(-3, 3);
            // log prod (1 - r_j t^j) = -sum_n (sum_{j | n} j r_j^{n/j}) t^n / n
            std::vector<Integer> x(bound + 1, 0);
            for (std::size_t n = 1; n <= bound; ++n) {
                for (std::size_t j = 1; j <= n; ++j) {
                    if (n % j == 0) x[n] -= Integer(static_cast<long>(j)) * exactalg::power(r[j], n / j);
                }
            }
            const DworkFactorization result = dwork_factorization(x, bound);
            Series product = Series::one(bound + 1);
            for (std::size_t j = 1; j <= bound; ++j) {
                Series factor = Series::one(bound + 1);
                factor[j] = -Rational(r[j]);
                product = product * factor;
            }
            Series exponent(bound + 1);
            for (std::size_t n = 1; n <= bound; ++n) exponent[n] = exactalg::fraction(x[n], static_cast<long>(n));
            for (std::size_t j = 1; j <= bound; ++j) {
                check.expect(result.factors[j] == r[j], fmt::format("instance {}: r_{} = {}, constructed with {}", instance, j,
                                                                    abbreviate(result.factors[j]), abbreviate(r[j])));
            }
            check.expect(result.product == product, fmt::format("instance {}: product differs", instance));
            check.expect(exponent.exp() == product, fmt::format("instance {}: exp(sum x_n t^n / n) differs", instance));
        }
        check.payload = Json{{"D", degree_bound}, {"instances", instances}};
        check.lines.push_back(
            fmt::format("{} constructed instances: exp(sum x_n t^n/n) = prod (1 - r_j t^j) mod t^{}", instances, degree_bound + 1));
    });
}

}  // namespace sencalc::cli::detail
