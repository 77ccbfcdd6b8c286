#include <fmt/format.h>

#include "checks.hpp"
#include "sencalc/fgl/bp.hpp"
#include "sencalc/fgl/fgl.hpp"
#include "sencalc/senhom/builders.hpp"

namespace sencalc::cli::detail {

using namespace sencalc::fgl;

namespace {

// Coefficient of x^k is c param^e; `shift` = 1 renders <m>(h), whose h^k term sits in degree k + 1.
std::string series_string(const Series& s, const FormalGroupLaw& law, const std::string& variable, int shift) {
    std::string out;
    for (std::size_t k = 0; k < s.bound(); ++k) {
        const Rational& c = s[k];
        if (c == 0) continue;
        std::vector<std::string> factors;
        const auto e = parameter_exponent(law, static_cast<int>(k) + shift);
        if (e && *e > 0) factors.push_back(*e == 1 ? law.parameter().name : fmt::format("{}^{}", law.parameter().name, *e));
        if (k == 1) factors.push_back(variable);
        if (k > 1) factors.push_back(fmt::format("{}^{}", variable, k));
        const Rational magnitude = abs(c);
        std::string term = magnitude == 1 && !factors.empty() ? "" : magnitude.get_str();
        if (!term.empty() && !factors.empty() && factors.front().size() > 1 && factors.front()[1] != '^') term += ' ';
        term += fmt::format("{}", fmt::join(factors, " "));
        if (out.empty()) {
            out = c < 0 ? "-" + term : term;
        } else {
            out += (c < 0 ? " - " : " + ") + term;
        }
    }
    return out.empty() ? "0" : out;
}

FormalGroupLaw law_of_kind(const std::string& kind, const CoefficientRing& ring, long p, int height, int bound,
                           const std::string& parameter) {
    if (kind == "additive") return fgl_additive(ring, bound);
    if (kind == "multiplicative") return fgl_multiplicative(ring, parameter, bound);
    if (kind == "honda") return fgl_honda(p, height, bound);
    throw InvalidInput("unknown law kind " + kind);
}

// Generalized binomial coefficient m (m - 1) ... (m - k + 1) / k!.
Integer binomial_signed(long m, long k) {
    Integer out = 1;
    for (long i = 0; i < k; ++i) out *= m - i;
    return out / exactalg::factorial(static_cast<unsigned long>(k));
}

std::optional<int> log_p(long m, long p) {
    int e = 0;
    for (; m > 1 && m % p == 0; m /= p) ++e;
    if (m != 1) return std::nullopt;
    return e;
}

}  // namespace

Check nseries_check(const std::string& kind, long p, int height, long m, int degree_bound, const Targets& targets) {
    return run_check(fmt::format("fgl.nseries kind={} m={} D={}", kind, m, degree_bound), [&](Check& check) {
        const FormalGroupLaw law = law_of_kind(kind, CoefficientRing::integers(), p, height, degree_bound, "lambda");
        const Series s = n_series(law, m);
        const std::string rendered = series_string(s, law, "x", 0);
        check.payload = Json{{"kind", kind}, {"m", m}, {"D", degree_bound}, {"series", rendered}};
        if (kind == "honda") {
            check.payload["p"] = p;
            check.payload["n"] = height;
        }
        check.lines.push_back(fmt::format("[{}](x) = {}", m, rendered));

        for (std::size_t k = 0; k < s.bound(); ++k) {
            Rational expected = 0;
            if (kind == "additive") {
                expected = k == 1 ? Rational(m) : Rational(0);
            } else if (kind == "multiplicative") {
                // [m](x) = ((1 + lambda x)^m - 1) / lambda
                expected = k == 0 ? Rational(0) : Rational(binomial_signed(m, static_cast<long>(k)));
            } else {
                const auto e = log_p(m, p);
                if (!e) continue;
                const Integer q = exactalg::prime_power(p, static_cast<unsigned long>(height * *e));
                expected = Integer(static_cast<long>(k)) == q ? 1 : 0;
            }
            if (kind == "honda") {
                const Rational difference = s[k] - expected;
                check.expect(exactalg::reduce_p_integral(difference, p) == 0,
                             fmt::format("coefficient of x^{} is {} mod p, expected {}", k, s[k].get_str(), expected.get_str()));
            } else {
                check.expect(s[k] == expected,
                             fmt::format("coefficient of x^{} is {}, expected {}", k, s[k].get_str(), expected.get_str()));
            }
        }
        if (kind == "honda") {
            check.expect(exactalg::reduce_p_integral(s[1] - Rational(m), p) == 0, "linear coefficient differs from m mod p");
        }
        if (const auto target = targets.lookup(fmt::format("fgl.nseries.{}.m{}", kind, m))) {
            check.expect(rendered == *target, fmt::format("[{}](x) = {}, target says {}", m, rendered, *target));
        }
    });
}

Check q_identity_check(int n_max) {
    return run_check(fmt::format("fgl.q-identity n<={}", n_max), [&](Check& check) {
        const FormalGroupLaw law = fgl_multiplicative(CoefficientRing::integers(), "lambda", n_max);
        const std::size_t bound = static_cast<std::size_t>(n_max);
        Series q(bound);
        q[0] = 1;
        if (bound > 1) q[1] = 1;
        Series q_integer(bound);
        Series q_power = Series::one(bound);
        std::string example;
        for (long n = 1; n <= n_max; ++n) {
            q_integer += q_power;
            q_power = q_power * q;
            const Series divided = divided_n_series(law, n);
            check.expect(divided == q_integer, fmt::format("<{}>(h) = {}, expected [{}]_q", n, series_string(divided, law, "h", 1), n));
            for (std::size_t k = 0; k < bound; ++k) {
                if (divided[k] == 0) continue;
                check.expect(parameter_exponent(law, static_cast<int>(k) + 1) == static_cast<int>(k),
                             fmt::format("<{}>(h): h^{} does not carry lambda^{}", n, k, k));
            }
            if (n == std::min(n_max, 5)) example = fmt::format("<{}>(h) = {}", n, series_string(divided, law, "h", 1));
        }
        check.payload = Json{{"n_max", n_max}, {"example", example}};
        check.lines.push_back(fmt::format("<n>(h) = [n]_q at q = 1 + lambda h for n <= {}", n_max));
        check.lines.push_back(example);
    });
}

Check honda_check(long p, int height, int degree_bound) {
    return run_check(fmt::format("fgl.honda p={} n={} D={}", p, height, degree_bound), [&](Check& check) {
        const FormalGroupLaw law = fgl_honda(p, height, degree_bound);
        const Integer q = exactalg::prime_power(p, static_cast<unsigned long>(height));
        Json rows = Json::array();
        Integer pm = p;
        Integer qm = q;
        for (int m = 1; qm <= degree_bound; ++m, pm *= p, qm *= q) {
            const Series divided = divided_n_series(law, pm.get_si());
            const long degree = qm.get_si() - 1;
            for (std::size_t k = 0; k < divided.bound(); ++k) {
                const Rational expected = static_cast<long>(k) == degree ? 1 : 0;
                check.expect(exactalg::reduce_p_integral(divided[k] - expected, p) == 0,
                             fmt::format("<{}>(h) has coefficient {} at h^{}", pm.get_str(), divided[k].get_str(), k));
            }
            const long v_exponent = (qm.get_si() - 1) / (q.get_si() - 1);
            check.expect(parameter_exponent(law, static_cast<int>(qm.get_si())) == v_exponent,
                         fmt::format("<{}>(h) does not carry v^{}", pm.get_str(), v_exponent));
            const std::string rendered = series_string(divided, law, "h", 1);
            rows.push_back(Json{{"m", m}, {"divided", rendered}});
            check.lines.push_back(fmt::format("<{}>(h) = {}", pm.get_str(), rendered));
        }
        check.payload = Json{{"p", p}, {"n", height}, {"D", degree_bound}, {"powers", rows}};
    });
}

Check right_unit_check(long p, const Targets& targets) {
    return run_check(fmt::format("fgl.right-unit p={}", p), [&](Check& check) {
        const int count = p == 2 ? 3 : 2;
        const RightUnit unit = bp_right_unit(p, count);
        Json etas = Json::object();
        for (int n = 1; n <= count; ++n) {
            const TruncPoly& eta = unit.eta_v[n - 1];
            check.expect(eta.is_integral(), fmt::format("eta_R(v_{}) is not integral", n));
            check.expect(eta.homogeneous_degree() == unit.v(n).homogeneous_degree(),
                         fmt::format("eta_R(v_{}) is not homogeneous of degree |v_{}|", n, n));
            TruncPoly reduced = eta;
            for (int k = 1; k <= count; ++k) reduced = reduced.evaluate(static_cast<std::size_t>(k - 1), 0);
            check.expect(reduced.reduce_symmetric(p) == unit.v(n), fmt::format("eta_R(v_{}) != v_{} mod (p, t)", n, n));
            if (n <= 2) {
                etas[fmt::format("v_{}", n)] = eta.to_string();
                check.lines.push_back(fmt::format("eta_R(v_{}) = {}", n, eta.to_string()));
            }
        }
        const std::vector<TruncPoly> samples{unit.v(1).pow(3), unit.v(1) * unit.v(2), unit.t(1) * unit.v(2) + unit.v(1).pow(2)};
        for (const TruncPoly& f : samples) {
            check.expect(unit.apply(f) == unit.apply_through_logarithm(f),
                         "Hazewinkel and logarithm routes differ on " + f.to_string());
            for (const TruncPoly& g : samples) {
                check.expect(unit.apply(f * g) == unit.apply(f) * unit.apply(g),
                             fmt::format("eta_R is not multiplicative on {} and {}", f.to_string(), g.to_string()));
            }
        }
        check.payload = Json{{"p", p}, {"count", count}, {"eta", etas}};

        const auto compare = [&](const std::string& key, const TruncPoly& actual) {
            const auto target = targets.lookup(key);
            if (!target) return;
            const TruncPoly expected = TruncPoly::parse(*target, unit.variables);
            check.expect(actual == expected, fmt::format("{} = {}, target says {}", key, actual.to_string(), *target));
        };
        const std::string prefix = fmt::format("fgl.right_unit.p{}.", p);
        compare(prefix + "v1", unit.eta_v[0]);
        const TruncPoly v1_squared = unit.v(1).pow(2);
        const TruncPoly quotient = (unit.apply(v1_squared) - v1_squared) * Rational(1, p * p);
        compare(prefix + "v1_squared", quotient);
        compare(prefix + "v2", unit.eta_v[1]);
        if (p == 2) check.lines.push_back("(eta_R(v_1^2) - v_1^2) / 4 = " + quotient.to_string());
    });
}

Check b4_check(const Targets& targets) {
    return run_check("fgl.b4", [&](Check& check) {
        const TruncPoly b4 = b4_cobar_class();
        check.payload = Json{{"b4", b4.to_string()}};
        check.lines.push_back("b_4 = " + b4.to_string());
        check.expect(b4.homogeneous_degree() == 8, "b_4 is not homogeneous of degree 8");
        if (const auto target = targets.lookup("fgl.b4")) {
            const TruncPoly expected = TruncPoly::parse(*target, b4.variables());
            if (b4 != expected) {
                check.fail(b4 == expected * Rational(-1) ? "b_4 matches the target only up to a global sign"
                                                         : fmt::format("b_4 = {}, target says {}", b4.to_string(), *target));
            }
        }
    });
}

Check fderham_check(const std::string& kind, long p, int precision, int truncation, int weight_bound) {
    if (kind == "honda") throw InvalidInput("fderham supports the additive and multiplicative laws");
    if (weight_bound < 0) throw InvalidInput("fderham needs a weight bound m >= 0");
    return run_check(fmt::format("fgl.fderham kind={} p={} N={} K={} weights<={}", kind, p, precision, truncation, weight_bound),
                     [&](Check& check) {
        const FormalGroupLaw law = law_of_kind(kind, CoefficientRing::residues(p, precision), p, 1, truncation, "q-1");
        const auto reports = senhom::fderham_cohomology(law, weight_bound, truncation);
        Json rows = Json::array();
        for (int m = 0; m <= weight_bound; ++m) {
            const auto& report = reports[static_cast<std::size_t>(m)];
            const senhom::DegreeHomology& h0 = report.at(0);
            const senhom::DegreeHomology& h1 = report.at(1);
            if (m == 0) {
                check.expect(h0 == senhom::DegreeHomology{0, static_cast<std::size_t>(truncation), {}},
                             "weight 0: H^0 = " + describe(h0) + ", expected the whole ring");
                check.expect(h1.is_zero(), "weight 0: H^1 = " + describe(h1));
            } else {
                // The weight-m map is triangular with diagonal m, so |H^1| = |m|_p^{-K}.
                const int vm = exactalg::valuation(Integer(m), p);
                check.expect(h0.is_zero(), fmt::format("weight {}: H^0 = {}", m, describe(h0)));
                check.expect(h1.free_rank == 0, fmt::format("weight {}: H^1 = {} has a free part; increase N", m, describe(h1)));
                check.expect(total_exponent(h1, p) == truncation * vm,
                             fmt::format("weight {}: |H^1| = p^{}, expected p^{}", m, total_exponent(h1, p), truncation * vm));
                if (kind == "additive") {
                    check.expect(h1 == group(1, 0, std::vector<int>(static_cast<std::size_t>(truncation), vm), p),
                                 fmt::format("weight {}: H^1 = {}", m, describe(h1)));
                }
            }
            rows.push_back(Json{{"weight", m}, {"H0", describe(h0)}, {"H1", describe(h1)}});
            check.lines.push_back(fmt::format("weight {}: H^0 = {}, H^1 = {}", m, describe(h0), describe(h1)));
        }
        check.payload = Json{{"kind", kind}, {"p", p}, {"N", precision}, {"K", truncation}, {"weights", rows}};
    });
}

}  // namespace sencalc::cli::detail
