#include <fmt/format.h>

#include "checks.hpp"
#include "sencalc/dpops/delta.hpp"
#include "sencalc/dpops/psi.hpp"
#include "sencalc/dpops/weyl.hpp"

namespace sencalc::cli::detail {

namespace {

// Witt polynomial w_j(x) = sum_{i <= j} p^i x_i^{p^{j-i}}.
Integer ghost_component(const std::vector<Integer>& x, long p, std::size_t j) {
    Integer total = 0;
    for (std::size_t i = 0; i <= j; ++i) {
        total += exactalg::prime_power(p, i) * exactalg::power(x[i], exactalg::prime_power(p, j - i).get_ui());
    }
    return total;
}

// Ghost components equal m, psi_1 = (m - m^p)/p and psi_2 matches its closed form.
void expect_psi(Check& check, long p, const Integer& m, const std::vector<Integer>& psi) {
    for (std::size_t j = 0; j < psi.size(); ++j) {
        const Integer w = ghost_component(psi, p, j);
        check.expect(w == m, fmt::format("m = {}: w_{}(psi) = {}", m.get_str(), j, abbreviate(w)));
    }
    if (psi.size() > 1) {
        const Integer expected = (m - exactalg::power(m, static_cast<unsigned long>(p))) / p;
        check.expect(psi[1] == expected, fmt::format("m = {}: psi_1 = {}, expected (m - m^p)/p = {}", m.get_str(),
                                                     abbreviate(psi[1]), abbreviate(expected)));
    }
    if (psi.size() > 2) {
        const Rational closed = dpops::psi_two_closed_form(p, m);
        check.expect(Rational(psi[2]) == closed, fmt::format("m = {}: psi_2 = {}, closed form gives {}", m.get_str(),
                                                             abbreviate(psi[2]), closed.get_str()));
    }
}

}  // namespace

Check psi_check(long p, int n, long m, const Targets& targets) {
    if (n < 1) throw InvalidInput("psi needs n >= 1");
    return run_check(fmt::format("cartier.psi p={} n={} m={}", p, n, m), [&](Check& check) {
        const auto psi = dpops::psi_eigenvalues(p, n, m);
        expect_psi(check, p, m, psi);
        check.payload = Json{{"p", p}, {"n", n}, {"m", m}, {"psi", integers_json(psi)}};
        check.lines.push_back(fmt::format("psi(x^{}) = {}", m, tuple_string(psi)));
        if (const auto target = targets.lookup(fmt::format("cartier.psi.p{}.n{}.m{}", p, n, m))) {
            const auto expected = parse_integers(*target);
            check.expect(psi == expected, fmt::format("psi = {}, target says {}", tuple_string(psi), tuple_string(expected)));
        }
    });
}

Check psi_table_check(long p, int n, long m_max) {
    return run_check(fmt::format("cartier.psi-table p={} j<{} m<={}", p, n, m_max), [&](Check& check) {
        Json sample = Json::array();
        for (long m = 0; m <= m_max && !check.failed(); ++m) {
            const auto psi = dpops::psi_eigenvalues(p, n, m);
            expect_psi(check, p, m, psi);
            if (m <= 3) {
                sample.push_back(Json{{"m", m}, {"psi", integers_json(psi)}});
                check.lines.push_back(fmt::format("psi(x^{}) = {}", m, tuple_string(psi)));
            }
        }
        check.payload = Json{{"p", p}, {"n", n}, {"m_max", m_max}, {"sample", sample}};
        check.lines.push_back(fmt::format("integral with ghost components m for every m <= {}", m_max));
    });
}

Check psi_tensor_check(long p, int n, int pairs) {
    if (n < 1) throw InvalidInput("psi-tensor needs n >= 1");
    return run_check(fmt::format("cartier.psi-tensor p={} n={} pairs={}", p, n, pairs), [&](Check& check) {
        Draw draw(static_cast<std::uint32_t>(500 + p));
        for (int i = 0; i < pairs; ++i) {
            const long a = draw(-200, 200);
            const long b = draw(-200, 200);
            check.expect(dpops::psi_tensor_check(p, n, a, b),
                         fmt::format("psi({} + {}) differs from the Witt sum", a, b));
        }
        check.payload = Json{{"p", p}, {"n", n}, {"pairs", pairs}};
        check.lines.push_back(fmt::format("psi(a + b) = psi(a) +_W psi(b) on {} random pairs", pairs));
    });
}

Check weyl_check(long p, int n, int monomial_bound) {
    if (n < 1) throw InvalidInput("weyl needs n >= 1");
    return run_check(fmt::format("cartier.weyl p={} n={} M={}", p, n, monomial_bound), [&](Check& check) {
        const auto report = dpops::dp_weyl_operators(p, n, monomial_bound);
        Json commutator = Json::array();
        Json valuation = Json::array();
        for (int j = 0; j < n; ++j) {
            const long pj = exactalg::prime_power(p, static_cast<unsigned long>(j)).get_si();
            check.expect(report.commutator[j],
                         fmt::format("[d^[{}], x] != d^[{}] on some x^m with m <= {}", pj, pj - 1, monomial_bound));
            check.expect(report.valuation[j], fmt::format("valuation mismatch for d^[{}]", pj - 1));
            commutator.push_back(static_cast<bool>(report.commutator[j]));
            valuation.push_back(static_cast<bool>(report.valuation[j]));
        }
        check.payload = Json{{"p", p}, {"n", n}, {"M", monomial_bound}, {"commutator", commutator}, {"valuation", valuation}};
        check.lines.push_back(fmt::format("[d^[p^j], x] = d^[p^j - 1] on x^m for j < {}, m <= {}", n, monomial_bound));
    });
}

Check delta_check(long p, int n, int truncation, int precision) {
    return run_check(fmt::format("cartier.delta p={} n={} K={} N={}", p, n, truncation, precision), [&](Check& check) {
        const int iterations = 2;
        const auto report = dpops::delta_ring_check(p, n, iterations, dpops::DeltaRingContext{p, truncation, precision});
        Json steps = Json::array();
        for (const auto& step : report.steps) {
            check.expect(step.phi_divisible, fmt::format("phi(delta^{}(t)) / [p]_q is not p-integral", step.k));
            check.expect(step.relation_divisible,
                         fmt::format("(delta^{0}(t)^p + p delta^{1}(t)) / [p]_q is not p-integral", step.k, step.k + 1));
            steps.push_back(Json{{"k", step.k}, {"phi", step.phi_divisible}, {"relation", step.relation_divisible}});
            check.lines.push_back(fmt::format("k = {}: phi(delta^k t) and delta^k(t)^p + p delta^(k+1)(t) divisible by [p]_q",
                                              step.k));
        }
        Json controls = Json::object();
        for (const auto& [element, member] : report.controls) {
            check.expect(!member, element + " was accepted as p-integral");
            controls[element] = member;
        }
        check.payload = Json{{"p", p}, {"n", n}, {"K", truncation}, {"N", precision}, {"steps", steps},
                             {"lattice_rank", report.lattice_rank}, {"controls", controls}};
    });
}

}  // namespace sencalc::cli::detail
