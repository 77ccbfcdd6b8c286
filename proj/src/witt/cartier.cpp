#include "sencalc/witt/cartier.hpp"

#include <fmt/format.h>

#include "sencalc/errors.hpp"

namespace sencalc::witt {

using exactalg::prime_power;
using exactalg::Series;

namespace {

std::size_t p_power(long p, std::size_t m) { return prime_power(p, m).get_ui(); }

// F^j(f)(t) = exp(sum_{m} a_{m+j} t^{p^m} / p^m).
Series frobenius_twist(const std::vector<Rational>& ghost, long p, std::size_t j, std::size_t bound) {
    Series exponent(bound);
    for (std::size_t m = 0; m + j < ghost.size(); ++m) {
        const std::size_t deg = p_power(p, m);
        if (deg >= bound) break;
        exponent[deg] += ghost[m + j] / Rational(prime_power(p, m));
    }
    return exponent.exp();
}

Series evaluate_character(const std::vector<Rational>& ghost, const WittVector& x, std::size_t bound,
                          std::optional<std::string>* first_bad) {
    const long p = x.context().p;
    Series g = Series::one(bound);
    for (std::size_t j = 0; j < ghost.size(); ++j) {
        const Series twist = frobenius_twist(ghost, p, j, bound);
        if (first_bad && !first_bad->has_value()) {
            for (std::size_t k = 0; k < twist.bound(); ++k) {
                if (!exactalg::is_p_integral(twist[k], p)) {
                    *first_bad = fmt::format("t^{} in F^{}(f): {}", k, j, twist[k].get_str());
                    break;
                }
            }
        }
        g = g * twist.inflate(p_power(p, j), Rational(x[j]), bound);
    }
    return g;
}

void require_shapes(const std::vector<Rational>& ghost, const WittVector& x) {
    if (!x.context().torsion_free()) throw InvalidInput("cartier_character needs a Witt vector over Z");
    if (static_cast<int>(ghost.size()) != x.length()) {
        throw InvalidInput("ghost slots and Witt length must agree");
    }
}

}  // namespace

CartierReport cartier_character(const std::vector<Rational>& ghost, const WittVector& x, std::size_t degree_bound,
                                bool strict) {
    require_shapes(ghost, x);
    const long p = x.context().p;
    const std::size_t bound = degree_bound + 1;
    CartierReport report;
    report.f = frobenius_twist(ghost, p, 0, bound);
    report.g = evaluate_character(ghost, x, bound, &report.first_non_integral);
    report.integral = !report.first_non_integral.has_value();
    if (strict && !report.integral) {
        throw IntegralityViolation("non-integral coefficient " + *report.first_non_integral);
    }

    const Series log_g = report.g.log();
    Series expected(bound);
    const GhostVector w = ghost_map(x);
    for (std::size_t m = 0; m < ghost.size(); ++m) {
        const std::size_t deg = p_power(p, m);
        if (deg >= bound) break;
        expected[deg] += ghost[m] * Rational(w[m]) / Rational(prime_power(p, m));
    }
    report.log_matches_witt_polynomials = log_g == expected;
    return report;
}

bool cartier_additivity(const std::vector<Rational>& ghost, const WittVector& x, const WittVector& x_prime,
                        std::size_t degree_bound) {
    require_shapes(ghost, x);
    require_shapes(ghost, x_prime);
    const std::size_t bound = degree_bound + 1;
    const Series lhs = evaluate_character(ghost, witt_add(x, x_prime), bound, nullptr);
    const Series rhs = evaluate_character(ghost, x, bound, nullptr) * evaluate_character(ghost, x_prime, bound, nullptr);
    return lhs == rhs;
}

DworkFactorization dwork_factorization(const std::vector<Integer>& x_seq, std::size_t degree_bound,
                                       const FrobeniusLift& lift) {
    const std::size_t d = degree_bound;
    if (x_seq.size() < d + 1) throw InvalidInput("sequence shorter than the degree bound");
    auto phi = [&](long p, const Integer& a) { return lift ? lift(p, a) : a; };

    for (std::size_t n = 2; n <= d; ++n) {
        long rest = static_cast<long>(n);
        for (long p = 2; p <= rest; ++p) {
            if (rest % p != 0) continue;
            while (rest % p == 0) rest /= p;
            const int v = exactalg::valuation(Integer(static_cast<long>(n)), p);
            const Integer diff = x_seq[n] - phi(p, x_seq[n / p]);
            if (!mpz_divisible_p(diff.get_mpz_t(), prime_power(p, v).get_mpz_t())) {
                throw InvalidInput(fmt::format("congruence fails at (p, n) = ({}, {})", p, n));
            }
        }
    }

    // n r_n = -x_n - sum_{j | n, j < n} j r_j^{n/j}.
    DworkFactorization out;
    out.factors.assign(d + 1, 0);
    for (std::size_t n = 1; n <= d; ++n) {
        Integer rest = -x_seq[n];
        for (std::size_t j = 1; j < n; ++j) {
            if (n % j == 0) rest -= Integer(static_cast<long>(j)) * exactalg::power(out.factors[j], n / j);
        }
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), n)) {
            throw IntegralityViolation(fmt::format("r_{} = {}/{} is not integral", n, rest.get_str(), n));
        }
        mpz_divexact_ui(out.factors[n].get_mpz_t(), rest.get_mpz_t(), n);
    }

    const std::size_t bound = d + 1;
    out.product = Series::one(bound);
    for (std::size_t j = 1; j <= d; ++j) {
        Series factor = Series::one(bound);
        factor[j] = -Rational(out.factors[j]);
        out.product = out.product * factor;
    }
    Series log_sum(bound);
    for (std::size_t n = 1; n <= d; ++n) log_sum[n] = Rational(x_seq[n]) / Rational(static_cast<long>(n));
    if (!(log_sum.exp() == out.product)) throw InternalError("Dwork factorization does not reproduce the series");
    return out;
}

}  // namespace sencalc::witt
