#include "sencalc/fgl/fgl.hpp"

#include <algorithm>
#include <array>

#include <fmt/format.h>

#include "sencalc/errors.hpp"

namespace sencalc::fgl {

using exactalg::TruncPoly;
using exactalg::Truncation;
using exactalg::Variable;

namespace {

constexpr int kExactAssociativityDegree = 10;
constexpr int kExactLogCheckDegree = 24;

std::size_t series_bound(const FormalGroupLaw& law) { return static_cast<std::size_t>(law.degree_bound()) + 1; }

Series identity_series(std::size_t bound) {
    Series x(bound);
    if (bound > 1) x[1] = 1;
    return x;
}

}  // namespace

CoefficientRing CoefficientRing::residues(long p, int precision) {
    exactalg::require_prime(p);
    if (precision < 1) throw InvalidInput("residue precision must be positive");
    return {Kind::residues, p, precision};
}

Rational CoefficientRing::normalize(const Rational& a) const {
    switch (kind) {
        case Kind::rationals:
            return a;
        case Kind::integers:
            if (!exactalg::is_integral(a)) throw IntegralityViolation("coefficient " + a.get_str() + " is not an integer");
            return a;
        case Kind::residues:
            if (!exactalg::is_p_integral(a, p)) {
                throw IntegralityViolation(fmt::format("coefficient {} is not {}-integral", a.get_str(), p));
            }
            return Rational(exactalg::reduce_p_integral(a, exactalg::prime_power(p, precision)));
    }
    return a;
}

void CoefficientRing::normalize(Series& s) const {
    if (kind == Kind::rationals) return;
    for (std::size_t i = 0; i < s.bound(); ++i) s[i] = normalize(s[i]);
}

exactalg::ScalarRing CoefficientRing::scalar_ring() const {
    if (kind == Kind::residues) return exactalg::ScalarRing::residues(p, precision);
    return exactalg::ScalarRing::integers();
}

std::string CoefficientRing::name() const {
    switch (kind) {
        case Kind::rationals:
            return "Q";
        case Kind::integers:
            return "Z";
        case Kind::residues:
            return precision == 1 ? fmt::format("F_{}", p) : fmt::format("Z/{}^{}", p, precision);
    }
    return "?";
}

Bivariate::Bivariate(int degree_bound) : bound_(degree_bound) {
    if (degree_bound < 0) throw InvalidInput("negative degree bound");
    data_.assign(static_cast<std::size_t>(bound_ + 1) * (bound_ + 1), Rational(0));
}

Bivariate operator*(const Bivariate& a, const Bivariate& b) {
    const int bound = std::min(a.bound_, b.bound_);
    struct Entry {
        int i, j;
        const Rational* value;
    };
    std::vector<Entry> sparse;
    for (int i = 0; i <= bound; ++i) {
        for (int j = 0; i + j <= bound; ++j) {
            if (b.at(i, j) != 0) sparse.push_back({i, j, &b.at(i, j)});
        }
    }
    Bivariate out(bound);
    for (int i1 = 0; i1 <= bound; ++i1) {
        for (int j1 = 0; i1 + j1 <= bound; ++j1) {
            const Rational& x = a.at(i1, j1);
            if (x == 0) continue;
            for (const Entry& e : sparse) {
                if (i1 + j1 + e.i + e.j <= bound) out.at(i1 + e.i, j1 + e.j) += x * *e.value;
            }
        }
    }
    return out;
}

Bivariate& Bivariate::operator+=(const Bivariate& other) {
    if (other.bound_ != bound_) throw InvalidInput("bivariate degree bounds differ");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

Bivariate& Bivariate::operator*=(const Rational& c) {
    for (auto& x : data_) x *= c;
    return *this;
}

FormalGroupLaw::FormalGroupLaw(FglKind kind, CoefficientRing ring, GradedParameter parameter, Bivariate coefficients)
    : kind_(kind), ring_(ring), parameter_(std::move(parameter)), coefficients_(std::move(coefficients)) {
    const int bound = coefficients_.degree_bound();
    for (int i = 0; i <= bound; ++i) {
        for (int j = 0; i + j <= bound; ++j) coefficients_.at(i, j) = ring_.normalize(coefficients_.at(i, j));
    }
}

Series FormalGroupLaw::evaluate(const Series& a, const Series& b) const {
    if ((a.bound() > 0 && a[0] != 0) || (b.bound() > 0 && b[0] != 0)) {
        throw InvalidInput("formal group law arguments need zero constant term");
    }
    const int bound_degree = degree_bound();
    const std::size_t bound = std::min({a.bound(), b.bound(), series_bound(*this)});
    const Series a_cut = a.truncated(bound);
    const Series b_cut = b.truncated(bound);

    std::vector<Series> b_powers{Series::one(bound)};
    for (int j = 1; j <= bound_degree && static_cast<std::size_t>(j) < bound; ++j) b_powers.push_back(b_powers.back() * b_cut);

    Series out(bound);
    Series a_power = Series::one(bound);
    for (int i = 0; i <= bound_degree && static_cast<std::size_t>(i) < bound; ++i) {
        Series inner(bound);
        for (int j = 0; i + j <= bound_degree && static_cast<std::size_t>(j) < b_powers.size(); ++j) {
            const Rational& c = coefficients_.at(i, j);
            if (c == 0) continue;
            const Series& bj = b_powers[j];
            for (std::size_t k = 0; k < bound; ++k) {
                if (bj[k] != 0) inner[k] += c * bj[k];
            }
        }
        if (!inner.is_zero()) out += a_power * inner;
        a_power = a_power * a_cut;
    }
    ring_.normalize(out);
    return out;
}

TruncPoly FormalGroupLaw::as_truncpoly() const {
    std::vector<Variable> vars{{"X", -2, 1}, {"Y", -2, 1}};
    if (parameter_.present()) vars.push_back({parameter_.name, 2 * parameter_.weight, parameter_.weight});
    TruncPoly out(vars);
    const int bound = degree_bound();
    for (int i = 0; i <= bound; ++i) {
        for (int j = 0; i + j <= bound; ++j) {
            const Rational& c = coefficients_.at(i, j);
            if (c == 0) continue;
            TruncPoly::Monomial m(vars.size(), 0);
            m[0] = i;
            m[1] = j;
            if (parameter_.present()) m[2] = (i + j - 1) / parameter_.weight;
            out.add_term(m, c);
        }
    }
    return out;
}

std::optional<int> parameter_exponent(const FormalGroupLaw& law, int degree) {
    const GradedParameter& param = law.parameter();
    if (!param.present()) return 0;
    if (degree < 1 || (degree - 1) % param.weight != 0) return std::nullopt;
    return (degree - 1) / param.weight;
}

namespace {

void check_unit_and_symmetry(const FormalGroupLaw& law) {
    const Bivariate& c = law.coefficients();
    const int bound = law.degree_bound();
    for (int d = 0; d <= bound; ++d) {
        const Rational expected = d == 1 ? 1 : 0;
        if (c.at(d, 0) != expected || c.at(0, d) != expected) {
            throw InvalidFgl(d, fmt::format("unit axiom fails in degree {}", d));
        }
        for (int i = 0; i <= d; ++i) {
            if (c.at(i, d - i) != c.at(d - i, i)) {
                throw InvalidFgl(d, fmt::format("commutativity fails in degree {}", d));
            }
            if (law.parameter().present() && c.at(i, d - i) != 0 && !parameter_exponent(law, d)) {
                throw InvalidFgl(d, fmt::format("degree {} term is incompatible with the grading", d));
            }
        }
    }
}

// Exact trivariate comparison of F(F(X,Y),Z) and F(X,F(Y,Z)) through total degree `limit`.
void check_associativity_exact(const FormalGroupLaw& law, int limit) {
    const std::vector<Variable> vars{{"X", -2, 1}, {"Y", -2, 1}, {"Z", -2, 1}};
    const Truncation trunc{{}, limit};
    const CoefficientRing& ring = law.ring();

    auto law_of = [&](const TruncPoly& a, const TruncPoly& b) {
        std::vector<TruncPoly> b_powers{TruncPoly::constant(vars, 1, trunc)};
        for (int j = 1; j <= limit; ++j) b_powers.push_back(b_powers.back() * b);
        TruncPoly out(vars, trunc);
        TruncPoly a_power = TruncPoly::constant(vars, 1, trunc);
        for (int i = 0; i <= limit; ++i) {
            for (int j = 0; i + j <= limit; ++j) {
                const Rational& c = law.coefficients().at(i, j);
                if (c != 0) out += (a_power * b_powers[j]) * c;
            }
            a_power = a_power * a;
        }
        return out;
    };

    const TruncPoly x = TruncPoly::generator(vars, 0, trunc);
    const TruncPoly y = TruncPoly::generator(vars, 1, trunc);
    const TruncPoly z = TruncPoly::generator(vars, 2, trunc);
    const TruncPoly difference = law_of(law_of(x, y), z) - law_of(x, law_of(y, z));

    int failing = -1;
    for (const auto& [monomial, coefficient] : difference.terms()) {
        if (ring.normalize(coefficient) == 0) continue;
        const int degree = static_cast<int>(monomial[0] + monomial[1] + monomial[2]);
        if (failing < 0 || degree < failing) failing = degree;
    }
    if (failing >= 0) throw InvalidFgl(failing, fmt::format("associativity fails in degree {}", failing));
}

// Substitutes fixed univariate series for X, Y, Z; catches failures above the exact range.
void check_associativity_sampled(const FormalGroupLaw& law) {
    const std::size_t bound = series_bound(law);
    const std::array<std::array<long, 6>, 3> samples{{{1, 2, 3, 1, -1, 2}, {2, -1, 5, 3, 1, -4}, {3, 7, -2, -1, 2, 1}}};
    for (const auto& s : samples) {
        Series x(bound), y(bound), z(bound);
        x[1] = s[0];
        y[1] = s[1];
        z[1] = s[2];
        if (bound > 2) {
            x[2] = s[3];
            y[2] = s[4];
            z[2] = s[5];
        }
        law.ring().normalize(x);
        law.ring().normalize(y);
        law.ring().normalize(z);
        const Series lhs = law.evaluate(law.evaluate(x, y), z);
        const Series rhs = law.evaluate(x, law.evaluate(y, z));
        for (std::size_t k = 0; k < bound; ++k) {
            if (lhs[k] != rhs[k]) {
                const int degree = static_cast<int>(k);
                throw InvalidFgl(degree, fmt::format("associativity fails in degree {}", degree));
            }
        }
    }
}

Bivariate bivariate_from_sum(const Series& f, int bound) {
    // f(X) + f(Y)
    Bivariate out(bound);
    for (int k = 1; k <= bound && static_cast<std::size_t>(k) < f.bound(); ++k) {
        out.at(k, 0) += f[k];
        out.at(0, k) += f[k];
    }
    return out;
}

// g(s(X, Y)) for a univariate g with g(0) = 0.
Bivariate compose_bivariate(const Series& g, const Bivariate& s) {
    const int bound = s.degree_bound();
    Bivariate out(bound);
    Bivariate power = s;
    for (int k = 1; k <= bound && static_cast<std::size_t>(k) < g.bound(); ++k) {
        if (g[k] != 0) {
            Bivariate term = power;
            term *= g[k];
            out += term;
        }
        if (k < bound) power = power * s;
    }
    return out;
}

}  // namespace

void check_fgl_axioms(const FormalGroupLaw& law) {
    check_unit_and_symmetry(law);
    check_associativity_exact(law, std::min(law.degree_bound(), kExactAssociativityDegree));
    if (law.degree_bound() > kExactAssociativityDegree) check_associativity_sampled(law);
}

FormalGroupLaw fgl_additive(const CoefficientRing& ring, int degree_bound) {
    Bivariate c(degree_bound);
    if (degree_bound >= 1) {
        c.at(1, 0) = 1;
        c.at(0, 1) = 1;
    }
    FormalGroupLaw law(FglKind::additive, ring, {}, c);
    check_fgl_axioms(law);
    return law;
}

FormalGroupLaw fgl_multiplicative(const CoefficientRing& ring, const std::string& parameter, int degree_bound) {
    Bivariate c(degree_bound);
    if (degree_bound >= 1) {
        c.at(1, 0) = 1;
        c.at(0, 1) = 1;
    }
    if (degree_bound >= 2) c.at(1, 1) = 1;
    FormalGroupLaw law(FglKind::multiplicative, ring, {parameter.empty() ? "lambda" : parameter, 1}, c);
    check_fgl_axioms(law);
    return law;
}

FormalGroupLaw fgl_honda(long p, int n, int degree_bound) {
    exactalg::require_prime(p);
    if (n < 1) throw InvalidInput("Honda height must be positive");
    const std::size_t bound = static_cast<std::size_t>(degree_bound) + 1;
    const long q = exactalg::prime_power(p, n).get_si();

    // log(x) = sum_k x^{q^k} / p^k with the parameter set to 1
    Series log(bound);
    Integer degree = 1;
    for (int k = 0; degree < bound; ++k) {
        log[degree.get_ui()] = Rational(1, 1) / Rational(exactalg::prime_power(p, k));
        degree *= q;
    }
    const Series exp = log.reversion();
    Bivariate rational = compose_bivariate(exp, bivariate_from_sum(log, degree_bound));
    for (int i = 0; i <= degree_bound; ++i) {
        for (int j = 0; i + j <= degree_bound; ++j) {
            if (!exactalg::is_p_integral(rational.at(i, j), p)) {
                throw InternalError(fmt::format("Honda coefficient of X^{} Y^{} is not {}-integral", i, j, p));
            }
        }
    }

    FormalGroupLaw law(FglKind::honda, CoefficientRing::residues(p, 1), {"v", static_cast<int>(q - 1)}, rational);
    law.set_honda(p, n);
    check_fgl_axioms(law);

    const Series p_series = n_series(law, p);
    for (std::size_t k = 0; k < p_series.bound(); ++k) {
        const Rational expected = static_cast<long>(k) == q ? 1 : 0;
        if (p_series[k] != expected) {
            throw InternalError(fmt::format("Honda [{}](x) has coefficient {} at x^{}", p, p_series[k].get_str(), k));
        }
    }
    return law;
}

FormalGroupLaw fgl_custom(const CoefficientRing& ring, const Bivariate& coefficients, GradedParameter parameter) {
    FormalGroupLaw law(FglKind::custom, ring, std::move(parameter), coefficients);
    check_fgl_axioms(law);
    return law;
}

Series formal_inverse(const FormalGroupLaw& law) {
    const std::size_t bound = series_bound(law);
    const Series x = identity_series(bound);
    Series inverse = -x;
    law.ring().normalize(inverse);
    for (std::size_t k = 2; k < bound; ++k) {
        const Series residual = law.evaluate(x, inverse);
        inverse[k] = law.ring().normalize(inverse[k] - residual[k]);
    }
    return inverse;
}

Series n_series(const FormalGroupLaw& law, long m) {
    const std::size_t bound = series_bound(law);
    Series base = identity_series(bound);
    if (m < 0) {
        base = formal_inverse(law);
        m = -m;
    }
    Series result(bound);
    Series doubling = base;
    for (unsigned long rest = static_cast<unsigned long>(m); rest > 0; rest >>= 1) {
        if (rest & 1UL) result = law.evaluate(result, doubling);
        if (rest > 1) doubling = law.evaluate(doubling, doubling);
    }
    return result;
}

Series divided_n_series(const FormalGroupLaw& law, long m) { return n_series(law, m).shift_down(1); }

LogExp fgl_log_exp(const FormalGroupLaw& law) {
    if (law.ring().kind == CoefficientRing::Kind::residues) {
        throw InvalidInput("logarithm needs a coefficient ring containing Q, got " + law.ring().name());
    }
    const int bound_degree = law.degree_bound();
    const std::size_t bound = series_bound(law);
    if (bound_degree < 1) throw InvalidInput("degree bound too small for a logarithm");

    // log' = 1 / F_Y(x, 0)
    Series derivative_at_zero(bound - 1);
    for (int i = 0; i + 1 <= bound_degree; ++i) derivative_at_zero[i] = law.coefficients().at(i, 1);
    LogExp out;
    out.log = derivative_at_zero.reciprocal().integral();
    out.exp = out.log.reversion();

    if (bound_degree <= kExactLogCheckDegree) {
        const Bivariate lhs = compose_bivariate(out.log, law.coefficients());
        const Bivariate rhs = bivariate_from_sum(out.log, bound_degree);
        if (!(lhs == rhs)) throw InternalError("logarithm is not additive on the formal group law");
    } else {
        for (const auto& [a, b] : std::array<std::pair<long, long>, 3>{{{1, 2}, {3, -1}, {-2, 5}}}) {
            Series x(bound), y(bound);
            x[1] = a;
            y[1] = b;
            if (bound > 2) y[2] = 1;
            if (!(out.log.compose(law.evaluate(x, y)) == out.log.compose(x) + out.log.compose(y))) {
                throw InternalError("logarithm is not additive on the formal group law");
            }
        }
    }
    return out;
}

TateQuotient tate_quotient_series(const FormalGroupLaw& law, long m, int truncation) {
    if (truncation < 1) throw InvalidInput("truncation must be positive");
    if (law.degree_bound() < truncation) {
        throw PrecisionError(fmt::format("law known to degree {}, need {}", law.degree_bound(), truncation));
    }
    TateQuotient out;
    out.divided = divided_n_series(law, m).truncated(static_cast<std::size_t>(truncation));

    if (law.kind() != FglKind::honda || m < 1) return out;
    const long p = law.honda_prime();
    long k = 0;
    long rest = m;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1 || k == 0) return out;

    const Integer degree = exactalg::prime_power(p, static_cast<unsigned long>(law.honda_height()) * k) - 1;
    if (degree >= truncation) return out;
    const std::size_t d = degree.get_ui();
    for (std::size_t i = 0; i < out.divided.bound(); ++i) {
        if (out.divided[i] != (i == d ? 1 : 0)) return out;
    }
    out.monomial_degree = static_cast<int>(d);
    out.annihilation_exponent = static_cast<int>(d) / law.parameter().weight;
    return out;
}

std::string to_string(FglKind kind) {
    switch (kind) {
        case FglKind::additive: return "additive";
        case FglKind::multiplicative: return "multiplicative";
        case FglKind::honda: return "honda";
        case FglKind::custom: return "custom";
    }
    return "unknown";
}

}  // namespace sencalc::fgl
