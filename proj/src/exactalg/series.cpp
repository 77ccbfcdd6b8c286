#include "sencalc/exactalg/series.hpp"

#include <algorithm>

#include "sencalc/errors.hpp"

namespace sencalc::exactalg {

Series::Series(std::size_t bound) : coeffs_(bound) {}

Series::Series(std::vector<Rational> coefficients, std::size_t bound) : coeffs_(std::move(coefficients)) {
    coeffs_.resize(bound);
}

Series Series::monomial(std::size_t degree, const Rational& c, std::size_t bound) {
    Series s(bound);
    if (degree < bound) s.coeffs_[degree] = c;
    return s;
}

Series Series::from_truncpoly(const TruncPoly& f) {
    if (f.variables().size() != 1) throw InvalidInput("expected a univariate polynomial");
    const Truncation& t = f.truncation();
    long bound = t.max_total_degree;
    if (!t.max_exponent.empty() && t.max_exponent[0] >= 0) {
        bound = bound < 0 ? t.max_exponent[0] : std::min<long>(bound, t.max_exponent[0]);
    }
    if (bound < 0) throw InvalidInput("series conversion needs a truncation bound");
    Series s(static_cast<std::size_t>(bound) + 1);
    for (const auto& [m, c] : f.terms()) s.coeffs_[m[0]] = c;
    return s;
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::size_t Series::order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return i;
    }
    return coeffs_.size();
}

Series Series::truncated(std::size_t bound) const { return Series(coeffs_, bound); }

Series Series::operator-() const {
    Series r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Series& Series::operator+=(const Series& other) {
    const std::size_t n = std::min(bound(), other.bound());
    coeffs_.resize(n);
    for (std::size_t i = 0; i < n; ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

Series& Series::operator-=(const Series& other) {
    const std::size_t n = std::min(bound(), other.bound());
    coeffs_.resize(n);
    for (std::size_t i = 0; i < n; ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

Series& Series::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.bound(), b.bound());
    Series r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b.coeffs_[j] != 0) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

Series Series::pow(unsigned exponent) const {
    Series result = one(bound());
    Series base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

Series Series::compose(const Series& inner) const {
    if (inner.bound() > 0 && inner[0] != 0) throw InvalidInput("inner series must have zero constant term");
    const std::size_t n = std::min(bound(), inner.bound());
    Series r(n);
    Series power = one(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (coeffs_[k] != 0) r += power * coeffs_[k];
        power = power * inner;
    }
    return r;
}

Series Series::reciprocal() const {
    if (bound() == 0 || coeffs_[0] == 0) throw InvalidInput("series is not invertible");
    Series r(bound());
    const Rational inv = 1 / coeffs_[0];
    r.coeffs_[0] = inv;
    for (std::size_t k = 1; k < bound(); ++k) {
        Rational s = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (coeffs_[j] != 0) s += coeffs_[j] * r.coeffs_[k - j];
        }
        r.coeffs_[k] = -s * inv;
    }
    return r;
}

Series Series::reversion() const {
    if (bound() < 2 || coeffs_[0] != 0 || coeffs_[1] == 0) {
        throw InvalidInput("reversion needs f(0) = 0 and f'(0) invertible");
    }
    // Lagrange inversion: [t^k] g = (1/k) [t^{k-1}] (t / f)^k.
    const std::size_t n = bound();
    Series h = shift_down(1).reciprocal();
    Series g(n);
    Series h_power = one(h.bound());
    for (std::size_t k = 1; k < n; ++k) {
        h_power = h_power * h;
        g.coeffs_[k] = h_power[k - 1] / static_cast<long>(k);
    }
    return g;
}

Series Series::derivative() const {
    Series r(bound() > 0 ? bound() - 1 : 0);
    for (std::size_t i = 1; i < bound(); ++i) r.coeffs_[i - 1] = coeffs_[i] * static_cast<long>(i);
    return r;
}

Series Series::integral() const {
    Series r(bound() + 1);
    for (std::size_t i = 0; i < bound(); ++i) r.coeffs_[i + 1] = coeffs_[i] / static_cast<long>(i + 1);
    return r;
}

Series Series::shift_down(std::size_t k) const {
    for (std::size_t i = 0; i < std::min(k, bound()); ++i) {
        if (coeffs_[i] != 0) throw InvalidInput("series is not divisible by the requested power of t");
    }
    Series r(bound() > k ? bound() - k : 0);
    for (std::size_t i = k; i < bound(); ++i) r.coeffs_[i - k] = coeffs_[i];
    return r;
}

Series Series::inflate(std::size_t k, const Rational& c, std::size_t bound) const {
    Series r(bound);
    Rational scale = 1;
    for (std::size_t i = 0; i < this->bound(); ++i, scale *= c) {
        if (i * k >= bound) break;
        r.coeffs_[i * k] = coeffs_[i] * scale;
    }
    return r;
}

Series Series::exp() const {
    if (bound() > 0 && coeffs_[0] != 0) throw InvalidInput("exp needs zero constant term");
    // E' = f' E, solved coefficientwise.
    const std::size_t n = bound();
    Series e(n);
    if (n == 0) return e;
    e.coeffs_[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        Rational s = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (coeffs_[j] != 0) s += coeffs_[j] * static_cast<long>(j) * e.coeffs_[k - j];
        }
        e.coeffs_[k] = s / static_cast<long>(k);
    }
    return e;
}

Series Series::log() const {
    if (bound() == 0 || coeffs_[0] != 1) throw InvalidInput("log needs constant term 1");
    Series q = derivative() * reciprocal().truncated(bound() - 1);
    return q.integral();
}

TruncPoly Series::to_truncpoly(const Variable& variable) const {
    Truncation t;
    t.max_total_degree = static_cast<int>(bound()) - 1;
    TruncPoly r({variable}, t);
    for (std::size_t i = 0; i < bound(); ++i) r.add_term({static_cast<unsigned>(i)}, coeffs_[i]);
    return r;
}

TruncPoly truncated_exp_log(const TruncPoly& f, ExpLogMode mode) {
    Series s = Series::from_truncpoly(f);
    Series r = mode == ExpLogMode::exp ? s.exp() : s.log();
    TruncPoly out = r.to_truncpoly(f.variables()[0]);
    return out.with_truncation(f.truncation());
}

}  // namespace sencalc::exactalg
