#pragma once

#include <cstddef>
#include <vector>

#include "sencalc/exactalg/scalar.hpp"
#include "sencalc/exactalg/truncpoly.hpp"

namespace sencalc::exactalg {

// Dense univariate power series over Q, known modulo t^bound.
class Series {
  public:
    explicit Series(std::size_t bound = 1);
    Series(std::vector<Rational> coefficients, std::size_t bound);

    static Series monomial(std::size_t degree, const Rational& c, std::size_t bound);
    static Series one(std::size_t bound) { return monomial(0, 1, bound); }
    static Series from_truncpoly(const TruncPoly& f);

    std::size_t bound() const { return coeffs_.size(); }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    Rational& operator[](std::size_t i) { return coeffs_[i]; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    // Index of the lowest nonzero coefficient, or bound() for zero.
    std::size_t order() const;
    Series truncated(std::size_t bound) const;

    Series operator-() const;
    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);
    Series& operator*=(const Rational& c);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Rational& c) { return a *= c; }
    friend Series operator*(const Series& a, const Series& b);
    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

    Series pow(unsigned exponent) const;
    // this(inner); inner must have zero constant term.
    Series compose(const Series& inner) const;
    // 1/this; constant term must be nonzero.
    Series reciprocal() const;
    // Compositional inverse; needs f(0) = 0 and f'(0) != 0.
    Series reversion() const;
    Series derivative() const;
    Series integral() const;
    // this / t^k; the bound drops by k.
    Series shift_down(std::size_t k) const;
    // Substitutes t -> c t^k.
    Series inflate(std::size_t k, const Rational& c, std::size_t bound) const;

    Series exp() const;
    Series log() const;

    TruncPoly to_truncpoly(const Variable& variable) const;

  private:
    std::vector<Rational> coeffs_;
};

enum class ExpLogMode { exp, log };

// Formal exp or log of a univariate truncated polynomial, computed to its truncation bound.
TruncPoly truncated_exp_log(const TruncPoly& f, ExpLogMode mode);

}  // namespace sencalc::exactalg
