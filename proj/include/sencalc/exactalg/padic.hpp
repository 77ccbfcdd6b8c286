#pragma once

#include <string>

#include "sencalc/exactalg/scalar.hpp"

namespace sencalc::exactalg {

// Element of Z/p^N stored by its residue in [0, p^N).
class PAdicScalar {
  public:
    PAdicScalar(long p, int precision, const Integer& value = 0);

    long prime() const { return p_; }
    int precision() const { return precision_; }
    const Integer& residue() const { return residue_; }
    Integer modulus() const;

    // Valuation in [0, N]; N means zero.
    int valuation() const;
    bool is_unit() const;
    bool is_zero() const { return residue_ == 0; }
    PAdicScalar inverse() const;
    PAdicScalar pow(unsigned long exponent) const;

    PAdicScalar operator-() const;
    PAdicScalar& operator+=(const PAdicScalar& other);
    PAdicScalar& operator-=(const PAdicScalar& other);
    PAdicScalar& operator*=(const PAdicScalar& other);

    friend PAdicScalar operator+(PAdicScalar a, const PAdicScalar& b) { return a += b; }
    friend PAdicScalar operator-(PAdicScalar a, const PAdicScalar& b) { return a -= b; }
    friend PAdicScalar operator*(PAdicScalar a, const PAdicScalar& b) { return a *= b; }
    friend bool operator==(const PAdicScalar& a, const PAdicScalar& b) {
        return a.p_ == b.p_ && a.precision_ == b.precision_ && a.residue_ == b.residue_;
    }

    std::string to_string() const;

  private:
    void check_compatible(const PAdicScalar& other) const;

    long p_;
    int precision_;
    Integer residue_;
};

}  // namespace sencalc::exactalg
