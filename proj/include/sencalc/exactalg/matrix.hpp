#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sencalc/exactalg/padic.hpp"
#include "sencalc/exactalg/scalar.hpp"

namespace sencalc::exactalg {

// Entry ring of an IntMatrix: Z or Z/p^N.
struct ScalarRing {
    enum class Kind { integers, residues };

    Kind kind = Kind::integers;
    long p = 0;
    int precision = 0;

    static ScalarRing integers() { return {}; }
    static ScalarRing residues(long p, int precision);

    bool is_residues() const { return kind == Kind::residues; }
    Integer modulus() const;
    Integer normalize(const Integer& a) const;
    // Image of a p-integral rational (integral one for Z).
    Integer from_rational(const Rational& a) const;
    std::string name() const;

    friend bool operator==(const ScalarRing&, const ScalarRing&) = default;
};

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, ScalarRing ring = ScalarRing::integers());

    static IntMatrix identity(std::size_t n, ScalarRing ring = ScalarRing::integers());
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows,
                               ScalarRing ring = ScalarRing::integers());
    // All entries must share one (p, N).
    static IntMatrix from_padic(const std::vector<std::vector<PAdicScalar>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const ScalarRing& ring() const { return ring_; }

    const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Integer& value);
    void add_to(std::size_t i, std::size_t j, const Integer& value);

    bool is_zero() const;
    bool is_diagonal() const;
    IntMatrix transpose() const;
    IntMatrix reduce(const ScalarRing& ring) const;
    // Columns of `other` appended on the right.
    IntMatrix hstack(const IntMatrix& other) const;
    // Determinant of a square matrix (Bareiss over Z, then normalized).
    Integer determinant() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

    std::string to_string() const;

    // Elementary operations used by the Smith reduction.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void scale_row(std::size_t row, const Integer& factor);
    void scale_col(std::size_t col, const Integer& factor);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    ScalarRing ring_;
    std::vector<Integer> data_;
};

}  // namespace sencalc::exactalg
