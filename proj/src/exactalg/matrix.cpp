#include "sencalc/exactalg/matrix.hpp"

#include <fmt/format.h>

#include "sencalc/errors.hpp"

namespace sencalc::exactalg {

ScalarRing ScalarRing::residues(long p, int precision) {
    require_prime(p);
    if (precision < 1) throw InvalidInput("precision must be at least 1");
    return {Kind::residues, p, precision};
}

Integer ScalarRing::modulus() const {
    if (!is_residues()) return 0;
    return prime_power(p, static_cast<unsigned long>(precision));
}

Integer ScalarRing::normalize(const Integer& a) const {
    if (!is_residues()) return a;
    return mod_floor(a, modulus());
}

Integer ScalarRing::from_rational(const Rational& a) const {
    if (!is_residues()) {
        if (a.get_den() != 1) throw InvalidInput(fmt::format("{} is not an integer", a.get_str()));
        return a.get_num();
    }
    if (!is_p_integral(a, p)) throw IntegralityViolation(fmt::format("{} is not {}-integral", a.get_str(), p));
    return reduce_p_integral(a, modulus());
}

std::string ScalarRing::name() const {
    if (!is_residues()) return "Z";
    return fmt::format("Z/{}^{}", p, precision);
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, ScalarRing ring)
    : rows_(rows), cols_(cols), ring_(ring), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n, ScalarRing ring) {
    IntMatrix m(n, n, ring);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, ScalarRing ring) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols, ring);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InvalidInput("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

IntMatrix IntMatrix::from_padic(const std::vector<std::vector<PAdicScalar>>& rows) {
    if (rows.empty() || rows.front().empty()) throw InvalidInput("empty p-adic matrix");
    const auto& first = rows.front().front();
    ScalarRing ring = ScalarRing::residues(first.prime(), first.precision());
    std::vector<std::vector<Integer>> values;
    for (const auto& row : rows) {
        std::vector<Integer> r;
        for (const auto& x : row) {
            if (x.prime() != ring.p || x.precision() != ring.precision) {
                throw InvalidInput("matrix entries from different rings");
            }
            r.push_back(x.residue());
        }
        values.push_back(std::move(r));
    }
    return from_rows(values, ring);
}

void IntMatrix::set(std::size_t i, std::size_t j, const Integer& value) {
    data_[i * cols_ + j] = ring_.normalize(value);
}

void IntMatrix::add_to(std::size_t i, std::size_t j, const Integer& value) {
    Integer& x = data_[i * cols_ + j];
    x = ring_.normalize(x + value);
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_) {
        if (x != 0) return false;
    }
    return true;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i != j && at(i, j) != 0) return false;
        }
    }
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_, ring_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = at(i, j);
    }
    return t;
}

IntMatrix IntMatrix::reduce(const ScalarRing& ring) const {
    if (ring_.is_residues() && !(ring == ring_)) throw InvalidInput("can only reduce integer matrices");
    IntMatrix r(rows_, cols_, ring);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = ring.normalize(data_[k]);
    return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& other) const {
    if (!(ring_ == other.ring_)) throw InvalidInput("matrices over different rings");
    if (rows_ != other.rows_) throw InvalidInput("hstack needs equal row counts");
    IntMatrix r(rows_, cols_ + other.cols_, ring_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.data_[i * r.cols_ + j] = at(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) r.data_[i * r.cols_ + cols_ + j] = other.at(i, j);
    }
    return r;
}

Integer IntMatrix::determinant() const {
    if (rows_ != cols_) throw InvalidInput("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return ring_.normalize(1);
    std::vector<Integer> m = data_;
    auto el = [&](std::size_t i, std::size_t j) -> Integer& { return m[i * n + j]; };
    Integer sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (el(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && el(swap_with, k) == 0) ++swap_with;
            if (swap_with == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(el(k, j), el(swap_with, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = el(i, j) * el(k, k) - el(i, k) * el(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                el(i, j) = v;
            }
        }
        previous = el(k, k);
    }
    return ring_.normalize(sign * el(n - 1, n - 1));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (!(a.ring_ == b.ring_)) throw InvalidInput("matrices over different rings");
    if (a.cols_ != b.rows_) throw InvalidInput("matrix shapes do not compose");
    IntMatrix r(a.rows_, b.cols_, a.ring_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& x = a.at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r.data_[i * r.cols_ + j] += x * b.at(k, j);
        }
    }
    for (auto& x : r.data_) x = r.ring_.normalize(x);
    return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (!(a.ring_ == b.ring_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw InvalidInput("matrix sum shape or ring mismatch");
    }
    IntMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = r.ring_.normalize(r.data_[k] + b.data_[k]);
    return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (!(a.ring_ == b.ring_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw InvalidInput("matrix difference shape or ring mismatch");
    }
    IntMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = r.ring_.normalize(r.data_[k] - b.data_[k]);
    return r;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        out += i == 0 ? "[" : ", [";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j > 0) out += ", ";
            out += at(i, j).get_str();
        }
        out += "]";
    }
    return out + "]";
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(data_[i * cols_ + a], data_[i * cols_ + b]);
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) {
        const Integer& s = data_[source * cols_ + j];
        if (s != 0) data_[target * cols_ + j] = ring_.normalize(data_[target * cols_ + j] + factor * s);
    }
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) {
        const Integer& s = data_[i * cols_ + source];
        if (s != 0) data_[i * cols_ + target] = ring_.normalize(data_[i * cols_ + target] + factor * s);
    }
}

void IntMatrix::scale_row(std::size_t row, const Integer& factor) {
    for (std::size_t j = 0; j < cols_; ++j) data_[row * cols_ + j] = ring_.normalize(data_[row * cols_ + j] * factor);
}

void IntMatrix::scale_col(std::size_t col, const Integer& factor) {
    for (std::size_t i = 0; i < rows_; ++i) data_[i * cols_ + col] = ring_.normalize(data_[i * cols_ + col] * factor);
}

}  // namespace sencalc::exactalg
