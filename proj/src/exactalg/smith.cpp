#include "sencalc/exactalg/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace sencalc::exactalg {

namespace {

// Working state: A is reduced in place while U, V and V^{-1} record the moves.
class SmithWork {
  public:
    explicit SmithWork(const IntMatrix& a)
        : A(a),
          U(IntMatrix::identity(a.rows(), a.ring())),
          V(IntMatrix::identity(a.cols(), a.ring())),
          V_inverse(IntMatrix::identity(a.cols(), a.ring())) {}

    void swap_rows(std::size_t i, std::size_t j) {
        A.swap_rows(i, j);
        U.swap_rows(i, j);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        A.swap_cols(i, j);
        V.swap_cols(i, j);
        V_inverse.swap_rows(i, j);
    }
    void add_row(std::size_t target, std::size_t source, const Integer& f) {
        A.add_row_multiple(target, source, f);
        U.add_row_multiple(target, source, f);
    }
    void add_col(std::size_t target, std::size_t source, const Integer& f) {
        A.add_col_multiple(target, source, f);
        V.add_col_multiple(target, source, f);
        V_inverse.add_row_multiple(source, target, -f);
    }
    void scale_row(std::size_t i, const Integer& unit) {
        A.scale_row(i, unit);
        U.scale_row(i, unit);
    }
    void scale_col(std::size_t j, const Integer& unit, const Integer& unit_inverse) {
        A.scale_col(j, unit);
        V.scale_col(j, unit);
        V_inverse.scale_row(j, unit_inverse);
    }

    IntMatrix A;
    IntMatrix U;
    IntMatrix V;
    IntMatrix V_inverse;
};

using Position = std::pair<std::size_t, std::size_t>;

// Leftmost (then topmost) entry minimizing `key` in the block [t.., t..].
template <typename Key>
std::optional<Position> find_pivot(const IntMatrix& a, std::size_t t, Key key) {
    std::optional<Position> best;
    decltype(key(Integer())) best_key{};
    for (std::size_t j = t; j < a.cols(); ++j) {
        for (std::size_t i = t; i < a.rows(); ++i) {
            if (a.at(i, j) == 0) continue;
            auto k = key(a.at(i, j));
            if (!best || k < best_key) {
                best = Position{i, j};
                best_key = k;
            }
        }
    }
    return best;
}

void reduce_over_integers(SmithWork& w) {
    const std::size_t n = std::min(w.A.rows(), w.A.cols());
    auto magnitude = [](const Integer& x) { return Integer(abs(x)); };
    for (std::size_t t = 0; t < n; ++t) {
        auto pivot = find_pivot(w.A, t, magnitude);
        if (!pivot) break;
        w.swap_rows(t, pivot->first);
        w.swap_cols(t, pivot->second);
        while (true) {
            bool dirty = false;
            const Integer piv = w.A.at(t, t);
            for (std::size_t i = t + 1; i < w.A.rows(); ++i) {
                if (w.A.at(i, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), w.A.at(i, t).get_mpz_t(), piv.get_mpz_t());
                w.add_row(i, t, -q);
                dirty = dirty || w.A.at(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < w.A.cols(); ++j) {
                if (w.A.at(t, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), w.A.at(t, j).get_mpz_t(), piv.get_mpz_t());
                w.add_col(j, t, -q);
                dirty = dirty || w.A.at(t, j) != 0;
            }
            if (dirty) {
                // Move the smallest remainder in row t / column t onto the diagonal.
                Position best{t, t};
                Integer best_size = abs(w.A.at(t, t));
                for (std::size_t i = t + 1; i < w.A.rows(); ++i) {
                    const Integer& x = w.A.at(i, t);
                    if (x != 0 && abs(x) < best_size) {
                        best = {i, t};
                        best_size = abs(x);
                    }
                }
                for (std::size_t j = t + 1; j < w.A.cols(); ++j) {
                    const Integer& x = w.A.at(t, j);
                    if (x != 0 && abs(x) < best_size) {
                        best = {t, j};
                        best_size = abs(x);
                    }
                }
                w.swap_rows(t, best.first);
                w.swap_cols(t, best.second);
                continue;
            }
            std::optional<std::size_t> offending;
            for (std::size_t i = t + 1; i < w.A.rows() && !offending; ++i) {
                for (std::size_t j = t + 1; j < w.A.cols(); ++j) {
                    if (!mpz_divisible_p(w.A.at(i, j).get_mpz_t(), piv.get_mpz_t())) {
                        offending = i;
                        break;
                    }
                }
            }
            if (!offending) break;
            w.add_row(t, *offending, 1);
        }
        if (w.A.at(t, t) < 0) w.scale_row(t, -1);
    }
}

void reduce_over_residues(SmithWork& w) {
    const ScalarRing& ring = w.A.ring();
    const Integer modulus = ring.modulus();
    const std::size_t n = std::min(w.A.rows(), w.A.cols());
    auto val = [&](const Integer& x) { return valuation(x, ring.p); };
    for (std::size_t t = 0; t < n; ++t) {
        auto pivot = find_pivot(w.A, t, val);
        if (!pivot) break;
        w.swap_rows(t, pivot->first);
        w.swap_cols(t, pivot->second);
        const int v = val(w.A.at(t, t));
        const Integer p_v = prime_power(ring.p, static_cast<unsigned long>(v));
        Integer unit;
        mpz_divexact(unit.get_mpz_t(), w.A.at(t, t).get_mpz_t(), p_v.get_mpz_t());
        w.scale_row(t, inverse_mod(unit, modulus));
        for (std::size_t i = t + 1; i < w.A.rows(); ++i) {
            if (w.A.at(i, t) == 0) continue;
            Integer q;
            mpz_divexact(q.get_mpz_t(), w.A.at(i, t).get_mpz_t(), p_v.get_mpz_t());
            w.add_row(i, t, -q);
        }
        for (std::size_t j = t + 1; j < w.A.cols(); ++j) {
            if (w.A.at(t, j) == 0) continue;
            Integer q;
            mpz_divexact(q.get_mpz_t(), w.A.at(t, j).get_mpz_t(), p_v.get_mpz_t());
            w.add_col(j, t, -q);
        }
    }
}

}  // namespace

std::size_t SmithDecomposition::rank() const {
    return static_cast<std::size_t>(
        std::count_if(divisors.begin(), divisors.end(), [](const Integer& d) { return d != 0; }));
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    SmithWork w(a);
    if (a.ring().is_residues()) {
        reduce_over_residues(w);
    } else {
        reduce_over_integers(w);
    }
    SmithDecomposition out{w.U, w.A, w.V, w.V_inverse, {}, {}};
    const std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < n; ++i) {
        const Integer& d = w.A.at(i, i);
        out.divisors.push_back(d);
        if (a.ring().is_residues()) {
            out.exponents.push_back(d == 0 ? a.ring().precision : valuation(d, a.ring().p));
        }
    }
    return out;
}

std::vector<Integer> cokernel_invariants(const IntMatrix& a) {
    const SmithDecomposition s = smith_normal_form(a);
    const Integer free_order = a.ring().is_residues() ? a.ring().modulus() : Integer(0);
    std::vector<Integer> out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Integer d = i < s.divisors.size() ? s.divisors[i] : Integer(0);
        if (d == 1) continue;
        out.push_back(d == 0 ? free_order : d);
    }
    return out;
}

}  // namespace sencalc::exactalg
