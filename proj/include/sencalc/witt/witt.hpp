#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sencalc/exactalg/matrix.hpp"
#include "sencalc/exactalg/scalar.hpp"
#include "sencalc/exactalg/truncpoly.hpp"

namespace sencalc::witt {

// Prime, length and base ring (Z or Z/p^N) of a truncated p-typical Witt vector.
struct WittContext {
    long p = 2;
    int length = 1;
    exactalg::ScalarRing base;

    static WittContext over_integers(long p, int length);
    static WittContext over_residues(long p, int length, int precision);

    bool torsion_free() const { return !base.is_residues(); }
    WittContext with_length(int length) const;
    friend bool operator==(const WittContext&, const WittContext&) = default;
};

class WittVector {
  public:
    WittVector(WittContext context, std::vector<Integer> components);
    static WittVector zero(const WittContext& context);

    const WittContext& context() const { return context_; }
    const std::vector<Integer>& components() const { return components_; }
    const Integer& operator[](std::size_t i) const { return components_[i]; }
    int length() const { return context_.length; }

    std::string to_string() const;
    friend bool operator==(const WittVector&, const WittVector&) = default;

  private:
    WittContext context_;
    std::vector<Integer> components_;
};

class GhostVector {
  public:
    GhostVector(WittContext context, std::vector<Integer> entries);

    const WittContext& context() const { return context_; }
    const std::vector<Integer>& entries() const { return entries_; }
    const Integer& operator[](std::size_t i) const { return entries_[i]; }

    friend bool operator==(const GhostVector&, const GhostVector&) = default;

  private:
    WittContext context_;
    std::vector<Integer> entries_;
};

GhostVector ghost_map(const WittVector& x);
// Requires a torsion-free base; throws NotAWittVector naming the failing index.
WittVector ghost_inverse(const GhostVector& g);

WittVector witt_add(const WittVector& x, const WittVector& y);
WittVector witt_sub(const WittVector& x, const WittVector& y);
WittVector witt_neg(const WittVector& x);
WittVector witt_mul(const WittVector& x, const WittVector& y);
WittVector witt_pow(const WittVector& x, unsigned exponent);

WittVector verschiebung(const WittVector& x);
// Output has length L - 1.
WittVector frobenius(const WittVector& x);
WittVector teichmuller(const Integer& a, const WittContext& context);
// (F(x) - x^p) / p over Z; output has length L - 1.
WittVector delta(const WittVector& x);
WittVector int_to_witt(const Integer& m, const WittContext& context);
// First `length` components.
WittVector truncate(const WittVector& x, int length);
// Components reduced into Z/p^N.
WittVector reduce(const WittVector& x, int precision);

// Witt vector over Z with ghost coordinates 1 - p^{p^{j+1} - 1}.
WittVector gabber_y(long p, int length);

struct StructurePolynomials {
    long p;
    int length;
    std::vector<exactalg::Variable> variables;  // X_0..X_{L-1}, Y_0..Y_{L-1}
    std::vector<exactalg::TruncPoly> sum;
    std::vector<exactalg::TruncPoly> product;
};

// Cached per (p, L); limited to p^{L-1} <= 16.
std::shared_ptr<const StructurePolynomials> witt_structure_polynomials(long p, int length);

// Witt polynomial w_j in the variables starting at `offset`.
exactalg::TruncPoly witt_polynomial(long p, int j, const std::vector<exactalg::Variable>& variables,
                                    std::size_t offset);

}  // namespace sencalc::witt
