#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sencalc/exactalg/matrix.hpp"

namespace sencalc::dpops {

using exactalg::IntMatrix;
using exactalg::ScalarRing;

// gamma_a(u) theta^b epsilon^c
struct DPBasisMonomial {
    long a = 0;
    long b = 0;
    int c = 0;

    std::string to_string() const;
    friend auto operator<=>(const DPBasisMonomial&, const DPBasisMonomial&) = default;
};

// Degree weights; a zero weight means the generator is absent.
struct DPWeights {
    int gamma = 0;
    int theta = 0;
    int epsilon = 0;
};

enum class EpsilonPart { even, odd, both };

class DPModule {
  public:
    DPModule(DPWeights weights, int degree_bound, EpsilonPart part = EpsilonPart::both);

    const DPWeights& weights() const { return weights_; }
    int degree_bound() const { return bound_; }
    EpsilonPart epsilon_part() const { return part_; }

    long degree(const DPBasisMonomial& m) const;
    bool contains(const DPBasisMonomial& m) const;
    // Basis of the degree-d piece, ordered by theta exponent then epsilon.
    const std::vector<DPBasisMonomial>& basis(int degree) const;
    std::size_t rank(int degree) const { return basis(degree).size(); }
    std::optional<std::size_t> index_of(const DPBasisMonomial& m) const;

  private:
    DPWeights weights_;
    int bound_;
    EpsilonPart part_;
    std::vector<std::vector<DPBasisMonomial>> basis_;
    std::map<DPBasisMonomial, std::size_t> index_;
};

using DPElement = std::map<DPBasisMonomial, Rational>;

// gamma_i gamma_j = C(i + j, i) gamma_{i+j}
Integer dp_multiply(long i, long j);
// c_m = m! / prod_k (p^k!)^{m_k} for the base-p digits m_k of m.
Integer factorization_unit(long m, long p);

DPElement dp_monomial(const DPBasisMonomial& m, const Rational& c = 1);
DPElement dp_product(const DPElement& x, const DPElement& y);
void dp_accumulate(DPElement& into, const DPElement& x, const Rational& scale = 1);
std::string dp_to_string(const DPElement& x);

class GradedLinearMap {
  public:
    GradedLinearMap(DPModule source, DPModule target, int degree_drop);

    const DPModule& source() const { return source_; }
    const DPModule& target() const { return target_; }
    int degree_drop() const { return drop_; }

    void set_image(const DPBasisMonomial& m, DPElement image);
    const DPElement& image(const DPBasisMonomial& m) const;
    DPElement apply(const DPElement& x) const;
    // Columns: source basis in `degree`; rows: target basis in degree - drop.
    IntMatrix matrix(int degree, const ScalarRing& ring) const;
    bool is_zero() const;

  private:
    DPModule source_;
    DPModule target_;
    int drop_;
    std::map<DPBasisMonomial, DPElement> images_;
};

// Generator values of a divided-power derivation.
struct DerivationValues {
    std::map<int, DPElement> gamma;  // key k: image of gamma_{p^k}(u); missing keys map to 0
    DPElement theta;
};

// Extends generator values as a derivation: D(gamma_m) = sum_k m_k / C(m, p^k) gamma_{m - p^k} D(gamma_{p^k}).
GradedLinearMap pd_derivation_extend(long p, const DerivationValues& values, const DPModule& source,
                                     const DPModule& target, int degree_drop);

}  // namespace sencalc::dpops
