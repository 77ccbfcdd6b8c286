#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sencalc/exactalg/matrix.hpp"
#include "sencalc/exactalg/series.hpp"
#include "sencalc/exactalg/truncpoly.hpp"

namespace sencalc::fgl {

using exactalg::Series;

struct CoefficientRing {
    enum class Kind { rationals, integers, residues };

    Kind kind = Kind::rationals;
    long p = 0;
    int precision = 0;

    static CoefficientRing rationals() { return {}; }
    static CoefficientRing integers() { return {Kind::integers, 0, 0}; }
    static CoefficientRing residues(long p, int precision);

    Rational normalize(const Rational& a) const;
    void normalize(Series& s) const;
    exactalg::ScalarRing scalar_ring() const;
    std::string name() const;

    friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;
};

// Graded parameter such as lambda or v: a degree-d term of F carries param^{(d-1)/weight}.
struct GradedParameter {
    std::string name;
    int weight = 0;  // 0: no parameter

    bool present() const { return weight > 0; }
};

enum class FglKind { additive, multiplicative, honda, custom };

std::string to_string(FglKind kind);

// Dense coefficients c(i, j) of X^i Y^j for i + j <= degree bound.
class Bivariate {
  public:
    explicit Bivariate(int degree_bound = 0);

    int degree_bound() const { return bound_; }
    const Rational& at(int i, int j) const { return data_[index(i, j)]; }
    Rational& at(int i, int j) { return data_[index(i, j)]; }

    friend Bivariate operator*(const Bivariate& a, const Bivariate& b);
    Bivariate& operator+=(const Bivariate& other);
    Bivariate& operator*=(const Rational& c);
    friend bool operator==(const Bivariate&, const Bivariate&) = default;

  private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * (bound_ + 1) + j; }

    int bound_;
    std::vector<Rational> data_;
};

class FormalGroupLaw {
  public:
    FormalGroupLaw(FglKind kind, CoefficientRing ring, GradedParameter parameter, Bivariate coefficients);

    FglKind kind() const { return kind_; }
    const CoefficientRing& ring() const { return ring_; }
    const GradedParameter& parameter() const { return parameter_; }
    int degree_bound() const { return coefficients_.degree_bound(); }
    const Bivariate& coefficients() const { return coefficients_; }
    long honda_prime() const { return honda_p_; }
    int honda_height() const { return honda_n_; }
    void set_honda(long p, int n) {
        honda_p_ = p;
        honda_n_ = n;
    }

    // F(a(t), b(t)) with the parameter specialised to 1.
    Series evaluate(const Series& a, const Series& b) const;
    // F(X, Y) with the parameter as an explicit variable when present.
    exactalg::TruncPoly as_truncpoly() const;

  private:
    FglKind kind_;
    CoefficientRing ring_;
    GradedParameter parameter_;
    Bivariate coefficients_;
    long honda_p_ = 0;
    int honda_n_ = 0;
};

FormalGroupLaw fgl_additive(const CoefficientRing& ring, int degree_bound);
FormalGroupLaw fgl_multiplicative(const CoefficientRing& ring, const std::string& parameter, int degree_bound);
// Honda law over F_p[v] with [p](x) = v x^{p^n}.
FormalGroupLaw fgl_honda(long p, int n, int degree_bound);
// Checks unit, commutativity and associativity; throws InvalidFgl naming the failing degree.
FormalGroupLaw fgl_custom(const CoefficientRing& ring, const Bivariate& coefficients, GradedParameter parameter = {});

// Axiom check shared by the constructors.
void check_fgl_axioms(const FormalGroupLaw& law);

// [m](x) modulo x^{D+1}; negative m through the formal inverse.
Series n_series(const FormalGroupLaw& law, long m);
// <m>(h) = [m](h) / h modulo h^D.
Series divided_n_series(const FormalGroupLaw& law, long m);
Series formal_inverse(const FormalGroupLaw& law);

// Exponent of the parameter carried by the x^degree coefficient of [m](x).
std::optional<int> parameter_exponent(const FormalGroupLaw& law, int degree);

struct LogExp {
    Series log;
    Series exp;
};

LogExp fgl_log_exp(const FormalGroupLaw& law);

struct TateQuotient {
    Series divided;  // <m>(h) modulo h^K
    // For Honda laws and m = p^k: <m> is a single monomial v^e h^d.
    std::optional<int> annihilation_exponent;
    std::optional<int> monomial_degree;
};

TateQuotient tate_quotient_series(const FormalGroupLaw& law, long m, int truncation);

}  // namespace sencalc::fgl
