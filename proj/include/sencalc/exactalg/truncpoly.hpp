#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sencalc/exactalg/scalar.hpp"

namespace sencalc::exactalg {

struct Variable {
    std::string name;
    int degree = 0;  // homological degree
    int weight = 0;

    friend bool operator==(const Variable&, const Variable&) = default;
};

// Monomials exceeding a bound are dropped by every operation.
struct Truncation {
    std::vector<int> max_exponent;  // per variable; empty or -1 means unbounded
    int max_total_degree = -1;      // -1 means unbounded

    bool admits(const std::vector<unsigned>& exponents) const;
    friend bool operator==(const Truncation&, const Truncation&) = default;
};

// Sparse multivariate polynomial over Q with explicit truncation.
class TruncPoly {
  public:
    using Monomial = std::vector<unsigned>;
    using Terms = std::map<Monomial, Rational>;

    TruncPoly() = default;
    explicit TruncPoly(std::vector<Variable> variables, Truncation truncation = {});

    static TruncPoly constant(std::vector<Variable> variables, const Rational& c,
                              Truncation truncation = {});
    static TruncPoly generator(std::vector<Variable> variables, std::size_t index,
                               Truncation truncation = {});
    // Accepts sums of terms such as "5t_1^4 - 2*t_1*t_2 + 3/2 v_1".
    static TruncPoly parse(std::string_view text, std::vector<Variable> variables,
                           Truncation truncation = {});

    const std::vector<Variable>& variables() const { return variables_; }
    const Truncation& truncation() const { return truncation_; }
    const Terms& terms() const { return terms_; }
    std::size_t variable_index(std::string_view name) const;

    Rational coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    TruncPoly operator-() const;
    TruncPoly& operator+=(const TruncPoly& other);
    TruncPoly& operator-=(const TruncPoly& other);
    TruncPoly& operator*=(const Rational& c);
    friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
    friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
    friend TruncPoly operator*(TruncPoly a, const Rational& c) { return a *= c; }
    friend TruncPoly operator*(const Rational& c, TruncPoly a) { return a *= c; }
    friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b);
    friend bool operator==(const TruncPoly& a, const TruncPoly& b);

    TruncPoly pow(unsigned exponent) const;
    // Replaces variable `index` by `value` (same variable list).
    TruncPoly substitute(std::size_t index, const TruncPoly& value) const;
    // Sets variable `index` to a scalar.
    TruncPoly evaluate(std::size_t index, const Rational& value) const;
    // Re-expresses in another variable list; index_map[i] is the target index of variable i.
    TruncPoly embed(std::vector<Variable> variables, const std::vector<std::size_t>& index_map,
                    Truncation truncation = {}) const;
    TruncPoly with_truncation(Truncation truncation) const;

    int total_degree() const;  // -1 for zero
    // Common homological degree of all terms, if homogeneous.
    std::optional<int> homogeneous_degree() const;

    bool is_integral() const;
    bool is_p_integral(long p) const;
    // First term whose coefficient is not p-integral.
    std::optional<Monomial> first_non_p_integral(long p) const;
    // Coefficients reduced mod m to the symmetric range; requires p-integrality.
    TruncPoly reduce_symmetric(const Integer& m) const;

    std::string monomial_string(const Monomial& m) const;
    std::string to_string() const;

  private:
    void check_compatible(const TruncPoly& other) const;

    std::vector<Variable> variables_;
    Truncation truncation_;
    Terms terms_;
};

}  // namespace sencalc::exactalg
