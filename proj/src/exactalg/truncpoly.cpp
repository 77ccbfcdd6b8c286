#include "sencalc/exactalg/truncpoly.hpp"

#include <algorithm>
#include <cctype>

#include <fmt/format.h>

#include "sencalc/errors.hpp"

namespace sencalc::exactalg {

bool Truncation::admits(const std::vector<unsigned>& exponents) const {
    if (max_total_degree >= 0) {
        long total = 0;
        for (unsigned e : exponents) total += e;
        if (total > max_total_degree) return false;
    }
    for (std::size_t i = 0; i < max_exponent.size() && i < exponents.size(); ++i) {
        if (max_exponent[i] >= 0 && exponents[i] > static_cast<unsigned>(max_exponent[i])) return false;
    }
    return true;
}

TruncPoly::TruncPoly(std::vector<Variable> variables, Truncation truncation)
    : variables_(std::move(variables)), truncation_(std::move(truncation)) {}

TruncPoly TruncPoly::constant(std::vector<Variable> variables, const Rational& c, Truncation truncation) {
    TruncPoly r(std::move(variables), std::move(truncation));
    r.add_term(Monomial(r.variables_.size(), 0), c);
    return r;
}

TruncPoly TruncPoly::generator(std::vector<Variable> variables, std::size_t index, Truncation truncation) {
    TruncPoly r(std::move(variables), std::move(truncation));
    if (index >= r.variables_.size()) throw InvalidInput("variable index out of range");
    Monomial m(r.variables_.size(), 0);
    m[index] = 1;
    r.add_term(m, 1);
    return r;
}

std::size_t TruncPoly::variable_index(std::string_view name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (variables_[i].name == name) return i;
    }
    throw InvalidInput(fmt::format("unknown variable '{}'", name));
}

Rational TruncPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncPoly::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != variables_.size()) throw InvalidInput("monomial arity mismatch");
    if (c == 0 || !truncation_.admits(m)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void TruncPoly::check_compatible(const TruncPoly& other) const {
    if (variables_ != other.variables_) throw InvalidInput("polynomials over different variable lists");
}

TruncPoly TruncPoly::operator-() const {
    TruncPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

TruncPoly& TruncPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
    a.check_compatible(b);
    TruncPoly r(a.variables_, a.truncation_);
    TruncPoly::Monomial m(a.variables_.size());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

bool operator==(const TruncPoly& a, const TruncPoly& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
}

TruncPoly TruncPoly::pow(unsigned exponent) const {
    TruncPoly result = constant(variables_, 1, truncation_);
    TruncPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

TruncPoly TruncPoly::substitute(std::size_t index, const TruncPoly& value) const {
    check_compatible(value);
    unsigned top = 0;
    for (const auto& [m, c] : terms_) top = std::max(top, m[index]);
    std::vector<TruncPoly> powers{constant(variables_, 1, truncation_)};
    for (unsigned e = 1; e <= top; ++e) powers.push_back(powers.back() * value);
    TruncPoly r(variables_, truncation_);
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        rest[index] = 0;
        TruncPoly term(variables_, truncation_);
        term.add_term(rest, c);
        r += term * powers[m[index]];
    }
    return r;
}

TruncPoly TruncPoly::evaluate(std::size_t index, const Rational& value) const {
    TruncPoly r(variables_, truncation_);
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        rest[index] = 0;
        r.add_term(rest, c * power(value, m[index]));
    }
    return r;
}

TruncPoly TruncPoly::embed(std::vector<Variable> variables, const std::vector<std::size_t>& index_map,
                           Truncation truncation) const {
    if (index_map.size() != variables_.size()) throw InvalidInput("index map arity mismatch");
    TruncPoly r(std::move(variables), std::move(truncation));
    for (const auto& [m, c] : terms_) {
        Monomial target(r.variables_.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (index_map[i] >= target.size()) throw InvalidInput("index map out of range");
            target[index_map[i]] += m[i];
        }
        r.add_term(target, c);
    }
    return r;
}

TruncPoly TruncPoly::with_truncation(Truncation truncation) const {
    TruncPoly r(variables_, std::move(truncation));
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
}

int TruncPoly::total_degree() const {
    int top = -1;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (unsigned e : m) d += static_cast<int>(e);
        top = std::max(top, d);
    }
    return top;
}

std::optional<int> TruncPoly::homogeneous_degree() const {
    std::optional<int> degree;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<int>(m[i]) * variables_[i].degree;
        if (degree && *degree != d) return std::nullopt;
        degree = d;
    }
    return degree ? degree : std::optional<int>(0);
}

bool TruncPoly::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

bool TruncPoly::is_p_integral(long p) const { return !first_non_p_integral(p).has_value(); }

std::optional<TruncPoly::Monomial> TruncPoly::first_non_p_integral(long p) const {
    for (const auto& [m, c] : terms_) {
        if (!exactalg::is_p_integral(c, p)) return m;
    }
    return std::nullopt;
}

TruncPoly TruncPoly::reduce_symmetric(const Integer& modulus) const {
    TruncPoly r(variables_, truncation_);
    for (const auto& [m, c] : terms_) {
        Integer residue = c.get_den() == 1 ? c.get_num() : c.get_num() * inverse_mod(c.get_den(), modulus);
        r.add_term(m, Rational(symmetric_residue(residue, modulus)));
    }
    return r;
}

std::string TruncPoly::monomial_string(const Monomial& m) const {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += ' ';
        out += variables_[i].name;
        if (m[i] > 1) out += fmt::format("^{}", m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string TruncPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
    auto total = [](const Monomial& m) {
        long d = 0;
        for (unsigned e : m) d += e;
        return d;
    };
    std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
        long da = total(a.first), db = total(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::string out;
    for (const auto& [m, c] : ordered) {
        Rational magnitude = abs(c);
        const bool unit_monomial = std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (unit_monomial) {
            out += magnitude.get_str();
        } else {
            if (magnitude != 1) out += magnitude.get_str() + " ";
            out += monomial_string(m);
        }
    }
    return out;
}

namespace {

class PolyParser {
  public:
    PolyParser(std::string_view text, const std::vector<Variable>& vars) : text_(text), vars_(vars) {}

    void skip_space() {
        while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*')) {
            ++pos_;
        }
    }

    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }

    Integer read_integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    // Longest variable name matching at the cursor.
    std::optional<std::size_t> read_variable() {
        std::optional<std::size_t> best;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const auto& name = vars_[i].name;
            if (name.size() > best_len && text_.substr(pos_, name.size()) == name) {
                best = i;
                best_len = name.size();
            }
        }
        if (best) pos_ += best_len;
        return best;
    }

    void parse_term(TruncPoly& out) {
        skip_space();
        int sign = 1;
        while (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            if (text_[pos_] == '-') sign = -sign;
            ++pos_;
            skip_space();
        }
        Rational coeff(1);
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            Integer num = read_integer();
            Integer den = 1;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                den = read_integer();
            }
            coeff = Rational(num, den);
            coeff.canonicalize();
        }
        TruncPoly::Monomial m(vars_.size(), 0);
        while (true) {
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] == '+' || text_[pos_] == '-') break;
            auto index = read_variable();
            if (!index) fail("unknown symbol");
            unsigned exponent = 1;
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                exponent = static_cast<unsigned>(read_integer().get_ui());
            }
            m[*index] += exponent;
        }
        out.add_term(m, coeff * sign);
    }

    [[noreturn]] void fail(const char* what) const {
        throw InvalidInput(fmt::format("cannot parse polynomial '{}' at offset {}: {}", text_, pos_, what));
    }

  private:
    std::string_view text_;
    const std::vector<Variable>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

TruncPoly TruncPoly::parse(std::string_view text, std::vector<Variable> variables, Truncation truncation) {
    TruncPoly r(std::move(variables), std::move(truncation));
    PolyParser parser(text, r.variables_);
    if (parser.done()) parser.fail("empty input");
    while (!parser.done()) parser.parse_term(r);
    return r;
}

}  // namespace sencalc::exactalg
