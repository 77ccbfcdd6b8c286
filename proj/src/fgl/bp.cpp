#include "sencalc/fgl/bp.hpp"

#include <fmt/format.h>

#include "sencalc/errors.hpp"

namespace sencalc::fgl {

using exactalg::Variable;

namespace {

constexpr int kMaxGenerators = 4;
constexpr int kMaxRightUnit = 3;

unsigned p_power(long p, int k) { return exactalg::prime_power(p, k).get_ui(); }

// Simultaneous substitution of images[k] for variable offset + k.
TruncPoly substitute_all(const TruncPoly& f, std::size_t offset, const std::vector<TruncPoly>& images,
                         const std::vector<Variable>& target, const std::vector<std::size_t>& keep_map) {
    TruncPoly out(target);
    for (const auto& [monomial, coefficient] : f.terms()) {
        TruncPoly term = TruncPoly::constant(target, coefficient);
        TruncPoly::Monomial kept(target.size(), 0);
        for (std::size_t i = 0; i < monomial.size(); ++i) {
            if (monomial[i] == 0) continue;
            if (i >= offset && i < offset + images.size()) {
                term = term * images[i - offset].pow(monomial[i]);
            } else {
                kept[keep_map[i]] += monomial[i];
            }
        }
        TruncPoly shift(target);
        shift.add_term(kept, 1);
        out += term * shift;
    }
    return out;
}

void require_p_integral(const TruncPoly& f, long p, const std::string& label) {
    if (const auto bad = f.first_non_p_integral(p)) {
        throw InternalError(fmt::format("{} has a non-{}-integral coefficient at {}", label, p, f.monomial_string(*bad)));
    }
}

}  // namespace

std::vector<Variable> bp_variables(long p, int count, const char* prefix) {
    std::vector<Variable> vars;
    for (int n = 1; n <= count; ++n) {
        const int degree = 2 * static_cast<int>(p_power(p, n)) - 2;
        vars.push_back({fmt::format("{}_{}", prefix, n), degree, degree});
    }
    return vars;
}

HazewinkelGenerators hazewinkel_generators(long p, int count) {
    exactalg::require_prime(p);
    if (count < 1 || count > kMaxGenerators) {
        throw InvalidInput(fmt::format("Hazewinkel generators supported for 1 <= N <= {}", kMaxGenerators));
    }
    HazewinkelGenerators out{p, count, {}, {}};
    const auto l_vars = bp_variables(p, count, "l");
    const auto v_vars = bp_variables(p, count, "v");

    // p l_n = sum_{i=0}^{n-1} l_i v_{n-i}^{p^i}, l_0 = 1
    for (int n = 1; n <= count; ++n) {
        TruncPoly v = TruncPoly::generator(l_vars, n - 1) * Rational(p);
        for (int i = 1; i < n; ++i) {
            v -= TruncPoly::generator(l_vars, i - 1) * out.v_in_l[n - i - 1].pow(p_power(p, i));
        }
        require_p_integral(v, p, fmt::format("v_{}", n));
        out.v_in_l.push_back(v);

        TruncPoly l = TruncPoly::generator(v_vars, n - 1);
        for (int i = 1; i < n; ++i) {
            l += out.l_in_v[i - 1] * TruncPoly::generator(v_vars, n - i - 1).pow(p_power(p, i));
        }
        out.l_in_v.push_back(l * Rational(1, p));
    }
    return out;
}

TruncPoly RightUnit::t(int n) const { return TruncPoly::generator(variables, n - 1); }

TruncPoly RightUnit::v(int n) const { return TruncPoly::generator(variables, count + n - 1); }

TruncPoly RightUnit::apply(const TruncPoly& f) const {
    if (f.variables() != variables) throw InvalidInput("polynomial is not over t_1..t_N, v_1..v_N");
    std::vector<std::size_t> identity(variables.size());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
    return substitute_all(f, count, eta_v, variables, identity);
}

TruncPoly RightUnit::apply_through_logarithm(const TruncPoly& f) const {
    if (f.variables() != variables) throw InvalidInput("polynomial is not over t_1..t_N, v_1..v_N");
    const HazewinkelGenerators gens = hazewinkel_generators(p, count);
    // v_n(l) with l_k -> eta_R(l_k)
    std::vector<TruncPoly> images;
    for (const TruncPoly& v_of_l : gens.v_in_l) images.push_back(substitute_all(v_of_l, 0, eta_l, variables, {}));
    std::vector<std::size_t> identity(variables.size());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
    return substitute_all(f, count, images, variables, identity);
}

RightUnit bp_right_unit(long p, int count) {
    exactalg::require_prime(p);
    if (count < 1 || count > kMaxRightUnit) {
        throw InvalidInput(fmt::format("right unit supported for 1 <= N <= {}", kMaxRightUnit));
    }
    RightUnit out;
    out.p = p;
    out.count = count;
    out.variables = bp_variables(p, count, "t");
    for (const auto& var : bp_variables(p, count, "v")) out.variables.push_back(var);

    const HazewinkelGenerators gens = hazewinkel_generators(p, count);
    std::vector<std::size_t> v_to_full(count);
    for (int i = 0; i < count; ++i) v_to_full[i] = count + i;
    std::vector<TruncPoly> l_in_v;
    for (const TruncPoly& l : gens.l_in_v) l_in_v.push_back(l.embed(out.variables, v_to_full));

    // eta_R(l_n) = sum_{i=0}^{n} l_i t_{n-i}^{p^i}
    for (int n = 1; n <= count; ++n) {
        TruncPoly eta = out.t(n) + l_in_v[n - 1];
        for (int i = 1; i < n; ++i) eta += l_in_v[i - 1] * out.t(n - i).pow(p_power(p, i));
        out.eta_l.push_back(eta);
    }
    // eta_R(v_n) = p eta_R(l_n) - sum_{i=1}^{n-1} eta_R(l_i) eta_R(v_{n-i})^{p^i}
    for (int n = 1; n <= count; ++n) {
        TruncPoly eta = out.eta_l[n - 1] * Rational(p);
        for (int i = 1; i < n; ++i) eta -= out.eta_l[i - 1] * out.eta_v[n - i - 1].pow(p_power(p, i));
        require_p_integral(eta, p, fmt::format("eta_R(v_{})", n));
        out.eta_v.push_back(eta);
    }
    return out;
}

TruncPoly b4_cobar_class() {
    const RightUnit unit = bp_right_unit(2, 2);
    const TruncPoly v1_4 = unit.v(1).pow(4);
    const TruncPoly v1_v2 = unit.v(1) * unit.v(2);
    const TruncPoly first = (unit.apply(v1_4) - v1_4) * Rational(1, 8);
    require_p_integral(first, 2, "(eta_R(v_1^4) - v_1^4)/8");
    const TruncPoly b4 = (first - (unit.apply(v1_v2) - v1_v2)) * Rational(1, 2);
    require_p_integral(b4, 2, "b_4");
    return b4;
}

}  // namespace sencalc::fgl
