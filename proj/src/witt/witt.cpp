#include "sencalc/witt/witt.hpp"

#include <map>
#include <mutex>

#include <fmt/format.h>

#include "sencalc/errors.hpp"

namespace sencalc::witt {

using exactalg::power;
using exactalg::prime_power;
using exactalg::ScalarRing;
using exactalg::TruncPoly;
using exactalg::Variable;

WittContext WittContext::over_integers(long p, int length) {
    exactalg::require_prime(p);
    if (length < 1) throw InvalidInput("Witt length must be at least 1");
    return {p, length, ScalarRing::integers()};
}

WittContext WittContext::over_residues(long p, int length, int precision) {
    exactalg::require_prime(p);
    if (length < 1) throw InvalidInput("Witt length must be at least 1");
    return {p, length, ScalarRing::residues(p, precision)};
}

WittContext WittContext::with_length(int length) const {
    if (length < 1) throw InvalidInput("Witt length must be at least 1");
    WittContext c = *this;
    c.length = length;
    return c;
}

WittVector::WittVector(WittContext context, std::vector<Integer> components)
    : context_(std::move(context)), components_(std::move(components)) {
    if (static_cast<int>(components_.size()) != context_.length) {
        throw InvalidInput(fmt::format("expected {} Witt components, got {}", context_.length, components_.size()));
    }
    for (auto& c : components_) c = context_.base.normalize(c);
}

WittVector WittVector::zero(const WittContext& context) {
    return WittVector(context, std::vector<Integer>(context.length));
}

std::string WittVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i > 0) out += ", ";
        out += components_[i].get_str();
    }
    return out + ")";
}

GhostVector::GhostVector(WittContext context, std::vector<Integer> entries)
    : context_(std::move(context)), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != context_.length) {
        throw InvalidInput(fmt::format("expected {} ghost entries, got {}", context_.length, entries_.size()));
    }
    for (auto& e : entries_) e = context_.base.normalize(e);
}

namespace {

std::vector<Integer> ghost_over_integers(long p, const std::vector<Integer>& x) {
    std::vector<Integer> w(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        Integer sum = 0;
        for (std::size_t i = 0; i <= j; ++i) {
            sum += prime_power(p, i) * power(x[i], static_cast<unsigned long>(prime_power(p, j - i).get_ui()));
        }
        w[j] = sum;
    }
    return w;
}

std::vector<Integer> inverse_over_integers(long p, const std::vector<Integer>& g) {
    std::vector<Integer> x(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        Integer rest = g[j];
        for (std::size_t i = 0; i < j; ++i) {
            rest -= prime_power(p, i) * power(x[i], static_cast<unsigned long>(prime_power(p, j - i).get_ui()));
        }
        const Integer pj = prime_power(p, j);
        if (!mpz_divisible_p(rest.get_mpz_t(), pj.get_mpz_t())) {
            throw NotAWittVector(static_cast<int>(j),
                                 fmt::format("ghost vector is not integral at index {}: {}^{} does not divide {}", j,
                                             p, j, rest.get_str()));
        }
        mpz_divexact(x[j].get_mpz_t(), rest.get_mpz_t(), pj.get_mpz_t());
    }
    return x;
}

void require_same_context(const WittVector& x, const WittVector& y) {
    if (!(x.context() == y.context())) throw InvalidInput("Witt vectors from different contexts");
}

// Applies a ghost-coordinate operation on torsion-free lifts, then reduces.
template <typename Op>
WittVector ghostwise(const WittContext& out_context, long p, Op op) {
    std::vector<Integer> g = op();
    return WittVector(out_context, inverse_over_integers(p, g));
}

}  // namespace

GhostVector ghost_map(const WittVector& x) {
    return GhostVector(x.context(), ghost_over_integers(x.context().p, x.components()));
}

WittVector ghost_inverse(const GhostVector& g) {
    if (!g.context().torsion_free()) throw InvalidInput("ghost_inverse needs a torsion-free base ring");
    return WittVector(g.context(), inverse_over_integers(g.context().p, g.entries()));
}

WittVector witt_add(const WittVector& x, const WittVector& y) {
    require_same_context(x, y);
    const long p = x.context().p;
    return ghostwise(x.context(), p, [&] {
        auto a = ghost_over_integers(p, x.components());
        auto b = ghost_over_integers(p, y.components());
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
    });
}

WittVector witt_neg(const WittVector& x) {
    const long p = x.context().p;
    return ghostwise(x.context(), p, [&] {
        auto a = ghost_over_integers(p, x.components());
        for (auto& e : a) e = -e;
        return a;
    });
}

WittVector witt_sub(const WittVector& x, const WittVector& y) {
    require_same_context(x, y);
    const long p = x.context().p;
    return ghostwise(x.context(), p, [&] {
        auto a = ghost_over_integers(p, x.components());
        auto b = ghost_over_integers(p, y.components());
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
        return a;
    });
}

WittVector witt_mul(const WittVector& x, const WittVector& y) {
    require_same_context(x, y);
    const long p = x.context().p;
    return ghostwise(x.context(), p, [&] {
        auto a = ghost_over_integers(p, x.components());
        auto b = ghost_over_integers(p, y.components());
        for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
        return a;
    });
}

WittVector witt_pow(const WittVector& x, unsigned exponent) {
    const long p = x.context().p;
    return ghostwise(x.context(), p, [&] {
        auto a = ghost_over_integers(p, x.components());
        for (auto& e : a) e = power(e, exponent);
        return a;
    });
}

WittVector verschiebung(const WittVector& x) {
    std::vector<Integer> c(x.components().size());
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = x[i - 1];
    return WittVector(x.context(), std::move(c));
}

WittVector frobenius(const WittVector& x) {
    if (x.length() < 2) throw InvalidInput("Frobenius needs length at least 2");
    const long p = x.context().p;
    return ghostwise(x.context().with_length(x.length() - 1), p, [&] {
        auto a = ghost_over_integers(p, x.components());
        a.erase(a.begin());
        return a;
    });
}

WittVector teichmuller(const Integer& a, const WittContext& context) {
    std::vector<Integer> c(context.length);
    c[0] = a;
    return WittVector(context, std::move(c));
}

WittVector delta(const WittVector& x) {
    if (!x.context().torsion_free()) throw InvalidInput("delta needs a torsion-free base ring");
    if (x.length() < 2) throw InvalidInput("delta needs length at least 2");
    const long p = x.context().p;
    return ghostwise(x.context().with_length(x.length() - 1), p, [&] {
        auto w = ghost_over_integers(p, x.components());
        std::vector<Integer> d(w.size() - 1);
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            Integer diff = w[i + 1] - power(w[i], static_cast<unsigned long>(p));
            if (!mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(p))) {
                throw InternalError("Frobenius is not a lift of the p-th power");
            }
            mpz_divexact_ui(d[i].get_mpz_t(), diff.get_mpz_t(), static_cast<unsigned long>(p));
        }
        return d;
    });
}

WittVector int_to_witt(const Integer& m, const WittContext& context) {
    std::vector<Integer> g(context.length, m);
    return WittVector(context, inverse_over_integers(context.p, g));
}

WittVector truncate(const WittVector& x, int length) {
    if (length > x.length()) throw InvalidInput("cannot extend a Witt vector by truncation");
    std::vector<Integer> c(x.components().begin(), x.components().begin() + length);
    return WittVector(x.context().with_length(length), std::move(c));
}

WittVector reduce(const WittVector& x, int precision) {
    const WittContext target = WittContext::over_residues(x.context().p, x.length(), precision);
    if (x.context().base.is_residues() && x.context().base.precision < precision) {
        throw PrecisionError("cannot raise the precision of a Witt vector");
    }
    return WittVector(target, x.components());
}

WittVector gabber_y(long p, int length) {
    const WittContext context = WittContext::over_integers(p, length);
    std::vector<Integer> g(length);
    for (int j = 0; j < length; ++j) {
        const unsigned long exponent = prime_power(p, static_cast<unsigned long>(j + 1)).get_ui() - 1;
        g[j] = 1 - prime_power(p, exponent);
    }
    return ghost_inverse(GhostVector(context, std::move(g)));
}

TruncPoly witt_polynomial(long p, int j, const std::vector<Variable>& variables, std::size_t offset) {
    TruncPoly w(variables);
    for (int i = 0; i <= j; ++i) {
        TruncPoly::Monomial m(variables.size(), 0);
        m[offset + i] = static_cast<unsigned>(prime_power(p, static_cast<unsigned long>(j - i)).get_ui());
        w.add_term(m, Rational(prime_power(p, static_cast<unsigned long>(i))));
    }
    return w;
}

namespace {

std::shared_ptr<const StructurePolynomials> build_structure_polynomials(long p, int length) {
    auto out = std::make_shared<StructurePolynomials>();
    out->p = p;
    out->length = length;
    for (const char* prefix : {"X", "Y"}) {
        for (int i = 0; i < length; ++i) {
            const int degree = static_cast<int>(prime_power(p, static_cast<unsigned long>(i)).get_ui());
            out->variables.push_back({fmt::format("{}_{}", prefix, i), degree, 0});
        }
    }
    const auto& vars = out->variables;
    const std::size_t y_offset = static_cast<std::size_t>(length);
    // Ghost recursion: p^k Q_k = target_k - sum_{i<k} p^i Q_i^{p^{k-i}}, exact division.
    auto solve = [&](auto target, std::vector<TruncPoly>& polys, const char* label) {
        for (int k = 0; k < length; ++k) {
            TruncPoly rest = target(k);
            for (int i = 0; i < k; ++i) {
                const auto e = static_cast<unsigned>(prime_power(p, static_cast<unsigned long>(k - i)).get_ui());
                rest -= polys[i].pow(e) * Rational(prime_power(p, static_cast<unsigned long>(i)));
            }
            rest *= Rational(1, prime_power(p, static_cast<unsigned long>(k)));
            if (!rest.is_integral()) {
                throw InternalError(fmt::format("{} structure polynomial {} is not integral", label, k));
            }
            polys.push_back(std::move(rest));
        }
    };
    solve([&](int k) { return witt_polynomial(p, k, vars, 0) + witt_polynomial(p, k, vars, y_offset); },
          out->sum, "sum");
    solve([&](int k) { return witt_polynomial(p, k, vars, 0) * witt_polynomial(p, k, vars, y_offset); },
          out->product, "product");
    return out;
}

}  // namespace

std::shared_ptr<const StructurePolynomials> witt_structure_polynomials(long p, int length) {
    exactalg::require_prime(p);
    if (length < 1) throw InvalidInput("Witt length must be at least 1");
    if (prime_power(p, static_cast<unsigned long>(length - 1)) > 16) {
        throw Unsupported(fmt::format("structure polynomials for p = {}, L = {} are too large", p, length));
    }
    static std::mutex mutex;
    static std::map<std::pair<long, int>, std::shared_ptr<const StructurePolynomials>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{p, length}];
    if (!slot) slot = build_structure_polynomials(p, length);
    return slot;
}

}  // namespace sencalc::witt
