#include "sencalc/dpops/delta.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "sencalc/errors.hpp"

namespace sencalc::dpops {

using exactalg::Series;

namespace {

// Echelon basis of a Z_(p)-lattice in Q^K, keyed by pivot position.
class Lattice {
  public:
    explicit Lattice(long p) : p_(p) {}

    void insert(Series v) {
        while (true) {
            const std::size_t pivot = v.order();
            if (pivot == v.bound()) return;
            auto it = basis_.find(pivot);
            if (it == basis_.end()) {
                basis_.emplace(pivot, std::move(v));
                return;
            }
            if (exactalg::valuation(v[pivot], p_) < exactalg::valuation(it->second[pivot], p_)) std::swap(v, it->second);
            const Series& b = it->second;
            v -= b * (v[pivot] / b[pivot]);
        }
    }

    bool contains(Series v) const {
        for (const auto& [pivot, b] : basis_) {
            if (v[pivot] == 0) continue;
            const Rational c = v[pivot] / b[pivot];
            if (!exactalg::is_p_integral(c, p_)) return false;
            v -= b * c;
        }
        return v.is_zero();
    }

    std::size_t rank() const { return basis_.size(); }

    int lowest_valuation() const {
        int lowest = 0;
        for (const auto& [pivot, b] : basis_) lowest = std::min(lowest, exactalg::valuation(b[pivot], p_));
        return lowest;
    }

  private:
    long p_;
    std::map<std::size_t, Series> basis_;
};

bool coefficients_p_integral(const Series& s, long p) {
    for (const auto& c : s.coefficients()) {
        if (!exactalg::is_p_integral(c, p)) return false;
    }
    return true;
}

struct Ring {
    long p;
    std::size_t bound;
    Series phi_h;
    Series d_inverse;

    Series phi(const Series& a) const { return a.compose(phi_h); }
    Series delta(const Series& a) const { return (phi(a) - a.pow(static_cast<unsigned>(p))) * Rational(1, p); }
};

// Monomials prod_j g_j^{e_j} with h-order below the truncation, times every admissible power of h.
void add_monomials(Lattice& lattice, const std::vector<Series>& generators, std::size_t index, const Series& current,
                   const Ring& ring) {
    if (index == generators.size()) {
        Series shifted = current;
        for (std::size_t i = current.order(); i < ring.bound; ++i) {
            lattice.insert(shifted);
            Series h(ring.bound);
            if (ring.bound > 1) h[1] = 1;
            shifted = shifted * h;
        }
        return;
    }
    for (Series product = current; product.order() < ring.bound; product = product * generators[index]) {
        add_monomials(lattice, generators, index + 1, product, ring);
    }
}

}  // namespace

bool DeltaRingReport::divisible() const {
    return std::all_of(steps.begin(), steps.end(),
                       [](const DeltaStep& s) { return s.phi_divisible && s.relation_divisible; });
}

bool DeltaRingReport::controls_rejected() const {
    return std::all_of(controls.begin(), controls.end(), [](const auto& c) { return !c.second; });
}

DeltaRingReport delta_ring_check(long p, int n, int iterations, const DeltaRingContext& context) {
    if (context.p != p) throw InvalidInput("context prime differs from p");
    if (n < 0) throw InvalidInput("n must be non-negative");
    Series h_power(static_cast<std::size_t>(context.truncation));
    const auto exponent = static_cast<std::size_t>(n * (p - 1));
    if (exponent >= h_power.bound()) {
        throw PrecisionError(fmt::format("x = h^{} vanishes modulo h^{}; increase K", exponent, context.truncation));
    }
    h_power[exponent] = 1;
    DeltaRingReport report = delta_ring_check(h_power, iterations, context);
    report.n = n;
    return report;
}

DeltaRingReport delta_ring_check(const Series& numerator, int iterations, const DeltaRingContext& context) {
    const long p = context.p;
    exactalg::require_prime(p);
    if (context.truncation < 2 || context.precision < 1 || iterations < 0) {
        throw InvalidInput("delta check needs K >= 2, N >= 1 and B >= 0");
    }
    const auto bound = static_cast<std::size_t>(context.truncation);
    if (numerator.bound() != bound) throw InvalidInput("numerator truncation differs from K");

    Ring ring{p, bound, Series(bound), Series(bound)};
    Series one_plus_h(bound);
    one_plus_h[0] = 1;
    one_plus_h[1] = 1;
    ring.phi_h = one_plus_h.pow(static_cast<unsigned>(p)) - Series::one(bound);
    Series d(bound);
    for (long i = 0; i < p; ++i) d += one_plus_h.pow(static_cast<unsigned>(i));
    ring.d_inverse = d.reciprocal();

    DeltaRingReport report;
    report.p = p;
    report.iterations = iterations;
    report.context = context;

    std::vector<Series> deltas{numerator * ring.d_inverse};
    for (int k = 0; k <= iterations; ++k) deltas.push_back(ring.delta(deltas.back()));

    const bool trivial = numerator.is_zero();
    if (!trivial) {
        for (std::size_t k = 0; k < deltas.size(); ++k) {
            if (deltas[k].is_zero()) {
                throw PrecisionError(fmt::format("delta^{}(t) vanishes modulo h^{}; increase K", k, bound));
            }
            if (deltas[k].order() == 0) throw InvalidInput(fmt::format("delta^{}(t) is a unit in Q[[h]]", k));
        }
    }

    Lattice lattice(p);
    lattice.insert(Series::one(bound));
    if (!trivial) add_monomials(lattice, deltas, 0, Series::one(bound), ring);
    report.lattice_rank = lattice.rank();
    report.lowest_lattice_valuation = lattice.lowest_valuation();
    if (-report.lowest_lattice_valuation > context.precision) {
        throw PrecisionError(fmt::format("lattice needs denominators p^{}, beyond N = {}",
                                         -report.lowest_lattice_valuation, context.precision));
    }

    for (int k = 0; k <= iterations; ++k) {
        const Series phi_quotient = ring.phi(deltas[k]) * ring.d_inverse;
        const Series relation = deltas[k].pow(static_cast<unsigned>(p)) + deltas[k + 1] * Rational(p);
        const Series relation_quotient = relation * ring.d_inverse;
        report.steps.push_back({k, lattice.contains(phi_quotient), lattice.contains(relation_quotient),
                                coefficients_p_integral(phi_quotient, p), coefficients_p_integral(relation_quotient, p)});
    }

    if (!trivial) {
        report.controls.emplace_back("t / [p]_q", lattice.contains(deltas[0] * ring.d_inverse));
        report.controls.emplace_back("delta(t) / [p]_q", lattice.contains(deltas[1] * ring.d_inverse));
        report.controls.emplace_back("1 / p", lattice.contains(Series::one(bound) * Rational(1, p)));
    }
    return report;
}

}  // namespace sencalc::dpops
