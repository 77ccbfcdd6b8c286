#include "sencalc/dpops/weyl.hpp"

#include <algorithm>

#include "sencalc/errors.hpp"

namespace sencalc::dpops {

using exactalg::IntMatrix;

IntMatrix divided_derivative(long k, std::size_t size) {
    IntMatrix out(size, size);
    for (std::size_t m = static_cast<std::size_t>(k); m < size; ++m) out.set(m - k, m, exactalg::binomial(m, k));
    return out;
}

IntMatrix multiplication_by_x(std::size_t size) {
    IntMatrix out(size, size);
    for (std::size_t m = 0; m + 1 < size; ++m) out.set(m + 1, m, 1);
    return out;
}

bool WeylReport::holds() const {
    return std::all_of(commutator.begin(), commutator.end(), [](bool b) { return b; }) &&
           std::all_of(valuation.begin(), valuation.end(), [](bool b) { return b; });
}

WeylReport dp_weyl_operators(long p, int n, int monomial_bound) {
    exactalg::require_prime(p);
    if (n < 1 || monomial_bound < 0) throw InvalidInput("Weyl check needs n >= 1 and M >= 0");
    WeylReport report{p, n, monomial_bound, {}, {}};
    // One extra basis vector so x * x^M is represented.
    const auto size = static_cast<std::size_t>(monomial_bound) + 2;
    const IntMatrix x = multiplication_by_x(size);

    for (int j = 0; j < n; ++j) {
        const long pj = exactalg::prime_power(p, j).get_si();
        const IntMatrix commutator = divided_derivative(pj, size) * x - x * divided_derivative(pj, size);
        const IntMatrix expected = divided_derivative(pj - 1, size);
        bool commutes = true;
        for (std::size_t col = 0; col <= static_cast<std::size_t>(monomial_bound); ++col) {
            for (std::size_t row = 0; row < size; ++row) commutes = commutes && commutator.at(row, col) == expected.at(row, col);
        }
        report.commutator.push_back(commutes);

        bool valuations = true;
        for (long m = 0; m <= monomial_bound; ++m) {
            Integer product = 1;
            long exponent = m;
            for (int k = 0; k < j; ++k) {
                const long pk = exactalg::prime_power(p, k).get_si();
                for (long e = 0; e < p - 1; ++e) {
                    product *= exactalg::binomial(exponent, pk);
                    exponent -= pk;
                }
            }
            const Integer direct = exactalg::binomial(m, pj - 1);
            if (product == 0 || direct == 0) continue;
            valuations = valuations && exactalg::valuation(product, p) == exactalg::valuation(direct, p);
        }
        report.valuation.push_back(valuations);
    }
    return report;
}

}  // namespace sencalc::dpops
