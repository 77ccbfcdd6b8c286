#include "sencalc/fgl/derham.hpp"

#include <fmt/format.h>

#include "sencalc/errors.hpp"

namespace sencalc::fgl {

using exactalg::IntMatrix;
using exactalg::ScalarRing;

IntMatrix multiplication_matrix(const Series& s, int truncation, const ScalarRing& ring) {
    const auto k = static_cast<std::size_t>(truncation);
    if (s.bound() < k) throw PrecisionError(fmt::format("series known mod h^{}, need h^{}", s.bound(), k));
    IntMatrix out(k, k, ring);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = j; i < k; ++i) out.set(i, j, ring.from_rational(s[i - j]));
    }
    return out;
}

FDerhamComplex f_derham_complex(const FormalGroupLaw& law, int weight_bound, int truncation) {
    if (weight_bound < 0 || truncation < 1) throw InvalidInput("weight bound and truncation must be positive");
    if (law.degree_bound() < truncation) {
        throw PrecisionError(fmt::format("law known to degree {}, need {}", law.degree_bound(), truncation));
    }
    FDerhamComplex out{law.ring().scalar_ring(), truncation, {}};
    for (int m = 0; m <= weight_bound; ++m) {
        out.weight_maps.push_back(multiplication_matrix(divided_n_series(law, m), truncation, out.ring));
    }
    return out;
}

}  // namespace sencalc::fgl
