#pragma once

#include <vector>

#include "sencalc/exactalg/matrix.hpp"
#include "sencalc/fgl/fgl.hpp"

namespace sencalc::fgl {

// Weight-m differential t^m -> <m>(h) t^{m-1} dt on A[[h]] / h^K, one K x K matrix per weight.
struct FDerhamComplex {
    exactalg::ScalarRing ring;
    int truncation = 0;
    std::vector<exactalg::IntMatrix> weight_maps;  // index m for m = 0..W
};

// Matrix of multiplication by a series on A[[h]] / h^K (column j is s * h^j).
exactalg::IntMatrix multiplication_matrix(const Series& s, int truncation, const exactalg::ScalarRing& ring);

FDerhamComplex f_derham_complex(const FormalGroupLaw& law, int weight_bound, int truncation);

}  // namespace sencalc::fgl
