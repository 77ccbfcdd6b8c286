#pragma once

#include <map>
#include <string>

#include "sencalc/dpops/cube.hpp"
#include "sencalc/dpops/dpmodule.hpp"
#include "sencalc/exactalg/matrix.hpp"
#include "sencalc/senhom/report.hpp"

namespace sencalc::senhom {

using exactalg::IntMatrix;
using exactalg::ScalarRing;

// Homologically graded complex of free modules. Over Z/p^N the entries stand for p-adic integers known
// modulo p^N: kernels are the saturated free parts and homology is reported as for Z_p.
struct ChainComplex {
    ScalarRing ring;
    std::map<int, std::size_t> ranks;
    std::map<int, IntMatrix> differentials;  // d_n : C_n -> C_{n-1}

    std::size_t rank(int degree) const;
    // Zero-filled when absent.
    IntMatrix differential(int degree) const;
};

DegreeHomology homology(const ChainComplex& complex, int degree);

// Dimension of H / aH over the residue field, for an endomorphism `action` of C_degree commuting with d.
std::size_t reduced_rank(const ChainComplex& complex, int degree, const IntMatrix& action);

// Fiber of D: S -> T with D lowering degree by `shift`. A target element of degree e sits in degree e + shift - 1.
struct TwoTermComplex {
    ScalarRing ring;
    int shift = 1;
    std::map<int, std::size_t> source_ranks;
    std::map<int, std::size_t> target_ranks;
    std::map<int, IntMatrix> maps;  // source degree d -> matrix into target degree d - shift
    int assembled_through = -1;     // maps are complete for source degrees up to here

    static TwoTermComplex from_map(const dpops::GradedLinearMap& map, const ScalarRing& ring);

    IntMatrix map(int degree) const;
    ChainComplex fiber() const;
};

// Degrees 0..degree_bound; cross-checks against ker(D_n) + coker(D_{n+1}) computed directly.
HomologyReport two_term_homology(const TwoTermComplex& complex, int degree_bound, const std::string& builder = "two_term");

// Total complex of the cube: a copy of M for each subset S of the operators, shifted by sum_{i in S} (s_i - 1),
// with operator i mapping the S copy to the S + {i} copy with sign (-1)^{#{j in S : j < i}}.
ChainComplex cube_total_complex(const dpops::OperatorCube& cube);

// Homology of the total complex in [low, high]; recomputed with the operators reversed and compared.
HomologyReport cube_total_fiber(const dpops::OperatorCube& cube, int low, int high,
                                const std::string& builder = "cube_total_fiber");

}  // namespace sencalc::senhom

namespace sencalc::senhom {

// Rank of the saturated kernel of a matrix.
std::size_t kernel_rank(const IntMatrix& d);
// Cokernel of a matrix as a homology entry in `degree`.
DegreeHomology cokernel_homology(const IntMatrix& d, int degree);

}  // namespace sencalc::senhom
