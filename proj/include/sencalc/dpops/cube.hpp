#pragma once

#include <map>
#include <string>
#include <vector>

#include "sencalc/dpops/dpmodule.hpp"

namespace sencalc::dpops {

struct CubeOperator {
    std::string name;
    int degree_drop = 0;
    std::map<int, IntMatrix> by_degree;  // source degree -> matrix; absent means zero
};

// Commuting graded endomorphisms of a graded free module.
struct OperatorCube {
    ScalarRing ring;
    std::map<int, std::size_t> ranks;
    std::vector<CubeOperator> operators;

    std::size_t rank(int degree) const;
    // Matrix of operator i out of `degree`, zero-filled when absent.
    IntMatrix matrix(std::size_t i, int degree) const;
    // Throws InvalidInput naming the first non-commuting pair.
    void check_commutation() const;
};

// Builds a cube from maps sharing one DP module as source and target.
OperatorCube cube_from_maps(const std::vector<GradedLinearMap>& maps, const ScalarRing& ring);

// Rank-1 module in degree 0 with the operators psi_0(m), ..., psi_{n-1}(m); precision 0 means over Z.
OperatorCube psi_cube(long p, int n, const Integer& m, int precision);

}  // namespace sencalc::dpops
