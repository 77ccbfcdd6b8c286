#include "sencalc/dpops/cube.hpp"

#include <fmt/format.h>

#include "sencalc/dpops/psi.hpp"
#include "sencalc/errors.hpp"

namespace sencalc::dpops {

std::size_t OperatorCube::rank(int degree) const {
    const auto it = ranks.find(degree);
    return it == ranks.end() ? 0 : it->second;
}

IntMatrix OperatorCube::matrix(std::size_t i, int degree) const {
    const CubeOperator& op = operators.at(i);
    const auto it = op.by_degree.find(degree);
    if (it != op.by_degree.end()) return it->second;
    return IntMatrix(rank(degree - op.degree_drop), rank(degree), ring);
}

void OperatorCube::check_commutation() const {
    for (std::size_t i = 0; i < operators.size(); ++i) {
        for (std::size_t j = i + 1; j < operators.size(); ++j) {
            const int si = operators[i].degree_drop;
            const int sj = operators[j].degree_drop;
            for (const auto& [degree, r] : ranks) {
                if (r == 0) continue;
                const IntMatrix ij = matrix(i, degree - sj) * matrix(j, degree);
                const IntMatrix ji = matrix(j, degree - si) * matrix(i, degree);
                if (!(ij == ji)) {
                    throw InvalidInput(fmt::format("operators {} and {} do not commute in degree {}",
                                                   operators[i].name, operators[j].name, degree));
                }
            }
        }
    }
}

OperatorCube cube_from_maps(const std::vector<GradedLinearMap>& maps, const ScalarRing& ring) {
    if (maps.empty()) throw InvalidInput("cube needs at least one operator");
    OperatorCube cube{ring, {}, {}};
    const DPModule& module = maps.front().source();
    for (int d = 0; d <= module.degree_bound(); ++d) {
        if (module.rank(d) > 0) cube.ranks[d] = module.rank(d);
    }
    for (std::size_t i = 0; i < maps.size(); ++i) {
        const GradedLinearMap& map = maps[i];
        if (map.source().degree_bound() != module.degree_bound() || map.target().degree_bound() != module.degree_bound()) {
            throw InvalidInput("cube maps must share one module");
        }
        CubeOperator op{fmt::format("D{}", i), map.degree_drop(), {}};
        for (const auto& [d, r] : cube.ranks) op.by_degree.emplace(d, map.matrix(d, ring));
        cube.operators.push_back(std::move(op));
    }
    cube.check_commutation();
    return cube;
}

OperatorCube psi_cube(long p, int n, const Integer& m, int precision) {
    const ScalarRing ring = precision > 0 ? ScalarRing::residues(p, precision) : ScalarRing::integers();
    OperatorCube cube{ring, {{0, 1}}, {}};
    const auto psi = psi_eigenvalues(p, n, m);
    for (int j = 0; j < n; ++j) {
        cube.operators.push_back({fmt::format("Psi_{}", j), 0, {{0, IntMatrix::from_rows({{psi[j]}}, ring)}}});
    }
    return cube;
}

}  // namespace sencalc::dpops
