#include "sencalc/senhom/homology.hpp"

#include <algorithm>
#include <vector>

#include <fmt/format.h>

#include "sencalc/errors.hpp"
#include "sencalc/exactalg/smith.hpp"

namespace sencalc::senhom {

using exactalg::cokernel_invariants;
using exactalg::smith_normal_form;

namespace {

// Saturated kernel of d, as a basis (columns) with the matching coordinate rows.
struct Cycles {
    IntMatrix basis;
    IntMatrix coordinates;
};

Cycles cycles_of(const IntMatrix& d) {
    const std::size_t r = d.cols();
    const ScalarRing& ring = d.ring();
    if (d.rows() == 0 || d.is_zero()) return {IntMatrix::identity(r, ring), IntMatrix::identity(r, ring)};

    const auto snf = smith_normal_form(d);
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < r; ++i) {
        const bool slot_zero = i >= snf.divisors.size() ||
                               (ring.is_residues() ? snf.exponents[i] >= ring.precision : snf.divisors[i] == 0);
        if (slot_zero) kept.push_back(i);
    }
    Cycles out{IntMatrix(r, kept.size(), ring), IntMatrix(kept.size(), r, ring)};
    for (std::size_t j = 0; j < kept.size(); ++j) {
        for (std::size_t i = 0; i < r; ++i) {
            out.basis.set(i, j, snf.V.at(i, kept[j]));
            out.coordinates.set(j, i, snf.V_inverse.at(kept[j], i));
        }
    }
    return out;
}

// Sorts cokernel invariants into free rank and torsion orders.
void classify(const std::vector<Integer>& invariants, const ScalarRing& ring, DegreeHomology& into) {
    for (const Integer& d : invariants) {
        if (d == 0 || (ring.is_residues() && d == ring.modulus())) {
            ++into.free_rank;
        } else if (ring.is_residues()) {
            into.torsion.push_back(exactalg::prime_power(ring.p, exactalg::valuation(d, ring.p)));
        } else {
            into.torsion.push_back(abs(d));
        }
    }
    std::sort(into.torsion.begin(), into.torsion.end());
}

// Cokernel of a k x m matrix, treating m = 0 as the free module.
std::vector<Integer> cokernel(const IntMatrix& a) {
    if (a.cols() == 0) return std::vector<Integer>(a.rows(), Integer(0));
    if (a.rows() == 0) return {};
    return cokernel_invariants(a);
}

IntMatrix zeros(std::size_t rows, std::size_t cols, const ScalarRing& ring) { return IntMatrix(rows, cols, ring); }

void place(IntMatrix& into, const IntMatrix& block, std::size_t row, std::size_t col, int sign) {
    for (std::size_t i = 0; i < block.rows(); ++i) {
        for (std::size_t j = 0; j < block.cols(); ++j) {
            if (block.at(i, j) != 0) into.add_to(row + i, col + j, sign * block.at(i, j));
        }
    }
}

std::size_t lookup(const std::map<int, std::size_t>& ranks, int degree) {
    const auto it = ranks.find(degree);
    return it == ranks.end() ? 0 : it->second;
}

}  // namespace

std::size_t ChainComplex::rank(int degree) const { return lookup(ranks, degree); }

IntMatrix ChainComplex::differential(int degree) const {
    const auto it = differentials.find(degree);
    if (it != differentials.end()) return it->second;
    return zeros(rank(degree - 1), rank(degree), ring);
}

DegreeHomology homology(const ChainComplex& complex, int degree) {
    DegreeHomology out{degree, 0, {}};
    if (complex.rank(degree) == 0) return out;
    const IntMatrix d_out = complex.differential(degree);
    const IntMatrix d_in = complex.differential(degree + 1);
    if (d_out.rows() > 0 && d_in.cols() > 0 && !(d_out * d_in).is_zero()) {
        throw InternalError(fmt::format("d^2 != 0 at degree {}", degree));
    }
    const Cycles z = cycles_of(d_out);
    classify(cokernel(z.coordinates * d_in), complex.ring, out);
    return out;
}

std::size_t reduced_rank(const ChainComplex& complex, int degree, const IntMatrix& action) {
    if (complex.rank(degree) == 0) return 0;
    const Cycles z = cycles_of(complex.differential(degree));
    if (z.basis.cols() == 0) return 0;
    const IntMatrix boundaries = z.coordinates * complex.differential(degree + 1);
    const IntMatrix moved = z.coordinates * action * z.basis;
    return cokernel(boundaries.cols() == 0 ? moved : boundaries.hstack(moved)).size();
}

TwoTermComplex TwoTermComplex::from_map(const dpops::GradedLinearMap& map, const ScalarRing& ring) {
    TwoTermComplex out;
    out.ring = ring;
    out.shift = map.degree_drop();
    for (int d = 0; d <= map.source().degree_bound(); ++d) {
        if (map.source().rank(d) == 0) continue;
        out.source_ranks[d] = map.source().rank(d);
        out.maps.emplace(d, map.matrix(d, ring));
    }
    for (int d = 0; d <= map.target().degree_bound(); ++d) {
        if (map.target().rank(d) > 0) out.target_ranks[d] = map.target().rank(d);
    }
    out.assembled_through = std::min(map.source().degree_bound(), map.target().degree_bound() + out.shift);
    return out;
}

IntMatrix TwoTermComplex::map(int degree) const {
    const auto it = maps.find(degree);
    if (it != maps.end()) return it->second;
    return zeros(lookup(target_ranks, degree - shift), lookup(source_ranks, degree), ring);
}

ChainComplex TwoTermComplex::fiber() const {
    ChainComplex out{ring, {}, {}};
    auto source = [&](int n) { return lookup(source_ranks, n); };
    for (const auto& [d, r] : source_ranks) out.ranks[d] += r;
    for (const auto& [d, r] : target_ranks) out.ranks[d + shift - 1] += r;
    for (const auto& [n, r] : out.ranks) {
        if (source(n) == 0 || out.rank(n - 1) == 0) continue;
        IntMatrix d(out.rank(n - 1), r, ring);
        place(d, map(n), source(n - 1), 0, 1);
        out.differentials.emplace(n, std::move(d));
    }
    return out;
}

HomologyReport two_term_homology(const TwoTermComplex& complex, int degree_bound, const std::string& builder) {
    if (complex.assembled_through < degree_bound + 1) {
        throw PrecisionError(fmt::format("maps known through degree {}, homology through {} needs {}",
                                         complex.assembled_through, degree_bound, degree_bound + 1));
    }
    HomologyReport report;
    report.builder = builder;
    report.precision = complex.ring.is_residues() ? complex.ring.precision : 0;
    const ChainComplex fiber = complex.fiber();
    for (int n = 0; n <= degree_bound; ++n) {
        DegreeHomology h = homology(fiber, n);

        // ker(D_n) + coker(D_{n+1}) straight from the Smith forms.
        DegreeHomology direct{n, cycles_of(complex.map(n)).basis.cols(), {}};
        classify(cokernel(complex.map(n + 1)), complex.ring, direct);
        if (!(h == direct)) {
            throw InternalError(fmt::format("{}: fiber homology and ker/coker disagree in degree {}", builder, n));
        }
        report.degrees.push_back(std::move(h));
    }
    return report;
}

ChainComplex cube_total_complex(const dpops::OperatorCube& cube) {
    const std::size_t count = cube.operators.size();
    if (count > 16) throw InvalidInput("cube has too many operators");
    struct Block {
        unsigned mask;
        int degree;
        std::size_t offset;
    };
    std::map<int, std::vector<Block>> blocks;
    ChainComplex out{cube.ring, {}, {}};
    for (unsigned mask = 0; mask < (1U << count); ++mask) {
        int shift = 0;
        for (std::size_t i = 0; i < count; ++i) {
            if (mask & (1U << i)) shift += cube.operators[i].degree_drop - 1;
        }
        for (const auto& [e, r] : cube.ranks) {
            if (r == 0) continue;
            const int total = e + shift;
            blocks[total].push_back({mask, e, out.ranks[total]});
            out.ranks[total] += r;
        }
    }
    auto find = [&](int total, unsigned mask, int e) -> const Block* {
        const auto it = blocks.find(total);
        if (it == blocks.end()) return nullptr;
        for (const Block& b : it->second) {
            if (b.mask == mask && b.degree == e) return &b;
        }
        return nullptr;
    };
    for (const auto& [total, list] : blocks) {
        if (out.rank(total - 1) == 0) continue;
        IntMatrix d(out.rank(total - 1), out.rank(total), cube.ring);
        for (const Block& b : list) {
            int sign = 1;
            for (std::size_t i = 0; i < count; ++i) {
                const unsigned bit = 1U << i;
                if (b.mask & bit) {
                    sign = -sign;
                    continue;
                }
                const Block* to = find(total - 1, b.mask | bit, b.degree - cube.operators[i].degree_drop);
                if (to == nullptr) continue;
                place(d, cube.matrix(i, b.degree), to->offset, b.offset, sign);
            }
        }
        out.differentials.emplace(total, std::move(d));
    }
    return out;
}

HomologyReport cube_total_fiber(const dpops::OperatorCube& cube, int low, int high, const std::string& builder) {
    cube.check_commutation();
    HomologyReport report;
    report.builder = builder;
    report.precision = cube.ring.is_residues() ? cube.ring.precision : 0;
    const ChainComplex total = cube_total_complex(cube);
    for (int n = low; n <= high; ++n) report.degrees.push_back(homology(total, n));

    if (cube.operators.size() > 1) {
        dpops::OperatorCube reversed = cube;
        std::reverse(reversed.operators.begin(), reversed.operators.end());
        const ChainComplex other = cube_total_complex(reversed);
        for (int n = low; n <= high; ++n) {
            if (!(homology(other, n) == report.at(n))) {
                throw InternalError(fmt::format("{}: operator order changes homology in degree {}", builder, n));
            }
        }
    }
    return report;
}

}  // namespace sencalc::senhom

namespace sencalc::senhom {

std::size_t kernel_rank(const IntMatrix& d) { return cycles_of(d).basis.cols(); }

DegreeHomology cokernel_homology(const IntMatrix& d, int degree) {
    DegreeHomology out{degree, 0, {}};
    classify(cokernel(d), d.ring(), out);
    return out;
}

}  // namespace sencalc::senhom
