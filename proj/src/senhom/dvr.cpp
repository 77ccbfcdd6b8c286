#include "sencalc/senhom/dvr.hpp"

#include <algorithm>
#include <sstream>

#include <fmt/format.h>

#include "sencalc/dpops/cube.hpp"
#include "sencalc/errors.hpp"
#include "sencalc/senhom/homology.hpp"

namespace sencalc::senhom {

using exactalg::IntMatrix;
using exactalg::ScalarRing;
using exactalg::valuation;

DVRDescriptor DVRDescriptor::parse(long p, int precision, const std::string& coefficients) {
    DVRDescriptor out{p, precision, {}};
    std::stringstream stream(coefficients);
    std::string item;
    while (std::getline(stream, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        Integer c;
        if (item.empty() || c.set_str(item, 10) != 0) {
            throw InvalidInput(fmt::format("bad polynomial coefficient '{}'", item));
        }
        out.eisenstein.push_back(c);
    }
    std::reverse(out.eisenstein.begin(), out.eisenstein.end());
    out.validate();
    return out;
}

void DVRDescriptor::validate() const {
    exactalg::require_prime(p);
    if (precision < 1) throw InvalidInput("precision must be positive");
    if (eisenstein.size() < 2) throw InvalidInput("E(u) must have degree at least 1");
    if (eisenstein.back() != 1) throw InvalidInput("E(u) must be monic");
    for (std::size_t i = 0; i + 1 < eisenstein.size(); ++i) {
        if (eisenstein[i] % p != 0) throw InvalidInput(fmt::format("{} is not Eisenstein at p = {}", polynomial(), p));
    }
    if (eisenstein[0] % (p * p) == 0) {
        throw InvalidInput(fmt::format("{} is not Eisenstein: E(0) is divisible by p^2", polynomial()));
    }
}

ScalarRing DVRDescriptor::ring() const { return ScalarRing::residues(p, precision); }

IntMatrix DVRDescriptor::uniformizer() const {
    const auto e = static_cast<std::size_t>(ramification());
    IntMatrix out(e, e, ring());
    for (std::size_t i = 0; i + 1 < e; ++i) out.set(i + 1, i, 1);
    for (std::size_t i = 0; i < e; ++i) out.set(i, e - 1, -eisenstein[i]);
    return out;
}

namespace {

// sum_i i c_i U^{i-1} for the companion matrix U.
IntMatrix derivative_in(const std::vector<Integer>& poly, const IntMatrix& u) {
    IntMatrix out(u.rows(), u.cols(), u.ring());
    IntMatrix power = IntMatrix::identity(u.rows(), u.ring());
    for (std::size_t i = 1; i < poly.size(); ++i) {
        for (std::size_t r = 0; r < u.rows(); ++r) {
            for (std::size_t c = 0; c < u.cols(); ++c) out.add_to(r, c, Integer(static_cast<long>(i)) * poly[i] * power.at(r, c));
        }
        power = power * u;
    }
    return out;
}

}  // namespace

IntMatrix DVRDescriptor::derivative() const { return derivative_in(eisenstein, uniformizer()); }

int DVRDescriptor::derivative_valuation() const {
    const auto e = static_cast<std::size_t>(ramification());
    IntMatrix u(e, e);
    for (std::size_t i = 0; i + 1 < e; ++i) u.set(i + 1, i, 1);
    for (std::size_t i = 0; i < e; ++i) u.set(i, e - 1, -eisenstein[i]);
    return valuation(derivative_in(eisenstein, u).determinant(), p);
}

int DVRDescriptor::expected_order_exponent(long j) const {
    return ramification() * valuation(Integer(j), p) + derivative_valuation();
}

std::string DVRDescriptor::polynomial() const {
    std::string out;
    for (std::size_t i = eisenstein.size(); i-- > 0;) {
        const Integer& c = eisenstein[i];
        if (c == 0) continue;
        const std::string sign = c < 0 ? " - " : (out.empty() ? "" : " + ");
        const Integer magnitude = abs(c);
        std::string term;
        if (i == 0) {
            term = magnitude.get_str();
        } else {
            term = magnitude == 1 ? "" : magnitude.get_str() + "*";
            term += i == 1 ? "u" : fmt::format("u^{}", i);
        }
        out += (out.empty() && c < 0 ? "-" : sign) + term;
    }
    return out;
}

DvrSquareReport build_dvr_square(const DVRDescriptor& desc, int degree_bound) {
    desc.validate();
    if (degree_bound < 0) throw InvalidInput("negative degree bound");
    const auto e = static_cast<std::size_t>(desc.ramification());
    const int valuation_of_derivative = desc.derivative_valuation();

    // Largest cyclic summand of R / (j E') over Z/p^N has exponent at most v_p(j) + ceil(v_pi(E') / e).
    int needed = 0;
    for (long j = 1; 2 * j - 1 <= degree_bound; ++j) {
        needed = std::max(needed, valuation(Integer(j), desc.p) +
                                      (valuation_of_derivative + static_cast<int>(e) - 1) / static_cast<int>(e));
    }
    if (desc.precision <= needed) {
        throw PrecisionError(fmt::format("R / (j E'(pi)) needs precision above {}, got N = {}", needed, desc.precision));
    }

    const ScalarRing ring = desc.ring();
    const IntMatrix derivative = desc.derivative();
    const IntMatrix pi = desc.uniformizer();
    const int top = degree_bound / 2 + 1;  // module degrees 2d for d <= top

    // Degree 2d basis: (a, b = d - a, i) at index a * e + i.
    dpops::OperatorCube cube{ring, {}, {}};
    for (int d = 0; d <= top; ++d) cube.ranks[2 * d] = static_cast<std::size_t>(d + 1) * e;
    dpops::CubeOperator nabla{"nabla", 2, {}};
    dpops::CubeOperator theta{"Theta", 2, {}};
    for (int d = 1; d <= top; ++d) {
        IntMatrix n(static_cast<std::size_t>(d) * e, static_cast<std::size_t>(d + 1) * e, ring);
        IntMatrix t(static_cast<std::size_t>(d) * e, static_cast<std::size_t>(d + 1) * e, ring);
        for (int a = 0; a <= d; ++a) {
            const int b = d - a;
            for (std::size_t i = 0; i < e; ++i) {
                const std::size_t col = static_cast<std::size_t>(a) * e + i;
                if (a > 0) {
                    for (std::size_t r = 0; r < e; ++r) n.set(static_cast<std::size_t>(a - 1) * e + r, col, derivative.at(r, i));
                }
                if (b > 0) t.set(col, col, Integer(b));
                if (a > 0) t.set(static_cast<std::size_t>(a - 1) * e + i, col, 1);
            }
        }
        nabla.by_degree.emplace(2 * d, std::move(n));
        theta.by_degree.emplace(2 * d, std::move(t));
    }

    const Json params{{"p", desc.p}, {"E", desc.polynomial()}, {"degree_bound", degree_bound}};
    DvrSquareReport out;

    TwoTermComplex single;
    single.ring = ring;
    single.shift = 2;
    single.source_ranks = cube.ranks;
    single.target_ranks = cube.ranks;
    single.maps = nabla.by_degree;
    single.assembled_through = 2 * top;
    out.nabla = two_term_homology(single, degree_bound, "dvr_nabla");
    out.nabla.params = params;

    cube.operators = {nabla, theta};
    out.total = cube_total_fiber(cube, 0, degree_bound, "dvr_square");
    out.total.params = params;

    // pi acts blockwise on every copy of R.
    const ChainComplex total = cube_total_complex(cube);
    for (int n = 0; n <= degree_bound; ++n) {
        const std::size_t rank = total.rank(n);
        IntMatrix action(rank, rank, ring);
        for (std::size_t block = 0; block < rank / e; ++block) {
            for (std::size_t r = 0; r < e; ++r) {
                for (std::size_t c = 0; c < e; ++c) action.set(block * e + r, block * e + c, pi.at(r, c));
            }
        }
        out.generators[n] = reduced_rank(total, n, action);
    }
    return out;
}

}  // namespace sencalc::senhom
