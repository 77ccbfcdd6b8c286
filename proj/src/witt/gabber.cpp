#include "sencalc/witt/gabber.hpp"

#include <fmt/format.h>

#include "sencalc/errors.hpp"

namespace sencalc::witt {

using exactalg::mod_floor;
using exactalg::power;
using exactalg::prime_power;

namespace {

constexpr int kGuardDigits = 4;

}  // namespace

FrobeniusPreimage solve_frobenius(const WittVector& y) {
    const WittContext& context = y.context();
    const long p = context.p;
    const int length = y.length();
    int work_precision = length + kGuardDigits;
    if (context.base.is_residues()) {
        if (context.base.precision < length + 2) {
            throw PrecisionError(fmt::format("solve_frobenius needs at least {} p-adic digits, got {}", length + 2,
                                             context.base.precision));
        }
        work_precision = context.base.precision;
    }
    const Integer modulus = prime_power(p, static_cast<unsigned long>(work_precision));
    const GhostVector g = ghost_map(y);

    FrobeniusPreimage out;
    std::vector<Integer> x(length + 1);
    x[0] = mod_floor(g[0], p);
    // Stage n: p^n x_n = w_{n-1}(y) - sum_{i<n} p^i x_i^{p^{n-i}} (mod p^M).
    for (int n = 1; n <= length; ++n) {
        Integer rest = g[n - 1];
        for (int i = 0; i < n; ++i) {
            Integer term;
            const Integer exponent = prime_power(p, static_cast<unsigned long>(n - i));
            mpz_powm(term.get_mpz_t(), x[i].get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
            rest -= prime_power(p, static_cast<unsigned long>(i)) * term;
        }
        rest = mod_floor(rest, modulus);
        const Integer pn = prime_power(p, static_cast<unsigned long>(n));
        if (!mpz_divisible_p(rest.get_mpz_t(), pn.get_mpz_t())) {
            out.stage = n;
            out.witness_modulus = pn * p;
            out.witness_residue = exactalg::symmetric_residue(rest, out.witness_modulus);
            out.witness = fmt::format("{}x_{} = {} (mod {})", pn.get_str(), n, out.witness_residue.get_str(),
                                      out.witness_modulus.get_str());
            return out;
        }
        mpz_divexact(x[n].get_mpz_t(), rest.get_mpz_t(), pn.get_mpz_t());
        x[n] = mod_floor(x[n], prime_power(p, static_cast<unsigned long>(work_precision - n)));
    }

    const int verified = work_precision - length;
    const WittVector solution(WittContext::over_residues(p, length + 1, verified), x);
    const WittVector target = reduce(y, verified);
    if (!(frobenius(solution) == target)) throw InternalError("Frobenius preimage failed verification");

    out.solved = true;
    out.verified_precision = verified;
    out.x0_residue = mod_floor(x[0], p);
    out.higher_components_divisible = true;
    out.all_components_divisible = mpz_divisible_ui_p(x[0].get_mpz_t(), static_cast<unsigned long>(p)) != 0;
    for (int j = 1; j <= length; ++j) {
        if (!mpz_divisible_ui_p(solution[j].get_mpz_t(), static_cast<unsigned long>(p))) {
            out.higher_components_divisible = false;
        }
    }
    out.all_components_divisible = out.all_components_divisible && out.higher_components_divisible;
    out.ghost_units = true;
    const GhostVector solution_ghost = ghost_map(solution);
    for (const auto& w : solution_ghost.entries()) {
        if (mod_floor(w, p) != 1) out.ghost_units = false;
    }
    out.x = solution;
    return out;
}

FrobeniusOfPReport frobenius_of_p_identity(long p, int length) {
    if (length < 2) throw InvalidInput("frobenius_of_p_identity needs length at least 2");
    const WittContext context = WittContext::over_integers(p, length);
    const WittVector y = gabber_y(p, length);
    const WittVector p_witt = int_to_witt(p, context);
    const WittVector lhs = witt_add(teichmuller(p, context), verschiebung(y));
    const bool f_identity = frobenius(lhs) == truncate(p_witt, length - 1);

    const WittVector rhs = witt_mul(p_witt, witt_sub(int_to_witt(1, context), y));
    const WittVector t_pp = teichmuller(power(Integer(p), static_cast<unsigned long>(p)), context);
    const WittVector t_p2 = teichmuller(Integer(p * p), context);
    return FrobeniusOfPReport{p, length, f_identity, t_pp == rhs, t_p2 == rhs, rhs, t_pp, t_p2};
}

}  // namespace sencalc::witt
