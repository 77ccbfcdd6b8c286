#include "sencalc/dpops/psi.hpp"

#include "sencalc/witt/witt.hpp"

namespace sencalc::dpops {

std::vector<Integer> psi_eigenvalues(long p, int n, const Integer& m) {
    return witt::int_to_witt(m, witt::WittContext::over_integers(p, n)).components();
}

Rational psi_two_closed_form(long p, const Integer& m) {
    using exactalg::power;
    Rational sum = 0;
    for (long j = 0; j <= p; ++j) {
        const Integer term = exactalg::binomial(p, j) * power(m, static_cast<unsigned long>((p - 1) * (j + 1)));
        sum += j % 2 == 0 ? Rational(term) : Rational(-term);
    }
    const Rational p_to_one_minus_p = exactalg::fraction(1, power(Integer(p), static_cast<unsigned long>(p - 1)));
    const Integer p2 = Integer(p) * p;
    const Rational bracket = Rational(1 - power(m, p2.get_ui() - 1)) - p_to_one_minus_p * sum;
    return exactalg::fraction(m, p2) * bracket;
}

bool psi_tensor_check(long p, int n, const Integer& a, const Integer& b) {
    const auto context = witt::WittContext::over_integers(p, n);
    const witt::WittVector sum = witt::witt_add(witt::int_to_witt(a, context), witt::int_to_witt(b, context));
    return sum == witt::int_to_witt(a + b, context);
}

}  // namespace sencalc::dpops
