#pragma once

#include <climits>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sencalc {

using Integer = mpz_class;
using Rational = mpq_class;

namespace exactalg {

// Valuation reported for zero.
inline constexpr int kInfiniteValuation = INT_MAX;

bool is_prime(long p);
// Throws InvalidInput unless p is prime.
void require_prime(long p);

int valuation(const Integer& a, long p);
int valuation(const Rational& a, long p);

Integer power(const Integer& base, unsigned long exponent);
Rational power(const Rational& base, unsigned long exponent);
Integer prime_power(long p, unsigned long exponent);

Integer factorial(unsigned long k);
// C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);
// v_p(k!) by Legendre's digit-sum formula.
long factorial_valuation(long p, long k);

// Base-p digits, least significant first.
std::vector<long> base_digits(long m, long p);

// Representative in [0, m).
Integer mod_floor(const Integer& a, const Integer& m);
// Representative in (-m/2, m/2].
Integer symmetric_residue(const Integer& a, const Integer& m);
// Throws InvalidInput when a is not a unit mod m.
Integer inverse_mod(const Integer& a, const Integer& m);

// Canonical num/den; den must be nonzero.
Rational fraction(const Integer& num, const Integer& den);

bool is_integral(const Rational& a);
bool is_p_integral(const Rational& a, long p);
// num * den^{-1} mod m for a p-integral rational; m must be a power of p.
Integer reduce_p_integral(const Rational& a, const Integer& m);

std::string to_string(const Integer& a);
std::string to_string(const Rational& a);

long to_long(const Integer& a);

}  // namespace exactalg
}  // namespace sencalc
