#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace surgery {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base of every error the library raises.
struct SurgeryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotCoprime : SurgeryError {
  NotCoprime(std::int64_t a, std::int64_t b)
      : SurgeryError("arguments " + std::to_string(a) + " and " + std::to_string(b) +
                     " are not coprime") {}
};

struct DenominatorVanishes : SurgeryError {
  explicit DenominatorVanishes(std::int64_t d)
      : SurgeryError("denominator vanishes at primitive " + std::to_string(d) + "-th roots of unity"),
        divisor(d) {}
  std::int64_t divisor;
};

struct DivisionByZero : SurgeryError {
  DivisionByZero() : SurgeryError("division by zero") {}
  using SurgeryError::SurgeryError;
};

// Small-integer number theory. Everything here works on int64 and is meant for
// moduli in the hundreds, not for cryptographic sizes.

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Least nonnegative residue of a mod m (m > 0).
std::int64_t mod(std::int64_t a, std::int64_t m);

/// Inverse of a modulo m; throws NotCoprime when gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

std::int64_t floor_div(std::int64_t a, std::int64_t b);

/// Prime factorisation as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// Positive divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

std::vector<std::int64_t> prime_divisors(std::int64_t n);

/// Residues in [1, n) coprime to n (for n = 1 returns {0}).
std::vector<std::int64_t> units_mod(std::int64_t n);

std::int64_t mobius(std::int64_t n);

/// num/den in canonical form; throws DivisionByZero when den = 0.
Rational make_rational(const Integer& num, const Integer& den);
inline Rational make_rational(std::int64_t num, std::int64_t den) { return make_rational(Integer(num), Integer(den)); }

/// "num/den" with den > 0; integers keep the "/1".
std::string to_fraction_string(const Rational& r);

}  // namespace surgery
