#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "surgery/arith.hpp"
#include "surgery/laurent.hpp"

namespace surgery {

/// Phi_n as a Laurent polynomial (degree phi(n), constant term first).
LaurentIntPoly cyclotomic_polynomial(std::int64_t n);

/// Dense coefficients of Phi_n, lowest degree first. Memoized and thread safe.
const std::vector<Integer>& cyclotomic_dense(std::int64_t n);

// Dense helpers on Z[x]/(x^d - 1). Vectors have length d.
std::vector<Integer> cyclic_mul(const std::vector<Integer>& a, const std::vector<Integer>& b);

/// Remainder of a dense polynomial (any length) modulo Phi_n.
std::vector<Integer> reduce_mod_cyclotomic(std::vector<Integer> dense, std::int64_t n);

/// True iff Phi_n divides A, i.e. A vanishes at the primitive n-th roots.
bool vanishes_at_primitive_roots(const LaurentIntPoly& a, std::int64_t n);

/// Exact test that sum_e c_e zeta_n^e = 0 for a sparse exponent -> coefficient map.
/// Splits Q(zeta_n) into prime-power tensor factors, so n may be far too large for a dense Phi_n.
bool sparse_root_sum_is_zero(const std::map<std::int64_t, Integer>& terms, std::int64_t n);

/// zeta_n^k, kept symbolically.
struct RootOfUnity {
  std::int64_t k = 0;
  std::int64_t n = 1;

  RootOfUnity normalized() const;
  std::complex<double> to_complex() const;
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b);
};

/// Element of Q(zeta_e) as coefficients of 1, zeta, ..., zeta^{phi(e)-1}.
class CyclotomicNumber {
 public:
  explicit CyclotomicNumber(std::int64_t order = 1);
  CyclotomicNumber(std::int64_t order, std::vector<Rational> coeffs);

  static CyclotomicNumber from_rational(std::int64_t order, const Rational& r);
  static CyclotomicNumber root(std::int64_t order, std::int64_t k);
  static CyclotomicNumber root(const RootOfUnity& z) { return root(z.n, z.k); }
  static CyclotomicNumber from_poly(std::int64_t order, const LaurentIntPoly& a);

  std::int64_t order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient; meaningful when is_rational().
  Rational rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }

  /// Same element viewed in Q(zeta_target); order() must divide target.
  CyclotomicNumber lift(std::int64_t target) const;
  /// Galois action zeta -> zeta^k, gcd(k, order) = 1.
  CyclotomicNumber galois(std::int64_t k) const;
  CyclotomicNumber conj() const { return galois(-1); }

  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const Rational& r);
  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& r) { return a *= r; }
  CyclotomicNumber operator-() const;
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  std::complex<double> to_complex() const;

 private:
  void unify(CyclotomicNumber& other);

  std::int64_t order_;
  std::vector<Rational> coeffs_;
};

enum class FourRootsCase { SumZero, Match13, Match14, NotEqual };

const char* to_string(FourRootsCase c);

/// Decides xi1 + xi2 = xi3 + xi4 exactly and names the case that makes it hold.
FourRootsCase four_roots_cancellation(const RootOfUnity& e1, const RootOfUnity& e2,
                                      const RootOfUnity& e3, const RootOfUnity& e4);

}  // namespace surgery
