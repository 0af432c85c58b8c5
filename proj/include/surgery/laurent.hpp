#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "surgery/arith.hpp"

namespace surgery {

/// Integer Laurent polynomial, stored sparsely as exponent -> coefficient.
/// No stored coefficient is ever zero.
class LaurentIntPoly {
 public:
  using Terms = std::map<std::int64_t, Integer>;

  LaurentIntPoly() = default;
  explicit LaurentIntPoly(const Integer& constant);

  static LaurentIntPoly monomial(const Integer& coeff, std::int64_t exponent);
  /// Dense coefficients c[0], c[1], ... attached to x^low, x^(low+1), ...
  static LaurentIntPoly from_dense(const std::vector<Integer>& coeffs, std::int64_t low = 0);
  static LaurentIntPoly from_dense(std::initializer_list<long> coeffs, std::int64_t low = 0);
  /// x^k - 1
  static LaurentIntPoly root_factor(std::int64_t k);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(std::int64_t exponent) const;
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;

  LaurentIntPoly& operator+=(const LaurentIntPoly& rhs);
  LaurentIntPoly& operator-=(const LaurentIntPoly& rhs);
  LaurentIntPoly& operator*=(const LaurentIntPoly& rhs);
  friend LaurentIntPoly operator+(LaurentIntPoly a, const LaurentIntPoly& b) { return a += b; }
  friend LaurentIntPoly operator-(LaurentIntPoly a, const LaurentIntPoly& b) { return a -= b; }
  friend LaurentIntPoly operator*(const LaurentIntPoly& a, const LaurentIntPoly& b);
  LaurentIntPoly operator-() const;
  friend bool operator==(const LaurentIntPoly&, const LaurentIntPoly&) = default;

  LaurentIntPoly pow(unsigned n) const;

  /// A(x^k); k = -1 gives the conjugate A(x^{-1}).
  LaurentIntPoly substitute_power(std::int64_t k) const;
  LaurentIntPoly conjugate() const { return substitute_power(-1); }

  /// Image in Z[x]/(x^d - 1) as a dense vector of length d.
  std::vector<Integer> reduce_cyclic(std::int64_t d) const;

  std::complex<double> evaluate(std::complex<double> x) const;
  /// A(1) and A''(1), the values used by surgery formulas.
  Integer value_at_one() const;
  Integer second_derivative_at_one() const;

  std::string to_string() const;

 private:
  void add_term(std::int64_t exponent, const Integer& c);

  Terms terms_;
};

}  // namespace surgery
