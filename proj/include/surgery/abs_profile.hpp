#pragma once

#include <cstdint>

#include "surgery/laurent.hpp"

namespace surgery {

/// numerator / denominator, to be evaluated in absolute value at m-th roots of unity.
/// Construction rejects denominators that vanish on a whole primitive d-th orbit, d | m, d > 1.
class AbsRationalProfile {
 public:
  AbsRationalProfile(LaurentIntPoly numerator, LaurentIntPoly denominator, std::int64_t modulus);

  const LaurentIntPoly& numerator() const { return num_; }
  const LaurentIntPoly& denominator() const { return den_; }
  std::int64_t modulus() const { return m_; }

  /// A(x^{-1}) / B(x^{-1}) on the same modulus.
  AbsRationalProfile conjugate() const;

 private:
  LaurentIntPoly num_;
  LaurentIntPoly den_;
  std::int64_t m_;
};

/// |lhs(xi)| = |rhs(xi)| for every m-th root of unity xi != 1, decided exactly.
bool abs_equal_on_all_roots(const AbsRationalProfile& lhs, const AbsRationalProfile& rhs, std::int64_t m);

/// Same test restricted to the primitive d-th roots.
bool abs_equal_on_primitive_roots(const AbsRationalProfile& lhs, const AbsRationalProfile& rhs, std::int64_t d);

/// |profile(zeta_m^j)| in double precision. Prefilter only.
double abs_evaluate_float(const AbsRationalProfile& profile, std::int64_t root_exponent);

}  // namespace surgery
