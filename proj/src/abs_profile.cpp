#include "surgery/abs_profile.hpp"

#include <cmath>
#include <stdexcept>

#include "surgery/cyclotomic.hpp"

namespace surgery {

AbsRationalProfile::AbsRationalProfile(LaurentIntPoly numerator, LaurentIntPoly denominator,
                                       std::int64_t modulus)
    : num_(std::move(numerator)), den_(std::move(denominator)), m_(modulus) {
  if (m_ < 2) throw std::invalid_argument("profile modulus must be at least 2");
  if (den_.is_zero()) throw DivisionByZero("profile denominator is the zero polynomial");
  for (std::int64_t d : divisors(m_))
    if (d > 1 && vanishes_at_primitive_roots(den_, d)) throw DenominatorVanishes(d);
}

AbsRationalProfile AbsRationalProfile::conjugate() const {
  return AbsRationalProfile(num_.conjugate(), den_.conjugate(), m_);
}

bool abs_equal_on_primitive_roots(const AbsRationalProfile& lhs, const AbsRationalProfile& rhs,
                                  std::int64_t d) {
  // |Nl/Dl|^2 = |Nr/Dr|^2  <=>  Nl Nl~ Dr Dr~ - Nr Nr~ Dl Dl~ = 0 at the root.
  // Working in Z[x]/(x^d - 1) makes conjugation a permutation and clears negative exponents.
  auto norm = [d](const LaurentIntPoly& a) {
    return cyclic_mul(a.reduce_cyclic(d), a.conjugate().reduce_cyclic(d));
  };
  for (const auto* den : {&lhs.denominator(), &rhs.denominator()})
    if (vanishes_at_primitive_roots(*den, d)) throw DenominatorVanishes(d);
  std::vector<Integer> left = cyclic_mul(norm(lhs.numerator()), norm(rhs.denominator()));
  std::vector<Integer> right = cyclic_mul(norm(rhs.numerator()), norm(lhs.denominator()));
  for (std::size_t i = 0; i < left.size(); ++i) left[i] -= right[i];
  for (const Integer& c : reduce_mod_cyclotomic(std::move(left), d))
    if (c != 0) return false;
  return true;
}

bool abs_equal_on_all_roots(const AbsRationalProfile& lhs, const AbsRationalProfile& rhs, std::int64_t m) {
  if (lhs.modulus() != m || rhs.modulus() != m)
    throw std::invalid_argument("profiles must share the modulus m");
  for (std::int64_t d : divisors(m))
    if (d > 1 && !abs_equal_on_primitive_roots(lhs, rhs, d)) return false;
  return true;
}

double abs_evaluate_float(const AbsRationalProfile& profile, std::int64_t root_exponent) {
  std::int64_t m = profile.modulus();
  std::int64_t j = mod(root_exponent, m);
  std::int64_t order = m / gcd(j, m);
  if (vanishes_at_primitive_roots(profile.denominator(), order))
    throw DivisionByZero("profile denominator vanishes at zeta_" + std::to_string(m) + "^" +
                         std::to_string(root_exponent));
  std::complex<double> x = RootOfUnity{j, m}.to_complex();
  double num = std::abs(profile.numerator().evaluate(x));
  // Roots of the numerator come out as rounding noise; snap them to zero.
  if (vanishes_at_primitive_roots(profile.numerator(), order)) num = 0.0;
  return num / std::abs(profile.denominator().evaluate(x));
}

}  // namespace surgery
