#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "surgery/abs_profile.hpp"
#include "surgery/characters.hpp"

namespace surgery {

struct IndexVanishes : SurgeryError {
  IndexVanishes(std::int64_t index, std::int64_t m)
      : SurgeryError("relation index " + std::to_string(index) + " vanishes mod " + std::to_string(m)) {}
};

struct BadDivisorChain : SurgeryError {
  using SurgeryError::SurgeryError;
};

/// R = sum_x C_x A_x with A_x = ln|zeta_m^x - 1|, x in 1..m-1.
class EnnolaRelation {
 public:
  using Coefficients = std::map<std::int64_t, std::int64_t>;

  /// Indices are reduced mod m and merged; an index = 0 mod m throws IndexVanishes.
  EnnolaRelation(std::int64_t m, const Coefficients& coeffs);

  std::int64_t modulus() const { return m_; }
  const Coefficients& coefficients() const { return c_; }
  std::int64_t coeff(std::int64_t x) const;
  bool is_empty() const { return c_.empty(); }

  /// Merges A_x with A_{m-x} onto the smaller index.
  EnnolaRelation folded() const;

  /// sum_x C_x ln|zeta_m^x - 1| in double precision.
  double numeric_shadow() const;

  friend bool operator==(const EnnolaRelation&, const EnnolaRelation&) = default;

 private:
  std::int64_t m_;
  Coefficients c_;
};

/// R = A_6 - A_2 - A_3 - A_r - (A_6k - A_2k - A_3k - A_r'k), the log of the absolute-value identity
/// between the two surgery sides.
EnnolaRelation relation_from_surgery_pair(std::int64_t m, std::int64_t r, std::int64_t r_prime, std::int64_t k);

/// T(chi, d, R) = sum over x < d coprime to d of chi_f(x) C_{(m/d) x}, chi_f the primitive character of chi.
CyclotomicNumber T_sum(const DirichletCharacter& chi, std::int64_t d, const EnnolaRelation& R);

/// Y(chi, R) = sum_{f | d | m} (1/phi(d)) prod_{l | d prime} (1 - conj chi_f(l)) T(chi, d, R).
CyclotomicNumber Y_value(const DirichletCharacter& chi, const EnnolaRelation& R);

/// Y_p(R) = sum_{x=1}^{p^g - 1} gcd(x, p^g) C_{(m/p^g) x}, p^g the exact power of p in m.
Rational Y_p_value(std::int64_t p, const EnnolaRelation& R);

/// Ennola's criterion: R = 0 iff Y vanishes on even nonprincipal characters and every Y_p vanishes.
bool ennola_is_zero(const EnnolaRelation& R);

/// |x^k - 1 + x^-k| / (|x^k - 1| |x^{rk} - 1|) as a profile mod m.
AbsRationalProfile surgery_side_profile(std::int64_t m, std::int64_t r, std::int64_t k);

struct RatioTriple {
  std::int64_t r, r_prime, k;
  friend auto operator<=>(const RatioTriple&, const RatioTriple&) = default;
};

/// Every (r, r', k) of units mod m with |side(r, 1)| = |side(r', k)| at all m-th roots xi != 1.
/// Sorted; closed under sign changes of r, r' and k.
std::vector<RatioTriple> theorem31_bruteforce(std::int64_t m);

/// Pairs (r, r') in 1..m-1 allowed by the three-case classification.
std::vector<std::pair<std::int64_t, std::int64_t>> ratio_expected_pairs(std::int64_t m);

/// Distinct (r, r') pairs occurring among the triples.
std::vector<std::pair<std::int64_t, std::int64_t>> ratio_pairs(const std::vector<RatioTriple>& triples);

struct FranzReport {
  std::int64_t m = 0;
  std::int64_t box = 0;
  /// Sum-zero symmetric vectors visited, and those passing the float prefilter.
  std::int64_t candidates = 0;
  std::int64_t prefilter_survivors = 0;
  /// Nonzero vectors satisfying the product identity exactly; indexed by the units j <= m/2.
  std::vector<std::vector<std::int64_t>> counterexamples;
  bool holds() const { return counterexamples.empty(); }
};

FranzReport franz_search(std::int64_t m, std::int64_t box);

/// True iff every symmetric sum-zero vector with entries in [-box, box] whose product
/// prod (xi^j - 1)^{a_j} is 1 at all m-th roots xi != 1 is zero.
bool franz_verify(std::int64_t m, std::int64_t box);

}  // namespace surgery
