#include "surgery/relations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "surgery/kernels.hpp"

namespace surgery {

EnnolaRelation::EnnolaRelation(std::int64_t m, const Coefficients& coeffs) : m_(m) {
  if (m < 3) throw std::invalid_argument("relation modulus must be at least 3");
  for (const auto& [x, c] : coeffs) {
    if (c == 0) continue;
    std::int64_t r = mod(x, m);
    if (r == 0) throw IndexVanishes(x, m);
    if ((c_[r] += c) == 0) c_.erase(r);
  }
}

std::int64_t EnnolaRelation::coeff(std::int64_t x) const {
  auto it = c_.find(mod(x, m_));
  return it == c_.end() ? 0 : it->second;
}

EnnolaRelation EnnolaRelation::folded() const {
  Coefficients out;
  for (const auto& [x, c] : c_) out[std::min(x, m_ - x)] += c;
  return EnnolaRelation(m_, out);
}

double EnnolaRelation::numeric_shadow() const {
  double s = 0.0;
  for (const auto& [x, c] : c_)
    s += static_cast<double>(c) *
         std::log(2.0 * std::abs(std::sin(std::numbers::pi * static_cast<double>(x) / static_cast<double>(m_))));
  return s;
}

EnnolaRelation relation_from_surgery_pair(std::int64_t m, std::int64_t r, std::int64_t r_prime, std::int64_t k) {
  for (std::int64_t u : {r, r_prime, k})
    if (gcd(u, m) != 1) throw NotCoprime(u, m);
  const std::pair<std::int64_t, std::int64_t> terms[] = {
      {6, 1}, {2, -1}, {3, -1}, {r, -1}, {6 * k, -1}, {2 * k, 1}, {3 * k, 1}, {r_prime * k, 1}};
  for (auto [x, s] : terms)
    if (mod(x, m) == 0) throw IndexVanishes(x, m);
  EnnolaRelation::Coefficients c;
  for (auto [x, s] : terms) c[mod(x, m)] += s;
  return EnnolaRelation(m, c);
}

CyclotomicNumber T_sum(const DirichletCharacter& chi, std::int64_t d, const EnnolaRelation& R) {
  std::int64_t m = R.modulus();
  if (chi.modulus() != m) throw BadDivisorChain("character modulus differs from the relation modulus");
  std::int64_t f = conductor(chi);
  if (d <= 0 || m % d != 0 || d % f != 0)
    throw BadDivisorChain("T_sum needs f | d | m, got f=" + std::to_string(f) + " d=" + std::to_string(d) +
                          " m=" + std::to_string(m));
  DirichletCharacter prim = primitive_of(chi);
  CyclotomicNumber sum(chi.value_order());
  for (std::int64_t x = 1; x < d; ++x) {
    if (gcd(x, d) != 1) continue;
    std::int64_t c = R.coeff((m / d) * x);
    if (c != 0) sum += character_value(prim, x) * Rational(c);
  }
  return sum;
}

CyclotomicNumber Y_value(const DirichletCharacter& chi, const EnnolaRelation& R) {
  if (chi.is_principal()) throw std::invalid_argument("Y is defined for nonprincipal characters");
  std::int64_t m = R.modulus(), f = conductor(chi);
  DirichletCharacter prim = primitive_of(chi);
  CyclotomicNumber y(chi.value_order());
  for (std::int64_t d : divisors(m)) {
    if (d % f != 0) continue;
    CyclotomicNumber t = T_sum(chi, d, R);
    if (t.is_zero()) continue;
    CyclotomicNumber w = CyclotomicNumber::from_rational(chi.value_order(), Rational(1, euler_phi(d)));
    for (std::int64_t l : prime_divisors(d))
      w *= CyclotomicNumber::from_rational(chi.value_order(), 1) - character_value(prim, l).conj();
    y += w * t;
  }
  return y;
}

Rational Y_p_value(std::int64_t p, const EnnolaRelation& R) {
  std::int64_t m = R.modulus();
  if (m % p != 0) throw BadDivisorChain(std::to_string(p) + " does not divide " + std::to_string(m));
  std::int64_t pg = 1;
  while (m % (pg * p) == 0) pg *= p;
  Rational sum = 0;
  for (std::int64_t x = 1; x < pg; ++x) sum += Rational(gcd(x, pg) * R.coeff((m / pg) * x));
  return sum;
}

bool ennola_is_zero(const EnnolaRelation& R) {
  for (std::int64_t p : prime_divisors(R.modulus()))
    if (Y_p_value(p, R) != 0) return false;
  for (const auto& chi : enumerate_characters(R.modulus())) {
    if (chi.is_principal() || !is_even(chi)) continue;
    if (!Y_value(chi, R).is_zero()) return false;
  }
  return true;
}

AbsRationalProfile surgery_side_profile(std::int64_t m, std::int64_t r, std::int64_t k) {
  LaurentIntPoly num = LaurentIntPoly::from_dense({1, -1, 1}, -1).substitute_power(k);
  LaurentIntPoly den = LaurentIntPoly::root_factor(k) * LaurentIntPoly::root_factor(r * k);
  return AbsRationalProfile(num, den, m);
}

std::vector<RatioTriple> theorem31_bruteforce(std::int64_t m) {
  if (m < 3) throw std::invalid_argument("ratio search needs m >= 3");
  return parallel::ratio_scan(m);
}

std::vector<std::pair<std::int64_t, std::int64_t>> ratio_expected_pairs(std::int64_t m) {
  std::set<std::int64_t> special;
  if (m == 12) special = {1, 5, 7, 11};
  if (m % 18 == 9) {
    std::int64_t e = (m - 9) / 18;
    special = {6 * e + 1, 6 * e + 5, m - (6 * e + 1), m - (6 * e + 5)};
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t r : units_mod(m))
    for (std::int64_t s : units_mod(m))
      if (s == r || s == m - r || (special.count(r) && special.count(s))) out.emplace_back(r, s);
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> ratio_pairs(const std::vector<RatioTriple>& triples) {
  std::set<std::pair<std::int64_t, std::int64_t>> s;
  for (const auto& t : triples) s.emplace(t.r, t.r_prime);
  return {s.begin(), s.end()};
}

FranzReport franz_search(std::int64_t m, std::int64_t box) {
  if (m < 3) throw std::invalid_argument("Franz search needs m >= 3");
  if (box < 0) throw std::invalid_argument("Franz search box must be nonnegative");
  return parallel::franz_scan(m, box);
}

bool franz_verify(std::int64_t m, std::int64_t box) { return franz_search(m, box).holds(); }

}  // namespace surgery
