#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "surgery/cyclotomic.hpp"

namespace surgery {

/// (Z/n)* as a product of cyclic groups, one or two per prime power of n.
struct UnitGroupStructure {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> generators;
  std::vector<std::int64_t> orders;
  /// Exponent vector of every unit; empty for non-units.
  std::vector<std::vector<std::int64_t>> dlog;
  /// lcm of the orders (the group exponent).
  std::int64_t exponent = 1;

  /// Exponent vector of x; nullopt when gcd(x, n) > 1.
  std::optional<std::vector<std::int64_t>> log(std::int64_t x) const;
};

/// Built once per modulus and shared.
std::shared_ptr<const UnitGroupStructure> unit_group(std::int64_t n);

class DirichletCharacter {
 public:
  /// chi(g_i) = exp(2 pi i * exponents[i] / orders[i]).
  DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group, std::vector<std::int64_t> exponents);

  static DirichletCharacter principal(std::int64_t n);

  std::int64_t modulus() const { return group_->modulus; }
  const std::vector<std::int64_t>& exponents() const { return exponents_; }
  const UnitGroupStructure& group() const { return *group_; }
  /// Order of chi in the character group; values lie in Q(zeta_e).
  std::int64_t value_order() const { return value_order_; }

  /// chi(x) as a root of unity, nullopt when gcd(x, n) > 1.
  std::optional<RootOfUnity> value_root(std::int64_t x) const;

  bool is_principal() const;
  DirichletCharacter conj() const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b);

 private:
  std::shared_ptr<const UnitGroupStructure> group_;
  std::vector<std::int64_t> exponents_;
  std::int64_t value_order_ = 1;
};

/// All phi(n) characters mod n; the principal one comes first.
std::vector<DirichletCharacter> enumerate_characters(std::int64_t n);

/// Exact chi(x) in Q(zeta_e), e = value_order(); zero off the units.
CyclotomicNumber character_value(const DirichletCharacter& chi, std::int64_t x);

bool is_even(const DirichletCharacter& chi);

/// Smallest f | n such that chi is trivial on units congruent to 1 mod f.
std::int64_t conductor(const DirichletCharacter& chi);

bool is_primitive(const DirichletCharacter& chi);

/// The character mod `target` (a multiple of chi's modulus) induced by chi.
DirichletCharacter induce(const DirichletCharacter& chi, std::int64_t target);

/// The primitive character mod conductor(chi) that induces chi.
DirichletCharacter primitive_of(const DirichletCharacter& chi);

/// Largest conductor among characters mod n: n/2 when n = 2 mod 4, else n.
std::int64_t max_conductor(std::int64_t n);

}  // namespace surgery
