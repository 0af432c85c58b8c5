#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "surgery/arith.hpp"
#include "surgery/laurent.hpp"

namespace surgery {

struct ZeroSlope : SurgeryError {
  ZeroSlope() : SurgeryError("surgery slope 0 is not a rational homology sphere") {}
};

struct EvenOrder : SurgeryError {
  explicit EvenOrder(std::int64_t p)
      : SurgeryError("|H_1| = " + std::to_string(p) + " is even; the spin structure is not unique") {}
};

/// p/q with gcd(|p|, q) = 1 and q >= 1; the sign lives on p.
struct SurgerySlope {
  std::int64_t p, q;
  SurgerySlope(std::int64_t p, std::int64_t q);
  Rational value() const { return Rational(p, q); }
  std::string to_string() const { return std::to_string(p) + "/" + std::to_string(q); }
  friend bool operator==(const SurgerySlope&, const SurgerySlope&) = default;
};

enum class KnotKind { Unknot, FakeRightTrefoil, FakeLeftTrefoil };

/// Tower-map data of a knot model: U-exponents of v_s and h_s, plus the Alexander polynomial.
struct KnotModel {
  KnotKind kind;

  static KnotModel unknot() { return {KnotKind::Unknot}; }
  static KnotModel right_trefoil() { return {KnotKind::FakeRightTrefoil}; }
  static KnotModel left_trefoil() { return {KnotKind::FakeLeftTrefoil}; }
  /// Accepts the CLI names unknot, rtrefoil, ltrefoil.
  static KnotModel parse(const std::string& name);
  std::string name() const;

  LaurentIntPoly alexander() const;
  std::int64_t v_exponent(std::int64_t s) const;
  std::int64_t h_exponent(std::int64_t s) const;
  /// The left model has H_*(A_0) = T+ plus one extra class at the bottom grading of the tower.
  /// v sends it onto the bottom of B, h kills it.
  bool has_extra_generator() const { return kind == KnotKind::FakeLeftTrefoil; }
  /// |s| beyond which v_s (s > 0) or h_s (s < 0) is the identity.
  std::int64_t genus() const { return kind == KnotKind::Unknot ? 0 : 1; }
  friend bool operator==(const KnotModel&, const KnotModel&) = default;
};

/// Linear chain with weights a_i <= -2.
class PlumbingGraph {
 public:
  explicit PlumbingGraph(std::vector<std::int64_t> weights);

  const std::vector<std::int64_t>& weights() const { return a_; }
  std::size_t size() const { return a_.size(); }
  /// [a_0, ..., a_n] = a_0 - 1/(a_1 - 1/(...)), equal to -p/q.
  Rational value() const;
  /// |H_1| of the boundary and the companion q of -p/q.
  std::int64_t p() const;
  std::int64_t q() const;

 private:
  std::vector<std::int64_t> a_;
};

/// The expansion of -p/q with every entry <= -2 (q is reduced mod p first; p = 1 gives the empty chain).
PlumbingGraph neg_continued_fraction(std::int64_t p, std::int64_t q);

/// The correction-term recursion
///   d(p, q, i) = 1/4 - (2i + 1 - p - q)^2 / (4pq) - d(q, p mod q, i mod q),  d(1, 0, 0) = 0,
/// for p >= 1, q coprime, i taken mod p. This is d of S^3_{-p/q}(U) in class i.
Rational d_recursive(std::int64_t p, std::int64_t q, std::int64_t i);

/// All p values of d_recursive, indexed by class.
std::vector<Rational> d_recursive_all(std::int64_t p, std::int64_t q);

/// max (K^2 + |G|)/4 over characteristic covectors in each Spin^c class, classes labelled like
/// d_recursive. Exact dynamic program over the chain; result indexed by class.
std::vector<Rational> d_plumbing_all(const PlumbingGraph& graph);
Rational d_plumbing(const PlumbingGraph& graph, std::int64_t cls);

/// Direct enumeration of the box a_i + 2 <= K_i <= -a_i with the inverse Gram matrix. Slow; for tests.
std::vector<Rational> d_plumbing_enumerate(const PlumbingGraph& graph);

/// Class label of a characteristic covector K (values K([S_i])) on the chain.
std::int64_t plumbing_class(const PlumbingGraph& graph, const std::vector<std::int64_t>& K);

/// Label of the spin structure in the surgery/recursion labelling: (q - 1)/2 mod p.
std::int64_t spin_index(std::int64_t p, std::int64_t q);

/// Every self-conjugate class i (2i = q - 1 mod p): one for odd p, two or none for even p.
std::vector<std::int64_t> spin_classes(std::int64_t p, std::int64_t q);

/// l = (p - 1)(1 - x)/2 mod p with q x = -1 mod p.
std::int64_t alt_spin_label(std::int64_t p, std::int64_t q);

/// d(S^3_{p/q}(U), i) for either sign of p.
Rational d_lens_surgery(std::int64_t p, std::int64_t q, std::int64_t i);

/// s(q, p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p)).
Rational dedekind_sum(std::int64_t q, std::int64_t p);

/// lambda(S^3_{p/q}(K)) = -sign(p) s(q, |p|)/2 + (q / 2p) Delta_K''(1).
Rational casson_walker(std::int64_t p, std::int64_t q, const KnotModel& knot);

}  // namespace surgery
