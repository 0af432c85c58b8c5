#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "surgery/abs_profile.hpp"
#include "surgery/lens.hpp"

namespace surgery {

/// tau(S^3_{p/q}(K), xi) = Delta(xi) / ((xi - 1)(xi^a - 1)) with q a = 1 mod p.
struct TorsionProfile {
  std::int64_t p, q, a;
  LaurentIntPoly alexander;
  AbsRationalProfile profile;
};

TorsionProfile torsion_profile(std::int64_t p, std::int64_t q, const LaurentIntPoly& alexander);

/// The profile with xi replaced by xi^d.
AbsRationalProfile substituted(const TorsionProfile& t, std::int64_t d);

/// |tau_{p/q}(xi)| in double precision at xi = zeta_p^j, j = 0 .. p-1 (entry 0 unused).
std::vector<double> torsion_float_table(const TorsionProfile& t);

/// Units d mod p with |tau_{p/q}(xi)| = |tau_{p/q'}(xi^d)| at every p-th root xi != 1.
/// Float prefilter, then an exact check for each survivor.
std::vector<std::int64_t> torsion_equivalent(std::int64_t p, std::int64_t q, std::int64_t q_prime,
                                             const LaurentIntPoly& alexander);

/// Unordered pairs 1 <= q < q' < p of units mod p that are torsion-equivalent.
std::set<std::pair<std::int64_t, std::int64_t>> classify_candidate_pairs(std::int64_t p,
                                                                         const LaurentIntPoly& alexander);

/// The trefoil classification written out: q' = -q, the p = 12 pairs from {+-1, +-5}, and the
/// p = 18k + 9 pairs from {+-(3k+1), +-(3k+2)}.
std::set<std::pair<std::int64_t, std::int64_t>> expected_candidate_pairs(std::int64_t p);

enum class VerdictKind {
  SameSlope,
  LSpaceObstructed,
  TorsionObstructed,
  DObstructed,
  CWObstructed,
  SurvivesAsReflective,
  TrulyCosmeticCandidate,
};

std::string to_string(VerdictKind kind);

struct CosmeticVerdict {
  VerdictKind kind;
  std::int64_t p, q, q_prime;
  std::optional<std::int64_t> k;  // Mathieu index for reflective survivors with |p| = 18k + 9
  std::vector<std::int64_t> torsion_witnesses;
  std::vector<Rational> spin_d, spin_d_prime;
  std::optional<Rational> lambda, lambda_prime;

  /// "SurvivesAsReflective(0)", "CWObstructed", ...
  std::string label() const;
};

/// Memo of the per-slope quantities the verdict chain needs, so scans do not rebuild cones.
class VerdictContext {
 public:
  explicit VerdictContext(KnotModel model) : model_(model) {}
  const KnotModel& model() const { return model_; }

  bool lspace(std::int64_t p, std::int64_t q);
  const std::vector<Rational>& spin_d(std::int64_t p, std::int64_t q);
  const std::vector<Rational>& all_d(std::int64_t p, std::int64_t q);  // sorted, every Spin^c class

  CosmeticVerdict verdict(std::int64_t p, std::int64_t q, std::int64_t q_prime);

 private:
  KnotModel model_;
  std::map<std::pair<std::int64_t, std::int64_t>, bool> lspace_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<Rational>> spin_d_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<Rational>> all_d_;
};

/// SameSlope, then L-space (same-sign cosmetic surgeries are L-spaces), torsion, spin d-invariants
/// (equal for a truly cosmetic match, negated for a reflective one), Casson-Walker (same rule),
/// then the d multiset over all Spin^c classes (same rule, reported as DObstructed).
CosmeticVerdict cosmetic_verdict(std::int64_t p, std::int64_t q, std::int64_t q_prime, const KnotModel& knot);

struct EnumerationReport {
  std::int64_t pmax;
  std::vector<CosmeticVerdict> survivors;  // reflective or truly cosmetic, sorted by (knot, p, q, q')
  std::vector<std::string> survivor_knots;
  std::map<std::string, std::int64_t> counts;  // verdict label kind -> number of pairs
  std::int64_t pairs = 0;
};

/// Every pair 1 <= q < q' <= |p| coprime to p, 1 <= |p| <= pmax, for the two trefoil models.
/// Larger q never gives an L-space for these models, so the scan is complete for them.
EnumerationReport enumerate_cosmetic(std::int64_t pmax);

}  // namespace surgery
