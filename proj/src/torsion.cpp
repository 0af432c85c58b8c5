#include "surgery/torsion.hpp"

#include <algorithm>
#include <cmath>

#include "surgery/floer.hpp"
#include "surgery/kernels.hpp"

namespace surgery {
namespace {

constexpr double kLogTolerance = 1e-6;

bool close_in_log(double a, double b) {
  constexpr double kZero = 1e-12;
  if (a < kZero || b < kZero) return a < kZero && b < kZero;
  return std::abs(std::log(a) - std::log(b)) < kLogTolerance;
}

struct SlopeTable {
  TorsionProfile profile;
  std::vector<double> values;
};

SlopeTable slope_table(std::int64_t p, std::int64_t q, const LaurentIntPoly& alexander) {
  TorsionProfile t = torsion_profile(p, q, alexander);
  std::vector<double> v = torsion_float_table(t);
  return {std::move(t), std::move(v)};
}

bool witness(const SlopeTable& lhs, const SlopeTable& rhs, std::int64_t p, std::int64_t d) {
  for (std::int64_t j = 1; j < p; ++j)
    if (!close_in_log(lhs.values[j], rhs.values[d * j % p])) return false;
  return abs_equal_on_all_roots(lhs.profile.profile, substituted(rhs.profile, d), p);
}

std::vector<std::int64_t> witnesses(const SlopeTable& lhs, const SlopeTable& rhs, std::int64_t p) {
  std::vector<std::int64_t> out;
  for (std::int64_t d : units_mod(p))
    if (witness(lhs, rhs, p, d)) out.push_back(d);
  return out;
}

std::vector<SlopeTable> unit_tables(std::int64_t p, const LaurentIntPoly& alexander, std::vector<std::int64_t>& units) {
  units = units_mod(p);
  std::vector<SlopeTable> tables;
  for (std::int64_t q : units) tables.push_back(slope_table(p, q, alexander));
  return tables;
}

bool in_pair_set(std::int64_t p, std::int64_t q, std::int64_t qp, std::int64_t x, std::int64_t y) {
  auto pm = [p](std::int64_t v, std::int64_t w) { return mod(v - w, p) == 0 || mod(v + w, p) == 0; };
  return (pm(q, x) && pm(qp, y)) || (pm(q, y) && pm(qp, x));
}

std::optional<std::int64_t> mathieu_index(std::int64_t p) {
  p = std::abs(p);
  if (p % 18 != 9) return std::nullopt;
  return (p - 9) / 18;
}

std::vector<Rational> negated(std::vector<Rational> v) {
  for (auto& x : v) x = -x;
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TorsionProfile torsion_profile(std::int64_t p, std::int64_t q, const LaurentIntPoly& alexander) {
  if (p < 2) throw std::invalid_argument("torsion profile needs p >= 2");
  if (gcd(p, q) != 1) throw NotCoprime(p, q);
  std::int64_t a = inverse_mod(mod(q, p), p);
  LaurentIntPoly den = LaurentIntPoly::root_factor(1) * LaurentIntPoly::root_factor(a);
  return {p, q, a, alexander, AbsRationalProfile(alexander, den, p)};
}

AbsRationalProfile substituted(const TorsionProfile& t, std::int64_t d) {
  return AbsRationalProfile(t.profile.numerator().substitute_power(d), t.profile.denominator().substitute_power(d),
                            t.p);
}

std::vector<double> torsion_float_table(const TorsionProfile& t) {
  std::vector<double> out(static_cast<std::size_t>(t.p), 0.0);
  for (std::int64_t j = 1; j < t.p; ++j) out[j] = abs_evaluate_float(t.profile, j);
  return out;
}

std::vector<std::int64_t> torsion_equivalent(std::int64_t p, std::int64_t q, std::int64_t q_prime,
                                             const LaurentIntPoly& alexander) {
  SlopeTable lhs = slope_table(p, q, alexander), rhs = slope_table(p, q_prime, alexander);
  std::vector<std::int64_t> units = units_mod(p);
  std::vector<char> ok(units.size(), 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t k = 0; k < units.size(); ++k) ok[k] = witness(lhs, rhs, p, units[k]) ? 1 : 0;
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < units.size(); ++k)
    if (ok[k]) out.push_back(units[k]);
  return out;
}

namespace serial {

std::vector<TorsionPair> torsion_pair_scan(std::int64_t p, const LaurentIntPoly& alexander) {
  std::vector<std::int64_t> units;
  std::vector<SlopeTable> tables = unit_tables(p, alexander, units);
  std::vector<TorsionPair> out;
  for (std::size_t x = 0; x < units.size(); ++x)
    for (std::size_t y = x + 1; y < units.size(); ++y)
      if (!witnesses(tables[x], tables[y], p).empty()) out.push_back({units[x], units[y]});
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<TorsionPair> torsion_pair_scan(std::int64_t p, const LaurentIntPoly& alexander) {
  std::vector<std::int64_t> units;
  std::vector<SlopeTable> tables = unit_tables(p, alexander, units);
  std::int64_t n = static_cast<std::int64_t>(units.size());
  std::vector<TorsionPair> out;
#pragma omp parallel
  {
    std::vector<TorsionPair> local;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t idx = 0; idx < n * n; ++idx) {
      std::int64_t x = idx / n, y = idx % n;
      if (y <= x) continue;
      if (!witnesses(tables[x], tables[y], p).empty()) local.push_back({units[x], units[y]});
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace parallel

std::set<std::pair<std::int64_t, std::int64_t>> classify_candidate_pairs(std::int64_t p,
                                                                         const LaurentIntPoly& alexander) {
  if (p < 2) throw std::invalid_argument("classify_candidate_pairs needs p >= 2");
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (const TorsionPair& t : parallel::torsion_pair_scan(p, alexander)) out.insert({t.q, t.q_prime});
  return out;
}

std::set<std::pair<std::int64_t, std::int64_t>> expected_candidate_pairs(std::int64_t p) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  std::vector<std::int64_t> units = units_mod(p);
  auto k = mathieu_index(p);
  for (std::size_t x = 0; x < units.size(); ++x)
    for (std::size_t y = x + 1; y < units.size(); ++y) {
      std::int64_t q = units[x], qp = units[y];
      bool hit = mod(q + qp, p) == 0;
      hit = hit || (p == 12 && in_pair_set(p, q, qp, 1, 5));
      hit = hit || (k && in_pair_set(p, q, qp, 3 * *k + 1, 3 * *k + 2));
      if (hit) out.insert({q, qp});
    }
  return out;
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::SameSlope: return "SameSlope";
    case VerdictKind::LSpaceObstructed: return "LSpaceObstructed";
    case VerdictKind::TorsionObstructed: return "TorsionObstructed";
    case VerdictKind::DObstructed: return "DObstructed";
    case VerdictKind::CWObstructed: return "CWObstructed";
    case VerdictKind::SurvivesAsReflective: return "SurvivesAsReflective";
    case VerdictKind::TrulyCosmeticCandidate: return "TrulyCosmeticCandidate";
  }
  return "?";
}

std::string CosmeticVerdict::label() const {
  std::string s = to_string(kind);
  if (kind == VerdictKind::SurvivesAsReflective) s += "(" + (k ? std::to_string(*k) : std::string("?")) + ")";
  return s;
}

bool VerdictContext::lspace(std::int64_t p, std::int64_t q) {
  auto key = std::make_pair(p, q);
  auto it = lspace_.find(key);
  if (it == lspace_.end()) it = lspace_.emplace(key, is_lspace(model_, p, q)).first;
  return it->second;
}

const std::vector<Rational>& VerdictContext::spin_d(std::int64_t p, std::int64_t q) {
  auto key = std::make_pair(p, q);
  auto it = spin_d_.find(key);
  if (it == spin_d_.end()) {
    std::vector<Rational> d;
    for (std::int64_t i : spin_classes(p, q)) d.push_back(d_invariant(model_, p, q, i));
    std::sort(d.begin(), d.end());
    it = spin_d_.emplace(key, std::move(d)).first;
  }
  return it->second;
}

const std::vector<Rational>& VerdictContext::all_d(std::int64_t p, std::int64_t q) {
  auto key = std::make_pair(p, q);
  auto it = all_d_.find(key);
  if (it == all_d_.end()) {
    std::vector<Rational> d = d_invariant_all(model_, p, q);
    std::sort(d.begin(), d.end());
    it = all_d_.emplace(key, std::move(d)).first;
  }
  return it->second;
}

CosmeticVerdict VerdictContext::verdict(std::int64_t p, std::int64_t q, std::int64_t q_prime) {
  SurgerySlope a(p, q), b(p, q_prime);
  if (q < 1 || q_prime < 1) throw std::invalid_argument("verdict expects q, q' >= 1");
  CosmeticVerdict v{VerdictKind::SameSlope, p, q, q_prime, std::nullopt, {}, {}, {}, std::nullopt, std::nullopt};
  if (q == q_prime) return v;

  if (!lspace(p, q) || !lspace(p, q_prime)) {
    v.kind = VerdictKind::LSpaceObstructed;
    return v;
  }

  std::int64_t P = std::abs(p);
  if (P >= 2) {
    v.torsion_witnesses = torsion_equivalent(P, q, q_prime, model_.alexander());
    if (v.torsion_witnesses.empty()) {
      v.kind = VerdictKind::TorsionObstructed;
      return v;
    }
  }

  v.spin_d = spin_d(p, q);
  v.spin_d_prime = spin_d(p, q_prime);
  bool truly = v.spin_d == v.spin_d_prime;
  bool reflective = v.spin_d == negated(v.spin_d_prime);
  if (!truly && !reflective) {
    v.kind = VerdictKind::DObstructed;
    return v;
  }

  v.lambda = casson_walker(p, q, model_);
  v.lambda_prime = casson_walker(p, q_prime, model_);
  truly = truly && *v.lambda == *v.lambda_prime;
  reflective = reflective && *v.lambda == -*v.lambda_prime;
  if (!truly && !reflective) {
    v.kind = VerdictKind::CWObstructed;
    return v;
  }

  // spin d can tie when q' = -q mod p; the whole Spin^c multiset still has to match
  const std::vector<Rational>& all = all_d(p, q);
  const std::vector<Rational>& all_prime = all_d(p, q_prime);
  truly = truly && all == all_prime;
  reflective = reflective && all == negated(all_prime);
  if (truly) {
    v.kind = VerdictKind::TrulyCosmeticCandidate;
  } else if (reflective) {
    v.kind = VerdictKind::SurvivesAsReflective;
    v.k = mathieu_index(p);
  } else {
    v.kind = VerdictKind::DObstructed;
  }
  return v;
}

CosmeticVerdict cosmetic_verdict(std::int64_t p, std::int64_t q, std::int64_t q_prime, const KnotModel& knot) {
  VerdictContext ctx(knot);
  return ctx.verdict(p, q, q_prime);
}

EnumerationReport enumerate_cosmetic(std::int64_t pmax) {
  EnumerationReport rep;
  rep.pmax = pmax;
  for (const KnotModel& model : {KnotModel::right_trefoil(), KnotModel::left_trefoil()}) {
    VerdictContext ctx(model);
    for (std::int64_t p = -pmax; p <= pmax; ++p) {
      if (p == 0) continue;
      std::int64_t P = std::abs(p);
      for (std::int64_t q = 1; q <= P; ++q) {
        if (gcd(P, q) != 1) continue;
        for (std::int64_t qp = q + 1; qp <= P; ++qp) {
          if (gcd(P, qp) != 1) continue;
          CosmeticVerdict v = ctx.verdict(p, q, qp);
          ++rep.pairs;
          ++rep.counts[to_string(v.kind)];
          if (v.kind == VerdictKind::SurvivesAsReflective || v.kind == VerdictKind::TrulyCosmeticCandidate) {
            rep.survivors.push_back(v);
            rep.survivor_knots.push_back(model.name());
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace surgery
