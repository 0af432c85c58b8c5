#include "surgery/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "surgery/cyclotomic.hpp"

namespace surgery {
namespace {

constexpr double kLogTolerance = 1e-6;

// |xi^j - 1| and |xi^j - 1 + xi^-j| at xi = zeta_m.
struct RatioTables {
  std::int64_t m;
  std::vector<double> L, N;
  explicit RatioTables(std::int64_t m_) : m(m_), L(m_), N(m_) {
    for (std::int64_t j = 0; j < m; ++j) {
      double t = std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
      L[j] = 2.0 * std::abs(std::sin(t));
      N[j] = std::abs(2.0 * std::cos(2.0 * t) - 1.0);
    }
  }
};

bool close_in_log(double a, double b) {
  constexpr double kZero = 1e-12;
  if (a < kZero || b < kZero) return a < kZero && b < kZero;
  return std::abs(std::log(a) - std::log(b)) < kLogTolerance;
}

bool ratio_prefilter(const RatioTables& t, std::int64_t r, std::int64_t rp, std::int64_t k) {
  std::int64_t m = t.m;
  for (std::int64_t j = 1; j < m; ++j) {
    std::int64_t kj = k * j % m;
    double lhs = t.N[j] / (t.L[j] * t.L[r * j % m]);
    double rhs = t.N[kj] / (t.L[kj] * t.L[rp * kj % m]);
    if (!close_in_log(lhs, rhs)) return false;
  }
  return true;
}

bool ratio_exact(std::int64_t m, std::int64_t r, std::int64_t rp, std::int64_t k) {
  return abs_equal_on_all_roots(surgery_side_profile(m, r, 1), surgery_side_profile(m, rp, k), m);
}

std::vector<std::int64_t> half_units(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t u : units_mod(m))
    if (2 * u <= m) out.push_back(u);
  return out;
}

// Adds the r -> -r images and sorts. r' and k already range over all units.
std::vector<RatioTriple> finish_ratio(std::int64_t m, std::vector<RatioTriple> found) {
  std::size_t n = found.size();
  for (std::size_t i = 0; i < n; ++i)
    if (2 * found[i].r != m) found.push_back({m - found[i].r, found[i].r_prime, found[i].k});
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

struct FranzSetup {
  std::int64_t m, box, n;
  std::vector<std::int64_t> classes;
  std::vector<double> w;       // 2 ln|zeta_m^c - 1|
  std::vector<double> tail_w;  // box * sum_{j >= i} |w_j|
};

FranzSetup franz_setup(std::int64_t m, std::int64_t box) {
  FranzSetup s{m, box, 0, half_units(m), {}, {}};
  s.n = static_cast<std::int64_t>(s.classes.size());
  for (std::int64_t c : s.classes)
    s.w.push_back(2.0 * std::log(2.0 * std::sin(std::numbers::pi * static_cast<double>(c) / static_cast<double>(m))));
  s.tail_w.assign(static_cast<std::size_t>(s.n) + 1, 0.0);
  for (std::int64_t i = s.n - 1; i >= 0; --i)
    s.tail_w[i] = s.tail_w[i + 1] + static_cast<double>(box) * std::abs(s.w[i]);
  return s;
}

struct FranzAccumulator {
  std::int64_t candidates = 0;
  std::int64_t survivors = 0;
  std::vector<std::vector<std::int64_t>> counterexamples;
};

// Depth-first over b_depth .. b_{n-2}; b_{n-1} is forced by the sum-zero condition.
void franz_dfs(const FranzSetup& s, std::vector<std::int64_t>& b, std::int64_t depth, std::int64_t isum,
               double fsum, FranzAccumulator& acc) {
  std::int64_t last = s.n - 1;
  if (depth == last) {
    std::int64_t bl = -isum;
    if (bl < -s.box || bl > s.box) return;
    ++acc.candidates;
    if (std::abs(fsum + static_cast<double>(bl) * s.w[last]) >= kLogTolerance) return;
    ++acc.survivors;
    b[last] = bl;
    bool zero = std::all_of(b.begin(), b.end(), [](std::int64_t v) { return v == 0; });
    if (!zero && franz_product_is_one(s.m, b)) acc.counterexamples.push_back(b);
    return;
  }
  std::int64_t remaining = last - depth + 1;
  for (std::int64_t v = -s.box; v <= s.box; ++v) {
    std::int64_t ns = isum + v;
    if (std::abs(ns) > s.box * (remaining - 1)) continue;
    double nf = fsum + static_cast<double>(v) * s.w[depth];
    if (std::abs(nf) > s.tail_w[depth + 1] + kLogTolerance) continue;
    b[depth] = v;
    franz_dfs(s, b, depth + 1, ns, nf, acc);
  }
  b[depth] = 0;
}

FranzReport franz_report(const FranzSetup& s, FranzAccumulator acc) {
  FranzReport rep;
  rep.m = s.m;
  rep.box = s.box;
  rep.candidates = acc.candidates;
  rep.prefilter_survivors = acc.survivors;
  std::sort(acc.counterexamples.begin(), acc.counterexamples.end());
  rep.counterexamples = std::move(acc.counterexamples);
  return rep;
}

// The first two variables as a flat task list for the parallel split.
std::vector<std::pair<std::int64_t, std::int64_t>> franz_prefixes(const FranzSetup& s) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a = -s.box; a <= s.box; ++a)
    for (std::int64_t c = -s.box; c <= s.box; ++c) out.emplace_back(a, c);
  return out;
}

void franz_from_prefix(const FranzSetup& s, std::int64_t a, std::int64_t c, FranzAccumulator& acc) {
  std::vector<std::int64_t> b(static_cast<std::size_t>(s.n), 0);
  std::int64_t last = s.n - 1;
  b[0] = a;
  double f = static_cast<double>(a) * s.w[0];
  if (std::abs(a) > s.box * last || std::abs(f) > s.tail_w[1] + kLogTolerance) return;
  if (last == 1) {
    franz_dfs(s, b, 1, a, f, acc);
    return;
  }
  b[1] = c;
  std::int64_t isum = a + c;
  if (std::abs(isum) > s.box * (last - 1)) return;
  f += static_cast<double>(c) * s.w[1];
  if (std::abs(f) > s.tail_w[2] + kLogTolerance) return;
  franz_dfs(s, b, 2, isum, f, acc);
}

FranzReport franz_trivial(std::int64_t m, std::int64_t box) {
  FranzReport rep;
  rep.m = m;
  rep.box = box;
  rep.candidates = 1;
  rep.prefilter_survivors = 1;
  return rep;
}

}  // namespace

bool franz_product_is_one(std::int64_t m, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> classes = half_units(m);
  for (std::int64_t d : divisors(m)) {
    if (d == 1) continue;
    std::vector<Integer> pos(static_cast<std::size_t>(d), Integer(0)), neg = pos;
    pos[0] = 1;
    neg[0] = 1;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (b[i] == 0) continue;
      LaurentIntPoly f = LaurentIntPoly::root_factor(classes[i]) * LaurentIntPoly::root_factor(-classes[i]);
      std::vector<Integer> fd = f.reduce_cyclic(d);
      auto& target = b[i] > 0 ? pos : neg;
      for (std::int64_t e = 0; e < std::abs(b[i]); ++e) target = cyclic_mul(target, fd);
    }
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] -= neg[i];
    for (const Integer& c : reduce_mod_cyclotomic(std::move(pos), d))
      if (c != 0) return false;
  }
  return true;
}

namespace serial {

std::vector<RatioTriple> ratio_scan(std::int64_t m) {
  RatioTables t(m);
  std::vector<std::int64_t> units = units_mod(m);
  std::vector<RatioTriple> found;
  for (std::int64_t r : half_units(m))
    for (std::int64_t rp : units)
      for (std::int64_t k : units)
        if (ratio_prefilter(t, r, rp, k) && ratio_exact(m, r, rp, k)) found.push_back({r, rp, k});
  return finish_ratio(m, std::move(found));
}

FranzReport franz_scan(std::int64_t m, std::int64_t box) {
  FranzSetup s = franz_setup(m, box);
  if (s.n == 1) return franz_trivial(m, box);
  FranzAccumulator acc;
  std::vector<std::int64_t> b(static_cast<std::size_t>(s.n), 0);
  franz_dfs(s, b, 0, 0, 0.0, acc);
  return franz_report(s, std::move(acc));
}

}  // namespace serial

namespace parallel {

std::vector<RatioTriple> ratio_scan(std::int64_t m) {
  RatioTables t(m);
  std::vector<std::int64_t> units = units_mod(m), reps = half_units(m);
  std::int64_t nu = static_cast<std::int64_t>(units.size());
  std::int64_t total = static_cast<std::int64_t>(reps.size()) * nu * nu;
  std::vector<RatioTriple> found;
#pragma omp parallel
  {
    std::vector<RatioTriple> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t idx = 0; idx < total; ++idx) {
      std::int64_t r = reps[idx / (nu * nu)], rp = units[(idx / nu) % nu], k = units[idx % nu];
      if (ratio_prefilter(t, r, rp, k) && ratio_exact(m, r, rp, k)) local.push_back({r, rp, k});
    }
#pragma omp critical
    found.insert(found.end(), local.begin(), local.end());
  }
  return finish_ratio(m, std::move(found));
}

FranzReport franz_scan(std::int64_t m, std::int64_t box) {
  FranzSetup s = franz_setup(m, box);
  if (s.n == 1) return franz_trivial(m, box);
  // With exactly two variables only the first is free; split on it alone.
  auto prefixes = franz_prefixes(s);
  if (s.n == 2) {
    prefixes.clear();
    for (std::int64_t a = -box; a <= box; ++a) prefixes.emplace_back(a, 0);
  }
  std::int64_t np = static_cast<std::int64_t>(prefixes.size());
  FranzAccumulator total;
#pragma omp parallel
  {
    FranzAccumulator acc;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t i = 0; i < np; ++i) franz_from_prefix(s, prefixes[i].first, prefixes[i].second, acc);
#pragma omp critical
    {
      total.candidates += acc.candidates;
      total.survivors += acc.survivors;
      total.counterexamples.insert(total.counterexamples.end(), acc.counterexamples.begin(),
                                   acc.counterexamples.end());
    }
  }
  return franz_report(s, std::move(total));
}

}  // namespace parallel

}  // namespace surgery
