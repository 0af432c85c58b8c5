#include "surgery/lens.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace surgery {

SurgerySlope::SurgerySlope(std::int64_t p_, std::int64_t q_) : p(p_), q(q_) {
  if (q == 0) throw std::invalid_argument("slope denominator must be nonzero");
  if (p == 0) throw ZeroSlope();
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (gcd(p, q) != 1) throw NotCoprime(p, q);
}

KnotModel KnotModel::parse(const std::string& name) {
  if (name == "unknot") return unknot();
  if (name == "rtrefoil") return right_trefoil();
  if (name == "ltrefoil") return left_trefoil();
  throw std::invalid_argument("unknown knot model '" + name + "' (expected unknot, rtrefoil or ltrefoil)");
}

std::string KnotModel::name() const {
  switch (kind) {
    case KnotKind::Unknot: return "unknot";
    case KnotKind::FakeRightTrefoil: return "rtrefoil";
    case KnotKind::FakeLeftTrefoil: return "ltrefoil";
  }
  return "?";
}

LaurentIntPoly KnotModel::alexander() const {
  if (kind == KnotKind::Unknot) return LaurentIntPoly(1);
  return LaurentIntPoly::from_dense({1, -1, 1}, -1);
}

std::int64_t KnotModel::v_exponent(std::int64_t s) const {
  if (kind == KnotKind::FakeRightTrefoil) return s > 0 ? 0 : (s == 0 ? 1 : -s);
  return std::max<std::int64_t>(0, -s);
}

std::int64_t KnotModel::h_exponent(std::int64_t s) const {
  if (kind == KnotKind::FakeRightTrefoil) return v_exponent(-s);
  return std::max<std::int64_t>(0, s);
}

PlumbingGraph::PlumbingGraph(std::vector<std::int64_t> weights) : a_(std::move(weights)) {
  for (std::int64_t a : a_)
    if (a > -2) throw std::invalid_argument("plumbing weights must be <= -2");
}

Rational PlumbingGraph::value() const {
  if (a_.empty()) throw std::invalid_argument("the empty chain has no continued-fraction value");
  Rational v = a_.back();
  for (std::size_t i = a_.size() - 1; i-- > 0;) v = Rational(a_[i]) - 1 / v;
  return v;
}

std::int64_t PlumbingGraph::p() const {
  std::int64_t prev = 0, cur = 1;
  for (std::int64_t a : a_) {
    std::int64_t next = a * cur - prev;
    prev = cur;
    cur = next;
  }
  return std::abs(cur);
}

std::int64_t PlumbingGraph::q() const {
  if (a_.empty()) return 0;
  std::int64_t prev = 0, cur = 1;
  for (std::size_t i = a_.size(); i-- > 1;) {
    std::int64_t next = a_[i] * cur - prev;
    prev = cur;
    cur = next;
  }
  return std::abs(cur);
}

PlumbingGraph neg_continued_fraction(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw std::invalid_argument("continued fraction needs positive p and q");
  if (gcd(p, q) != 1) throw NotCoprime(p, q);
  q = mod(q, p);
  std::vector<std::int64_t> out;
  while (q != 0) {
    std::int64_t c = (p + q - 1) / q;
    out.push_back(-c);
    std::int64_t nq = c * q - p;
    p = q;
    q = nq;
  }
  return PlumbingGraph(std::move(out));
}

Rational d_recursive(std::int64_t p, std::int64_t q, std::int64_t i) {
  if (p < 1) throw std::invalid_argument("d_recursive needs p >= 1");
  if (gcd(p, q) != 1) throw NotCoprime(p, q);
  Rational total = 0;
  int sign = 1;
  q = mod(q, p);
  i = mod(i, p);
  while (p > 1) {
    Rational t = 2 * i + 1 - p - q;
    total += sign * (Rational(1, 4) - t * t / (4 * p * q));
    sign = -sign;
    std::int64_t r = p % q;
    i = i % q;
    p = q;
    q = r;
  }
  return total;
}

std::vector<Rational> d_recursive_all(std::int64_t p, std::int64_t q) {
  std::vector<Rational> out;
  for (std::int64_t i = 0; i < p; ++i) out.push_back(d_recursive(p, q, i));
  return out;
}

namespace {

struct ChainData {
  std::int64_t n, p, q;
  std::vector<std::int64_t> a, N;  // N[i + 1] = det of a_0..a_i, N[0] = 1
  std::vector<std::int64_t> v;     // v . K mod 2p labels the class
};

ChainData chain_data(const PlumbingGraph& g) {
  ChainData c;
  c.a = g.weights();
  c.n = static_cast<std::int64_t>(c.a.size());
  c.p = g.p();
  c.q = g.q();
  c.N.assign(static_cast<std::size_t>(c.n) + 1, 1);
  std::int64_t prev = 0;
  for (std::int64_t i = 0; i < c.n; ++i) {
    std::int64_t next = c.a[i] * c.N[i] - prev;
    prev = c.N[i];
    c.N[i + 1] = next;
  }
  // Trailing determinants T_j of a_j..a_{n-1}; v_j = (-1)^{n-1-j} T_{j+1}.
  std::vector<std::int64_t> T(static_cast<std::size_t>(c.n) + 2, 0);
  T[c.n] = 1;
  for (std::int64_t j = c.n - 1; j >= 0; --j) T[j] = c.a[j] * T[j + 1] - T[j + 2];
  c.v.resize(static_cast<std::size_t>(c.n));
  for (std::int64_t j = 0; j < c.n; ++j) c.v[j] = ((c.n - 1 - j) % 2 == 0 ? 1 : -1) * T[j + 1];
  return c;
}

std::int64_t class_label(const ChainData& c, std::int64_t w) {
  std::int64_t t = mod(w + c.p + c.q - 1, 2 * c.p);
  if (t % 2 != 0) throw std::logic_error("characteristic covector with odd class pairing");
  return mod(t / 2, c.p);
}

}  // namespace

std::vector<Rational> d_plumbing_all(const PlumbingGraph& graph) {
  if (graph.size() == 0) return {Rational(0)};
  ChainData c = chain_data(graph);
  std::int64_t two_p = 2 * c.p;
  // state (z_i, v.K mod 2p) -> best s_i, where the partial K^2 is s_i / N_{i+1}.
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> states{{{0, 0}, 0}};
  for (std::int64_t i = 0; i < c.n; ++i) {
    std::int64_t Nprev = c.N[i], Ncur = c.N[i + 1];
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> next;
    for (const auto& [key, s] : states) {
      auto [z, w] = key;
      for (std::int64_t K = c.a[i] + 2; K <= -c.a[i]; K += 2) {
        std::int64_t nz = K * Nprev - z;
        __int128 num = static_cast<__int128>(s) * Ncur + static_cast<__int128>(nz) * nz;
        std::int64_t ns = static_cast<std::int64_t>(num / Nprev);
        std::int64_t nw = mod(w + c.v[i] * K, two_p);
        auto [it, inserted] = next.try_emplace({nz, nw}, ns);
        if (!inserted) it->second = Ncur > 0 ? std::max(it->second, ns) : std::min(it->second, ns);
      }
    }
    states = std::move(next);
  }
  std::vector<std::optional<Rational>> best(static_cast<std::size_t>(c.p));
  for (const auto& [key, s] : states) {
    Rational d = (make_rational(s, c.N[c.n]) + c.n) / 4;
    auto& slot = best[static_cast<std::size_t>(class_label(c, key.second))];
    if (!slot || d > *slot) slot = d;
  }
  std::vector<Rational> out;
  for (auto& b : best) {
    if (!b) throw std::logic_error("plumbing search left a Spin^c class empty");
    out.push_back(*b);
  }
  return out;
}

Rational d_plumbing(const PlumbingGraph& graph, std::int64_t cls) {
  auto all = d_plumbing_all(graph);
  return all[static_cast<std::size_t>(mod(cls, static_cast<std::int64_t>(all.size())))];
}

std::vector<Rational> d_plumbing_enumerate(const PlumbingGraph& graph) {
  if (graph.size() == 0) return {Rational(0)};
  ChainData c = chain_data(graph);
  std::size_t n = static_cast<std::size_t>(c.n);
  std::vector<std::optional<Rational>> best(static_cast<std::size_t>(c.p));
  std::vector<std::int64_t> K(n);
  for (std::size_t i = 0; i < n; ++i) K[i] = c.a[i] + 2;
  for (;;) {
    // Solve Q x = K by Gaussian elimination on the tridiagonal Gram matrix.
    std::vector<Rational> diag(n), rhs(n), x(n);
    for (std::size_t i = 0; i < n; ++i) {
      diag[i] = c.a[i];
      rhs[i] = K[i];
      if (i > 0) {
        Rational f = Rational(1) / diag[i - 1];
        diag[i] -= f;
        rhs[i] -= f * rhs[i - 1];
      }
    }
    for (std::size_t i = n; i-- > 0;) x[i] = (rhs[i] - (i + 1 < n ? x[i + 1] : Rational(0))) / diag[i];
    Rational k2 = 0;
    std::int64_t w = 0;
    for (std::size_t i = 0; i < n; ++i) {
      k2 += x[i] * K[i];
      w += c.v[i] * K[i];
    }
    Rational d = (k2 + c.n) / 4;
    auto& slot = best[static_cast<std::size_t>(class_label(c, w))];
    if (!slot || d > *slot) slot = d;
    std::size_t i = 0;
    while (i < n && (K[i] += 2) > -c.a[i]) {
      K[i] = c.a[i] + 2;
      ++i;
    }
    if (i == n) break;
  }
  std::vector<Rational> out;
  for (auto& b : best) out.push_back(b.value_or(Rational(-1000000)));
  return out;
}

std::int64_t plumbing_class(const PlumbingGraph& graph, const std::vector<std::int64_t>& K) {
  if (graph.size() == 0) return 0;
  ChainData c = chain_data(graph);
  if (K.size() != graph.size()) throw std::invalid_argument("covector length differs from the chain length");
  std::int64_t w = 0;
  for (std::size_t i = 0; i < K.size(); ++i) {
    if (mod(K[i] - c.a[i], 2) != 0) throw std::invalid_argument("covector is not characteristic");
    w = mod(w + c.v[i] * K[i], 2 * c.p);
  }
  return class_label(c, w);
}

std::vector<std::int64_t> spin_classes(std::int64_t p, std::int64_t q) {
  p = std::abs(p);
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < p; ++i)
    if (mod(2 * i - (q - 1), p) == 0) out.push_back(i);
  return out;
}

std::int64_t spin_index(std::int64_t p, std::int64_t q) {
  if (p % 2 == 0) throw EvenOrder(p);
  p = std::abs(p);
  if (gcd(p, q) != 1) throw NotCoprime(p, q);
  if (p == 1) return 0;
  return mod((q - 1) * inverse_mod(2, p), p);
}

std::int64_t alt_spin_label(std::int64_t p, std::int64_t q) {
  if (p % 2 == 0) throw EvenOrder(p);
  p = std::abs(p);
  if (p == 1) return 0;
  std::int64_t x = mod(-inverse_mod(q, p), p);
  return mod((p - 1) / 2 * (1 - x), p);
}

Rational d_lens_surgery(std::int64_t p, std::int64_t q, std::int64_t i) {
  SurgerySlope s(p, q);
  if (s.p > 0) return -d_recursive(s.p, s.q, i);
  return d_recursive(-s.p, s.q, i);
}

Rational dedekind_sum(std::int64_t q, std::int64_t p) {
  if (p < 1) throw std::invalid_argument("dedekind_sum needs p >= 1");
  if (gcd(q, p) != 1) throw NotCoprime(q, p);
  // ((k/p)) ((kq/p)) = (2k - p)(2 (kq mod p) - p) / (4 p^2) since neither argument is integral.
  Integer sum = 0;
  for (std::int64_t k = 1; k < p; ++k) sum += Integer(2 * k - p) * Integer(2 * mod(k * q, p) - p);
  return make_rational(sum, Integer(4) * p * p);
}

Rational casson_walker(std::int64_t p, std::int64_t q, const KnotModel& knot) {
  SurgerySlope s(p, q);
  Rational lens = (s.p > 0 ? -1 : 1) * dedekind_sum(s.q, std::abs(s.p)) / 2;
  return lens + make_rational(s.q, 2 * s.p) * Rational(knot.alexander().second_derivative_at_one());
}

}  // namespace surgery
