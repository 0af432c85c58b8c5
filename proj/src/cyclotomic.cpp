#include "surgery/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace surgery {
namespace {

std::mutex g_phi_mutex;
std::map<std::int64_t, std::vector<Integer>> g_phi_cache;

// Exact quotient of a by a monic b; the caller knows b | a.
std::vector<Integer> divide_exact_monic(std::vector<Integer> a, const std::vector<Integer>& b) {
  std::size_t db = b.size() - 1;
  std::vector<Integer> q(a.size() - db, Integer(0));
  for (std::size_t i = a.size(); i-- > db;) {
    Integer c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

template <class T>
void remainder_monic(std::vector<T>& a, const std::vector<Integer>& b) {
  std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    T c = a[i];
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  a.resize(db, T(0));
}

std::vector<Rational> to_rational(const std::vector<Integer>& v) {
  std::vector<Rational> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

}  // namespace

const std::vector<Integer>& cyclotomic_dense(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic polynomial index must be positive");
  {
    std::lock_guard lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;
  }
  std::vector<Integer> poly(static_cast<std::size_t>(n) + 1, Integer(0));
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d : divisors(n))
    if (d < n) poly = divide_exact_monic(std::move(poly), cyclotomic_dense(d));
  std::lock_guard lock(g_phi_mutex);
  return g_phi_cache.try_emplace(n, std::move(poly)).first->second;
}

LaurentIntPoly cyclotomic_polynomial(std::int64_t n) {
  return LaurentIntPoly::from_dense(cyclotomic_dense(n));
}

std::vector<Integer> cyclic_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::size_t d = a.size();
  std::vector<Integer> out(d, Integer(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= d) k -= d;
      out[k] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<Integer> reduce_mod_cyclotomic(std::vector<Integer> dense, std::int64_t n) {
  remainder_monic(dense, cyclotomic_dense(n));
  return dense;
}

bool vanishes_at_primitive_roots(const LaurentIntPoly& a, std::int64_t n) {
  for (const Integer& c : reduce_mod_cyclotomic(a.reduce_cyclic(n), n))
    if (c != 0) return false;
  return true;
}

bool sparse_root_sum_is_zero(const std::map<std::int64_t, Integer>& terms, std::int64_t n) {
  std::map<std::int64_t, Integer> t;
  for (const auto& [e, c] : terms)
    if (c != 0 && (t[mod(e, n)] += c) == 0) t.erase(mod(e, n));
  if (t.empty()) return true;
  if (n == 1) return false;

  // zeta_n^e = zeta_q^alpha * zeta_rest^beta with q = p^a the first prime power of n.
  auto [p, a] = factor(n).front();
  std::int64_t q = 1;
  for (int i = 0; i < a; ++i) q *= p;
  std::int64_t rest = n / q, low = q / p;
  std::int64_t rest_inv = inverse_mod(rest, q);
  std::int64_t q_inv = rest == 1 ? 0 : inverse_mod(q, rest);

  // Over Q(zeta_rest), Q(zeta_q) has basis zeta_q^(u + low*i) for u < low, i < p - 1,
  // and zeta_q^(u + low*(p-1)) = -sum_{i<p-1} zeta_q^(u + low*i).
  std::map<std::int64_t, std::vector<std::map<std::int64_t, Integer>>> by_u;
  for (const auto& [e, c] : t) {
    std::int64_t alpha = mod(e * rest_inv, q);
    std::int64_t beta = rest == 1 ? 0 : mod(e * q_inv, rest);
    auto& slot = by_u[alpha % low];
    slot.resize(static_cast<std::size_t>(p));
    slot[static_cast<std::size_t>(alpha / low)][beta] += c;
  }
  for (auto& [u, g] : by_u) {
    const auto& top = g[static_cast<std::size_t>(p - 1)];
    for (std::int64_t i = 0; i + 1 < p; ++i) {
      std::map<std::int64_t, Integer> diff = g[static_cast<std::size_t>(i)];
      for (const auto& [e, c] : top) diff[e] -= c;
      if (!sparse_root_sum_is_zero(diff, rest)) return false;
    }
  }
  return true;
}

RootOfUnity RootOfUnity::normalized() const {
  std::int64_t r = mod(k, n);
  if (r == 0) return {0, 1};
  std::int64_t g = gcd(r, n);
  return {r / g, n / g};
}

std::complex<double> RootOfUnity::to_complex() const {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(mod(k, n)) / static_cast<double>(n));
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
  RootOfUnity x = a.normalized(), y = b.normalized();
  return x.k == y.k && x.n == y.n;
}

CyclotomicNumber::CyclotomicNumber(std::int64_t order)
    : order_(order), coeffs_(static_cast<std::size_t>(euler_phi(order)), Rational(0)) {}

CyclotomicNumber::CyclotomicNumber(std::int64_t order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  remainder_monic(coeffs_, cyclotomic_dense(order_));
}

CyclotomicNumber CyclotomicNumber::from_rational(std::int64_t order, const Rational& r) {
  CyclotomicNumber out(order);
  out.coeffs_[0] = r;
  return out;
}

CyclotomicNumber CyclotomicNumber::root(std::int64_t order, std::int64_t k) {
  std::vector<Rational> v(static_cast<std::size_t>(order), Rational(0));
  v[static_cast<std::size_t>(mod(k, order))] = 1;
  return CyclotomicNumber(order, std::move(v));
}

CyclotomicNumber CyclotomicNumber::from_poly(std::int64_t order, const LaurentIntPoly& a) {
  return CyclotomicNumber(order, to_rational(a.reduce_cyclic(order)));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

CyclotomicNumber CyclotomicNumber::lift(std::int64_t target) const {
  if (target == order_) return *this;
  if (target % order_ != 0) throw std::invalid_argument("lift target must be a multiple of the order");
  std::int64_t step = target / order_;
  std::vector<Rational> v(static_cast<std::size_t>(target), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * static_cast<std::size_t>(step)] = coeffs_[i];
  return CyclotomicNumber(target, std::move(v));
}

CyclotomicNumber CyclotomicNumber::galois(std::int64_t k) const {
  std::vector<Rational> v(static_cast<std::size_t>(order_), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    v[static_cast<std::size_t>(mod(static_cast<std::int64_t>(i) * k, order_))] += coeffs_[i];
  return CyclotomicNumber(order_, std::move(v));
}

void CyclotomicNumber::unify(CyclotomicNumber& other) {
  if (order_ == other.order_) return;
  std::int64_t l = lcm(order_, other.order_);
  *this = lift(l);
  other = other.lift(l);
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  CyclotomicNumber r = rhs;
  unify(r);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
  CyclotomicNumber r = rhs;
  unify(r);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= r.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
  CyclotomicNumber r = rhs;
  unify(r);
  std::size_t n = coeffs_.size();
  std::vector<Rational> prod(2 * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += coeffs_[i] * r.coeffs_[j];
  }
  remainder_monic(prod, cyclotomic_dense(order_));
  coeffs_ = std::move(prod);
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  CyclotomicNumber x = a, y = b;
  x.unify(y);
  return x.coeffs_ == y.coeffs_;
}

std::complex<double> CyclotomicNumber::to_complex() const {
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    sum += coeffs_[i].get_d() * RootOfUnity{static_cast<std::int64_t>(i), order_}.to_complex();
  return sum;
}

const char* to_string(FourRootsCase c) {
  switch (c) {
    case FourRootsCase::SumZero: return "SumZero";
    case FourRootsCase::Match13: return "Match13";
    case FourRootsCase::Match14: return "Match14";
    case FourRootsCase::NotEqual: return "NotEqual";
  }
  return "?";
}

FourRootsCase four_roots_cancellation(const RootOfUnity& e1, const RootOfUnity& e2,
                                      const RootOfUnity& e3, const RootOfUnity& e4) {
  std::int64_t l = lcm(lcm(e1.n, e2.n), lcm(e3.n, e4.n));
  auto exponent = [l](const RootOfUnity& z) { return z.k * (l / z.n); };
  auto vanishes = [l](std::initializer_list<std::pair<std::int64_t, int>> signed_terms) {
    std::map<std::int64_t, Integer> t;
    for (auto [e, s] : signed_terms) t[mod(e, l)] += s;
    return sparse_root_sum_is_zero(t, l);
  };
  std::int64_t a1 = exponent(e1), a2 = exponent(e2), a3 = exponent(e3), a4 = exponent(e4);
  if (!vanishes({{a1, 1}, {a2, 1}, {a3, -1}, {a4, -1}})) return FourRootsCase::NotEqual;
  if (vanishes({{a1, 1}, {a2, 1}})) return FourRootsCase::SumZero;
  if (e1 == e3) return FourRootsCase::Match13;
  if (e1 == e4) return FourRootsCase::Match14;
  throw std::logic_error("four roots: equal sums with no matching case");
}

}  // namespace surgery
