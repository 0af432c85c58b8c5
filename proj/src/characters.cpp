#include "surgery/characters.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace surgery {
namespace {

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
  __int128 result = 1 % m, base = mod(b, m);
  while (e > 0) {
    if (e & 1) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t primitive_root(std::int64_t q) {
  std::int64_t phi = euler_phi(q);
  auto primes = prime_divisors(phi);
  for (std::int64_t g = 2; g < q; ++g) {
    if (gcd(g, q) != 1) continue;
    bool ok = true;
    for (std::int64_t r : primes) ok = ok && pow_mod(g, phi / r, q) != 1;
    if (ok) return g;
  }
  return 1;
}

// x = g mod q and x = 1 mod n/q.
std::int64_t crt_lift(std::int64_t g, std::int64_t q, std::int64_t n) {
  std::int64_t rest = n / q;
  if (rest == 1) return mod(g, n);
  std::int64_t t = mod((g - 1) * inverse_mod(rest, q), q);
  return mod(1 + rest * t, n);
}

std::shared_ptr<const UnitGroupStructure> build_group(std::int64_t n) {
  auto g = std::make_shared<UnitGroupStructure>();
  g->modulus = n;
  for (auto [p, a] : factor(n)) {
    std::int64_t q = 1;
    for (int i = 0; i < a; ++i) q *= p;
    if (p == 2) {
      if (a >= 2) {
        g->generators.push_back(crt_lift(-1, q, n));
        g->orders.push_back(2);
      }
      if (a >= 3) {
        g->generators.push_back(crt_lift(5, q, n));
        g->orders.push_back(q / 4);
      }
    } else {
      g->generators.push_back(crt_lift(primitive_root(q), q, n));
      g->orders.push_back(q / p * (p - 1));
    }
  }
  for (std::int64_t o : g->orders) g->exponent = lcm(g->exponent, o);

  g->dlog.assign(static_cast<std::size_t>(n), {});
  std::vector<std::int64_t> e(g->orders.size(), 0);
  std::int64_t count = 0;
  for (;;) {
    std::int64_t x = 1 % n;
    for (std::size_t i = 0; i < e.size(); ++i) x = mod(x * pow_mod(g->generators[i], e[i], n), n);
    g->dlog[static_cast<std::size_t>(x)] = e;
    ++count;
    std::size_t i = 0;
    while (i < e.size() && ++e[i] == g->orders[i]) e[i++] = 0;
    if (i == e.size()) break;
  }
  if (count != euler_phi(n)) throw std::logic_error("unit group enumeration is inconsistent");
  return g;
}

std::int64_t angle_numerator(const UnitGroupStructure& g, const std::vector<std::int64_t>& exps,
                             const std::vector<std::int64_t>& logx) {
  std::int64_t k = 0;
  for (std::size_t i = 0; i < exps.size(); ++i)
    k = mod(k + exps[i] * logx[i] % g.orders[i] * (g.exponent / g.orders[i]), g.exponent);
  return k;
}

}  // namespace

std::optional<std::vector<std::int64_t>> UnitGroupStructure::log(std::int64_t x) const {
  if (modulus == 1) return std::vector<std::int64_t>{};
  const auto& v = dlog[static_cast<std::size_t>(mod(x, modulus))];
  if (v.empty() && gcd(x, modulus) != 1) return std::nullopt;
  return v;
}

std::shared_ptr<const UnitGroupStructure> unit_group(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("character modulus must be positive");
  static std::mutex mu;
  static std::map<std::int64_t, std::shared_ptr<const UnitGroupStructure>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto g = build_group(n);
  std::lock_guard lock(mu);
  return cache.try_emplace(n, g).first->second;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group,
                                       std::vector<std::int64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  if (exponents_.size() != group_->orders.size())
    throw std::invalid_argument("character exponent vector has the wrong length");
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    std::int64_t o = group_->orders[i];
    exponents_[i] = mod(exponents_[i], o);
    value_order_ = lcm(value_order_, o / gcd(exponents_[i], o));
  }
}

DirichletCharacter DirichletCharacter::principal(std::int64_t n) {
  auto g = unit_group(n);
  std::vector<std::int64_t> zeros(g->orders.size(), 0);
  return DirichletCharacter(std::move(g), std::move(zeros));
}

std::optional<RootOfUnity> DirichletCharacter::value_root(std::int64_t x) const {
  auto logx = group_->log(x);
  if (!logx) return std::nullopt;
  return RootOfUnity{angle_numerator(*group_, exponents_, *logx), group_->exponent}.normalized();
}

bool DirichletCharacter::is_principal() const { return value_order_ == 1; }

DirichletCharacter DirichletCharacter::conj() const {
  std::vector<std::int64_t> neg = exponents_;
  for (auto& e : neg) e = -e;
  return DirichletCharacter(group_, std::move(neg));
}

bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
  return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
}

std::vector<DirichletCharacter> enumerate_characters(std::int64_t n) {
  auto g = unit_group(n);
  std::vector<DirichletCharacter> out;
  std::vector<std::int64_t> e(g->orders.size(), 0);
  for (;;) {
    out.emplace_back(g, e);
    std::size_t i = 0;
    while (i < e.size() && ++e[i] == g->orders[i]) e[i++] = 0;
    if (i == e.size()) break;
  }
  return out;
}

CyclotomicNumber character_value(const DirichletCharacter& chi, std::int64_t x) {
  std::int64_t e = chi.value_order();
  auto r = chi.value_root(x);
  if (!r) return CyclotomicNumber(e);
  return CyclotomicNumber::root(e, r->k * (e / r->n));
}

bool is_even(const DirichletCharacter& chi) {
  return *chi.value_root(-1) == RootOfUnity{0, 1};
}

std::int64_t conductor(const DirichletCharacter& chi) {
  std::int64_t n = chi.modulus();
  if (chi.is_principal()) return 1;
  for (std::int64_t f : divisors(n)) {
    bool trivial = true;
    for (std::int64_t x = 1 + f; x < n && trivial; x += f)
      if (gcd(x, n) == 1) trivial = *chi.value_root(x) == RootOfUnity{0, 1};
    if (trivial) return f;
  }
  return n;
}

bool is_primitive(const DirichletCharacter& chi) { return conductor(chi) == chi.modulus(); }

DirichletCharacter induce(const DirichletCharacter& chi, std::int64_t target) {
  if (target % chi.modulus() != 0) throw std::invalid_argument("induce: target must be a multiple of the modulus");
  auto g = unit_group(target);
  std::vector<std::int64_t> e(g->orders.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    RootOfUnity r = *chi.value_root(g->generators[i]);
    e[i] = r.k * (g->orders[i] / r.n);
  }
  return DirichletCharacter(g, std::move(e));
}

DirichletCharacter primitive_of(const DirichletCharacter& chi) {
  std::int64_t n = chi.modulus(), f = conductor(chi);
  auto g = unit_group(f);
  std::vector<std::int64_t> e(g->orders.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::int64_t x = g->generators[i];
    while (gcd(x, n) != 1) x += f;
    RootOfUnity r = *chi.value_root(x);
    e[i] = r.k * (g->orders[i] / r.n);
  }
  return DirichletCharacter(g, std::move(e));
}

std::int64_t max_conductor(std::int64_t n) { return n % 4 == 2 ? n / 2 : n; }

}  // namespace surgery
