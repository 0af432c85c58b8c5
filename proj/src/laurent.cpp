#include "surgery/laurent.hpp"

#include <cmath>
#include <sstream>

namespace surgery {

LaurentIntPoly::LaurentIntPoly(const Integer& constant) { add_term(0, constant); }

LaurentIntPoly LaurentIntPoly::monomial(const Integer& coeff, std::int64_t exponent) {
  LaurentIntPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentIntPoly LaurentIntPoly::from_dense(const std::vector<Integer>& coeffs, std::int64_t low) {
  LaurentIntPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    p.add_term(low + static_cast<std::int64_t>(i), coeffs[i]);
  return p;
}

LaurentIntPoly LaurentIntPoly::from_dense(std::initializer_list<long> coeffs, std::int64_t low) {
  LaurentIntPoly p;
  std::int64_t e = low;
  for (long c : coeffs) p.add_term(e++, Integer(c));
  return p;
}

LaurentIntPoly LaurentIntPoly::root_factor(std::int64_t k) {
  LaurentIntPoly p = monomial(1, k);
  p.add_term(0, -1);
  return p;
}

void LaurentIntPoly::add_term(std::int64_t exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Integer LaurentIntPoly::coeff(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::int64_t LaurentIntPoly::min_exponent() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

std::int64_t LaurentIntPoly::max_exponent() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

LaurentIntPoly& LaurentIntPoly::operator+=(const LaurentIntPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentIntPoly& LaurentIntPoly::operator-=(const LaurentIntPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentIntPoly operator*(const LaurentIntPoly& a, const LaurentIntPoly& b) {
  LaurentIntPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentIntPoly& LaurentIntPoly::operator*=(const LaurentIntPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentIntPoly LaurentIntPoly::operator-() const {
  LaurentIntPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentIntPoly LaurentIntPoly::pow(unsigned n) const {
  LaurentIntPoly result(1), base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentIntPoly LaurentIntPoly::substitute_power(std::int64_t k) const {
  LaurentIntPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e * k, c);
  return out;
}

std::vector<Integer> LaurentIntPoly::reduce_cyclic(std::int64_t d) const {
  std::vector<Integer> out(static_cast<std::size_t>(d), Integer(0));
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(mod(e, d))] += c;
  return out;
}

std::complex<double> LaurentIntPoly::evaluate(std::complex<double> x) const {
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_)
    sum += c.get_d() * std::pow(x, static_cast<double>(e));
  return sum;
}

Integer LaurentIntPoly::value_at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Integer LaurentIntPoly::second_derivative_at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c * Integer(e) * Integer(e - 1);
  return s;
}

std::string LaurentIntPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "x";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace surgery
