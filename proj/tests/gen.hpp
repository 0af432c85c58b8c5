#pragma once

// Small hand-rolled generators for property tests. Seeds are fixed so failures replay.

#include <cstdint>
#include <random>
#include <vector>

#include "surgery/laurent.hpp"

namespace testgen {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed1234ULL);
  return g;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline bool coin() { return uniform(0, 1) == 1; }

inline surgery::LaurentIntPoly laurent(int max_terms = 5, std::int64_t exp_range = 6, long coeff_range = 3) {
  surgery::LaurentIntPoly p;
  int terms = static_cast<int>(uniform(1, max_terms));
  for (int i = 0; i < terms; ++i)
    p += surgery::LaurentIntPoly::monomial(uniform(-coeff_range, coeff_range), uniform(-exp_range, exp_range));
  return p;
}

inline surgery::LaurentIntPoly nonzero_laurent(int max_terms = 5, std::int64_t exp_range = 6) {
  for (;;) {
    auto p = laurent(max_terms, exp_range);
    if (!p.is_zero()) return p;
  }
}

}  // namespace testgen
