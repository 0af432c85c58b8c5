#pragma once

// Search kernels in two flavours. `serial` is the reference; `parallel` splits the same search
// across OpenMP threads and must return identical, canonically sorted results.

#include <cstdint>
#include <vector>

#include "surgery/laurent.hpp"
#include "surgery/relations.hpp"

namespace surgery {

/// Exact check that prod_c ((x^c - 1)(x^-c - 1))^{b_c} = 1 at every m-th root xi != 1,
/// c running over the units mod m with c <= m/2.
bool franz_product_is_one(std::int64_t m, const std::vector<std::int64_t>& b);

struct TorsionPair {
  std::int64_t q, q_prime;
  friend auto operator<=>(const TorsionPair&, const TorsionPair&) = default;
};

namespace serial {
std::vector<RatioTriple> ratio_scan(std::int64_t m);
FranzReport franz_scan(std::int64_t m, std::int64_t box);
/// Pairs 1 <= q < q' < p of units mod p whose torsion profiles agree up to a unit substitution.
std::vector<TorsionPair> torsion_pair_scan(std::int64_t p, const LaurentIntPoly& alexander);
}  // namespace serial

namespace parallel {
std::vector<RatioTriple> ratio_scan(std::int64_t m);
FranzReport franz_scan(std::int64_t m, std::int64_t box);
std::vector<TorsionPair> torsion_pair_scan(std::int64_t p, const LaurentIntPoly& alexander);
}  // namespace parallel

}  // namespace surgery
