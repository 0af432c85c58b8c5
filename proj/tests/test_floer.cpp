#include <algorithm>

#include "doctest.h"
#include "surgery/floer.hpp"

using namespace surgery;

namespace {

const KnotModel U = KnotModel::unknot();
const KnotModel RT = KnotModel::right_trefoil();
const KnotModel LT = KnotModel::left_trefoil();

const Arrow* arrow_between(const GradedTowerComplex& c, std::size_t from, std::size_t to) {
  for (const Arrow& a : c.arrows)
    if (a.from == from && a.to == to) return &a;
  return nullptr;
}

std::size_t only(const std::vector<std::size_t>& v) {
  REQUIRE(v.size() == 1);
  return v.front();
}

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("unknot 1/1 is S^3") {
  ConeHomology h = stable_cone_homology(U, 1, 1, 0);
  CHECK(h.d == 0);
  CHECK(h.red_rank == 0);
  CHECK(is_lspace(U, 1, 1));
  CHECK_THROWS_AS(build_cone(U, 0, 1, 0, 2, 8), ZeroSlope);
  CHECK_THROWS_AS(build_cone(U, 4, 2, 0, 2, 8), NotCoprime);
}

TEST_CASE("window too small") {
  // Class 49 mod 99 has no A tower with |floor(t)| <= 2.
  CHECK_THROWS_AS(build_cone(RT, 99, 1, 49, 2, 100), WindowTooSmall);
  CHECK(d_invariant(RT, 99, 1, 49) == d_lens_surgery(99, 1, 49));
}

TEST_CASE("central subcomplex of 5/4: two identities onto one B tower") {
  GradedTowerComplex c = build_cone_relative(RT, 5, 4, spin_index(5, 4), 3, 40);
  CHECK(spin_index(5, 4) == 4);
  std::size_t b = only(c.towers_at(Tower::Kind::B, 4));
  std::size_t a_left = only(c.towers_at(Tower::Kind::A, -1)), a_right = only(c.towers_at(Tower::Kind::A, 4));
  const Arrow* h = arrow_between(c, a_left, b);
  const Arrow* v = arrow_between(c, a_right, b);
  REQUIRE(h);
  REQUIRE(v);
  CHECK(h->is_h);
  CHECK(h->power == 0);
  CHECK_FALSE(v->is_h);
  CHECK(v->power == 0);
  int into_b = 0;
  for (const Arrow& a : c.arrows) into_b += a.to == b ? 1 : 0;
  CHECK(into_b == 2);
}

TEST_CASE("central subcomplex of 5/3: the five-tower zig-zag") {
  GradedTowerComplex c = build_cone_relative(RT, 5, 3, spin_index(5, 3), 3, 40);
  CHECK(spin_index(5, 3) == 1);
  std::size_t a0 = only(c.towers_at(Tower::Kind::A, 1));
  std::size_t b1 = only(c.towers_at(Tower::Kind::B, 1)), b6 = only(c.towers_at(Tower::Kind::B, 6));
  std::size_t am = only(c.towers_at(Tower::Kind::A, -4)), ap = only(c.towers_at(Tower::Kind::A, 6));
  CHECK(c.towers[a0].s == 0);
  REQUIRE(arrow_between(c, am, b1));
  REQUIRE(arrow_between(c, a0, b1));
  REQUIRE(arrow_between(c, a0, b6));
  REQUIRE(arrow_between(c, ap, b6));
  CHECK(arrow_between(c, am, b1)->power == 0);
  CHECK(arrow_between(c, a0, b1)->power == 1);
  CHECK(arrow_between(c, a0, b6)->power == 1);
  CHECK(arrow_between(c, ap, b6)->power == 0);
  // The U-labelled A_0 sits 2 below where an identity to B would put it.
  CHECK(c.towers[a0].bottom == c.towers[b1].bottom - 2 + 1);
}

TEST_CASE("d_invariant examples") {
  CHECK(d_invariant(RT, 9, 1, spin_index(9, 1)) == 0);
  CHECK(d_invariant(RT, 27, 5, spin_index(27, 5)) == make_rational(-1, 2));
  CHECK(d_invariant(RT, 27, 23, spin_index(27, 23)) == make_rational(-5, 2));
  CHECK(d_invariant(RT, 9, 2, spin_index(9, 2)) == 0);
}

TEST_CASE("d_spin_shortcut examples") {
  CHECK(d_spin_shortcut(9, 2) == 0);
  CHECK(d_spin_shortcut(9, 1) == 0);
  CHECK(d_spin_shortcut(9, 7) == -2);
  CHECK(d_lens_surgery(9, 1, spin_index(9, 1)) == 2);
  CHECK_THROWS_AS(d_spin_shortcut(8, 1), std::invalid_argument);
}

TEST_CASE("is_lspace examples") {
  for (auto [p, q] : {std::pair{1, 1}, {-1, 1}, {5, 2}, {-7, 3}, {2, 5}, {-3, 8}}) CHECK(is_lspace(U, p, q));
  CHECK_FALSE(is_lspace(RT, -7, 2));
  CHECK(is_lspace(RT, 9, 2));
  CHECK(is_lspace(RT, 1, 1));
  CHECK_FALSE(is_lspace(RT, 1, 2));
  CHECK(hf_red_rank(RT, -1, 1, 0) == 1);
}

TEST_CASE("unknot cone reproduces the lens values in every class") {
  for (std::int64_t p = -13; p <= 13; ++p)
    for (std::int64_t q = 1; q <= 7; ++q) {
      if (p == 0 || gcd(p, q) != 1) continue;
      auto all = cone_homology_all(U, p, q);
      for (std::int64_t i = 0; i < std::abs(p); ++i) {
        CHECK(all[i].d == d_lens_surgery(p, q, i));
        CHECK(all[i].red_rank == 0);
      }
    }
}

TEST_CASE("positive surgery agrees with the V/H max formula in every class") {
  // d(K, i) = d(U, i) - 2 max(V_{floor(i/q)}, H_{floor((i-p)/q)}) for 0 <= i < p.
  for (std::int64_t p = 1; p <= 21; ++p)
    for (std::int64_t q = 1; q <= 9; ++q) {
      if (gcd(p, q) != 1) continue;
      auto d = d_invariant_all(RT, p, q);
      for (std::int64_t i = 0; i < p; ++i) {
        std::int64_t m = std::max(RT.v_exponent(floor_div(i, q)), RT.h_exponent(floor_div(i - p, q)));
        CHECK_MESSAGE(d[i] == d_lens_surgery(p, q, i) - 2 * m, p << "/" << q << " i=" << i);
      }
    }
}

TEST_CASE("cone symmetry t -> q - 1 - t") {
  for (const KnotModel& K : {RT, LT})
    for (std::int64_t p : {-11, -7, -4, 3, 5, 8, 13})
      for (std::int64_t q = 1; q <= 6; ++q) {
        if (gcd(p, q) != 1) continue;
        auto all = cone_homology_all(K, p, q);
        std::int64_t P = std::abs(p);
        for (std::int64_t i = 0; i < P; ++i) CHECK(all[i] == all[mod(q - 1 - i, P)]);
      }
}

TEST_CASE("left model is the mirror of the right model") {
  for (std::int64_t p = -15; p <= 15; ++p)
    for (std::int64_t q = 1; q <= 6; ++q) {
      if (p == 0 || gcd(p, q) != 1) continue;
      auto left = cone_homology_all(LT, p, q), right = cone_homology_all(RT, -p, q);
      std::vector<Rational> dl, dr;
      std::vector<std::int64_t> rl, rr;
      std::map<Rational, std::int64_t> gl, gr;
      for (const auto& h : left) {
        dl.push_back(h.d);
        rl.push_back(h.red_rank);
        for (auto [g, r] : h.reduced) gl[g] += r;
      }
      for (const auto& h : right) {
        dr.push_back(-h.d);
        rr.push_back(h.red_rank);
        // HF_red of -Y in grading -g - 1.
        for (auto [g, r] : h.reduced) gr[-g - 1] += r;
      }
      std::sort(rl.begin(), rl.end());
      std::sort(rr.begin(), rr.end());
      CHECK_MESSAGE(sorted(dl) == sorted(dr), p << "/" << q);
      CHECK(rl == rr);
      CHECK(gl == gr);
      if (p % 2 != 0) {
        std::int64_t s = spin_index(std::abs(p), q);
        CHECK(left[s].d == -right[s].d);
      }
    }
}

TEST_CASE("cone and shortcut agree at the spin class, small p") {
  for (std::int64_t p = 1; p <= 31; p += 2)
    for (std::int64_t q = 1; q <= p; ++q)
      if (gcd(p, q) == 1) CHECK_MESSAGE(d_invariant(RT, p, q, spin_index(p, q)) == d_spin_shortcut(p, q), p << "/" << q);
}

TEST_CASE("trefoil L-space slopes, small range") {
  for (std::int64_t p = -9; p <= 9; ++p)
    for (std::int64_t q = 1; q <= 5; ++q) {
      if (p == 0 || gcd(p, q) != 1) continue;
      CHECK_MESSAGE(is_lspace(RT, p, q) == (p >= q), p << "/" << q);
      CHECK(is_lspace(LT, p, q) == (-p >= q));
    }
}
