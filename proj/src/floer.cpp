#include "surgery/floer.hpp"

#include <algorithm>
#include <exception>
#include <optional>

namespace surgery {
namespace {

using Bits = std::vector<std::uint64_t>;

Bits zero_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void flip(Bits& b, std::size_t k) { b[k / 64] ^= std::uint64_t{1} << (k % 64); }
bool test(const Bits& b, std::size_t k) { return (b[k / 64] >> (k % 64)) & 1; }
void xor_into(Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) a[w] ^= b[w];
}
std::optional<std::size_t> lowest_bit(const Bits& b) {
  for (std::size_t w = 0; w < b.size(); ++w)
    if (b[w]) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(b[w]));
  return std::nullopt;
}

// Column echelon form over F_2, remembering which input columns make up each basis vector.
class ColumnSpan {
 public:
  ColumnSpan(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), pivot_of_row_(rows, npos) {}

  // Returns a kernel combination when the column is dependent on earlier ones.
  std::optional<Bits> add(Bits col, std::size_t index) {
    Bits combo = zero_bits(cols_);
    flip(combo, index);
    reduce(col, &combo);
    auto lead = lowest_bit(col);
    if (!lead) return combo;
    pivot_of_row_[*lead] = basis_.size();
    basis_.push_back(std::move(col));
    combos_.push_back(std::move(combo));
    return std::nullopt;
  }

  bool contains(Bits v) const {
    reduce(v, nullptr);
    return !lowest_bit(v);
  }

  std::size_t rank() const { return basis_.size(); }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void reduce(Bits& v, Bits* combo) const {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!test(v, r) || pivot_of_row_[r] == npos) continue;
      std::size_t k = pivot_of_row_[r];
      xor_into(v, basis_[k]);
      if (combo) xor_into(*combo, combos_[k]);
    }
  }

  std::size_t rows_, cols_;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<Bits> basis_, combos_;
};

struct Element {
  std::size_t tower;
  std::int64_t level;
};

// Elements of the complex sorted by relative grading, with the A -> B adjacency.
class GradedView {
 public:
  explicit GradedView(const GradedTowerComplex& c) : c_(c), out_(c.towers.size()), pos_(c.towers.size()) {
    for (const Arrow& a : c.arrows) out_[a.from].push_back(a);
    lo_ = c.cap;
    for (const Tower& t : c.towers)
      if (t.levels > 0) lo_ = std::min(lo_, t.bottom);
    std::size_t n = static_cast<std::size_t>(c.cap - lo_ + 1);
    by_grading_.resize(n);
    for (std::size_t k = 0; k < c.towers.size(); ++k) {
      const Tower& t = c.towers[k];
      pos_[k].assign(static_cast<std::size_t>(t.levels), 0);
      for (std::int64_t l = 0; l < t.levels; ++l) {
        auto& slot = by_grading_[static_cast<std::size_t>(t.bottom + 2 * l - lo_)];
        pos_[k][static_cast<std::size_t>(l)] = slot.size();
        slot.push_back({k, l});
      }
    }
  }

  std::int64_t lowest() const { return lo_; }
  std::int64_t a_parity() const {
    for (const Tower& t : c_.towers)
      if (t.kind == Tower::Kind::A) return t.bottom;
    return 0;
  }

  const std::vector<Element>& at(std::int64_t g) const {
    static const std::vector<Element> empty;
    if (g < lo_ || g > c_.cap) return empty;
    return by_grading_[static_cast<std::size_t>(g - lo_)];
  }

  bool is_a(std::int64_t g) const {
    const auto& e = at(g);
    return !e.empty() && c_.towers[e.front().tower].kind == Tower::Kind::A;
  }

  std::size_t position(const Element& e) const { return pos_[e.tower][static_cast<std::size_t>(e.level)]; }

  // D on one element at grading g, as a bit vector over the elements at g - 1.
  Bits image(const Element& e, std::size_t rows) const {
    Bits col = zero_bits(rows);
    for (const Arrow& a : out_[e.tower]) {
      std::int64_t l = e.level - a.power;
      if (l < 0 || l >= c_.towers[a.to].levels) continue;
      flip(col, pos_[a.to][static_cast<std::size_t>(l)]);
    }
    return col;
  }

  // Span of D restricted to the elements of grading g; a kernel vector, if any, goes to *kernel.
  ColumnSpan differential(std::int64_t g, std::vector<Bits>* kernel = nullptr) const {
    const auto& src = at(g);
    std::size_t rows = at(g - 1).size();
    ColumnSpan span(rows, src.size());
    for (std::size_t k = 0; k < src.size(); ++k) {
      auto dep = span.add(image(src[k], rows), k);
      if (dep && kernel) kernel->push_back(std::move(*dep));
    }
    return span;
  }

 private:
  const GradedTowerComplex& c_;
  std::vector<std::vector<Arrow>> out_;
  std::vector<std::vector<std::size_t>> pos_;
  std::vector<std::vector<Element>> by_grading_;
  std::int64_t lo_;
};

std::int64_t homology_rank(const GradedView& view, std::int64_t g) {
  const auto& here = view.at(g);
  if (here.empty()) return 0;
  if (view.is_a(g)) return static_cast<std::int64_t>(here.size() - view.differential(g).rank());
  return static_cast<std::int64_t>(here.size() - view.differential(g + 1).rank());
}

// Relative bottom of the tower image, or throws when the cap does not leave a clean top.
std::int64_t tower_bottom(const GradedView& view, std::int64_t top, std::int64_t tower_parity, std::int64_t window) {
  bool kernel_side = mod(tower_parity, 2) == mod(view.a_parity(), 2);
  std::int64_t G = mod(top - tower_parity, 2) == 0 ? top : top - 1;
  if (homology_rank(view, G) != 1 || homology_rank(view, G - 1) != 0 || homology_rank(view, G - 2) != 1)
    throw WindowTooSmall(window, "height does not clear the reduced part");
  const auto& elems = view.at(G);
  if (kernel_side) {
    std::vector<Bits> kernel;
    view.differential(G, &kernel);
    // A-side gradings receive no boundaries, so U^j z survives while some summand has level >= j.
    std::int64_t reach = 0;
    for (std::size_t k = 0; k < elems.size(); ++k)
      if (test(kernel.front(), k)) reach = std::max(reach, elems[k].level);
    return G - 2 * reach;
  }
  ColumnSpan im = view.differential(G + 1);
  std::optional<Element> gen;
  for (const Element& e : elems) {
    Bits v = zero_bits(elems.size());
    flip(v, view.position(e));
    if (!im.contains(v)) {
      gen = e;
      break;
    }
  }
  std::int64_t j = 0;
  while (gen->level - (j + 1) >= 0) {
    Element e{gen->tower, gen->level - (j + 1)};
    std::int64_t g = G - 2 * (j + 1);
    Bits v = zero_bits(view.at(g).size());
    flip(v, view.position(e));
    if (view.differential(g + 1).contains(v)) break;
    ++j;
  }
  return G - 2 * j;
}

// Walks the class members T_k = i + k |p| and assigns B bottoms from gr B_{t+p} - gr B_t = 2 floor(t/q).
std::int64_t b_bottom(std::int64_t p, std::int64_t q, std::int64_t i, std::int64_t t) {
  std::int64_t P = std::abs(p);
  std::int64_t g = 0;
  for (std::int64_t u = i; u < t; u += P) g += p > 0 ? 2 * floor_div(u, q) : -2 * floor_div(u + P, q);
  for (std::int64_t u = i; u > t; u -= P) g -= p > 0 ? 2 * floor_div(u - P, q) : -2 * floor_div(u, q);
  return g;
}

}  // namespace

std::vector<std::size_t> GradedTowerComplex::towers_at(Tower::Kind kind, std::int64_t t) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < towers.size(); ++k)
    if (towers[k].kind == kind && towers[k].t == t) out.push_back(k);
  return out;
}

GradedTowerComplex build_cone_relative(const KnotModel& model, std::int64_t p, std::int64_t q, std::int64_t i,
                                       std::int64_t window, std::int64_t height) {
  SurgerySlope slope(p, q);
  p = slope.p;
  q = slope.q;
  if (window < 1 || height < 1) throw std::invalid_argument("window and height must be positive");
  std::int64_t P = std::abs(p);
  i = mod(i, P);

  std::int64_t lo = -window * q, hi = (window + 1) * q - 1;
  std::int64_t tmin = lo + mod(i - lo, P), tmax = hi - mod(hi - i, P);
  if (tmin > tmax) throw WindowTooSmall(window, "no A tower of the class inside");
  if (model.h_exponent(floor_div(tmin - P, q)) != 0) throw WindowTooSmall(window, "left end not stable");
  if (model.v_exponent(floor_div(tmax + P, q)) != 0) throw WindowTooSmall(window, "right end not stable");

  GradedTowerComplex c{p, q, i, window, height, 0, {}, {}, Rational(0)};
  for (std::int64_t t = tmin + p; t <= tmax; t += P)
    c.towers.push_back({Tower::Kind::B, t, floor_div(t, q), b_bottom(p, q, i, t), 0});
  std::size_t nb = c.towers.size();
  for (std::int64_t t = tmin; t <= tmax; t += P) {
    std::int64_t s = floor_div(t, q);
    std::int64_t bottom = b_bottom(p, q, i, t) - 2 * model.v_exponent(s) + 1;
    c.towers.push_back({Tower::Kind::A, t, s, bottom, 0});
    if (s == 0 && model.has_extra_generator()) c.towers.push_back({Tower::Kind::A, t, s, bottom, 0, true});
  }

  // Bottoms grow quadratically toward the ends for p > 0 and fall for p < 0, so anchor the cap at the
  // highest bottom near the middle, where the homology lives.
  std::optional<std::int64_t> anchor;
  for (const Tower& t : c.towers)
    if (std::abs(t.t) <= P + q) anchor = std::max(anchor.value_or(t.bottom), t.bottom);
  if (!anchor)
    for (const Tower& t : c.towers) anchor = std::max(anchor.value_or(t.bottom), t.bottom);
  c.cap = *anchor + 2 * height;
  for (Tower& t : c.towers) {
    t.levels = t.bottom <= c.cap ? (c.cap - t.bottom) / 2 + 1 : 0;
    if (t.extra) t.levels = std::min<std::int64_t>(t.levels, 1);
  }

  auto b_index = [&](std::int64_t t) -> std::optional<std::size_t> {
    if (t < tmin + p || t > tmax) return std::nullopt;
    return static_cast<std::size_t>((t - (tmin + p)) / P);
  };
  for (std::size_t k = nb; k < c.towers.size(); ++k) {
    const Tower& a = c.towers[k];
    if (auto b = b_index(a.t)) c.arrows.push_back({k, *b, a.extra ? 0 : model.v_exponent(a.s), false});
    if (a.extra) continue;
    if (auto b = b_index(a.t + p)) c.arrows.push_back({k, *b, model.h_exponent(a.s), true});
  }
  return c;
}

ConeHomology cone_homology(const GradedTowerComplex& cone) {
  GradedView view(cone);
  std::int64_t top = cone.cap - 1;
  // Positive surgery: the tower lives in ker D (A side); negative: in coker D (B side).
  std::int64_t d = tower_bottom(view, top, cone.p > 0 ? view.a_parity() : view.a_parity() + 1, cone.window);
  ConeHomology h;
  h.d = Rational(d) + cone.shift;
  for (std::int64_t g = view.lowest(); g <= top; ++g) {
    std::int64_t tower = g >= d && (g - d) % 2 == 0 ? 1 : 0;
    std::int64_t red = homology_rank(view, g) - tower;
    if (red < 0) throw SurgeryError("cone homology lost its tower at grading " + std::to_string(g));
    if (red == 0) continue;
    h.reduced[Rational(g) + cone.shift] = red;
    h.red_rank += red;
  }
  return h;
}

GradedTowerComplex build_cone(const KnotModel& model, std::int64_t p, std::int64_t q, std::int64_t i,
                              std::int64_t window, std::int64_t height) {
  GradedTowerComplex c = build_cone_relative(model, p, q, i, window, height);
  GradedTowerComplex u =
      model.kind == KnotKind::Unknot ? c : build_cone_relative(KnotModel::unknot(), p, q, i, window, height);
  c.shift = d_lens_surgery(c.p, c.q, c.i) - cone_homology(u).d;
  return c;
}

ConeHomology stable_cone_homology(const KnotModel& model, std::int64_t p, std::int64_t q, std::int64_t i) {
  SurgerySlope slope(p, q);
  std::optional<ConeHomology> prev;
  for (std::int64_t w = 2; w <= (std::int64_t{1} << 12); w *= 2) {
    std::int64_t height = 4 * (w + std::abs(slope.p) + slope.q);
    try {
      ConeHomology h = cone_homology(build_cone(model, slope.p, slope.q, i, w, height));
      if (prev && *prev == h) return h;
      prev = h;
    } catch (const WindowTooSmall&) {
      prev.reset();
    }
  }
  throw SurgeryError("mapping cone did not stabilise for " + slope.to_string());
}

Rational d_invariant(const KnotModel& model, std::int64_t p, std::int64_t q, std::int64_t i) {
  return stable_cone_homology(model, p, q, i).d;
}

std::int64_t hf_red_rank(const KnotModel& model, std::int64_t p, std::int64_t q, std::int64_t i) {
  return stable_cone_homology(model, p, q, i).red_rank;
}

std::vector<ConeHomology> cone_homology_all(const KnotModel& model, std::int64_t p, std::int64_t q) {
  SurgerySlope slope(p, q);
  std::int64_t P = std::abs(slope.p);
  std::vector<ConeHomology> out(static_cast<std::size_t>(P));
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < P; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = stable_cone_homology(model, slope.p, slope.q, i);
    } catch (...) {
#pragma omp critical
      err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

std::vector<Rational> d_invariant_all(const KnotModel& model, std::int64_t p, std::int64_t q) {
  std::vector<Rational> out;
  for (const auto& h : cone_homology_all(model, p, q)) out.push_back(h.d);
  return out;
}

bool is_lspace(const KnotModel& model, std::int64_t p, std::int64_t q) {
  SurgerySlope slope(p, q);
  std::int64_t P = std::abs(slope.p);
  bool reduced = false;
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < P; ++i) {
    bool skip;
#pragma omp atomic read
    skip = reduced;
    if (skip) continue;
    try {
      if (stable_cone_homology(model, slope.p, slope.q, i).red_rank != 0) {
#pragma omp atomic write
        reduced = true;
      }
    } catch (...) {
#pragma omp critical
      err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return !reduced;
}

Rational d_spin_shortcut(std::int64_t p, std::int64_t q) {
  if (p <= 0 || p % 2 == 0 || q < 1 || q > p) throw std::invalid_argument("shortcut needs odd p > 0 and 1 <= q <= p");
  if (gcd(p, q) != 1) throw NotCoprime(p, q);
  return d_lens_surgery(p, q, spin_index(p, q)) - (q % 2 == 1 ? 2 : 0);
}

}  // namespace surgery
