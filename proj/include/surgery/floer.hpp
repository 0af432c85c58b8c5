#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "surgery/arith.hpp"
#include "surgery/lens.hpp"

namespace surgery {

struct WindowTooSmall : SurgeryError {
  WindowTooSmall(std::int64_t window, const std::string& why)
      : SurgeryError("window " + std::to_string(window) + " too small: " + why) {}
};

/// One truncated T+ ladder. Integer relative grading of the bottom element; `levels` elements
/// at bottom, bottom + 2, ...
struct Tower {
  enum class Kind { A, B };
  Kind kind;
  std::int64_t t;
  std::int64_t s;  // floor(t/q), meaningful for A towers
  std::int64_t bottom;
  std::int64_t levels;
  bool extra = false;  // A_0 copy carrying the left model's extra class
};

/// A -> B arrow given by U^power; v arrows land in B_t, h arrows in B_{t+p}.
struct Arrow {
  std::size_t from, to;
  std::int64_t power;
  bool is_h;
};

/// The Spin^c class i summand of the rational-surgery mapping cone, cut to |floor(t/q)| <= window
/// and to gradings <= cap. Absolute grading = relative + shift.
struct GradedTowerComplex {
  std::int64_t p, q, i;
  std::int64_t window, height, cap;
  std::vector<Tower> towers;
  std::vector<Arrow> arrows;
  Rational shift;

  std::vector<std::size_t> towers_at(Tower::Kind kind, std::int64_t t) const;
};

struct ConeHomology {
  Rational d;
  std::int64_t red_rank = 0;
  std::map<Rational, std::int64_t> reduced;  // absolute grading -> rank of HF_red there
  friend bool operator==(const ConeHomology&, const ConeHomology&) = default;
};

/// Builds the class i summand. The shift is fixed by the unknot cone of the same slope, whose tower
/// bottom is put at d(S^3_{p/q}(U), i).
GradedTowerComplex build_cone(const KnotModel& model, std::int64_t p, std::int64_t q, std::int64_t i,
                              std::int64_t window, std::int64_t height);

/// Same complex with shift 0.
GradedTowerComplex build_cone_relative(const KnotModel& model, std::int64_t p, std::int64_t q, std::int64_t i,
                                       std::int64_t window, std::int64_t height);

/// Homology over F_2 of a single truncated build. Gradings are those of the complex (relative + shift).
/// Throws WindowTooSmall when the cap is too low to separate the tower from reduced classes.
ConeHomology cone_homology(const GradedTowerComplex& cone);

/// Window from 2 and height 4 (window + |p| + q), doubled until two successive results agree.
ConeHomology stable_cone_homology(const KnotModel& model, std::int64_t p, std::int64_t q, std::int64_t i);

Rational d_invariant(const KnotModel& model, std::int64_t p, std::int64_t q, std::int64_t i);
std::int64_t hf_red_rank(const KnotModel& model, std::int64_t p, std::int64_t q, std::int64_t i);

/// All |p| classes, computed in parallel.
std::vector<ConeHomology> cone_homology_all(const KnotModel& model, std::int64_t p, std::int64_t q);
std::vector<Rational> d_invariant_all(const KnotModel& model, std::int64_t p, std::int64_t q);

bool is_lspace(const KnotModel& model, std::int64_t p, std::int64_t q);

/// Spin d of a right-trefoil surgery with p odd, 1 <= q <= p: the lens value, minus 2 when q is odd.
Rational d_spin_shortcut(std::int64_t p, std::int64_t q);

}  // namespace surgery
