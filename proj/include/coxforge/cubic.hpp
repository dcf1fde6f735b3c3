#pragma once

#include <optional>
#include <vector>

#include "coxforge/planemaps.hpp"

namespace coxforge {

/// Point (t, i) of the cubic C = L1 u L2 u L3, x2 x3 (x2 - x3) = 0, with
/// gamma_1(t) = [-t:1:1], gamma_2(t) = [t:1:0], gamma_3(t) = [t:0:1].
/// The common point [1:0:0] is t = infinity on every line.
struct CubicPoint {
  NFElem t;
  int line = 1;
  bool at_infinity = false;

  static CubicPoint infinity(const FieldPtr& f) { return {NFElem::zero(f), 0, true}; }
  friend bool operator==(const CubicPoint& a, const CubicPoint& b) {
    if (a.at_infinity || b.at_infinity) return a.at_infinity == b.at_infinity;
    return a.line == b.line && a.t == b.t;
  }
  friend bool operator!=(const CubicPoint& a, const CubicPoint& b) { return !(a == b); }
};

ProjPoint embed(const CubicPoint& p);
/// Inverse of embed; nullopt when the point is off C.
std::optional<CubicPoint> locate(const ProjPoint& p);

/// t1 + t2 + t3 = 0 for one point on each line.
bool collinear(const CubicPoint& p1, const CubicPoint& p2, const CubicPoint& p3);
/// The same question answered by det[embed(p1) embed(p2) embed(p3)] = 0.
bool collinear_by_determinant(const CubicPoint& p1, const CubicPoint& p2, const CubicPoint& p3);

/// (t, i) -> (a t + b, tau(i)).
struct RestrictionMap {
  NFElem a;
  NFElem b;
  Permutation tau{3};

  CubicPoint apply(const CubicPoint& p) const;
  RestrictionMap compose(const RestrictionMap& inner) const;  // this o inner
};

/// Restriction of f to C, read off exactly from sampled images; throws
/// NotCubicFixing if an image leaves C or the samples disagree.
RestrictionMap restriction_of(const QuadraticMap& f);

struct NonodalKernel {
  int n = 0;
  std::vector<std::vector<Integer>> basis;          // integer relations sum m_j (1 + t_j) = 0
  bool meets_nonnegative_orthant = false;           // some nonzero m >= 0 in the span
  std::vector<Rational> witness;                    // such an m when it exists
};

/// Relations among the parameters 1 + t_j (j = 1..n) of the base locus.
NonodalKernel nonodal_kernel(int n);

/// Exact feasibility of {x >= 0, A x = b} by phase-one simplex (Bland's
/// rule). Returns a feasible x or nullopt.
std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<Rational>>& a,
                                                    const std::vector<Rational>& b);

}  // namespace coxforge
