#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "coxforge/polynomial.hpp"

namespace coxforge {

/// Closed rational interval [lo, hi].
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool overlaps(const RationalInterval& o) const { return !(hi < o.lo || o.hi < lo); }
  double approx() const { return midpoint().get_d(); }
  static RationalInterval point(const Rational& x) { return {x, x}; }
};

/// 10^-12, the default enclosure width.
Rational default_eps();
/// Parses "1e-12", "1/1000000", "0.0001".
Rational parse_rational(const std::string& text);

/// Sturm sequence of a squarefree polynomial; counts distinct real roots.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);

  int sign_changes_at(const Rational& x) const;
  int sign_changes_at_pos_inf() const;
  int sign_changes_at_neg_inf() const;
  /// Number of real roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const;
  int count_above(const Rational& a) const;   // (a, +inf)
  int count_below(const Rational& b) const;   // (-inf, b]
  int count_all() const;

 private:
  std::vector<IntPolynomial> seq_;
};

/// Bound B with every root of p in (-B, B).
Rational cauchy_bound(const IntPolynomial& p);

/// Isolating intervals of the real roots of a squarefree p, ascending, each of
/// width <= eps. Integer roots, and roots met exactly while bisecting, come
/// back as point intervals.
std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& p, const Rational& eps);

/// Root locations of a squarefree polynomial relative to the unit circle.
/// The five location counts sum to the degree.
struct RootClassification {
  int degree = 0;
  int n_real_gt1 = 0;            // real roots x > 1
  int n_real_lt_neg1 = 0;        // real roots x < -1
  int n_real_in_unit = 0;        // real roots |x| < 1
  int n_on_circle = 0;           // |z| = 1, including +-1
  int n_off_circle_complex = 0;  // non-real with |z| != 1
  int n_pm_one = 0;              // how many of the on-circle roots are +-1
  bool self_reciprocal = false;
  std::optional<RationalInterval> largest_real;

  int total() const {
    return n_real_gt1 + n_real_lt_neg1 + n_real_in_unit + n_on_circle + n_off_circle_complex;
  }
  /// Roots with |z| > 1; only determined for self-reciprocal input, where
  /// off-circle roots pair up as z, 1/z.
  int outside_circle() const {
    if (!self_reciprocal) throw Inconclusive("outside-circle count needs a self-reciprocal polynomial");
    return n_real_gt1 + n_real_lt_neg1 + n_off_circle_complex / 2;
  }
};

/// Exact classification. Real roots are counted with Sturm sequences; roots on
/// the unit circle come from the reciprocal part gcd(p, reverse(p)), whose
/// trace polynomial g (p(t) = t^m g(t + 1/t)) has a real root in (-2, 2) for
/// every conjugate pair on the circle. The non-reciprocal cofactor cannot have
/// roots on the circle. eps bounds the width of largest_real.
RootClassification classify_roots(const IntPolynomial& p, const Rational& eps);

/// The trace polynomial g of a reciprocal polynomial of even degree 2m:
/// p(t) = t^m g(t + 1/t).
IntPolynomial trace_polynomial(const IntPolynomial& reciprocal);

/// Numeric roots (Aberth iteration in long double). Approximate; used to pick
/// candidates that are then certified exactly.
std::vector<std::complex<long double>> approximate_roots(const IntPolynomial& p);

}  // namespace coxforge
