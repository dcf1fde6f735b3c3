#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "coxforge/numberfield.hpp"
#include "coxforge/permutation.hpp"

namespace coxforge {

/// Point of P^2 over Q(alpha) in homogeneous coordinates.
struct ProjPoint {
  std::array<NFElem, 3> x;

  static ProjPoint make(const FieldPtr& f, const Rational& a, const Rational& b, const Rational& c);
  const FieldPtr& field() const { return x[0].field(); }
  bool is_zero() const { return x[0].is_zero() && x[1].is_zero() && x[2].is_zero(); }
  /// Scaled so the last nonzero coordinate is 1.
  ProjPoint canonical() const;
  std::string to_string() const;
  /// Equality up to a nonzero scalar (all 2x2 minors vanish).
  friend bool operator==(const ProjPoint& a, const ProjPoint& b);
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
};

/// Coordinate point e_i, i in 1..3.
ProjPoint coordinate_point(const FieldPtr& f, int i);
/// Point with small random coefficients in every power-basis slot.
ProjPoint random_point(const FieldPtr& f, std::mt19937_64& rng);

/// 3x3 matrix over Q(alpha), acting on column vectors.
struct Mat3 {
  std::array<std::array<NFElem, 3>, 3> a;

  static Mat3 identity(const FieldPtr& f);
  static Mat3 from_columns(const ProjPoint& c1, const ProjPoint& c2, const ProjPoint& c3);
  const FieldPtr& field() const { return a[0][0].field(); }
  ProjPoint column(int j) const;  // 1-based
  ProjPoint apply(const ProjPoint& p) const;
  NFElem det() const;
  Mat3 adjugate() const;
  Mat3 inverse() const;
  Mat3 scaled(const NFElem& s) const;
  bool equal_up_to_scalar(const Mat3& o) const;
  friend Mat3 operator*(const Mat3& x, const Mat3& y);
  friend bool operator==(const Mat3& x, const Mat3& y) { return x.a == y.a; }
};

enum class CremonaKind { J1, J2, J3 };
std::string kind_name(CremonaKind k);

/// J3 [x1:x2:x3] -> [x2x3 : x1x3 : x1x2], J2 -> [x1x3 : x2x3 : x1^2],
/// J1 -> [x1^2 : x1x2 : x2^2 - x1x3]. Throws Indeterminate(i) at e_i.
ProjPoint cremona_apply(CremonaKind kind, const ProjPoint& p);

/// Six coefficients of a ternary quadratic form, order x1^2, x2^2, x3^2,
/// x1x2, x1x3, x2x3.
using QuadForm = std::array<NFElem, 6>;

/// T^- o J o (T^+)^{-1}.
class QuadraticMap {
 public:
  QuadraticMap(CremonaKind kind, Mat3 t_minus, Mat3 t_plus);

  CremonaKind kind() const { return kind_; }
  const Mat3& t_minus() const { return t_minus_; }
  const Mat3& t_plus() const { return t_plus_; }
  const FieldPtr& field() const { return t_minus_.field(); }

  /// Throws Indeterminate(i) when p = T^+ e_i.
  ProjPoint apply(const ProjPoint& p) const;
  /// Basic maps only.
  QuadraticMap inverse() const;
  /// The three component forms of the map (projective representative).
  std::array<QuadForm, 3> forms() const;
  /// Same map as a rational map (forms proportional).
  bool same_map(const QuadraticMap& o) const;

 private:
  CremonaKind kind_;
  Mat3 t_minus_, t_plus_, t_plus_adj_;
};

/// A line {x : l1 x1 + l2 x2 + l3 x3 = 0}.
using Line = std::array<NFElem, 3>;
bool on_line(const Line& l, const ProjPoint& p);

struct ExceptionalData {
  std::array<ProjPoint, 3> p_plus;   // T^+ e_i, indeterminacy of f
  std::array<ProjPoint, 3> p_minus;  // T^- e_i, indeterminacy of f^{-1}
  std::array<Line, 3> exc_lines;     // E_i^+ = T^+{x_i = 0}
};
ExceptionalData exceptional_data(const QuadraticMap& f);

/// (n1, n2, n3, sigma); a length of 0 means no return within max_iter.
struct OrbitData {
  std::array<int, 3> lengths{0, 0, 0};
  Permutation sigma{3};
  std::optional<Permutation> tau;
  bool finite() const { return lengths[0] > 0 && lengths[1] > 0 && lengths[2] > 0; }
  int total() const { return lengths[0] + lengths[1] + lengths[2]; }
  std::string to_string() const;
  friend bool operator==(const OrbitData& a, const OrbitData& b) {
    return a.lengths == b.lengths && a.sigma == b.sigma;
  }
};

inline constexpr int kDefaultMaxIter = 100;

/// Tracks f^j(E_i^+) = f^{j-1}(p_i^-) until it meets some p_k^+. Candidate
/// coincidences are found on reductions modulo primes (a mismatch there is a
/// proof of mismatch) and then confirmed exactly.
OrbitData orbit_data(const QuadraticMap& f, int max_iter = kDefaultMaxIter);

}  // namespace coxforge
