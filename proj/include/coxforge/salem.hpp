#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxforge/polynomial.hpp"
#include "coxforge/roots.hpp"

namespace coxforge {

struct SalemVerdict {
  bool is_salem = false;
  int degree = 0;
  std::optional<RationalInterval> largest_root;
  RootClassification witness;
  bool monic = false;
  bool reciprocal = false;
  bool squarefree = false;
  bool cyclotomic_free = false;  // no Phi_k factor for k <= 60
  std::string reason;            // first failed condition, empty when Salem
};

/// Monic, squarefree, reciprocal, degree >= 4, no cyclotomic factor, one root
/// > 1, one in (0, 1), the rest non-real on the unit circle. Such a
/// polynomial is automatically irreducible.
SalemVerdict is_salem(const IntPolynomial& p, const Rational& eps = default_eps());

/// Verdict on the squarefree polynomial whose roots are the k-th powers of
/// the roots of p.
SalemVerdict power_is_salem(const IntPolynomial& p, unsigned k, const Rational& eps = default_eps());

struct ProductEntry {
  std::string label;  // "dp*dq", "dp/dq", "dq/dp", "1/(dp*dq)"
  IntPolynomial polynomial;
  SalemVerdict verdict;
  bool minimal_polynomial_certified = false;  // irreducibility screen passed
};

struct ProductClass {
  enum class Kind { CommonPowerBase, NonSalemProducts };
  Kind kind = Kind::NonSalemProducts;
  /// CommonPowerBase: dp = beta^exponent_p, dq = beta^exponent_q, beta a root of base.
  std::optional<IntPolynomial> base;
  int exponent_p = 0;
  int exponent_q = 0;
  std::vector<ProductEntry> products;  // NonSalemProducts only
  bool all_products_fail() const;
};

inline constexpr int kMaxRatioDenominator = 12;

/// Either a common Salem base for the two numbers (certified by exact power
/// polynomials), or the four product/quotient polynomials with their
/// verdicts. Throws SearchBoundExceeded when the ratio of logarithms looks
/// rational but no integer base polynomial is found.
ProductClass product_class(const IntPolynomial& p, const IntPolynomial& q, const Rational& eps = default_eps());

struct RootPowerEntry {
  int k = 0;
  IntPolynomial polynomial;  // p(t^k), whose roots are the k-th roots
  bool irreducible_certified = false;
  int roots_outside_circle = 0;
  std::optional<RationalInterval> largest_root;
};

struct GapCheck {
  std::vector<RootPowerEntry> roots;  // k = 2, 3, 4
  RationalInterval lehmer_root;
  bool fourth_root_below_lehmer = false;  // exact interval comparison
  bool low_roots_not_salem = false;       // k = 2, 3 have >= 2 roots outside
  bool passed() const { return fourth_root_below_lehmer && low_roots_not_salem; }
};

/// For a Salem polynomial p: its k-th roots of the top root against Lehmer's
/// number.
GapCheck dpower_gap_check(const IntPolynomial& p, const Rational& eps = default_eps());

}  // namespace coxforge
