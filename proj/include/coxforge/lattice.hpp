#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxforge/permutation.hpp"
#include "coxforge/polynomial.hpp"
#include "coxforge/roots.hpp"

namespace coxforge {

using LatticeVector = std::vector<std::int64_t>;

/// x.y for the form diag(1, -1, ..., -1) on Z^{1,n}.
std::int64_t pairing(const LatticeVector& x, const LatticeVector& y);
/// e_i in Z^{1,n}.
LatticeVector basis_vector(int i, int n);
/// kappa_n = -3 e_0 + e_1 + ... + e_n.
LatticeVector kappa(int n);

/// Integer (n+1)x(n+1) matrix on Z^{1,n}; column j is the image of e_j.
/// Arithmetic is checked: any int64 overflow throws Overflow.
class LatticeIsometry {
 public:
  LatticeIsometry() = default;
  static LatticeIsometry identity(int n);
  /// Row-major entries; validates the shape only.
  static LatticeIsometry from_rows(int n, std::vector<std::int64_t> row_major);
  /// e_0 fixed, e_i -> e_{perm(i)}.
  static LatticeIsometry from_permutation(const Permutation& perm);

  int n() const { return n_; }
  int dim() const { return n_ + 1; }
  std::int64_t operator()(int row, int col) const { return m_[static_cast<std::size_t>(row * dim() + col)]; }
  const std::vector<std::int64_t>& entries() const { return m_; }
  LatticeVector column(int j) const;
  LatticeVector apply(const LatticeVector& v) const;

  bool preserves_form() const;
  bool fixes(const LatticeVector& v) const { return apply(v) == v; }
  bool is_identity() const;
  std::int64_t trace() const;

  /// J M^T J, the inverse of an isometry.
  LatticeIsometry inverse() const;
  LatticeIsometry pow(long k) const;
  /// Smallest k >= 1 with M^k = I, or 0 if none up to bound.
  long order(long bound) const;

  friend LatticeIsometry operator*(const LatticeIsometry& a, const LatticeIsometry& b);
  friend bool operator==(const LatticeIsometry& a, const LatticeIsometry& b) { return a.n_ == b.n_ && a.m_ == b.m_; }
  friend bool operator!=(const LatticeIsometry& a, const LatticeIsometry& b) { return !(a == b); }
  friend bool operator<(const LatticeIsometry& a, const LatticeIsometry& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.m_ < b.m_;
  }

  /// Column images as text, e.g. "e0 -> 2e0 - e1 - e2 - e3".
  std::string describe() const;

 private:
  int n_ = 0;
  std::vector<std::int64_t> m_;
};

/// Reflection x -> x + (x.a) a through a root with a.a = -2.
LatticeIsometry reflection(const LatticeVector& root);
/// s_0 (through e0 - e1 - e2 - e3) or s_i (swapping e_i, e_{i+1}), 0 <= i <= n-1.
LatticeIsometry simple_reflection(int i, int n);
/// Reflection through e0 - e_i - e_j - e_k.
LatticeIsometry cremona_reflection(int i, int j, int k, int n);
/// s_{w[0]} s_{w[1]} ... as a matrix product.
LatticeIsometry word_element(const std::vector<int>& letters, int n);

IntPolynomial char_poly(const LatticeIsometry& w);
std::int64_t trace_power(const LatticeIsometry& w, long k);
/// 2 + trace(w^k).
std::int64_t lefschetz_number(const LatticeIsometry& w, long k);
/// Enclosure of the largest root modulus of char_poly(w), width <= eps.
RationalInterval spectral_radius(const LatticeIsometry& w, const Rational& eps);
/// Same, for a polynomial whose roots lie on or are symmetric about the circle.
RationalInterval spectral_radius_of(const IntPolynomial& p, const Rational& eps);

}  // namespace coxforge
