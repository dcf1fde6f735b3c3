#pragma once

// Independent reference computations used only by the tests. None of these
// share code with the library routines they check.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "coxforge/lattice.hpp"

namespace oracle {

using coxforge::Integer;
using coxforge::IntPolynomial;
using coxforge::Rational;
using IntMat = std::vector<std::vector<long long>>;
using QMat = std::vector<std::vector<Rational>>;

inline IntMat to_mat(const coxforge::LatticeIsometry& m) {
  IntMat a(static_cast<std::size_t>(m.dim()), std::vector<long long>(static_cast<std::size_t>(m.dim())));
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m(r, c);
  return a;
}

inline IntMat mul(const IntMat& a, const IntMat& b) {
  const std::size_t n = a.size();
  IntMat c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline long long trace(const IntMat& a) {
  long long t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

inline long long trace_pow(const IntMat& a, int k) {
  IntMat p = a;
  for (int i = 1; i < k; ++i) p = mul(p, a);
  return trace(p);
}

/// Faddeev-LeVerrier: c_{n-k} = -tr(A M_k) / k with M_1 = I, M_{k+1} = A M_k + c_{n-k} I.
inline IntPolynomial faddeev_charpoly(const IntMat& a) {
  const std::size_t n = a.size();
  QMat A(n, std::vector<Rational>(n)), M(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) A[i][j] = Rational(static_cast<long>(a[i][j]));
    M[i][i] = 1;
  }
  std::vector<Rational> c(n + 1, 0);
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    QMat AM(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (A[i][l] != 0)
          for (std::size_t j = 0; j < n; ++j) AM[i][j] += A[i][l] * M[l][j];
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += AM[i][i];
    c[n - k] = -tr / static_cast<long>(k);
    M = AM;
    for (std::size_t i = 0; i < n; ++i) M[i][i] += c[n - k];
  }
  std::vector<Integer> out;
  for (const auto& q : c) out.push_back(q.get_num());
  return IntPolynomial(out);
}

/// Exact determinant by fraction Gaussian elimination.
inline Rational det(QMat m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      d = -d;
    }
    d *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      Rational f = m[r][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return d;
}

/// Resultant as the determinant of the Sylvester matrix.
inline Integer sylvester_resultant(const IntPolynomial& a, const IntPolynomial& b) {
  const int m = a.degree(), n = b.degree();
  const std::size_t N = static_cast<std::size_t>(m + n);
  QMat s(N, std::vector<Rational>(N, 0));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = a[static_cast<std::size_t>(m - i)];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = b[static_cast<std::size_t>(n - i)];
  return det(s).get_num();
}

/// Durand-Kerner roots in long double.
inline std::vector<std::complex<long double>> roots(const IntPolynomial& p) {
  using C = std::complex<long double>;
  const int d = p.degree();
  std::vector<C> z(static_cast<std::size_t>(d));
  const C seed(0.4L, 0.9L);
  for (int i = 0; i < d; ++i) z[static_cast<std::size_t>(i)] = std::pow(seed, i);
  const long double lead = p.leading().get_d();
  auto eval = [&](C x) {
    C acc = 0;
    for (int i = d; i >= 0; --i) acc = acc * x + C(p[static_cast<std::size_t>(i)].get_d() / lead);
    return acc;
  };
  for (int it = 0; it < 2000; ++it) {
    long double move = 0;
    for (int i = 0; i < d; ++i) {
      C den = 1;
      for (int j = 0; j < d; ++j)
        if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      C step = eval(z[static_cast<std::size_t>(i)]) / den;
      z[static_cast<std::size_t>(i)] -= step;
      move = std::max(move, std::abs(step));
    }
    if (move < 1e-17L) break;
  }
  return z;
}

inline long double max_modulus(const IntPolynomial& p) {
  long double m = 0;
  for (auto r : roots(p)) m = std::max(m, std::abs(r));
  return m;
}

}  // namespace oracle
