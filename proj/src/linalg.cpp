#include "coxforge/linalg.hpp"

namespace coxforge {

RatPolynomial charpoly(RatMatrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw InvalidArgument("charpoly needs a square matrix");
  if (n == 0) return RatPolynomial::constant(1);

  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && a[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(a[piv], a[j + 1]);
      for (auto& row : a) std::swap(row[piv], row[j + 1]);
    }
    for (std::size_t i = j + 2; i < n; ++i) {
      if (a[i][j] == 0) continue;
      Rational u = a[i][j] / a[j + 1][j];
      for (std::size_t k = 0; k < n; ++k) a[i][k] -= u * a[j + 1][k];
      for (std::size_t k = 0; k < n; ++k) a[k][j + 1] += u * a[k][i];
    }
  }

  // p_m = (t - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{i<j<=m} h_{j,j-1}) p_{i-1}
  std::vector<RatPolynomial> p(n + 1);
  p[0] = RatPolynomial::constant(1);
  const RatPolynomial t = RatPolynomial::x();
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = (t - RatPolynomial::constant(a[m - 1][m - 1])) * p[m - 1];
    Rational prod = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod *= a[i][i - 1];
      if (prod == 0) break;
      p[m] -= p[i - 1] * (prod * a[i - 1][m - 1]);
    }
  }
  return p[n];
}

IntPolynomial charpoly_integer(const RatMatrix& a) {
  RatPolynomial r = charpoly(a);
  std::vector<Integer> v;
  for (const auto& c : r.coeffs()) {
    if (c.get_den() != 1) throw InvalidArgument("charpoly of an integer matrix came out non-integral");
    v.emplace_back(c.get_num());
  }
  return IntPolynomial(std::move(v));
}

std::vector<std::vector<Integer>> integer_kernel(const std::vector<std::vector<Integer>>& a) {
  if (a.empty()) return {};
  const std::size_t rows = a.size(), cols = a[0].size();
  // Work on [A; I] and column-reduce A to echelon form with unimodular steps.
  std::vector<std::vector<Integer>> m = a;
  std::vector<std::vector<Integer>> u(cols, std::vector<Integer>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
  auto colop = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t r = 0; r < rows; ++r) m[r][dst] -= q * m[r][src];
    for (std::size_t r = 0; r < cols; ++r) u[r][dst] -= q * u[r][src];
  };
  auto colswap = [&](std::size_t x, std::size_t y) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][x], m[r][y]);
    for (std::size_t r = 0; r < cols; ++r) std::swap(u[r][x], u[r][y]);
  };
  std::size_t pivot_col = 0;
  for (std::size_t r = 0; r < rows && pivot_col < cols; ++r) {
    // Euclid across columns pivot_col.. on row r.
    while (true) {
      std::size_t best = cols;
      for (std::size_t c = pivot_col; c < cols; ++c)
        if (m[r][c] != 0 && (best == cols || abs(m[r][c]) < abs(m[r][best]))) best = c;
      if (best == cols) break;
      colswap(pivot_col, best);
      bool done = true;
      for (std::size_t c = pivot_col + 1; c < cols; ++c) {
        if (m[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[r][pivot_col].get_mpz_t());
        colop(c, pivot_col, q);
        if (m[r][c] != 0) done = false;
      }
      if (done) {
        ++pivot_col;
        break;
      }
    }
  }
  std::vector<std::vector<Integer>> out;
  for (std::size_t c = pivot_col; c < cols; ++c) {
    std::vector<Integer> v(cols);
    for (std::size_t r = 0; r < cols; ++r) v[r] = u[r][c];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace coxforge
