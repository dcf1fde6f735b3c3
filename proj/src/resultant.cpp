#include "coxforge/resultant.hpp"

#include <algorithm>
#include <cstdint>

#include "coxforge/modp.hpp"

namespace coxforge {

namespace {

// Exact quotient in Z[t]; the Bareiss identities guarantee divisibility.
IntPolynomial zdiv_exact(const IntPolynomial& num, const IntPolynomial& den) {
  if (num.is_zero()) return {};
  if (den.degree() == 0) {
    std::vector<Integer> v = num.coeffs();
    for (auto& c : v) {
      if (!mpz_divisible_p(c.get_mpz_t(), den[0].get_mpz_t()))
        throw NotDivisible("Bareiss step is not exact");
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), den[0].get_mpz_t());
    }
    return IntPolynomial(std::move(v));
  }
  std::vector<Integer> r = num.coeffs();
  const int dn = den.degree();
  if (num.degree() < dn) throw NotDivisible("Bareiss step is not exact");
  const Integer& lc = den.leading();
  std::vector<Integer> q(static_cast<std::size_t>(num.degree() - dn + 1));
  for (int i = num.degree(); i >= dn; --i) {
    Integer& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) throw NotDivisible("Bareiss step is not exact");
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (int j = 0; j <= dn; ++j) r[static_cast<std::size_t>(i - dn + j)] -= c * den.coeffs()[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(i - dn)] = std::move(c);
  }
  for (const auto& c : r)
    if (c != 0) throw NotDivisible("Bareiss step is not exact");
  return IntPolynomial(std::move(q));
}

int bdegree(const BivariatePolynomial& a) {
  int d = static_cast<int>(a.size()) - 1;
  while (d >= 0 && a[static_cast<std::size_t>(d)].is_zero()) --d;
  return d;
}

}  // namespace

IntPolynomial resultant_x(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  const int m = bdegree(a), n = bdegree(b);
  if (m < 0 || n < 0) return {};
  if (m == 0 && n == 0) return IntPolynomial::constant(1);
  const int N = m + n;
  std::vector<std::vector<IntPolynomial>> M(static_cast<std::size_t>(N), std::vector<IntPolynomial>(static_cast<std::size_t>(N)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = a[static_cast<std::size_t>(m - j)];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = b[static_cast<std::size_t>(n - j)];

  IntPolynomial prev = IntPolynomial::constant(1);
  bool negate = false;
  for (int k = 0; k < N - 1; ++k) {
    auto K = static_cast<std::size_t>(k);
    if (M[K][K].is_zero()) {
      std::size_t r = K + 1;
      while (r < static_cast<std::size_t>(N) && M[r][K].is_zero()) ++r;
      if (r == static_cast<std::size_t>(N)) return {};
      std::swap(M[K], M[r]);
      negate = !negate;
    }
    for (std::size_t i = K + 1; i < static_cast<std::size_t>(N); ++i) {
      for (std::size_t j = K + 1; j < static_cast<std::size_t>(N); ++j)
        M[i][j] = zdiv_exact(M[K][K] * M[i][j] - M[i][K] * M[K][j], prev);
      M[i][K] = IntPolynomial();
    }
    prev = M[K][K];
  }
  IntPolynomial det = M[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(N - 1)];
  return negate ? -det : det;
}

Integer resultant(const IntPolynomial& a, const IntPolynomial& b) {
  BivariatePolynomial A, B;
  for (const auto& c : a.coeffs()) A.push_back(IntPolynomial::constant(c));
  for (const auto& c : b.coeffs()) B.push_back(IntPolynomial::constant(c));
  IntPolynomial r = resultant_x(A, B);
  return r[0];
}

IntPolynomial min_poly_of_product(const IntPolynomial& p, const IntPolynomial& q) {
  if (!p.is_monic() || !q.is_monic()) throw InvalidArgument("min_poly_of_product needs monic inputs");
  BivariatePolynomial A, B(q.size());
  for (const auto& c : p.coeffs()) A.push_back(IntPolynomial::constant(c));
  // x^n q(t/x) = sum_j q_j t^j x^{n-j}
  const std::size_t n = static_cast<std::size_t>(q.degree());
  for (std::size_t j = 0; j <= n; ++j) B[n - j] = IntPolynomial::monomial(q[j], j);
  return squarefree_part(resultant_x(A, B));
}

IntPolynomial power_polynomial(const IntPolynomial& p, unsigned k) {
  if (k == 0) throw InvalidArgument("power_polynomial needs k >= 1");
  if (p.degree() < 1) throw InvalidArgument("power_polynomial needs a nonconstant polynomial");
  if (k == 1) return primitive_part(p);
  BivariatePolynomial A, B(k + 1);
  for (const auto& c : p.coeffs()) A.push_back(IntPolynomial::constant(c));
  B[0] = IntPolynomial::x();
  B[k] = IntPolynomial::constant(-1);
  return primitive_part(resultant_x(A, B));
}

namespace {

using modp::Fp;
using modp::FpPoly;
using modp::u64;

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Degrees of the irreducible factors of squarefree f over F_ell.
std::vector<int> ddf_degrees(const Fp& F, FpPoly f) {
  std::vector<int> out;
  FpPoly x{0, 1};
  FpPoly h = x;
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = F.powmod(h, F.ell, f);
    FpPoly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = F.sub(hx[1], 1);
    Fp::trim(hx);
    FpPoly g = F.gcd(f, hx);
    if (g.size() > 1) {
      int cnt = static_cast<int>(g.size() - 1) / d;
      for (int i = 0; i < cnt; ++i) out.push_back(d);
      f = F.div(f, g);
      h = F.mod(h, f);
    }
  }
  if (f.size() > 1) out.push_back(static_cast<int>(f.size()) - 1);
  return out;
}

}  // namespace

IrreducibilityScreen irreducibility_screen(const IntPolynomial& p, int max_primes) {
  if (p.degree() < 1) throw InvalidArgument("irreducibility screen of a constant");
  if (!is_squarefree(p)) throw InvalidArgument("irreducibility screen needs a squarefree polynomial");
  const int deg = p.degree();
  std::vector<bool> feasible(static_cast<std::size_t>(deg + 1), true);
  IrreducibilityScreen out;
  for (u64 ell = 3; static_cast<int>(out.primes.size()) < max_primes && ell < 100000; ell += 2) {
    if (!is_prime(ell)) continue;
    Fp F{ell};
    FpPoly f;
    for (const auto& c : p.coeffs()) {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), ell);
      f.push_back(r.get_ui());
    }
    Fp::trim(f);
    if (static_cast<int>(f.size()) - 1 != deg) continue;
    if (F.gcd(f, F.derivative(f)).size() != 1) continue;
    std::vector<int> degs = ddf_degrees(F, f);
    std::vector<bool> sums(static_cast<std::size_t>(deg + 1), false);
    sums[0] = true;
    for (int d : degs)
      for (int s = deg; s >= d; --s)
        if (sums[static_cast<std::size_t>(s - d)]) sums[static_cast<std::size_t>(s)] = true;
    for (int s = 0; s <= deg; ++s) feasible[static_cast<std::size_t>(s)] = feasible[static_cast<std::size_t>(s)] && sums[static_cast<std::size_t>(s)];
    out.primes.push_back(ell);
  }
  for (int s = 1; s < deg; ++s)
    if (feasible[static_cast<std::size_t>(s)]) out.possible_factor_degrees.push_back(s);
  return out;
}

}  // namespace coxforge
