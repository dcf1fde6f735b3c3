#include "coxforge/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

namespace coxforge {

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.emplace_back(c / g);
  return IntPolynomial(std::move(v));
}

IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    Rational s = c * l;
    v.emplace_back(s.get_num());
  }
  return primitive_part(IntPolynomial(std::move(v)));
}

RatDivMod divmod(const RatPolynomial& num, const RatPolynomial& den) {
  if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (num.degree() < den.degree()) return {RatPolynomial{}, num};
  std::vector<Rational> r = num.coeffs();
  const int dn = den.degree();
  const Rational& lc = den.leading();
  std::vector<Rational> q(static_cast<std::size_t>(num.degree() - dn + 1));
  for (int i = num.degree(); i >= dn; --i) {
    Rational c = r[static_cast<std::size_t>(i)] / lc;
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - dn)] = c;
    for (int j = 0; j <= dn; ++j) r[static_cast<std::size_t>(i - dn + j)] -= c * den.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(dn));
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial rem(const RatPolynomial& num, const RatPolynomial& den) { return divmod(num, den).remainder; }

IntPolynomial poly_divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw DivisionByZero("poly_divide_exact by the zero polynomial");
  auto [q, r] = divmod(to_rational(num), to_rational(den));
  if (!r.is_zero())
    throw NotDivisible("(" + den.to_string() + ") does not divide (" + num.to_string() + ")");
  std::vector<Integer> v;
  v.reserve(q.size());
  for (const auto& c : q.coeffs()) {
    if (c.get_den() != 1) throw NotDivisible("quotient has non-integral coefficient " + c.get_str());
    v.emplace_back(c.get_num());
  }
  return IntPolynomial(std::move(v));
}

bool divides(const IntPolynomial& den, const IntPolynomial& num) {
  if (den.is_zero()) return num.is_zero();
  return rem(to_rational(num), to_rational(den)).is_zero();
}

namespace {

RatPolynomial make_monic(RatPolynomial p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading();
  return p * inv;
}

}  // namespace

RatPolynomial monic_gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RatPolynomial r = rem(x, y);
    // Rescaling keeps rational coefficients from growing between steps.
    x = std::move(y);
    y = r.is_zero() ? r : to_rational(primitive_part(r));
  }
  return make_monic(x);
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  return primitive_part(monic_gcd(to_rational(a), to_rational(b)));
}

ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial r0 = a, r1 = b;
  RatPolynomial s0 = RatPolynomial::constant(1), s1;
  RatPolynomial t0, t1 = RatPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial s2 = s0 - q * s1;
    RatPolynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return primitive_part(p);
  IntPolynomial g = gcd(p, p.derivative());
  return primitive_part(poly_divide_exact(primitive_part(p), g));
}

bool is_squarefree(const IntPolynomial& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

const IntPolynomial& cyclotomic(unsigned k) {
  if (k == 0) throw InvalidArgument("cyclotomic order must be >= 1");
  static std::mutex mu;
  static std::map<unsigned, IntPolynomial> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(k); it != cache.end()) return it->second;
  // Phi_k = (t^k - 1) / prod_{d | k, d < k} Phi_d, computed bottom-up.
  for (unsigned m = 1; m <= k; ++m) {
    if (cache.count(m) || k % m != 0) continue;
    IntPolynomial acc = IntPolynomial::monomial(1, m) - IntPolynomial::constant(1);
    for (unsigned d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      acc = poly_divide_exact(acc, cache.at(d));
    }
    cache.emplace(m, std::move(acc));
  }
  return cache.at(k);
}

CyclotomicSplit split_cyclotomic(const IntPolynomial& p, unsigned max_order) {
  if (p.is_zero()) throw InvalidArgument("split_cyclotomic of the zero polynomial");
  CyclotomicSplit out{p, {}};
  for (unsigned k = 1; k <= max_order && out.remainder.degree() > 0; ++k) {
    const IntPolynomial& c = cyclotomic(k);
    if (c.degree() > out.remainder.degree()) continue;
    unsigned mult = 0;
    while (out.remainder.degree() >= c.degree() && divides(c, out.remainder)) {
      out.remainder = poly_divide_exact(out.remainder, c);
      ++mult;
    }
    if (mult > 0) out.factors.emplace_back(k, mult);
  }
  return out;
}

IntPolynomial strip_cyclotomic(const IntPolynomial& p, unsigned max_order) {
  return split_cyclotomic(p, max_order).remainder;
}

IntPolynomial parse_coefficients(const std::string& text) {
  std::vector<Integer> v;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    Integer z;
    if (z.set_str(tok, 10) != 0) throw ParseError("bad integer coefficient '" + tok + "'");
    v.push_back(z);
    tok.clear();
  };
  for (char ch : text) {
    if (ch == '-' || ch == '+' || std::isdigit(static_cast<unsigned char>(ch))) {
      if (ch != '+') tok += ch;
    } else if (ch == ',' || ch == ']' || ch == '[' || ch == '"' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "' in coefficient list");
    }
  }
  flush();
  if (v.empty()) throw ParseError("empty coefficient list");
  return IntPolynomial(std::move(v));
}

namespace polys {

IntPolynomial chi(int n) {
  if (n < 1) throw InvalidArgument("chi_n needs n >= 1");
  std::vector<Integer> v(static_cast<std::size_t>(n + 2), 0);
  v[static_cast<std::size_t>(n + 1)] = 1;
  v[static_cast<std::size_t>(n)] += -2;
  v[1] += 2;
  v[0] += -1;
  return IntPolynomial(std::move(v));
}

IntPolynomial phi() { return IntPolynomial{1, -2, 1, -2, 1}; }

IntPolynomial lehmer() { return IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}; }

}  // namespace polys

}  // namespace coxforge
