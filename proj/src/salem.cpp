#include "coxforge/salem.hpp"

#include <cmath>
#include <complex>
#include <numeric>

#include "coxforge/resultant.hpp"

namespace coxforge {

namespace {

IntPolynomial positive_leading(IntPolynomial p) {
  if (!p.is_zero() && p.leading() < 0) return -p;
  return p;
}

}  // namespace

SalemVerdict is_salem(const IntPolynomial& p, const Rational& eps) {
  SalemVerdict v;
  v.degree = p.degree();
  v.monic = p.is_monic();
  v.reciprocal = p.is_reciprocal();
  v.squarefree = p.degree() >= 1 && is_squarefree(p);
  auto fail = [&](const std::string& why) {
    if (v.reason.empty()) v.reason = why;
  };
  if (v.degree < 4) fail("degree below 4");
  if (!v.monic) fail("not monic");
  if (!v.squarefree) {
    fail("not squarefree");
    return v;
  }
  v.cyclotomic_free = split_cyclotomic(p).factors.empty();
  if (!v.reciprocal) fail("not reciprocal");
  if (!v.cyclotomic_free) fail("has a cyclotomic factor");
  v.witness = classify_roots(p, eps);
  const auto& w = v.witness;
  if (w.n_real_gt1 > 0) v.largest_root = w.largest_real;
  if (w.n_real_gt1 != 1) fail("needs exactly one real root > 1");
  if (w.n_real_in_unit != 1) fail("needs exactly one real root in (-1, 1)");
  if (w.n_real_lt_neg1 != 0) fail("has a real root < -1");
  if (w.n_off_circle_complex != 0) fail("has non-real roots off the unit circle");
  if (w.n_pm_one != 0) fail("has a root at +-1");
  if (w.n_on_circle != v.degree - 2) fail("too few roots on the unit circle");
  v.is_salem = v.reason.empty();
  return v;
}

SalemVerdict power_is_salem(const IntPolynomial& p, unsigned k, const Rational& eps) {
  if (k == 0) throw InvalidArgument("power_is_salem needs k >= 1");
  return is_salem(positive_leading(squarefree_part(power_polynomial(p, k))), eps);
}

bool ProductClass::all_products_fail() const {
  if (kind != Kind::NonSalemProducts || products.size() != 4) return false;
  for (const auto& e : products)
    if (e.verdict.is_salem) return false;
  return true;
}

namespace {

using cld = std::complex<long double>;

// Integer polynomial with the given roots, or nullopt when the coefficients
// are not close to integers.
std::optional<IntPolynomial> round_from_roots(const std::vector<cld>& roots) {
  std::vector<cld> c{cld(1)};
  for (const auto& z : roots) {
    std::vector<cld> next(c.size() + 1, cld(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= z * c[i];
    }
    c = std::move(next);
  }
  std::vector<Integer> out;
  for (const auto& z : c) {
    long double r = std::round(z.real());
    if (std::fabs(z.real() - r) > 1e-6L || std::fabs(z.imag()) > 1e-6L) return std::nullopt;
    out.emplace_back(static_cast<long>(r));
  }
  return IntPolynomial(std::move(out));
}

// A polynomial r with power_polynomial(r, m) == p, searched over the choices
// of m-th root branches for the roots of p.
std::optional<IntPolynomial> mth_root_polynomial(const IntPolynomial& p, int m, const IntPolynomial& q, int l) {
  const long double two_pi = 6.283185307179586476925286766559L;
  std::vector<cld> reals, upper;
  for (const auto& z : approximate_roots(p)) {
    if (std::fabs(z.imag()) < 1e-12L * std::max(1.0L, std::abs(z)))
      reals.push_back(z);
    else if (z.imag() > 0)
      upper.push_back(z);
  }
  for (const auto& x : reals)
    if (x.real() <= 0) return std::nullopt;  // only positive real roots take a real branch
  long double combos = std::pow(static_cast<long double>(m), static_cast<long double>(upper.size()));
  if (combos > 2e5L) throw SearchBoundExceeded("too many root branches to search");
  std::vector<int> branch(upper.size(), 0);
  while (true) {
    std::vector<cld> roots;
    for (const auto& x : reals) roots.emplace_back(std::pow(x.real(), 1.0L / m), 0);
    for (std::size_t i = 0; i < upper.size(); ++i) {
      long double r = std::pow(std::abs(upper[i]), 1.0L / m);
      long double a = (std::arg(upper[i]) + two_pi * branch[i]) / m;
      roots.push_back(std::polar(r, a));
      roots.push_back(std::polar(r, -a));
    }
    if (auto cand = round_from_roots(roots)) {
      if (positive_leading(power_polynomial(*cand, static_cast<unsigned>(m))) == p &&
          positive_leading(power_polynomial(*cand, static_cast<unsigned>(l))) == q)
        return cand;
    }
    std::size_t i = 0;
    while (i < branch.size() && ++branch[i] == m) branch[i++] = 0;
    if (i == branch.size()) break;
  }
  return std::nullopt;
}

}  // namespace

ProductClass product_class(const IntPolynomial& p, const IntPolynomial& q, const Rational& eps) {
  SalemVerdict vp = is_salem(p, eps), vq = is_salem(q, eps);
  if (!vp.is_salem || !vq.is_salem) throw InvalidArgument("product_class needs two Salem polynomials");
  const long double lp = std::log(static_cast<long double>(vp.largest_root->approx()));
  const long double lq = std::log(static_cast<long double>(vq.largest_root->approx()));
  const long double ratio = lp / lq;
  ProductClass out;
  for (int b = 1; b <= kMaxRatioDenominator; ++b) {
    long double a = std::round(ratio * b);
    if (a < 1 || std::fabs(ratio * b - a) > 1e-9L * b) continue;
    int m = static_cast<int>(a), l = b;
    int g = std::gcd(m, l);
    m /= g;
    l /= g;
    out.kind = ProductClass::Kind::CommonPowerBase;
    out.exponent_p = m;
    out.exponent_q = l;
    if (m == 1 && positive_leading(power_polynomial(p, static_cast<unsigned>(l))) == q) {
      out.base = p;
    } else if (l == 1 && positive_leading(power_polynomial(q, static_cast<unsigned>(m))) == p) {
      out.base = q;
    } else if (m > 1 && l > 1) {
      out.base = mth_root_polynomial(p, m, q, l);
    }
    if (!out.base)
      throw SearchBoundExceeded("log ratio is close to " + std::to_string(m) + "/" + std::to_string(l) +
                                " but no integer base polynomial certifies it");
    return out;
  }
  out.kind = ProductClass::Kind::NonSalemProducts;
  const IntPolynomial rp = p.reversed(), rq = q.reversed();
  const std::pair<const char*, std::pair<const IntPolynomial*, const IntPolynomial*>> cases[] = {
      {"dp*dq", {&p, &q}}, {"dp/dq", {&p, &rq}}, {"dq/dp", {&rp, &q}}, {"1/(dp*dq)", {&rp, &rq}}};
  for (const auto& [label, pq] : cases) {
    ProductEntry e;
    e.label = label;
    // Reciprocal inputs give identical products; reuse the earlier result.
    for (std::size_t i = 0; i < out.products.size(); ++i) {
      const auto& prev = cases[i].second;
      if (*prev.first == *pq.first && *prev.second == *pq.second) {
        e.polynomial = out.products[i].polynomial;
        e.verdict = out.products[i].verdict;
        e.minimal_polynomial_certified = out.products[i].minimal_polynomial_certified;
        break;
      }
    }
    if (e.polynomial.is_zero()) {
      e.polynomial = positive_leading(min_poly_of_product(*pq.first, *pq.second));
      e.verdict = is_salem(e.polynomial, eps);
      e.minimal_polynomial_certified = irreducibility_screen(e.polynomial).irreducible();
    }
    out.products.push_back(std::move(e));
  }
  return out;
}

GapCheck dpower_gap_check(const IntPolynomial& p, const Rational& eps) {
  SalemVerdict v = is_salem(p, eps);
  if (!v.is_salem) throw InvalidArgument("dpower_gap_check needs a Salem polynomial");
  GapCheck out;
  out.low_roots_not_salem = true;
  for (unsigned k = 2; k <= 4; ++k) {
    RootPowerEntry e;
    e.k = static_cast<int>(k);
    e.polynomial = p.compose_power(k);
    e.irreducible_certified = irreducibility_screen(e.polynomial).irreducible();
    RootClassification rc = classify_roots(e.polynomial, eps);
    e.roots_outside_circle = rc.outside_circle();
    e.largest_root = rc.largest_real;
    if (k < 4 && e.roots_outside_circle < 2) out.low_roots_not_salem = false;
    out.roots.push_back(std::move(e));
  }
  out.lehmer_root = *classify_roots(polys::lehmer(), eps).largest_real;
  const auto& fourth = out.roots.back().largest_root;
  out.fourth_root_below_lehmer = fourth && fourth->hi < out.lehmer_root.lo;
  return out;
}

}  // namespace coxforge
