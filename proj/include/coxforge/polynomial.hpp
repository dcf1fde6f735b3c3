#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "coxforge/errors.hpp"

namespace coxforge {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial, coefficients in ascending degree order.
/// The zero polynomial has an empty coefficient vector and degree -1.
template <class R>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static Polynomial constant(R c) { return Polynomial(std::vector<R>{std::move(c)}); }
  static Polynomial monomial(R c, std::size_t k) {
    std::vector<R> v(k + 1, R(0));
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<R>& coeffs() const { return c_; }

  // Coefficient of t^i; zero beyond the degree.
  R operator[](std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const R& leading() const {
    if (c_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  /// t^deg p(1/t).
  Polynomial reversed() const {
    std::vector<R> v(c_.rbegin(), c_.rend());
    return Polynomial(std::move(v));
  }
  bool is_reciprocal() const { return !c_.empty() && c_[0] != 0 && reversed() == *this; }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
    return Polynomial(std::move(v));
  }

  /// p(t^k).
  Polynomial compose_power(unsigned k) const {
    if (k == 0) throw InvalidArgument("compose_power with k = 0");
    if (c_.empty()) return {};
    std::vector<R> v((c_.size() - 1) * k + 1, R(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return Polynomial(std::move(v));
  }

  template <class T>
  T eval(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const R& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const R& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> v(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string(char var = 't') const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<R> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

template <class R>
std::string Polynomial<R>::to_string(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const R& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    R mag = c < 0 ? R(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

RatPolynomial to_rational(const IntPolynomial& p);

/// Clears denominators and removes the content; the result has positive
/// leading coefficient (zero stays zero).
IntPolynomial primitive_part(const RatPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);
Integer content(const IntPolynomial& p);

struct RatDivMod {
  RatPolynomial quotient;
  RatPolynomial remainder;
};
RatDivMod divmod(const RatPolynomial& num, const RatPolynomial& den);
RatPolynomial rem(const RatPolynomial& num, const RatPolynomial& den);

/// Quotient q with q * den == num; throws NotDivisible when the division
/// leaves a remainder or the quotient has non-integral coefficients.
IntPolynomial poly_divide_exact(const IntPolynomial& num, const IntPolynomial& den);
bool divides(const IntPolynomial& den, const IntPolynomial& num);

/// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
RatPolynomial monic_gcd(const RatPolynomial& a, const RatPolynomial& b);

struct ExtendedGcd {
  RatPolynomial g;  // monic
  RatPolynomial s;  // s*a + t*b == g
  RatPolynomial t;
};
ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b);

IntPolynomial squarefree_part(const IntPolynomial& p);
bool is_squarefree(const IntPolynomial& p);

/// k-th cyclotomic polynomial, k >= 1.
const IntPolynomial& cyclotomic(unsigned k);

struct CyclotomicSplit {
  IntPolynomial remainder;
  std::vector<std::pair<unsigned, unsigned>> factors;  // (order k, multiplicity)
};

inline constexpr unsigned kDefaultCyclotomicOrder = 60;

/// Divides out every Phi_k with k <= max_order to full multiplicity.
CyclotomicSplit split_cyclotomic(const IntPolynomial& p,
                                 unsigned max_order = kDefaultCyclotomicOrder);
IntPolynomial strip_cyclotomic(const IntPolynomial& p,
                               unsigned max_order = kDefaultCyclotomicOrder);

/// Parses "[1,-2,1]" / "1,-2,1" (ascending) coefficient lists.
IntPolynomial parse_coefficients(const std::string& text);

namespace polys {
/// t^{n+1} - 2 t^n + 2 t - 1.
IntPolynomial chi(int n);
/// t^4 - 2 t^3 + t^2 - 2 t + 1.
IntPolynomial phi();
/// t^10 + t^9 - t^7 - t^6 - t^5 - t^4 - t^3 + t + 1.
IntPolynomial lehmer();
}  // namespace polys

}  // namespace coxforge
