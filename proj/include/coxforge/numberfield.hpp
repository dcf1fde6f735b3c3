#pragma once

#include <memory>
#include <string>
#include <vector>

#include "coxforge/polynomial.hpp"
#include "coxforge/roots.hpp"

namespace coxforge {

/// Q(alpha) for a real root alpha of a monic squarefree integer polynomial.
/// The root is named by its index among the real roots in ascending order.
class NumberField {
 public:
  /// root_index < 0 counts from the top: -1 is the largest real root.
  static std::shared_ptr<const NumberField> create(const IntPolynomial& minpoly, int root_index = -1);

  const IntPolynomial& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  int root_index() const { return root_index_; }
  /// Isolating interval of alpha, narrowed to width <= 10^-40.
  const RationalInterval& root_enclosure() const { return enclosure_; }
  long double approx_root() const { return approx_; }

  bool same_as(const NumberField& o) const {
    return this == &o || (minpoly_ == o.minpoly_ && root_index_ == o.root_index_);
  }

 private:
  NumberField(IntPolynomial minpoly, int root_index, RationalInterval enclosure);
  IntPolynomial minpoly_;
  int root_index_;
  RationalInterval enclosure_;
  long double approx_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of Q(alpha): sum c_i alpha^i with i < deg(minpoly).
class NFElem {
 public:
  NFElem() = default;
  NFElem(FieldPtr field, std::vector<Rational> coeffs);
  NFElem(FieldPtr field, const Rational& c);

  static NFElem zero(FieldPtr f) { return NFElem(std::move(f), Rational(0)); }
  static NFElem one(FieldPtr f) { return NFElem(std::move(f), Rational(1)); }
  /// The generator alpha.
  static NFElem gen(FieldPtr f);
  /// Reduces r(alpha) into the field.
  static NFElem from_poly(FieldPtr f, const RatPolynomial& r);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  RatPolynomial as_poly() const;

  NFElem inverse() const;
  NFElem pow(long k) const;
  /// Value at the selected real root (long double).
  long double approx() const;
  /// Rigorous enclosure using the stored root enclosure (interval evaluation).
  RationalInterval enclosure() const;
  /// Sign of the real value; exact (refines as needed).
  int sign() const;

  NFElem operator-() const;
  NFElem& operator+=(const NFElem& o);
  NFElem& operator-=(const NFElem& o);
  NFElem& operator*=(const NFElem& o);
  NFElem& operator/=(const NFElem& o);
  friend NFElem operator+(NFElem a, const NFElem& b) { return a += b; }
  friend NFElem operator-(NFElem a, const NFElem& b) { return a -= b; }
  friend NFElem operator*(NFElem a, const NFElem& b) { return a *= b; }
  friend NFElem operator/(NFElem a, const NFElem& b) { return a /= b; }
  friend NFElem operator*(NFElem a, const Rational& s) {
    for (auto& c : a.c_) c *= s;
    return a;
  }
  friend NFElem operator*(const Rational& s, NFElem a) { return std::move(a) * s; }
  friend bool operator==(const NFElem& a, const NFElem& b);
  friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

  /// "c0 + c1*a + ..." with rationals as p/q.
  std::string to_string(char var = 'a') const;

 private:
  void check_same(const NFElem& o) const;
  FieldPtr field_;
  std::vector<Rational> c_;
};

}  // namespace coxforge
