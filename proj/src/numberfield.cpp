#include "coxforge/numberfield.hpp"

#include <algorithm>

namespace coxforge {

namespace {

Rational enclosure_eps() {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, 40);
  return Rational(1) / Rational(p);
}

RationalInterval imul(const RationalInterval& a, const RationalInterval& b) {
  Rational v[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(v, v + 4), *std::max_element(v, v + 4)};
}

RationalInterval eval_interval(const std::vector<Rational>& c, const RationalInterval& x) {
  RationalInterval acc{0, 0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = imul(acc, x);
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

}  // namespace

NumberField::NumberField(IntPolynomial minpoly, int root_index, RationalInterval enclosure)
    : minpoly_(std::move(minpoly)), root_index_(root_index), enclosure_(std::move(enclosure)) {
  approx_ = static_cast<long double>(enclosure_.midpoint().get_d());
  // One Newton step in long double to recover the digits lost by get_d.
  long double x = approx_, v = 0, d = 0;
  for (int i = minpoly_.degree(); i >= 0; --i) {
    d = d * x + v;
    v = v * x + static_cast<long double>(minpoly_[static_cast<std::size_t>(i)].get_d());
  }
  if (d != 0) approx_ = x - v / d;
}

std::shared_ptr<const NumberField> NumberField::create(const IntPolynomial& minpoly, int root_index) {
  if (minpoly.degree() < 1) throw InvalidArgument("number field needs a polynomial of degree >= 1");
  if (!minpoly.is_monic()) throw InvalidArgument("number field minpoly must be monic: " + minpoly.to_string());
  if (!is_squarefree(minpoly)) throw InvalidArgument("number field minpoly must be squarefree");
  auto roots = isolate_real_roots(minpoly, enclosure_eps());
  const int nreal = static_cast<int>(roots.size());
  int idx = root_index < 0 ? nreal + root_index : root_index;
  if (idx < 0 || idx >= nreal)
    throw IndexOutOfRange("real root index " + std::to_string(root_index) + " out of range; " +
                          std::to_string(nreal) + " real roots");
  return std::shared_ptr<const NumberField>(new NumberField(minpoly, idx, roots[static_cast<std::size_t>(idx)]));
}

NFElem::NFElem(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
  if (!field_) throw InvalidArgument("NFElem without a field");
  // GMP arithmetic assumes canonical fractions; mpq_class(p, q) does not reduce.
  for (auto& c : coeffs) c.canonicalize();
  *this = from_poly(field_, RatPolynomial(std::move(coeffs)));
}

NFElem::NFElem(FieldPtr field, const Rational& c) : field_(std::move(field)) {
  if (!field_) throw InvalidArgument("NFElem without a field");
  c_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
  c_[0] = c;
  c_[0].canonicalize();
}

NFElem NFElem::gen(FieldPtr f) { return from_poly(std::move(f), RatPolynomial::x()); }

NFElem NFElem::from_poly(FieldPtr f, const RatPolynomial& r) {
  if (!f) throw InvalidArgument("NFElem without a field");
  RatPolynomial red = r.degree() >= f->degree() ? rem(r, to_rational(f->minpoly())) : r;
  NFElem e;
  e.field_ = std::move(f);
  e.c_.assign(static_cast<std::size_t>(e.field_->degree()), Rational(0));
  for (std::size_t i = 0; i < red.size(); ++i) e.c_[i] = red.coeffs()[i];
  return e;
}

bool NFElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c == 0; });
}

bool NFElem::is_rational() const {
  return std::all_of(c_.begin() + (c_.empty() ? 0 : 1), c_.end(), [](const Rational& c) { return c == 0; });
}

RatPolynomial NFElem::as_poly() const { return RatPolynomial(c_); }

void NFElem::check_same(const NFElem& o) const {
  if (!field_ || !o.field_) throw InvalidArgument("NFElem without a field");
  if (!field_->same_as(*o.field_)) throw FieldMismatch("elements belong to different number fields");
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(alpha)");
  ExtendedGcd eg = extended_gcd(as_poly(), to_rational(field_->minpoly()));
  if (eg.g.degree() != 0) throw DivisionByZero("element is a zero divisor modulo " + field_->minpoly().to_string());
  return from_poly(field_, eg.s);
}

NFElem NFElem::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  NFElem result = one(field_), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

long double NFElem::approx() const {
  long double x = field_->approx_root(), acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<long double>(it->get_d());
  return acc;
}

RationalInterval NFElem::enclosure() const { return eval_interval(c_, field_->root_enclosure()); }

int NFElem::sign() const {
  if (is_zero()) return 0;
  RationalInterval x = field_->root_enclosure();
  const IntPolynomial& m = field_->minpoly();
  for (int iter = 0; iter < 4000; ++iter) {
    RationalInterval v = eval_interval(c_, x);
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    if (x.lo == x.hi) return sgn(v.lo);
    Rational mid = x.midpoint();
    int sm = sgn(m.eval(mid));
    if (sm == 0) {
      x = RationalInterval::point(mid);
      continue;
    }
    if (sgn(m.eval(x.lo)) == sm) x.lo = mid; else x.hi = mid;
  }
  throw Inconclusive("could not determine the sign of " + to_string());
}

NFElem NFElem::operator-() const {
  NFElem r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

NFElem& NFElem::operator+=(const NFElem& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

NFElem& NFElem::operator-=(const NFElem& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

NFElem& NFElem::operator*=(const NFElem& o) {
  check_same(o);
  *this = from_poly(field_, as_poly() * o.as_poly());
  return *this;
}

NFElem& NFElem::operator/=(const NFElem& o) {
  check_same(o);
  if (o.is_zero()) throw DivisionByZero("division by zero in Q(alpha)");
  return *this *= o.inverse();
}

bool operator==(const NFElem& a, const NFElem& b) {
  a.check_same(b);
  return a.c_ == b.c_;
}

std::string NFElem::to_string(char var) const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::string term = c_[i].get_str();
    if (i >= 1) term += std::string("*") + var;
    if (i >= 2) term += "^" + std::to_string(i);
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace coxforge
