#include "coxforge/roots.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace coxforge {

Rational default_eps() { return Rational(1, 1) / Rational(Integer("1000000000000")); }

namespace {

Rational pow10(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(1) / Rational(p) : Rational(p);
}

Rational parse_decimal(const std::string& s) {
  if (s.empty()) throw ParseError("empty number");
  std::string digits;
  long scale = 0;
  bool seen_dot = false;
  for (char ch : s) {
    if (ch == '.') {
      if (seen_dot) throw ParseError("bad decimal '" + s + "'");
      seen_dot = true;
    } else {
      digits += ch;
      if (seen_dot && ch != '-' && ch != '+') ++scale;
    }
  }
  Integer z;
  if (digits.empty() || digits == "-" || digits == "+" || z.set_str(digits[0] == '+' ? digits.substr(1) : digits, 10) != 0)
    throw ParseError("bad decimal '" + s + "'");
  return Rational(z) * pow10(-scale);
}

int sign_of(const Rational& x) { return sgn(x); }

// Positive rescaling to a primitive integer polynomial; keeps the sign pattern.
IntPolynomial positive_primitive(const RatPolynomial& p) {
  IntPolynomial q = primitive_part(p);
  if (q.is_zero()) return q;
  if (sgn(q.leading()) != sgn(p.leading())) q = -q;
  return q;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.find('/') != std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + text + "'");
    q.canonicalize();
    return q;
  }
  auto e = s.find_first_of("eE");
  if (e != std::string::npos) {
    Rational mant = parse_decimal(s.substr(0, e));
    long ex = 0;
    try {
      ex = std::stol(s.substr(e + 1));
    } catch (const std::exception&) {
      throw ParseError("bad exponent in '" + text + "'");
    }
    return mant * pow10(ex);
  }
  return parse_decimal(s);
}

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidArgument("Sturm sequence of the zero polynomial");
  seq_.push_back(p);
  if (p.degree() == 0) return;
  seq_.push_back(positive_primitive(to_rational(p.derivative())));
  while (seq_.back().degree() > 0) {
    RatPolynomial r = rem(to_rational(seq_[seq_.size() - 2]), to_rational(seq_.back()));
    if (r.is_zero()) break;
    seq_.push_back(positive_primitive(-r));
  }
}

int SturmSequence::sign_changes_at(const Rational& x) const {
  int changes = 0, last = 0;
  for (const auto& q : seq_) {
    int s = sign_of(q.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::sign_changes_at_pos_inf() const {
  int changes = 0, last = 0;
  for (const auto& q : seq_) {
    int s = sgn(q.leading());
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::sign_changes_at_neg_inf() const {
  int changes = 0, last = 0;
  for (const auto& q : seq_) {
    int s = sgn(q.leading()) * (q.degree() % 2 == 0 ? 1 : -1);
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  if (!(a < b)) return 0;
  return sign_changes_at(a) - sign_changes_at(b);
}
int SturmSequence::count_above(const Rational& a) const { return sign_changes_at(a) - sign_changes_at_pos_inf(); }
int SturmSequence::count_below(const Rational& b) const { return sign_changes_at_neg_inf() - sign_changes_at(b); }
int SturmSequence::count_all() const { return sign_changes_at_neg_inf() - sign_changes_at_pos_inf(); }

Rational cauchy_bound(const IntPolynomial& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m = 0;
  Rational lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational v = Rational(abs(p[static_cast<std::size_t>(i)])) / lc;
    if (v > m) m = v;
  }
  return m + 1;
}

std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& p, const Rational& eps) {
  if (eps <= 0) throw InvalidArgument("eps must be positive");
  SturmSequence sturm(p);
  std::vector<RationalInterval> out;
  Rational b = cauchy_bound(p);

  // Work list of (lo, hi] intervals, processed left to right.
  struct Item {
    Rational lo, hi;
    int n;
  };
  std::vector<Item> stack{{-b, b, sturm.count(-b, b)}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.n == 0) continue;
    if (it.n == 1) {
      Rational lo = it.lo, hi = it.hi;
      bool exact = false;
      if (p.eval(hi) == 0) {
        out.push_back(RationalInterval::point(hi));
        continue;
      }
      while (hi - lo > eps) {
        Rational mid = (lo + hi) / 2;
        if (p.eval(mid) == 0) {
          out.push_back(RationalInterval::point(mid));
          exact = true;
          break;
        }
        if (sturm.count(lo, mid) == 1) hi = mid; else lo = mid;
      }
      if (!exact) {
        // An integer root inside the final interval is reported exactly.
        mpz_class k;
        mpz_cdiv_q(k.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
        if (Rational(k) <= hi && p.eval(Rational(k)) == 0) out.push_back(RationalInterval::point(Rational(k)));
        else out.push_back({lo, hi});
      }
      continue;
    }
    Rational mid = (it.lo + it.hi) / 2;
    // Right half first so the left half pops first.
    int left = sturm.count(it.lo, mid);
    stack.push_back({mid, it.hi, it.n - left});
    stack.push_back({it.lo, mid, left});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& c) { return a.lo < c.lo; });
  return out;
}

namespace {

std::optional<RationalInterval> largest_real_root(const IntPolynomial& p, const Rational& eps) {
  SturmSequence sturm(p);
  Rational b = cauchy_bound(p);
  Rational lo = -b, hi = b;
  if (sturm.count(lo, hi) == 0) return std::nullopt;
  // Invariant: the largest root lies in (lo, hi].
  while (sturm.count(lo, hi) > 1 || hi - lo > eps) {
    if (p.eval(hi) == 0 && sturm.count(hi, b) == 0) return RationalInterval::point(hi);
    Rational mid = (lo + hi) / 2;
    if (sturm.count(mid, hi) >= 1) lo = mid; else hi = mid;
  }
  return RationalInterval{lo, hi};
}

}  // namespace

IntPolynomial trace_polynomial(const IntPolynomial& h) {
  if (h.degree() < 0 || h.degree() % 2 != 0) throw InvalidArgument("trace polynomial needs even degree");
  if (h.reversed() != h) throw InvalidArgument("trace polynomial needs a reciprocal polynomial");
  const std::size_t m = static_cast<std::size_t>(h.degree() / 2);
  IntPolynomial d_prev = IntPolynomial::constant(2);  // t^0 + t^-0
  IntPolynomial d_cur = IntPolynomial::x();           // t + 1/t
  IntPolynomial g = IntPolynomial::constant(h[m]);
  for (std::size_t k = 1; k <= m; ++k) {
    g += d_cur * h[m + k];
    IntPolynomial next = IntPolynomial::x() * d_cur - d_prev;
    d_prev = std::move(d_cur);
    d_cur = std::move(next);
  }
  return g;
}

RootClassification classify_roots(const IntPolynomial& p, const Rational& eps) {
  if (p.is_zero()) throw InvalidArgument("classify_roots of the zero polynomial");
  if (!is_squarefree(p)) throw InvalidArgument("classify_roots needs a squarefree polynomial: " + p.to_string());
  RootClassification rc;
  rc.degree = p.degree();
  rc.self_reciprocal = p.reversed() == p || p.reversed() == -p;

  IntPolynomial q = p;
  if (q[0] == 0) {
    rc.n_real_in_unit += 1;
    q = poly_divide_exact(q, IntPolynomial::x());
  }
  for (long s : {1L, -1L}) {
    if (q.eval(Integer(s)) == 0) {
      rc.n_on_circle += 1;
      rc.n_pm_one += 1;
      q = poly_divide_exact(q, IntPolynomial{-s, 1});
    }
  }

  if (q.degree() > 0) {
    IntPolynomial h = gcd(q, q.reversed());
    IntPolynomial r = poly_divide_exact(q, h);
    if (h.degree() > 0) {
      if (h.reversed() != h) h = -h;
      if (h.reversed() != h) throw Inconclusive("reciprocal part is not self-reciprocal: " + h.to_string());
      IntPolynomial g = trace_polynomial(h);
      SturmSequence sg(g);
      const Rational two(2);
      int above = sg.count_above(two);
      int below = sg.count_below(-two);
      int inside = sg.count(-two, two);
      rc.n_real_gt1 += above;
      rc.n_real_lt_neg1 += below;
      rc.n_real_in_unit += above + below;
      rc.n_on_circle += 2 * inside;
      rc.n_off_circle_complex += 2 * (g.degree() - above - below - inside);
    }
    if (r.degree() > 0) {
      SturmSequence sr(r);
      const Rational one(1);
      int above = sr.count_above(one);
      int below = sr.count_below(-one);
      int inside = sr.count(-one, one);
      rc.n_real_gt1 += above;
      rc.n_real_lt_neg1 += below;
      rc.n_real_in_unit += inside;
      rc.n_off_circle_complex += r.degree() - above - below - inside;
    }
  }
  if (rc.total() != rc.degree)
    throw Inconclusive("root counts do not sum to the degree for " + p.to_string());
  rc.largest_real = largest_real_root(p, eps);
  return rc;
}

std::vector<std::complex<long double>> approximate_roots(const IntPolynomial& p) {
  using C = std::complex<long double>;
  const int n = p.degree();
  if (n < 1) return {};
  std::vector<long double> c(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = static_cast<long double>(p[static_cast<std::size_t>(i)].get_d());
  auto eval = [&](const C& z, C& dz) {
    C v = 0, d = 0;
    for (int i = n; i >= 0; --i) {
      d = d * z + v;
      v = v * z + c[static_cast<std::size_t>(i)];
    }
    dz = d;
    return v;
  };
  long double radius = static_cast<long double>(cauchy_bound(p).get_d()) / 2;
  std::vector<C> z(static_cast<std::size_t>(n));
  const long double pi = std::acos(-1.0L);
  for (int k = 0; k < n; ++k)
    z[static_cast<std::size_t>(k)] = std::polar(radius, 2 * pi * (k + 0.25L) / n + 0.1L);
  for (int iter = 0; iter < 1000; ++iter) {
    long double worst = 0;
    for (int k = 0; k < n; ++k) {
      C dz;
      C v = eval(z[static_cast<std::size_t>(k)], dz);
      if (v == C(0)) continue;
      C ratio = v / dz;
      C sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += C(1) / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
      C step = ratio / (C(1) - ratio * sum);
      z[static_cast<std::size_t>(k)] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[static_cast<std::size_t>(k)])));
    }
    if (worst < 1e-17L) break;
  }
  std::sort(z.begin(), z.end(), [](const C& a, const C& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return z;
}

}  // namespace coxforge
