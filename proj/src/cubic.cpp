#include "coxforge/cubic.hpp"

#include "coxforge/diller.hpp"
#include "coxforge/linalg.hpp"

namespace coxforge {

ProjPoint embed(const CubicPoint& p) {
  const FieldPtr& f = p.t.field();
  NFElem one = NFElem::one(f), zero = NFElem::zero(f);
  if (p.at_infinity) return ProjPoint{{one, zero, zero}};
  switch (p.line) {
    case 1: return ProjPoint{{-p.t, one, one}};
    case 2: return ProjPoint{{p.t, one, zero}};
    case 3: return ProjPoint{{p.t, zero, one}};
  }
  throw IndexOutOfRange("cubic line index " + std::to_string(p.line));
}

std::optional<CubicPoint> locate(const ProjPoint& p) {
  const auto& x = p.x;
  if (p.is_zero()) throw InvalidArgument("the zero vector is not a projective point");
  if (x[1].is_zero() && x[2].is_zero()) return CubicPoint::infinity(p.field());
  if (x[1] == x[2]) return CubicPoint{-(x[0] / x[1]), 1, false};
  if (x[2].is_zero()) return CubicPoint{x[0] / x[1], 2, false};
  if (x[1].is_zero()) return CubicPoint{x[0] / x[2], 3, false};
  return std::nullopt;
}

namespace {
void check_one_per_line(const CubicPoint& p1, const CubicPoint& p2, const CubicPoint& p3) {
  if (p1.at_infinity || p2.at_infinity || p3.at_infinity)
    throw BadConfiguration("collinearity law needs finite points");
  if (p1.line == p2.line || p2.line == p3.line || p1.line == p3.line)
    throw BadConfiguration("collinearity law needs one point on each line");
}
}  // namespace

bool collinear(const CubicPoint& p1, const CubicPoint& p2, const CubicPoint& p3) {
  check_one_per_line(p1, p2, p3);
  return (p1.t + p2.t + p3.t).is_zero();
}

bool collinear_by_determinant(const CubicPoint& p1, const CubicPoint& p2, const CubicPoint& p3) {
  check_one_per_line(p1, p2, p3);
  return Mat3::from_columns(embed(p1), embed(p2), embed(p3)).det().is_zero();
}

CubicPoint RestrictionMap::apply(const CubicPoint& p) const {
  if (p.at_infinity) return p;
  return CubicPoint{a * p.t + b, tau(p.line), false};
}

RestrictionMap RestrictionMap::compose(const RestrictionMap& inner) const {
  return RestrictionMap{a * inner.a, a * inner.b + b, tau * inner.tau};
}

RestrictionMap restriction_of(const QuadraticMap& f) {
  const FieldPtr& F = f.field();
  struct Sample {
    NFElem t;
    CubicPoint image;
  };
  std::vector<Sample> samples[3];
  for (int line = 1; line <= 3; ++line) {
    for (long v = 2; samples[line - 1].size() < 4; ++v) {
      if (v > 200) throw NotCubicFixing("could not find enough regular sample points");
      CubicPoint p{NFElem(F, Rational(v)), line, false};
      ProjPoint img;
      try {
        img = f.apply(embed(p));
      } catch (const Indeterminate&) {
        continue;
      }
      auto c = locate(img);
      if (!c) throw NotCubicFixing("image of (" + std::to_string(v) + ", " + std::to_string(line) + ") leaves C");
      if (c->at_infinity) throw NotCubicFixing("a regular point of C maps to the singular point");
      samples[line - 1].push_back({p.t, *c});
    }
  }
  std::vector<int> img(3);
  for (int line = 1; line <= 3; ++line) {
    img[static_cast<std::size_t>(line - 1)] = samples[line - 1][0].image.line;
    for (const auto& s : samples[line - 1])
      if (s.image.line != img[static_cast<std::size_t>(line - 1)]) throw NotCubicFixing("a line of C is not mapped to a line");
  }
  RestrictionMap r;
  try {
    r.tau = Permutation::from_images(img);
  } catch (const InvalidArgument&) {
    throw NotCubicFixing("the lines of C are not permuted");
  }
  const auto& s0 = samples[0][0];
  const auto& s1 = samples[0][1];
  r.a = (s1.image.t - s0.image.t) / (s1.t - s0.t);
  r.b = s0.image.t - r.a * s0.t;
  for (const auto& line_samples : samples)
    for (const auto& s : line_samples)
      if (s.image.t != r.a * s.t + r.b) throw NotCubicFixing("restriction is not of the form (at + b, tau(i))");
  if (r.a.is_zero()) throw NotCubicFixing("restriction collapses C");
  return r;
}

std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<Rational>>& a,
                                                    const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw InvalidArgument("feasible_point: shape mismatch");
  const std::size_t n = m ? a[0].size() : 0;
  // Tableau columns: x (n), artificials (m), rhs.
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(n + m + 1, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) T[i][j] = sign * a[i][j];
    T[i][n + i] = 1;
    T[i][n + m] = sign * b[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  auto reduced_cost = [&](std::size_t j) {
    Rational c = j >= n && j < n + m ? 1 : 0;
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= n) c -= T[i][j];
    return c;
  };
  for (int iter = 0; iter < 10000; ++iter) {
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j)
      if (reduced_cost(j) < 0) {
        enter = j;
        break;
      }
    if (enter == n + m) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][n + m] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen in phase one
    Rational piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (std::size_t j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  std::vector<Rational> x(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n) {
      if (T[i][n + m] != 0) return std::nullopt;
    } else {
      x[basis[i]] = T[i][n + m];
    }
  }
  return x;
}

NonodalKernel nonodal_kernel(int n) {
  DillerSolution sol = solve_parameters(n);
  const int d = sol.field->degree();
  // Row r: coefficient of alpha^r in 1 + t_j, scaled to integers.
  std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(d), std::vector<Integer>(static_cast<std::size_t>(n)));
  for (int r = 0; r < d; ++r) {
    Integer l = 1;
    for (int j = 0; j < n; ++j) {
      const Rational& c = (NFElem::one(sol.field) + sol.t[static_cast<std::size_t>(j)]).coeffs()[static_cast<std::size_t>(r)];
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    for (int j = 0; j < n; ++j) {
      Rational c = (NFElem::one(sol.field) + sol.t[static_cast<std::size_t>(j)]).coeffs()[static_cast<std::size_t>(r)] * l;
      rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = c.get_num();
    }
  }
  NonodalKernel out;
  out.n = n;
  out.basis = integer_kernel(rows);
  // Normalize each basis vector so its first nonzero entry is positive.
  for (auto& v : out.basis) {
    for (const auto& c : v) {
      if (c == 0) continue;
      if (c < 0)
        for (auto& e : v) e = -e;
      break;
    }
  }
  // Nonzero m >= 0 with sum m = 1 in the relation space.
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const auto& c : row) r.emplace_back(c);
    A.push_back(std::move(r));
    b.emplace_back(0);
  }
  A.emplace_back(static_cast<std::size_t>(n), Rational(1));
  b.emplace_back(1);
  if (auto x = feasible_point(A, b)) {
    out.meets_nonnegative_orthant = true;
    out.witness = *x;
  }
  return out;
}

}  // namespace coxforge
