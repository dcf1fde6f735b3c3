#include "coxforge/diller.hpp"

namespace coxforge {

DillerSolution solve_parameters(int n) {
  if (n < 4) throw InvalidArgument("solve_parameters needs n >= 4");
  IntPolynomial salem = strip_cyclotomic(polys::chi(n));
  if (salem.degree() < 4) throw NoSalemFactor("chi_" + std::to_string(n) + " has no factor of degree >= 4 after stripping");
  DillerSolution sol;
  sol.n = n;
  sol.field = NumberField::create(salem, -1);
  sol.alpha = NFElem::gen(sol.field);
  const NFElem one = NFElem::one(sol.field);
  const NFElem denom = one + 2 * sol.alpha.pow(n);
  const NFElem scale = Rational(-3) * denom.inverse();
  NFElem power = one;
  for (int j = 1; j <= n; ++j) {
    power *= sol.alpha;
    sol.t.push_back(scale * power);
  }
  for (int line = 1; line <= 3; ++line)
    for (int j = 1; j <= n; ++j) sol.base_locus.push_back(CubicPoint{one + sol.t_param(j), line, false});
  return sol;
}

namespace {

// Homogeneous coordinates of a point of C, scaled so the first entry is 1.
ProjPoint first_normalized(const CubicPoint& p) {
  ProjPoint q = embed(p);
  if (q.x[0].is_zero()) throw BadConfiguration("base point on the line x1 = 0");
  NFElem inv = q.x[0].inverse();
  for (auto& c : q.x) c *= inv;
  return q;
}

}  // namespace

QuadraticMap construct_map(const DillerSolution& sol, const Permutation& tau) {
  if (tau.size() != 3) throw InadmissibleTau("tau must be a permutation of {1,2,3}");
  const FieldPtr& F = sol.field;
  const NFElem one = NFElem::one(F);
  std::array<ProjPoint, 3> plus, minus;
  for (int i = 1; i <= 3; ++i) {
    plus[static_cast<std::size_t>(i - 1)] = first_normalized(CubicPoint{one + sol.t_param(sol.n), i, false});
    minus[static_cast<std::size_t>(i - 1)] = first_normalized(CubicPoint{one + sol.t_param(1), tau(i), false});
  }
  Mat3 t_plus = Mat3::from_columns(plus[0], plus[1], plus[2]);
  Mat3 t_minus0 = Mat3::from_columns(minus[0], minus[1], minus[2]);
  if (t_plus.det().is_zero() || t_minus0.det().is_zero()) throw BadConfiguration("base points are collinear");
  // Column scales mu_i fixed by f(e1) = e1 exactly: T^- diag(mu) v = e1.
  ProjPoint e1 = coordinate_point(F, 1);
  ProjPoint v = cremona_apply(CremonaKind::J3, t_plus.inverse().apply(e1));
  ProjPoint w = t_minus0.inverse().apply(e1);
  Mat3 t_minus = t_minus0;
  for (int c = 0; c < 3; ++c) {
    const auto C = static_cast<std::size_t>(c);
    if (v.x[C].is_zero()) throw BadConfiguration("the singular point of C is exceptional");
    NFElem mu = w.x[C] / v.x[C];
    for (int r = 0; r < 3; ++r) t_minus.a[static_cast<std::size_t>(r)][C] *= mu;
  }
  return QuadraticMap(CremonaKind::J3, t_minus, t_plus);
}

QuadraticMap construct_map(int n, const Permutation& tau) { return construct_map(solve_parameters(n), tau); }

ValidatedMap construct_validated(const DillerSolution& sol, const Permutation& tau, int max_iter) {
  QuadraticMap f = construct_map(sol, tau);
  ValidatedMap out{tau, tau.pow(sol.n), f, OrbitData{}, RestrictionMap{}, false, false};
  out.orbit = orbit_data(f, max_iter);
  out.orbit_ok = out.orbit.lengths == std::array<int, 3>{sol.n, sol.n, sol.n} && out.orbit.sigma == out.sigma;
  try {
    out.restriction = restriction_of(f);
    out.restriction_ok = out.restriction.a == sol.alpha && out.restriction.tau == tau &&
                         out.restriction.b == NFElem::one(sol.field) - sol.alpha;
  } catch (const NotCubicFixing&) {
    out.restriction_ok = false;
  }
  return out;
}

CriticalSums critical_sums(const DillerSolution& sol, const QuadraticMap& f) {
  const FieldPtr& F = sol.field;
  ExceptionalData ed = exceptional_data(f);
  std::array<CubicPoint, 3> plus, minus;
  CriticalSums out{NFElem::zero(F), NFElem::zero(F)};
  for (std::size_t i = 0; i < 3; ++i) {
    auto p = locate(ed.p_plus[i]), m = locate(ed.p_minus[i]);
    if (!p || !m || p->at_infinity || m->at_infinity) throw NotCubicFixing("an indeterminacy point is off C or at the vertex");
    plus[i] = *p;
    minus[i] = *m;
    out.sum_plus += p->t;
    out.sum_minus += m->t;
  }
  const NFElem one = NFElem::one(F), three(F, Rational(3));
  out.minus_ok = out.sum_minus == three * (sol.alpha - one);
  out.plus_ok = out.sum_plus == three * (one - sol.alpha) / sol.alpha;

  RestrictionMap r = restriction_of(f);
  RestrictionMap r_inv{r.a.inverse(), -(r.b / r.a), r.tau.inverse()};
  out.exceptional_lines_ok = true;
  for (int i = 0; i < 3; ++i) {
    CubicPoint q = r_inv.apply(minus[static_cast<std::size_t>(i)]);
    const auto& pj = plus[static_cast<std::size_t>((i + 1) % 3)];
    const auto& pk = plus[static_cast<std::size_t>((i + 2) % 3)];
    if (q.at_infinity || q.line != i + 1 || !collinear(q, pj, pk)) out.exceptional_lines_ok = false;
  }
  return out;
}

std::vector<KeyedMap> six_maps_n5(const DillerSolution& sol) {
  if (sol.n != 5) throw InvalidArgument("six_maps_n5 needs the n = 5 parameters");
  std::vector<KeyedMap> out;
  for (const auto& sigma : s3_elements()) out.push_back(KeyedMap{sigma, sigma.inverse(), construct_map(sol, sigma.inverse())});
  return out;
}

namespace {

struct PrintedScalars {
  NFElem s, r;
};

PrintedScalars printed_scalars(const DillerSolution& sol) {
  if (sol.n != 5) throw InvalidArgument("the printed matrices are for n = 5");
  const NFElem one = NFElem::one(sol.field);
  const NFElem a5 = sol.alpha.pow(5);
  const NFElem top = 2 * a5 + one;
  return {top / (a5 - one), top / (2 * a5 - 3 * sol.alpha + one)};
}

Mat3 third_of(const FieldPtr& F, const std::array<std::array<NFElem, 3>, 3>& rows) {
  Mat3 m = Mat3::identity(F);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m.a[r][c] = rows[r][c] * Rational(1, 3);
  return m;
}

}  // namespace

Mat3 printed_s_matrix(const DillerSolution& sol) {
  const auto [s, r] = printed_scalars(sol);
  const FieldPtr& F = sol.field;
  const NFElem o = NFElem::one(F), z = NFElem::zero(F);
  return third_of(F, {{{o, o, o}, {s, -s, z}, {s, z, -s}}});
}

Mat3 printed_t_matrix(const DillerSolution& sol, const Permutation& sigma) {
  const auto [s, r] = printed_scalars(sol);
  const FieldPtr& F = sol.field;
  const NFElem o = NFElem::one(F), z = NFElem::zero(F), m = -r;
  const std::string label = s3_label(sigma);
  if (label == "id") return third_of(F, {{{o, o, o}, {m, r, z}, {m, z, r}}});
  if (label == "(12)") return third_of(F, {{{o, o, o}, {r, m, z}, {z, m, r}}});
  if (label == "(13)") return third_of(F, {{{o, o, o}, {z, r, m}, {r, z, m}}});
  if (label == "(23)") return third_of(F, {{{o, o, o}, {m, z, r}, {m, r, z}}});
  if (label == "(123)") return third_of(F, {{{o, o, o}, {z, m, r}, {r, m, z}}});
  if (label == "(132)") return third_of(F, {{{o, o, o}, {r, z, m}, {z, r, m}}});
  throw InvalidArgument("unknown permutation " + label);
}

QuadraticMap printed_map_n5(const DillerSolution& sol, const Permutation& sigma) {
  return QuadraticMap(CremonaKind::J3, printed_t_matrix(sol, sigma), printed_s_matrix(sol));
}

}  // namespace coxforge
