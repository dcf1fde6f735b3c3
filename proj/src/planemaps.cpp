#include "coxforge/planemaps.hpp"

#include "coxforge/modp.hpp"

namespace coxforge {

ProjPoint ProjPoint::make(const FieldPtr& f, const Rational& a, const Rational& b, const Rational& c) {
  return ProjPoint{{NFElem(f, a), NFElem(f, b), NFElem(f, c)}};
}

ProjPoint ProjPoint::canonical() const {
  for (int i = 2; i >= 0; --i) {
    if (x[static_cast<std::size_t>(i)].is_zero()) continue;
    NFElem inv = x[static_cast<std::size_t>(i)].inverse();
    return ProjPoint{{x[0] * inv, x[1] * inv, x[2] * inv}};
  }
  throw InvalidArgument("the zero vector is not a projective point");
}

std::string ProjPoint::to_string() const {
  ProjPoint c = canonical();
  return "[" + c.x[0].to_string() + " : " + c.x[1].to_string() + " : " + c.x[2].to_string() + "]";
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
  if (a.is_zero() || b.is_zero()) throw InvalidArgument("comparing with the zero vector");
  return a.x[0] * b.x[1] == a.x[1] * b.x[0] && a.x[0] * b.x[2] == a.x[2] * b.x[0] &&
         a.x[1] * b.x[2] == a.x[2] * b.x[1];
}

ProjPoint coordinate_point(const FieldPtr& f, int i) {
  if (i < 1 || i > 3) throw IndexOutOfRange("coordinate point index " + std::to_string(i));
  return ProjPoint::make(f, i == 1, i == 2, i == 3);
}

ProjPoint random_point(const FieldPtr& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-9, 9);
  ProjPoint p;
  do {
    for (auto& c : p.x) {
      std::vector<Rational> v(static_cast<std::size_t>(f->degree()));
      for (auto& q : v) q = dist(rng);
      c = NFElem(f, v);
    }
  } while (p.is_zero());
  return p;
}

Mat3 Mat3::identity(const FieldPtr& f) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = NFElem(f, Rational(i == j));
  return m;
}

Mat3 Mat3::from_columns(const ProjPoint& c1, const ProjPoint& c2, const ProjPoint& c3) {
  Mat3 m;
  const ProjPoint* cols[3] = {&c1, &c2, &c3};
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) m.a[i][j] = cols[j]->x[i];
  return m;
}

ProjPoint Mat3::column(int j) const {
  if (j < 1 || j > 3) throw IndexOutOfRange("column " + std::to_string(j));
  auto J = static_cast<std::size_t>(j - 1);
  return ProjPoint{{a[0][J], a[1][J], a[2][J]}};
}

ProjPoint Mat3::apply(const ProjPoint& p) const {
  ProjPoint r;
  for (std::size_t i = 0; i < 3; ++i) r.x[i] = a[i][0] * p.x[0] + a[i][1] * p.x[1] + a[i][2] * p.x[2];
  return r;
}

NFElem Mat3::det() const {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3 Mat3::adjugate() const {
  Mat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r.a[i][j] = a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
    }
  return r;
}

Mat3 Mat3::inverse() const {
  NFElem d = det();
  if (d.is_zero()) throw DivisionByZero("singular 3x3 matrix");
  return adjugate().scaled(d.inverse());
}

Mat3 Mat3::scaled(const NFElem& s) const {
  Mat3 r = *this;
  for (auto& row : r.a)
    for (auto& e : row) e *= s;
  return r;
}

bool Mat3::equal_up_to_scalar(const Mat3& o) const {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (a[i][j].is_zero()) continue;
      NFElem lambda = o.a[i][j] / a[i][j];
      if (lambda.is_zero()) return false;
      return o == scaled(lambda);
    }
  return false;
}

Mat3 operator*(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.a[i][j] = x.a[i][0] * y.a[0][j] + x.a[i][1] * y.a[1][j] + x.a[i][2] * y.a[2][j];
  return r;
}

std::string kind_name(CremonaKind k) {
  switch (k) {
    case CremonaKind::J1: return "J1";
    case CremonaKind::J2: return "J2";
    case CremonaKind::J3: return "J3";
  }
  return "?";
}

namespace {

std::array<NFElem, 3> cremona_raw(CremonaKind kind, const std::array<NFElem, 3>& y) {
  switch (kind) {
    case CremonaKind::J3: return {y[1] * y[2], y[0] * y[2], y[0] * y[1]};
    case CremonaKind::J2: return {y[0] * y[2], y[1] * y[2], y[0] * y[0]};
    case CremonaKind::J1: return {y[0] * y[0], y[0] * y[1], y[1] * y[1] - y[0] * y[2]};
  }
  throw InvalidArgument("unknown Cremona kind");
}

int indeterminacy_index(const std::array<NFElem, 3>& y) {
  for (int i = 0; i < 3; ++i)
    if (!y[static_cast<std::size_t>(i)].is_zero()) return i + 1;
  return 0;
}

QuadForm product(const std::array<NFElem, 3>& l, const std::array<NFElem, 3>& m) {
  return {l[0] * m[0], l[1] * m[1], l[2] * m[2], l[0] * m[1] + l[1] * m[0], l[0] * m[2] + l[2] * m[0],
          l[1] * m[2] + l[2] * m[1]};
}

QuadForm combine(const QuadForm& a, const NFElem& s, const QuadForm& b, const NFElem& t) {
  QuadForm r;
  for (std::size_t i = 0; i < 6; ++i) r[i] = s * a[i] + t * b[i];
  return r;
}

}  // namespace

ProjPoint cremona_apply(CremonaKind kind, const ProjPoint& p) {
  ProjPoint r{cremona_raw(kind, p.x)};
  if (r.is_zero()) {
    int i = indeterminacy_index(p.x);
    throw Indeterminate(i, kind_name(kind) + " is undefined at e" + std::to_string(i));
  }
  return r;
}

QuadraticMap::QuadraticMap(CremonaKind kind, Mat3 t_minus, Mat3 t_plus)
    : kind_(kind), t_minus_(std::move(t_minus)), t_plus_(std::move(t_plus)) {
  if (!t_minus_.field()->same_as(*t_plus_.field())) throw FieldMismatch("T+ and T- over different fields");
  if (t_minus_.det().is_zero() || t_plus_.det().is_zero()) throw InvalidArgument("T+ and T- must be invertible");
  t_plus_adj_ = t_plus_.adjugate();
}

ProjPoint QuadraticMap::apply(const ProjPoint& p) const {
  ProjPoint y = t_plus_adj_.apply(p);
  ProjPoint z{cremona_raw(kind_, y.x)};
  if (z.is_zero()) {
    int i = indeterminacy_index(y.x);
    throw Indeterminate(i, "point is the indeterminacy point p" + std::to_string(i) + "+");
  }
  return t_minus_.apply(z);
}

QuadraticMap QuadraticMap::inverse() const {
  if (kind_ != CremonaKind::J3) throw NotBasic("inverse is only provided for basic (J3) maps");
  return QuadraticMap(kind_, t_plus_, t_minus_);
}

std::array<QuadForm, 3> QuadraticMap::forms() const {
  const FieldPtr& f = field();
  std::array<NFElem, 3> L[3];
  for (std::size_t m = 0; m < 3; ++m) L[m] = t_plus_adj_.a[m];
  NFElem one = NFElem::one(f), zero = NFElem::zero(f);
  std::array<QuadForm, 3> J;
  switch (kind_) {
    case CremonaKind::J3:
      J = {product(L[1], L[2]), product(L[0], L[2]), product(L[0], L[1])};
      break;
    case CremonaKind::J2:
      J = {product(L[0], L[2]), product(L[1], L[2]), product(L[0], L[0])};
      break;
    case CremonaKind::J1:
      J = {product(L[0], L[0]), product(L[0], L[1]), combine(product(L[1], L[1]), one, product(L[0], L[2]), -one)};
      break;
  }
  std::array<QuadForm, 3> out;
  for (std::size_t k = 0; k < 3; ++k) {
    QuadForm acc = combine(J[0], t_minus_.a[k][0], J[1], t_minus_.a[k][1]);
    out[k] = combine(acc, one, J[2], t_minus_.a[k][2]);
  }
  return out;
}

bool QuadraticMap::same_map(const QuadraticMap& o) const {
  auto a = forms(), b = o.forms();
  std::optional<NFElem> lambda;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 6; ++i) {
      if (a[k][i].is_zero() != b[k][i].is_zero()) return false;
      if (a[k][i].is_zero()) continue;
      NFElem r = b[k][i] / a[k][i];
      if (!lambda) lambda = r;
      else if (r != *lambda) return false;
    }
  return lambda.has_value();
}

bool on_line(const Line& l, const ProjPoint& p) { return (l[0] * p.x[0] + l[1] * p.x[1] + l[2] * p.x[2]).is_zero(); }

ExceptionalData exceptional_data(const QuadraticMap& f) {
  if (f.kind() != CremonaKind::J3) throw NotBasic("exceptional data needs a basic (J3) map");
  ExceptionalData d;
  Mat3 adj = f.t_plus().adjugate();
  for (int i = 1; i <= 3; ++i) {
    auto I = static_cast<std::size_t>(i - 1);
    d.p_plus[I] = f.t_plus().column(i);
    d.p_minus[I] = f.t_minus().column(i);
    // x in T+{x_i = 0} iff row i of (T+)^{-1} kills x.
    d.exc_lines[I] = adj.a[I];
  }
  return d;
}

std::string OrbitData::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) out += ", ";
    out += lengths[i] > 0 ? std::to_string(lengths[i]) : "inf";
  }
  out += ", " + sigma.to_string() + ")";
  return out;
}

namespace {

using modp::Fp;
using modp::FpPoly;
using modp::u64;

// Q(alpha) reduced modulo a prime ell: F_ell[x]/(minpoly mod ell).
struct Reduction {
  Fp F;
  FpPoly m;

  std::optional<FpPoly> reduce(const NFElem& e) const {
    FpPoly out;
    for (const auto& c : e.coeffs()) {
      u64 den = mpz_fdiv_ui(c.get_den_mpz_t(), F.ell);
      if (den == 0) return std::nullopt;
      u64 num = mpz_fdiv_ui(c.get_num_mpz_t(), F.ell);
      out.push_back(F.mul(num, F.inv(den)));
    }
    Fp::trim(out);
    return out;
  }
  FpPoly mul(const FpPoly& a, const FpPoly& b) const { return F.mulmod(a, b, m); }
  FpPoly add(FpPoly a, const FpPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.add(a[i], b[i]);
    Fp::trim(a);
    return a;
  }
  FpPoly sub(FpPoly a, const FpPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
    Fp::trim(a);
    return a;
  }
};

using PointP = std::array<FpPoly, 3>;
using MatP = std::array<std::array<FpPoly, 3>, 3>;

struct ReducedMap {
  Reduction R;
  CremonaKind kind;
  MatP t_minus, t_plus_adj;
  std::array<PointP, 3> p_plus, p_minus;

  PointP mat_apply(const MatP& a, const PointP& p) const {
    PointP r;
    for (std::size_t i = 0; i < 3; ++i)
      r[i] = R.add(R.add(R.mul(a[i][0], p[0]), R.mul(a[i][1], p[1])), R.mul(a[i][2], p[2]));
    return r;
  }
  PointP step(const PointP& p) const {
    PointP y = mat_apply(t_plus_adj, p);
    PointP z;
    switch (kind) {
      case CremonaKind::J3: z = {R.mul(y[1], y[2]), R.mul(y[0], y[2]), R.mul(y[0], y[1])}; break;
      case CremonaKind::J2: z = {R.mul(y[0], y[2]), R.mul(y[1], y[2]), R.mul(y[0], y[0])}; break;
      case CremonaKind::J1: z = {R.mul(y[0], y[0]), R.mul(y[0], y[1]), R.sub(R.mul(y[1], y[1]), R.mul(y[0], y[2]))}; break;
    }
    return mat_apply(t_minus, z);
  }
  bool proportional(const PointP& a, const PointP& b) const {
    return R.sub(R.mul(a[0], b[1]), R.mul(a[1], b[0])).empty() && R.sub(R.mul(a[0], b[2]), R.mul(a[2], b[0])).empty() &&
           R.sub(R.mul(a[1], b[2]), R.mul(a[2], b[1])).empty();
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<ReducedMap> reduce_map(const QuadraticMap& f, u64 ell) {
  ReducedMap rm{{Fp{ell}, {}}, f.kind(), {}, {}, {}, {}};
  for (const auto& c : f.field()->minpoly().coeffs()) rm.R.m.push_back(mpz_fdiv_ui(c.get_mpz_t(), ell));
  Fp::trim(rm.R.m);
  auto red = [&](const NFElem& e, FpPoly& out) {
    auto r = rm.R.reduce(e);
    if (!r) return false;
    out = std::move(*r);
    return true;
  };
  Mat3 adj = f.t_plus().adjugate();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!red(f.t_minus().a[i][j], rm.t_minus[i][j]) || !red(adj.a[i][j], rm.t_plus_adj[i][j])) return std::nullopt;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k)
      if (!red(f.t_plus().a[k][i], rm.p_plus[i][k]) || !red(f.t_minus().a[k][i], rm.p_minus[i][k])) return std::nullopt;
  return rm;
}

}  // namespace

OrbitData orbit_data(const QuadraticMap& f, int max_iter) {
  if (max_iter < 1) throw InvalidArgument("max_iter must be >= 1");
  std::vector<int> starts;  // y-space index of each tracked exceptional image
  std::vector<int> targets;
  switch (f.kind()) {
    case CremonaKind::J3: starts = {1, 2, 3}; targets = {1, 2, 3}; break;
    case CremonaKind::J2: starts = {2, 3}; targets = {2, 3}; break;
    case CremonaKind::J1: starts = {3}; targets = {3}; break;
  }

  // Two primes at a time; a candidate must survive both before the exact check.
  std::vector<ReducedMap> reds;
  u64 next_prime = 1000003;
  auto refill = [&] {
    reds.clear();
    while (reds.size() < 2) {
      u64 ell = next_prime;
      next_prime += 2;
      if (!is_prime(ell)) continue;
      if (auto rm = reduce_map(f, ell)) reds.push_back(std::move(*rm));
    }
  };
  refill();

  std::vector<int> found_len(starts.size(), 0), found_tgt(starts.size(), 0);
  for (std::size_t s = 0; s < starts.size(); ++s) {
    const int i = starts[s];
    int begin = 1;
    while (true) {
      std::vector<PointP> cur;
      for (const auto& rm : reds) cur.push_back(rm.p_minus[static_cast<std::size_t>(i - 1)]);
      int cand_k = 0, cand_t = 0;
      for (int k = 1; k <= max_iter && cand_k == 0; ++k) {
        if (k > 1)
          for (std::size_t r = 0; r < reds.size(); ++r) cur[r] = reds[r].step(cur[r]);
        if (k < begin) continue;
        for (int t : targets) {
          bool all = true;
          for (std::size_t r = 0; r < reds.size() && all; ++r)
            all = reds[r].proportional(cur[r], reds[r].p_plus[static_cast<std::size_t>(t - 1)]);
          if (all) {
            cand_k = k;
            cand_t = t;
            break;
          }
        }
      }
      if (cand_k == 0) break;
      // Exact confirmation.
      ProjPoint q = f.t_minus().column(i);
      bool ok = true;
      try {
        for (int k = 1; k < cand_k; ++k) q = f.apply(q);
      } catch (const Indeterminate&) {
        ok = false;
      }
      if (ok && q == f.t_plus().column(cand_t)) {
        found_len[s] = cand_k;
        found_tgt[s] = cand_t;
        break;
      }
      begin = cand_k + 1;
      refill();
      if (begin > max_iter) break;
    }
  }

  OrbitData d;
  switch (f.kind()) {
    case CremonaKind::J3: {
      std::vector<int> img(3);
      bool perm_ok = true;
      for (std::size_t s = 0; s < 3; ++s) {
        d.lengths[s] = found_len[s];
        img[s] = found_tgt[s];
      }
      if (d.finite()) {
        try {
          d.sigma = Permutation::from_images(img);
        } catch (const InvalidArgument&) {
          perm_ok = false;
        }
        if (!perm_ok) throw OrbitMismatch("exceptional orbits end on repeated indeterminacy points");
      }
      break;
    }
    case CremonaKind::J2:
      d.lengths = {found_len[0], found_len[0], found_len[1]};
      break;
    case CremonaKind::J1:
      d.lengths = {found_len[0], found_len[0], found_len[0]};
      break;
  }
  return d;
}

}  // namespace coxforge
