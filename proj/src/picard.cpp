#include "coxforge/picard.hpp"

#include <algorithm>

namespace coxforge {

int base_index(const DillerSolution& sol, const ProjPoint& p) {
  auto c = locate(p);
  if (!c || c->at_infinity) return 0;
  for (int j = 1; j <= sol.n; ++j)
    if (sol.base_point(c->line, j) == *c) return (c->line - 1) * sol.n + j;
  return 0;
}

namespace {

class ColumnBuilder {
 public:
  explicit ColumnBuilder(int n) : n_(n), m_(static_cast<std::size_t>((n + 1) * (n + 1)), 0), set_(static_cast<std::size_t>(n + 1), false) {}

  void set(int col, const LatticeVector& v) {
    if (set_[static_cast<std::size_t>(col)]) throw OrbitMismatch("two classes map to e" + std::to_string(col));
    set_[static_cast<std::size_t>(col)] = true;
    for (int r = 0; r <= n_; ++r) m_[static_cast<std::size_t>(r * (n_ + 1) + col)] = v[static_cast<std::size_t>(r)];
  }
  LatticeIsometry build() const {
    for (int c = 0; c <= n_; ++c)
      if (!set_[static_cast<std::size_t>(c)]) throw OrbitMismatch("no class maps to e" + std::to_string(c));
    return LatticeIsometry::from_rows(n_, m_);
  }

 private:
  int n_;
  std::vector<std::int64_t> m_;
  std::vector<bool> set_;
};

}  // namespace

LatticeIsometry induced_action(const QuadraticMap& f, const DillerSolution& sol) {
  const int N = 3 * sol.n;
  ExceptionalData ed = exceptional_data(f);
  std::array<int, 3> plus{}, minus{};
  for (std::size_t i = 0; i < 3; ++i) {
    plus[i] = base_index(sol, ed.p_plus[i]);
    minus[i] = base_index(sol, ed.p_minus[i]);
    if (plus[i] == 0 || minus[i] == 0) throw OrbitMismatch("an indeterminacy point is outside the base locus");
  }
  ColumnBuilder cb(N);
  LatticeVector e0 = basis_vector(0, N);
  e0[0] = 2;
  for (int k : plus) e0[static_cast<std::size_t>(k)] = -1;
  cb.set(0, e0);
  for (std::size_t i = 0; i < 3; ++i) {
    LatticeVector v = basis_vector(0, N);
    for (std::size_t k = 0; k < 3; ++k)
      if (k != i) v[static_cast<std::size_t>(plus[k])] = -1;
    cb.set(minus[i], v);
  }
  for (int q = 1; q <= N; ++q) {
    if (std::find(plus.begin(), plus.end(), q) != plus.end()) continue;
    const int line = (q - 1) / sol.n + 1, j = (q - 1) % sol.n + 1;
    int image = base_index(sol, f.apply(embed(sol.base_point(line, j))));
    if (image == 0) throw OrbitMismatch("base point " + std::to_string(q) + " leaves the base locus");
    cb.set(image, basis_vector(q, N));
  }
  LatticeIsometry m = cb.build();
  if (!m.preserves_form() || !m.fixes(kappa(N))) throw OrbitMismatch("tracked action is not an isometry fixing kappa");
  return m;
}

std::string cycles_from_largest(const Permutation& p) { return cycles_led_by(p, {}); }

std::string cycles_led_by(const Permutation& p, const std::vector<int>& leaders) {
  std::vector<std::vector<int>> cycles;
  for (auto cyc : p.cycles()) {
    auto lead = cyc.end();
    for (auto it = cyc.begin(); it != cyc.end(); ++it)
      if (std::find(leaders.begin(), leaders.end(), *it) != leaders.end() && (lead == cyc.end() || *it < *lead)) lead = it;
    if (lead == cyc.end()) lead = std::max_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), lead, cyc.end());
    cycles.push_back(std::move(cyc));
  }
  std::sort(cycles.begin(), cycles.end());
  std::string out;
  for (const auto& cyc : cycles) {
    out += "(";
    for (std::size_t i = 0; i < cyc.size(); ++i) out += (i ? " " : "") + std::to_string(cyc[i]);
    out += ")";
  }
  return out.empty() ? "id" : out;
}

std::string Presentation::text() const {
  return "s(" + std::to_string(kappa[0]) + "," + std::to_string(kappa[1]) + "," + std::to_string(kappa[2]) + ") " +
         cycles_led_by(perm, {kappa[0], kappa[1], kappa[2]});
}

std::optional<Presentation> presentation(const LatticeIsometry& m, std::array<int, 3> kappa_idx) {
  const int N = m.n();
  LatticeIsometry p = cremona_reflection(kappa_idx[0], kappa_idx[1], kappa_idx[2], N) * m;
  if (p(0, 0) != 1) return std::nullopt;
  std::vector<int> images(static_cast<std::size_t>(N), 0);
  for (int c = 1; c <= N; ++c) {
    int hit = 0;
    for (int r = 0; r <= N; ++r) {
      std::int64_t v = p(r, c);
      if (v == 0) continue;
      if (v != 1 || r == 0 || hit) return std::nullopt;
      hit = r;
    }
    if (!hit) return std::nullopt;
    images[static_cast<std::size_t>(c - 1)] = hit;
  }
  for (int r = 1; r <= N; ++r)
    if (p(r, 0) != 0) return std::nullopt;
  Presentation out;
  out.kappa = kappa_idx;
  out.perm = Permutation::from_images(images);
  return out;
}

LatticeIsometry action_from_orbit_data(const OrbitData& data) {
  if (!data.finite()) throw InvalidArgument("action_from_orbit_data needs finite orbit lengths");
  const int N = data.total();
  std::array<int, 3> off{0, data.lengths[0], data.lengths[0] + data.lengths[1]};
  auto last = [&](int i) { return off[static_cast<std::size_t>(i - 1)] + data.lengths[static_cast<std::size_t>(i - 1)]; };
  std::vector<int> images(static_cast<std::size_t>(N));
  const Permutation sinv = data.sigma.inverse();
  for (int i = 1; i <= 3; ++i) {
    const int o = off[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j < data.lengths[static_cast<std::size_t>(i - 1)]; ++j)
      images[static_cast<std::size_t>(o + j)] = o + j;  // e_{o+j+1} -> e_{o+j}
    images[static_cast<std::size_t>(o)] = last(sinv(i));
  }
  LatticeIsometry p = LatticeIsometry::from_permutation(Permutation::from_images(images));
  return cremona_reflection(last(1), last(2), last(3), N) * p;
}

LatticeIsometry orbit_to_geometric(const LatticeIsometry& orbit_action, int n, const Permutation& tau) {
  if (orbit_action.n() != 3 * n) throw InvalidArgument("orbit action has the wrong rank");
  std::vector<int> images(static_cast<std::size_t>(3 * n));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= n; ++j)
      images[static_cast<std::size_t>((i - 1) * n + j - 1)] = (tau.pow(j)(i) - 1) * n + j;
  LatticeIsometry pi = LatticeIsometry::from_permutation(Permutation::from_images(images));
  return pi * orbit_action * pi.inverse();
}

IntPolynomial bk_charpoly(const OrbitData& data) {
  if (!data.finite()) throw InvalidArgument("bk_charpoly needs finite orbit lengths");
  auto T = [](int k) { return IntPolynomial::monomial(Integer(1), static_cast<std::size_t>(k)); };
  const IntPolynomial one = IntPolynomial::constant(1), t = T(1);
  const auto& n = data.lengths;
  const Permutation& s = data.sigma;
  if (s.is_identity()) {
    return (t - IntPolynomial::constant(2)) * T(n[0] + n[1] + n[2]) + T(n[0] + n[1]) + T(n[1] + n[2]) +
           T(n[0] + n[2]) - t * (T(n[0]) + T(n[1]) + T(n[2])) + IntPolynomial::constant(2) * t - one;
  }
  if (s.order() == 3) {
    return (t - one) * ((T(n[0]) + one) * (T(n[1]) + one) * (T(n[2]) + one) + one) - (T(n[0] + n[1] + n[2]) - one);
  }
  int k = 1;
  while (s(k) != k) ++k;
  std::vector<int> ij;
  for (int x = 1; x <= 3; ++x)
    if (x != k) ij.push_back(x);
  const int ni = n[static_cast<std::size_t>(ij[0] - 1)], nj = n[static_cast<std::size_t>(ij[1] - 1)];
  const int nk = n[static_cast<std::size_t>(k - 1)];
  return (t - one) * (T(nk) * (T(ni) + one) * (T(nj) + one) - T(ni) - T(nj) - IntPolynomial::constant(2)) -
         (T(ni + nj) - one) * (T(nk) - one);
}

namespace {

const char* printed_cycles(const std::string& label) {
  if (label == "id") return "(5 4 3 2 1)(10 9 8 7 6)(15 14 13 12 11)";
  if (label == "(12)") return "(5 9 3 7 1 10 9 8 7 6)(15 14 13 12 11)";
  if (label == "(13)") return "(5 14 3 12 1 15 4 13 2 11)(10 9 8 7 6)";
  if (label == "(23)") return "(5 4 3 2 1)(10 14 8 12 6 15 9 13 7 11)";
  if (label == "(123)") return "(5 9 13 2 6 15 4 8 12 1 10 14 3 7 11)";
  if (label == "(132)") return "(5 14 8 2 11 10 4 13 7 1 15 9 3 12 6)";
  throw InvalidArgument("no printed action for " + label);
}

}  // namespace

PrintedAction printed_action(const Permutation& sigma) {
  PrintedAction out;
  out.sigma = sigma;
  out.cycles = printed_cycles(s3_label(sigma));
  try {
    Permutation p = Permutation::parse(out.cycles, 15);
    out.matrix = cremona_reflection(5, 10, 15, 15) * LatticeIsometry::from_permutation(p);
  } catch (const ParseError& e) {
    out.parse_error = e.what();
  }
  return out;
}

std::vector<ErratumEntry> errata_report(const DillerSolution& sol) {
  std::vector<ErratumEntry> out;
  for (const auto& km : six_maps_n5(sol)) {
    ErratumEntry e;
    e.sigma = km.sigma;
    e.derived = induced_action(km.map, sol);
    e.derived_preserves_form = e.derived.preserves_form();
    e.derived_fixes_kappa = e.derived.fixes(kappa(15));
    if (auto pres = presentation(e.derived, {5, 10, 15})) e.derived_text = pres->text();
    PrintedAction pa = printed_action(km.sigma);
    e.printed_text = "s(5,10,15) " + pa.cycles;
    if (!pa.matrix) {
      e.status = "unparseable";
      e.detail = pa.parse_error;
    } else if (*pa.matrix == e.derived) {
      e.status = "match";
    } else {
      e.status = "mismatch";
      for (int c = 0; c <= 15; ++c)
        if (pa.matrix->column(c) != e.derived.column(c)) e.detail += (e.detail.empty() ? "columns differ: e" : ", e") + std::to_string(c);
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace coxforge
