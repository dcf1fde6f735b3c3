#include "coxforge/lattice.hpp"

#include <cmath>

#include "coxforge/linalg.hpp"

namespace coxforge {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("lattice matrix entry exceeds 64 bits");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("lattice matrix entry exceeds 64 bits");
  return r;
}

void check_rank(int n) {
  if (n < 0) throw InvalidArgument("lattice rank must be >= 0");
}

}  // namespace

std::int64_t pairing(const LatticeVector& x, const LatticeVector& y) {
  if (x.size() != y.size() || x.empty()) throw InvalidArgument("pairing of vectors of different lengths");
  std::int64_t s = checked_mul(x[0], y[0]);
  for (std::size_t i = 1; i < x.size(); ++i) s = checked_add(s, -checked_mul(x[i], y[i]));
  return s;
}

LatticeVector basis_vector(int i, int n) {
  check_rank(n);
  if (i < 0 || i > n) throw IndexOutOfRange("basis index " + std::to_string(i) + " outside 0.." + std::to_string(n));
  LatticeVector v(static_cast<std::size_t>(n + 1), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

LatticeVector kappa(int n) {
  check_rank(n);
  LatticeVector v(static_cast<std::size_t>(n + 1), 1);
  v[0] = -3;
  return v;
}

LatticeIsometry LatticeIsometry::identity(int n) {
  check_rank(n);
  LatticeIsometry m;
  m.n_ = n;
  m.m_.assign(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
  for (int i = 0; i <= n; ++i) m.m_[static_cast<std::size_t>(i * (n + 2))] = 1;
  return m;
}

LatticeIsometry LatticeIsometry::from_rows(int n, std::vector<std::int64_t> row_major) {
  check_rank(n);
  if (row_major.size() != static_cast<std::size_t>((n + 1) * (n + 1)))
    throw InvalidArgument("matrix needs (n+1)^2 entries");
  LatticeIsometry m;
  m.n_ = n;
  m.m_ = std::move(row_major);
  return m;
}

LatticeIsometry LatticeIsometry::from_permutation(const Permutation& perm) {
  const int n = perm.size();
  LatticeIsometry m = identity(n);
  std::fill(m.m_.begin(), m.m_.end(), 0);
  m.m_[0] = 1;
  for (int i = 1; i <= n; ++i) m.m_[static_cast<std::size_t>(perm(i) * (n + 1) + i)] = 1;
  return m;
}

LatticeVector LatticeIsometry::column(int j) const {
  if (j < 0 || j > n_) throw IndexOutOfRange("column " + std::to_string(j));
  LatticeVector v(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) v[static_cast<std::size_t>(i)] = (*this)(i, j);
  return v;
}

LatticeVector LatticeIsometry::apply(const LatticeVector& v) const {
  if (static_cast<int>(v.size()) != dim()) throw InvalidArgument("vector length does not match the lattice");
  LatticeVector out(v.size(), 0);
  for (int i = 0; i < dim(); ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < dim(); ++j) s = checked_add(s, checked_mul((*this)(i, j), v[static_cast<std::size_t>(j)]));
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

bool LatticeIsometry::preserves_form() const {
  for (int i = 0; i < dim(); ++i) {
    LatticeVector ci = column(i);
    for (int j = i; j < dim(); ++j) {
      std::int64_t expect = i != j ? 0 : (i == 0 ? 1 : -1);
      if (pairing(ci, column(j)) != expect) return false;
    }
  }
  return true;
}

bool LatticeIsometry::is_identity() const { return *this == identity(n_); }

std::int64_t LatticeIsometry::trace() const {
  std::int64_t s = 0;
  for (int i = 0; i < dim(); ++i) s = checked_add(s, (*this)(i, i));
  return s;
}

LatticeIsometry LatticeIsometry::inverse() const {
  LatticeIsometry r = *this;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      int sign = ((i == 0) == (j == 0)) ? 1 : -1;
      r.m_[static_cast<std::size_t>(i * dim() + j)] = sign * (*this)(j, i);
    }
  return r;
}

LatticeIsometry LatticeIsometry::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  LatticeIsometry r = identity(n_), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k > 0) b = b * b;
  }
  return r;
}

long LatticeIsometry::order(long bound) const {
  LatticeIsometry p = *this;
  for (long k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    p = p * *this;
  }
  return 0;
}

LatticeIsometry operator*(const LatticeIsometry& a, const LatticeIsometry& b) {
  if (a.n_ != b.n_) throw InvalidArgument("composing isometries of different ranks");
  const int d = a.dim();
  LatticeIsometry r;
  r.n_ = a.n_;
  r.m_.assign(a.m_.size(), 0);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < d; ++j) {
        std::int64_t y = b(k, j);
        if (y == 0) continue;
        auto& slot = r.m_[static_cast<std::size_t>(i * d + j)];
        slot = checked_add(slot, checked_mul(x, y));
      }
    }
  return r;
}

std::string LatticeIsometry::describe() const {
  std::string out;
  for (int j = 0; j < dim(); ++j) {
    out += "e" + std::to_string(j) + " -> ";
    std::string img;
    for (int i = 0; i < dim(); ++i) {
      std::int64_t c = (*this)(i, j);
      if (c == 0) continue;
      std::int64_t mag = c < 0 ? -c : c;
      if (img.empty()) img += c < 0 ? "-" : "";
      else img += c < 0 ? " - " : " + ";
      if (mag != 1) img += std::to_string(mag);
      img += "e" + std::to_string(i);
    }
    out += (img.empty() ? "0" : img) + "\n";
  }
  return out;
}

LatticeIsometry reflection(const LatticeVector& root) {
  if (root.empty()) throw InvalidArgument("empty root");
  if (pairing(root, root) != -2) throw InvalidArgument("reflection needs a root with self-intersection -2");
  const int n = static_cast<int>(root.size()) - 1;
  LatticeIsometry id = LatticeIsometry::identity(n);
  std::vector<std::int64_t> m(id.entries());
  // Column j: e_j + (e_j . a) a, with e_j . a = +-a_j.
  for (int j = 0; j <= n; ++j) {
    std::int64_t ej_a = j == 0 ? root[0] : -root[static_cast<std::size_t>(j)];
    for (int i = 0; i <= n; ++i)
      m[static_cast<std::size_t>(i * (n + 1) + j)] += checked_mul(ej_a, root[static_cast<std::size_t>(i)]);
  }
  return LatticeIsometry::from_rows(n, std::move(m));
}

LatticeIsometry simple_reflection(int i, int n) {
  if (n < 3) throw InvalidArgument("W_n needs n >= 3");
  if (i < 0 || i > n - 1) throw IndexOutOfRange("simple reflection s_" + std::to_string(i) + " not in W_" + std::to_string(n));
  if (i == 0) return cremona_reflection(1, 2, 3, n);
  LatticeVector a(static_cast<std::size_t>(n + 1), 0);
  a[static_cast<std::size_t>(i)] = 1;
  a[static_cast<std::size_t>(i + 1)] = -1;
  return reflection(a);
}

LatticeIsometry cremona_reflection(int i, int j, int k, int n) {
  for (int x : {i, j, k})
    if (x < 1 || x > n) throw IndexOutOfRange("Cremona index " + std::to_string(x) + " outside 1.." + std::to_string(n));
  if (i == j || j == k || i == k) throw DuplicateIndices("Cremona reflection needs distinct indices");
  LatticeVector a(static_cast<std::size_t>(n + 1), 0);
  a[0] = 1;
  a[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(k)] = -1;
  return reflection(a);
}

LatticeIsometry word_element(const std::vector<int>& letters, int n) {
  LatticeIsometry r = LatticeIsometry::identity(n);
  for (int l : letters) r = r * simple_reflection(l, n);
  return r;
}

IntPolynomial char_poly(const LatticeIsometry& w) {
  RatMatrix a(static_cast<std::size_t>(w.dim()), std::vector<Rational>(static_cast<std::size_t>(w.dim())));
  for (int i = 0; i < w.dim(); ++i)
    for (int j = 0; j < w.dim(); ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rational(static_cast<long>(w(i, j)));
  return charpoly_integer(a);
}

std::int64_t trace_power(const LatticeIsometry& w, long k) { return w.pow(k).trace(); }

std::int64_t lefschetz_number(const LatticeIsometry& w, long k) {
  if (k < 1) throw InvalidArgument("Lefschetz number needs k >= 1");
  return checked_add(2, trace_power(w, k));
}

RationalInterval spectral_radius_of(const IntPolynomial& p, const Rational& eps) {
  IntPolynomial q = squarefree_part(p);
  RootClassification rc = classify_roots(q, eps);
  const int outside = rc.n_real_gt1 + rc.n_real_lt_neg1 + rc.n_off_circle_complex;
  if (outside == 0) {
    if (rc.n_on_circle > 0) return RationalInterval::point(1);
    throw Inconclusive("every root lies strictly inside the unit circle");
  }
  // Largest real modulus, from either end of the real line.
  std::optional<RationalInterval> best;
  if (rc.n_real_gt1 > 0) best = rc.largest_real;
  if (rc.n_real_lt_neg1 > 0) {
    std::vector<Integer> v = q.coeffs();
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    IntPolynomial neg(std::move(v));
    auto neg_rc = classify_roots(neg, eps);
    if (!best || neg_rc.largest_real->lo > best->hi) best = neg_rc.largest_real;
    else if (!(neg_rc.largest_real->hi < best->lo))
      throw Inconclusive("dominant real roots of opposite sign are not separated at this eps");
  }
  if (rc.n_off_circle_complex > 0) {
    long double complex_max = 0;
    for (const auto& z : approximate_roots(q))
      if (std::fabs(z.imag()) > 1e-12L * std::max(1.0L, std::abs(z))) complex_max = std::max(complex_max, std::abs(z));
    if (!best || complex_max > static_cast<long double>(best->lo.get_d()) - 1e-9L)
      throw Inconclusive("the dominant root is non-real; no exact enclosure available");
  }
  return *best;
}

RationalInterval spectral_radius(const LatticeIsometry& w, const Rational& eps) {
  return spectral_radius_of(char_poly(w), eps);
}

}  // namespace coxforge
