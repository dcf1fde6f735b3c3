#include <doctest.h>

#include <random>

#include "coxforge/lattice.hpp"
#include "coxforge/linalg.hpp"
#include "coxforge/salem.hpp"
#include "oracles.hpp"

using namespace coxforge;

namespace {

LatticeIsometry random_word(std::mt19937_64& rng, int n, int len) {
  std::vector<int> w;
  for (int i = 0; i < len; ++i) w.push_back(static_cast<int>(rng() % static_cast<unsigned>(n)));
  return word_element(w, n);
}

// E_n graph: s_0 joined to s_3, s_i joined to s_{i+1} for 1 <= i.
int coxeter_m(int i, int j) {
  if (i == j) return 1;
  if (i > j) std::swap(i, j);
  if (i == 0) return j == 3 ? 3 : 2;
  return j == i + 1 ? 3 : 2;
}

}  // namespace

TEST_SUITE("coxeter") {

TEST_CASE("simple reflections") {
  LatticeIsometry s1 = simple_reflection(1, 3);
  CHECK(s1.column(1) == basis_vector(2, 3));
  CHECK(s1.column(2) == basis_vector(1, 3));
  CHECK(s1.column(0) == basis_vector(0, 3));
  CHECK(s1.column(3) == basis_vector(3, 3));
  LatticeIsometry s0 = simple_reflection(0, 3);
  CHECK(s0.column(0) == LatticeVector{2, -1, -1, -1});
  for (int n = 3; n <= 15; ++n)
    for (int i = 0; i < n; ++i) CHECK((simple_reflection(i, n) * simple_reflection(i, n)).is_identity());
  CHECK_THROWS_AS(simple_reflection(3, 3), IndexOutOfRange);
}

TEST_CASE("Cremona reflections") {
  LatticeIsometry sk = cremona_reflection(5, 10, 15, 15);
  LatticeVector e0 = basis_vector(0, 15);
  e0[0] = 2;
  e0[5] = e0[10] = e0[15] = -1;
  CHECK(sk.column(0) == e0);
  LatticeVector e5 = basis_vector(0, 15);
  e5[10] = e5[15] = -1;
  CHECK(sk.column(5) == e5);
  for (int j : {1, 2, 3, 4, 6, 14}) CHECK(sk.column(j) == basis_vector(j, 15));
  for (int n = 3; n <= 8; ++n) CHECK(cremona_reflection(1, 2, 3, n) == simple_reflection(0, n));
  CHECK_THROWS_AS(cremona_reflection(1, 1, 2, 5), DuplicateIndices);
}

TEST_CASE("reflection formula against the pairing") {
  // x -> x + (x.a) a for a = e0 - e1 - e2 - e3
  LatticeVector a{1, -1, -1, -1, 0};
  LatticeIsometry s = reflection(a);
  std::mt19937_64 rng(1);
  for (int it = 0; it < 20; ++it) {
    LatticeVector x(5);
    for (auto& v : x) v = static_cast<std::int64_t>(rng() % 11) - 5;
    LatticeVector y = x;
    std::int64_t c = pairing(x, a);
    for (std::size_t i = 0; i < 5; ++i) y[i] += c * a[i];
    CHECK(s.apply(x) == y);
  }
}

TEST_CASE("Coxeter relations of the E_n graph") {
  for (int n = 3; n <= 15; ++n)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        LatticeIsometry p = simple_reflection(i, n) * simple_reflection(j, n);
        CHECK(p.order(12) == coxeter_m(i, j));
      }
}

TEST_CASE("random words are isometries fixing kappa") {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 60; ++it) {
    int n = 3 + static_cast<int>(rng() % 13);
    LatticeIsometry w = random_word(rng, n, 1 + static_cast<int>(rng() % 12));
    CHECK(w.preserves_form());
    CHECK(w.fixes(kappa(n)));
    CHECK((w * w.inverse()).is_identity());
  }
}

TEST_CASE("char poly agrees with Faddeev-LeVerrier") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 40; ++it) {
    int n = 3 + static_cast<int>(rng() % 13);
    LatticeIsometry w = random_word(rng, n, 1 + static_cast<int>(rng() % 14));
    CHECK(char_poly(w) == oracle::faddeev_charpoly(oracle::to_mat(w)));
  }
}

TEST_CASE("Hessenberg char poly on a non-isometry") {
  RatMatrix a{{Rational(2), Rational(1), Rational(0)}, {Rational(0), Rational(3), Rational(4)}, {Rational(1), Rational(0), Rational(1)}};
  oracle::IntMat m{{2, 1, 0}, {0, 3, 4}, {1, 0, 1}};
  CHECK(charpoly_integer(a) == oracle::faddeev_charpoly(m));
}

TEST_CASE("char poly examples") {
  IntPolynomial t1{-1, 1};
  IntPolynomial expect{1};
  for (int i = 0; i < 16; ++i) expect *= t1;
  CHECK(char_poly(LatticeIsometry::identity(15)) == expect);
  LatticeIsometry w1 = word_element({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 10);
  CHECK(char_poly(w1) == t1 * polys::lehmer());
}

TEST_CASE("W_n char polys are cyclotomic times at most one Salem factor") {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 40; ++it) {
    int n = 9 + static_cast<int>(rng() % 5);
    LatticeIsometry w = random_word(rng, n, 4 + static_cast<int>(rng() % 20));
    IntPolynomial rest = strip_cyclotomic(char_poly(w));
    if (rest.degree() <= 0) continue;
    CHECK(is_salem(rest, Rational(1, 1000000)).is_salem);
  }
}

TEST_CASE("spectral radius") {
  const Rational eps(1, 100000000);
  RationalInterval one = spectral_radius(LatticeIsometry::identity(6), eps);
  CHECK(one.contains(Rational(1)));
  LatticeIsometry w1 = word_element({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 10);
  RationalInterval r = spectral_radius(w1, eps);
  CHECK(r.width() <= eps);
  CHECK(std::abs(r.approx() - 1.17628081826) < 1e-7);
  CHECK(std::abs(r.approx() - static_cast<double>(oracle::max_modulus(char_poly(w1)))) < 1e-7);
}

TEST_CASE("spectral radius is invariant under inversion") {
  std::mt19937_64 rng(5);
  const Rational eps(1, 1000000);
  for (int it = 0; it < 20; ++it) {
    int n = 10 + static_cast<int>(rng() % 4);
    LatticeIsometry w = random_word(rng, n, 6 + static_cast<int>(rng() % 10));
    CHECK(spectral_radius(w, eps).overlaps(spectral_radius(w.inverse(), eps)));
  }
}

TEST_CASE("traces and Lefschetz numbers") {
  CHECK(lefschetz_number(LatticeIsometry::identity(10), 1) == 13);
  LatticeIsometry w1 = word_element({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 10);
  CHECK(trace_power(w1, 2) == 2);
  CHECK(trace_power(w1, 4) == 2);
  CHECK(lefschetz_number(w1, 2) == lefschetz_number(w1, 4));
  CHECK(lefschetz_number(w1, 2) == 4);
  oracle::IntMat m = oracle::to_mat(w1);
  for (int k = 1; k <= 8; ++k) CHECK(trace_power(w1, k) == oracle::trace_pow(m, k));
}

TEST_CASE("matrix product matches the naive product") {
  std::mt19937_64 rng(6);
  for (int it = 0; it < 20; ++it) {
    LatticeIsometry a = random_word(rng, 8, 5), b = random_word(rng, 8, 7);
    CHECK(oracle::to_mat(a * b) == oracle::mul(oracle::to_mat(a), oracle::to_mat(b)));
  }
}

TEST_CASE("permutation matrices and describe") {
  Permutation p = Permutation::parse("(1 2 3)", 4);
  LatticeIsometry m = LatticeIsometry::from_permutation(p);
  CHECK(m.column(1) == basis_vector(2, 4));
  CHECK(m.order(10) == 3);
  CHECK(simple_reflection(0, 3).describe().rfind("e0 -> 2e0 - e1 - e2 - e3", 0) == 0);
}

TEST_CASE("checked arithmetic reports overflow") {
  LatticeIsometry w = word_element({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 10);
  CHECK_THROWS_AS(w.pow(2000), Overflow);
}

}  // TEST_SUITE
