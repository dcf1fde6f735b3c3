#include <doctest.h>

#include <random>

#include "coxforge/numberfield.hpp"
#include "coxforge/resultant.hpp"
#include "coxforge/roots.hpp"
#include "oracles.hpp"

using namespace coxforge;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int deg, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<Integer> c;
  for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng));
  if (c.back() == 0) c.back() = 1;
  return IntPolynomial(c);
}

FieldPtr phi_field() { return NumberField::create(polys::phi()); }

}  // namespace

TEST_SUITE("exactnum") {

TEST_CASE("exact division recovers the Salem quartic from chi_5") {
  IntPolynomial chi5 = polys::chi(5);
  CHECK(chi5 == IntPolynomial{-1, 2, 0, 0, 0, -2, 1});
  IntPolynomial q = poly_divide_exact(chi5, IntPolynomial{-1, 1});
  CHECK(q == IntPolynomial{1, -1, -1, -1, -1, 1});
  CHECK(poly_divide_exact(q, IntPolynomial{1, 1}) == polys::phi());
  CHECK(poly_divide_exact(q, IntPolynomial{1}) == q);
  CHECK_THROWS_AS(poly_divide_exact(q, IntPolynomial{-2, 1}), NotDivisible);
  CHECK_THROWS_AS(poly_divide_exact(IntPolynomial{1, 0, 1}, IntPolynomial{0, 2}), NotDivisible);
}

TEST_CASE("exact division inverts multiplication on random inputs") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    IntPolynomial a = random_poly(rng, static_cast<int>(rng() % 7), 9);
    IntPolynomial b = random_poly(rng, static_cast<int>(rng() % 5), 9);
    CHECK(poly_divide_exact(a * b, b) == a);
  }
}

TEST_CASE("cyclotomic stripping") {
  CHECK(strip_cyclotomic(polys::chi(5), 16) == polys::phi());
  CHECK(strip_cyclotomic(polys::phi()) == polys::phi());
  CHECK(strip_cyclotomic(IntPolynomial{1, 0, 1}) == IntPolynomial{1});
  // trial division oracle: phi has no Phi_k factor for k <= 16
  for (unsigned k = 1; k <= 16; ++k) CHECK_FALSE(divides(cyclotomic(k), polys::phi()));
  CyclotomicSplit s = split_cyclotomic(IntPolynomial{-1, 1} * IntPolynomial{-1, 1} * IntPolynomial{1, 1} * polys::lehmer());
  CHECK(s.remainder == polys::lehmer());
  REQUIRE(s.factors.size() == 2);
  CHECK(s.factors[0] == std::pair<unsigned, unsigned>{1, 2});
  CHECK(s.factors[1] == std::pair<unsigned, unsigned>{2, 1});
}

TEST_CASE("cyclotomic stripping is idempotent") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    IntPolynomial p = random_poly(rng, 3, 4) * cyclotomic(static_cast<unsigned>(1 + rng() % 12));
    IntPolynomial once = strip_cyclotomic(p, 30);
    CHECK(strip_cyclotomic(once, 30) == once);
  }
}

TEST_CASE("cyclotomic polynomials have the right degree and roots of unity") {
  // degree = Euler phi
  const int phis[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12, 6, 8, 8};
  for (unsigned k = 1; k <= 16; ++k) {
    CHECK(cyclotomic(k).degree() == phis[k - 1]);
    for (auto r : oracle::roots(cyclotomic(k))) CHECK(std::abs(std::abs(r) - 1.0L) < 1e-9L);
  }
}

TEST_CASE("gcd and squarefree part") {
  IntPolynomial a = IntPolynomial{-1, 1} * IntPolynomial{2, 1};
  IntPolynomial b = IntPolynomial{-1, 1} * IntPolynomial{3, 0, 1};
  CHECK(gcd(a, b) == IntPolynomial{-1, 1});
  IntPolynomial sq = a * a * IntPolynomial{5, 1};
  CHECK_FALSE(is_squarefree(sq));
  CHECK(squarefree_part(sq) == a * IntPolynomial{5, 1});
  ExtendedGcd eg = extended_gcd(to_rational(a), to_rational(b));
  CHECK(eg.s * to_rational(a) + eg.t * to_rational(b) == eg.g);
}

TEST_CASE("parse_coefficients is ascending") {
  CHECK(parse_coefficients("[1,-2,1,-2,1]") == polys::phi());
  CHECK(parse_coefficients("2,-2,1,-2,1") == IntPolynomial{2, -2, 1, -2, 1});
  CHECK(parse_coefficients("2,-2,1,-2,1").to_string() == "t^4 - 2t^3 + t^2 - 2t + 2");
  CHECK_THROWS_AS(parse_coefficients("1,x"), ParseError);
}

TEST_CASE("parse_rational accepts decimal, scientific and fraction forms") {
  CHECK(parse_rational("1e-12") == default_eps());
  CHECK(parse_rational("1/1000") == Rational(1, 1000));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("number field arithmetic in Q(alpha), alpha the top root of phi") {
  FieldPtr F = phi_field();
  NFElem a = NFElem::gen(F);
  CHECK(a * a.inverse() == NFElem::one(F));
  // a^4 reduced by hand: 2a^3 - a^2 + 2a - 1
  CHECK(a.pow(4) == NFElem(F, {Rational(-1), Rational(2), Rational(-1), Rational(2)}));
  NFElem a5 = a.pow(5);
  NFElem s = (2 * a5 + NFElem::one(F)) / (a5 - NFElem::one(F));
  CHECK(s * (a5 - NFElem::one(F)) == 2 * a5 + NFElem::one(F));
  CHECK(std::abs(static_cast<double>(a.approx()) - 1.8832035059) < 1e-9);
  CHECK(a.sign() == 1);
  CHECK((NFElem::one(F) - a).sign() == -1);
  CHECK(a.pow(-2) * a.pow(2) == NFElem::one(F));
  CHECK_THROWS_AS(NFElem::zero(F).inverse(), DivisionByZero);
  CHECK(a.enclosure().overlaps(F->root_enclosure()));
}

TEST_CASE("nonzero elements have exact inverses") {
  FieldPtr F = NumberField::create(polys::lehmer());
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int it = 0; it < 60; ++it) {
    std::vector<Rational> c;
    for (int i = 0; i < 10; ++i) c.emplace_back(d(rng), 1 + (rng() % 5));
    NFElem x(F, c);
    if (x.is_zero()) continue;
    CHECK(x * x.inverse() == NFElem::one(F));
  }
}

TEST_CASE("elements of different fields do not mix") {
  NFElem a = NFElem::gen(phi_field());
  NFElem b = NFElem::gen(NumberField::create(polys::lehmer()));
  CHECK_THROWS_AS(a + b, FieldMismatch);
}

TEST_CASE("resultant matches the Sylvester determinant") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 40; ++it) {
    IntPolynomial a = random_poly(rng, 1 + static_cast<int>(rng() % 5), 6);
    IntPolynomial b = random_poly(rng, 1 + static_cast<int>(rng() % 5), 6);
    CHECK(resultant(a, b) == oracle::sylvester_resultant(a, b));
  }
}

TEST_CASE("min poly of products") {
  CHECK(min_poly_of_product(IntPolynomial{-2, 1}, IntPolynomial{-2, 1}) == IntPolynomial{-4, 1});
  IntPolynomial recip = min_poly_of_product(polys::phi(), polys::phi().reversed());
  CHECK(divides(IntPolynomial{-1, 1}, recip));
  IntPolynomial sq = min_poly_of_product(polys::phi(), polys::phi());
  CHECK(std::abs(oracle::max_modulus(sq) - 3.5464554) < 1e-6);
  auto r = isolate_real_roots(squarefree_part(sq), Rational(1, 1000000000));
  CHECK(std::abs(r.back().approx() - 3.546455445) < 1e-8);
}

TEST_CASE("min poly of a product vanishes at products of numeric roots") {
  IntPolynomial p = polys::phi(), q = IntPolynomial{-1, -1, 1};  // golden ratio
  IntPolynomial m = min_poly_of_product(p, q);
  for (auto x : oracle::roots(p))
    for (auto y : oracle::roots(q)) {
      std::complex<long double> z = x * y, acc = 0;
      for (int i = m.degree(); i >= 0; --i) acc = acc * z + std::complex<long double>(m[static_cast<std::size_t>(i)].get_d());
      long double scale = 0;
      for (int i = 0; i <= m.degree(); ++i) scale += std::abs(m[static_cast<std::size_t>(i)].get_d()) * std::pow(std::abs(z), i);
      CHECK(std::abs(acc) <= 1e-12L * scale);
    }
}

TEST_CASE("power polynomial has the k-th powers as roots") {
  IntPolynomial p2 = power_polynomial(polys::phi(), 2);
  CHECK(p2.degree() == 4);
  CHECK(std::abs(oracle::max_modulus(p2) - std::pow(1.8832035059, 2)) < 1e-8);
  CHECK(power_polynomial(IntPolynomial{-3, 1}, 3) == IntPolynomial{-27, 1});
}

TEST_CASE("Sturm counts match numeric root counts") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 60; ++it) {
    IntPolynomial p = squarefree_part(random_poly(rng, 2 + static_cast<int>(rng() % 6), 8));
    if (p.degree() < 1) continue;
    int numeric = 0;
    for (auto r : oracle::roots(p))
      if (std::abs(r.imag()) < 1e-9L) ++numeric;
    CHECK(SturmSequence(p).count_all() == numeric);
  }
}

TEST_CASE("isolated roots are disjoint, narrow and bracket sign changes") {
  IntPolynomial p = IntPolynomial{-2, 0, 1} * IntPolynomial{-3, 0, 1} * IntPolynomial{1, 1};
  const Rational eps(1, 1000000);
  auto iv = isolate_real_roots(p, eps);
  REQUIRE(iv.size() == 5);
  for (std::size_t i = 0; i < iv.size(); ++i) {
    CHECK(iv[i].width() <= eps);
    if (i) CHECK(iv[i - 1].hi < iv[i].lo);
  }
  CHECK(iv[2].lo == Rational(-1));
  CHECK(iv[2].hi == Rational(-1));
  CHECK(std::abs(iv[4].approx() - std::sqrt(3.0)) < 1e-6);
}

TEST_CASE("root classification examples") {
  const Rational eps(1, 1000000000);
  RootClassification c = classify_roots(polys::phi(), eps);
  CHECK(c.n_real_gt1 == 1);
  CHECK(c.n_real_in_unit == 1);
  CHECK(c.n_on_circle == 2);
  CHECK(c.n_off_circle_complex == 0);
  REQUIRE(c.largest_real);
  CHECK(std::abs(c.largest_real->approx() - 1.8832035) < 1e-6);

  RootClassification l = classify_roots(polys::lehmer(), eps);
  CHECK(l.n_real_gt1 == 1);
  CHECK(l.n_real_in_unit == 1);
  CHECK(l.n_on_circle == 8);
  CHECK(std::abs(l.largest_real->approx() - 1.17628) < 1e-5);

  // +-sqrt 2: one root above 1 and one below -1, nothing inside the unit disc
  RootClassification s = classify_roots(IntPolynomial{-2, 0, 1}, eps);
  CHECK(s.n_real_gt1 == 1);
  CHECK(s.n_real_lt_neg1 == 1);
  CHECK(s.n_real_in_unit == 0);
  CHECK(s.n_on_circle == 0);
}

TEST_CASE("classification counts sum to the degree and pair up for reciprocal input") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 40; ++it) {
    IntPolynomial h = random_poly(rng, 1 + static_cast<int>(rng() % 4), 5);
    IntPolynomial p = squarefree_part(h * h.reversed());
    if (p.degree() < 1 || p[0] == 0) continue;
    RootClassification c = classify_roots(p, Rational(1, 1000000));
    CHECK(c.total() == c.degree);
    CHECK(c.degree == p.degree());
    if (c.self_reciprocal) CHECK(c.n_real_gt1 + c.n_real_lt_neg1 == c.n_real_in_unit);
    // numeric oracle for the on-circle count
    int on = 0;
    for (auto r : oracle::roots(p))
      if (std::abs(std::abs(r) - 1.0L) < 1e-7L) ++on;
    CHECK(c.n_on_circle == on);
  }
}

TEST_CASE("trace polynomial of a reciprocal polynomial") {
  // phi(t) = t^2 g(t + 1/t) with g(x) = x^2 - 2x - 1
  CHECK(trace_polynomial(polys::phi()) == IntPolynomial{-1, -2, 1});
}

}  // TEST_SUITE
