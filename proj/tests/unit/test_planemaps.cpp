#include <doctest.h>

#include "coxforge/cubic.hpp"
#include "coxforge/diller.hpp"
#include "coxforge/planemaps.hpp"

using namespace coxforge;

namespace {

FieldPtr phi_field() { return NumberField::create(polys::phi()); }

Mat3 random_mat(const FieldPtr& F, std::mt19937_64& rng) {
  for (;;) {
    Mat3 m = Mat3::from_columns(random_point(F, rng), random_point(F, rng), random_point(F, rng));
    if (!m.det().is_zero()) return m;
  }
}

}  // namespace

TEST_SUITE("planemaps") {

TEST_CASE("Cremona involutions") {
  FieldPtr F = phi_field();
  CHECK(cremona_apply(CremonaKind::J3, ProjPoint::make(F, 1, 2, 3)) == ProjPoint::make(F, 6, 3, 2));
  CHECK(cremona_apply(CremonaKind::J2, ProjPoint::make(F, 1, 1, 1)) == ProjPoint::make(F, 1, 1, 1));
  std::mt19937_64 rng(1);
  for (int it = 0; it < 10; ++it) {
    ProjPoint p = random_point(F, rng);
    for (auto k : {CremonaKind::J1, CremonaKind::J2, CremonaKind::J3})
      CHECK(cremona_apply(k, cremona_apply(k, p)) == p);
  }
  for (int i = 1; i <= 3; ++i) {
    try {
      cremona_apply(CremonaKind::J3, coordinate_point(F, i));
      FAIL("expected Indeterminate");
    } catch (const Indeterminate& e) {
      CHECK(e.index() == i);
    }
  }
}

TEST_CASE("basic map with identity linear parts is J3") {
  FieldPtr F = phi_field();
  QuadraticMap f(CremonaKind::J3, Mat3::identity(F), Mat3::identity(F));
  std::mt19937_64 rng(2);
  for (int it = 0; it < 5; ++it) {
    ProjPoint p = random_point(F, rng);
    CHECK(f.apply(p) == cremona_apply(CremonaKind::J3, p));
  }
  ExceptionalData ed = exceptional_data(f);
  for (int i = 0; i < 3; ++i) {
    CHECK(ed.p_plus[static_cast<std::size_t>(i)] == coordinate_point(F, i + 1));
    CHECK(ed.p_minus[static_cast<std::size_t>(i)] == coordinate_point(F, i + 1));
    for (int j = 0; j < 3; ++j)
      CHECK(ed.exc_lines[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero() == (i != j));
  }
  QuadraticMap j2(CremonaKind::J2, Mat3::identity(F), Mat3::identity(F));
  CHECK_THROWS_AS(exceptional_data(j2), NotBasic);
  CHECK_THROWS_AS(j2.inverse(), NotBasic);
}

TEST_CASE("f_id fixes the vertex and is undefined at its indeterminacy points") {
  DillerSolution sol = solve_parameters(5);
  QuadraticMap f = construct_map(sol, Permutation(3));
  ProjPoint v = coordinate_point(sol.field, 1);
  CHECK(f.apply(v) == v);
  for (int line = 1; line <= 3; ++line) CHECK_THROWS_AS(f.apply(embed(sol.base_point(line, 5))), Indeterminate);
  CHECK_NOTHROW(f.apply(embed(sol.base_point(1, 4))));
}

TEST_CASE("exceptional data of f_id") {
  DillerSolution sol = solve_parameters(5);
  QuadraticMap f = construct_map(sol, Permutation(3));
  ExceptionalData ed = exceptional_data(f);
  const NFElem t1 = -3 * sol.alpha / (NFElem::one(sol.field) + 2 * sol.alpha.pow(5));
  for (std::size_t i = 0; i < 3; ++i) {
    auto m = locate(ed.p_minus[i]);
    REQUIRE(m);
    CHECK(m->t == NFElem::one(sol.field) + t1);
    CHECK(m->line == static_cast<int>(i) + 1);
    auto p = locate(ed.p_plus[i]);
    REQUIRE(p);
    CHECK(*p == sol.base_point(static_cast<int>(i) + 1, 5));
  }
  // two points of E_1^+ collapse onto p_1^-
  for (const auto& [a, b] : std::vector<std::pair<long, long>>{{1, 2}, {3, -5}}) {
    ProjPoint q = f.t_plus().apply(ProjPoint::make(sol.field, 0, a, b));
    CHECK(on_line(ed.exc_lines[0], q));
    CHECK(f.apply(q) == ed.p_minus[0]);
  }
}

TEST_CASE("inverse maps") {
  DillerSolution sol = solve_parameters(5);
  std::mt19937_64 rng(3);
  for (const auto& tau : s3_elements()) {
    QuadraticMap f = construct_map(sol, tau);
    QuadraticMap g = f.inverse();
    CHECK(g.inverse().same_map(f));
    for (int it = 0; it < 5; ++it) {
      ProjPoint p = random_point(sol.field, rng);
      CHECK(g.apply(f.apply(p)) == p);
      CHECK(f.apply(g.apply(p)) == p);
    }
    ExceptionalData ef = exceptional_data(f), eg = exceptional_data(g);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(ef.p_plus[i] == eg.p_minus[i]);
      CHECK(ef.p_minus[i] == eg.p_plus[i]);
    }
  }
}

TEST_CASE("indeterminacy points are non-collinear") {
  DillerSolution sol = solve_parameters(5);
  for (const auto& tau : s3_elements()) {
    QuadraticMap f = construct_map(sol, tau);
    CHECK_FALSE(f.t_plus().det().is_zero());
    CHECK_FALSE(f.t_minus().det().is_zero());
  }
}

TEST_CASE("orbit data of the constructed maps and their inverses") {
  for (int n : {4, 5, 7}) {
    DillerSolution sol = solve_parameters(n);
    for (const auto& tau : s3_elements()) {
      QuadraticMap f = construct_map(sol, tau);
      OrbitData d = orbit_data(f);
      const Permutation sigma = tau.pow(n);
      CHECK(d.lengths == std::array<int, 3>{n, n, n});
      CHECK(d.sigma == sigma);
      for (int i = 1; i <= 3; ++i) CHECK(d.sigma(i) == tau.pow(d.lengths[static_cast<std::size_t>(i - 1)])(i));
      OrbitData di = orbit_data(f.inverse());
      CHECK(di.sigma == sigma.inverse());
      for (int i = 1; i <= 3; ++i)
        CHECK(di.lengths[static_cast<std::size_t>(i - 1)] == d.lengths[static_cast<std::size_t>(sigma.inverse()(i) - 1)]);
    }
  }
}

TEST_CASE("generic maps have no finite orbit data") {
  FieldPtr F = phi_field();
  std::mt19937_64 rng(4);
  for (int it = 0; it < 3; ++it) {
    QuadraticMap f(CremonaKind::J3, random_mat(F, rng), random_mat(F, rng));
    OrbitData d = orbit_data(f, 50);
    CHECK_FALSE(d.finite());
    CHECK(d.lengths == std::array<int, 3>{0, 0, 0});
  }
}

TEST_CASE("projective points compare up to scalars") {
  FieldPtr F = phi_field();
  NFElem a = NFElem::gen(F);
  ProjPoint p{{a, NFElem::one(F), 2 * a}};
  ProjPoint q{{a * a, a, 2 * a * a}};
  CHECK(p == q);
  CHECK(p.canonical().x[2] == NFElem::one(F));
  CHECK_FALSE(p == ProjPoint::make(F, 1, 1, 2));
}

}  // TEST_SUITE
