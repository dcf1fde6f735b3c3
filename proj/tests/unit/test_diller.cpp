#include <doctest.h>

#include "coxforge/diller.hpp"
#include "coxforge/picard.hpp"

using namespace coxforge;

TEST_SUITE("diller") {

TEST_CASE("parameters for n = 5") {
  DillerSolution sol = solve_parameters(5);
  CHECK(sol.field->minpoly() == polys::phi());
  CHECK(std::abs(static_cast<double>(sol.alpha.approx()) - 1.8832035059) < 1e-9);
  const NFElem one = NFElem::one(sol.field);
  const NFElem a5 = sol.alpha.pow(5);
  // 1 + t_1 = 1/r and 1 + t_5 = -1/s with the printed scalars
  const NFElem r = (2 * a5 + one) / (2 * a5 - 3 * sol.alpha + one);
  const NFElem s = (2 * a5 + one) / (a5 - one);
  CHECK(one + sol.t_param(1) == r.inverse());
  CHECK(one + sol.t_param(5) == -s.inverse());
  CHECK(std::abs(static_cast<double>((one + sol.t_param(1)).approx()) - 0.8832) < 1e-4);
  CHECK(std::abs(static_cast<double>((one + sol.t_param(5)).approx()) + 0.4689) < 1e-4);
}

TEST_CASE("solution invariants") {
  for (int n = 4; n <= 9; ++n) {
    DillerSolution sol = solve_parameters(n);
    const NFElem one = NFElem::one(sol.field);
    const NFElem a = sol.alpha;
    CHECK((a.pow(n + 1) - 2 * a.pow(n) + 2 * a - one).is_zero());
    for (int j = 1; j <= n; ++j) CHECK(sol.t_param(j) == -3 * a.pow(j) / (one + 2 * a.pow(n)));
    REQUIRE(sol.base_locus.size() == static_cast<std::size_t>(3 * n));
    for (std::size_t i = 0; i < sol.base_locus.size(); ++i) {
      CHECK_FALSE(sol.base_locus[i].at_infinity);
      for (std::size_t j = 0; j < i; ++j) CHECK(sol.base_locus[i] != sol.base_locus[j]);
    }
    CHECK(a.sign() == 1);
    CHECK((a - one).sign() == 1);
  }
  CHECK_THROWS_AS(solve_parameters(3), InvalidArgument);
}

TEST_CASE("construction requires a permutation of three lines") {
  CHECK_THROWS_AS(construct_map(5, Permutation(4)), InadmissibleTau);
}

TEST_CASE("validated maps for every tau") {
  for (int n : {4, 5, 7}) {
    DillerSolution sol = solve_parameters(n);
    for (const auto& tau : s3_elements()) {
      ValidatedMap vm = construct_validated(sol, tau);
      CHECK(vm.valid());
      CHECK(vm.sigma == tau.pow(n));
      CHECK(vm.restriction.a == sol.alpha);
      CHECK(vm.restriction.tau == tau);
    }
  }
}

TEST_CASE("cubic group-law identities") {
  for (int n : {4, 5, 7}) {
    DillerSolution sol = solve_parameters(n);
    for (const auto& tau : s3_elements()) {
      CriticalSums cs = critical_sums(sol, construct_map(sol, tau));
      CHECK(cs.minus_ok);
      CHECK(cs.plus_ok);
      CHECK(cs.exceptional_lines_ok);
    }
  }
}

TEST_CASE("the six n = 5 maps share one base locus") {
  DillerSolution sol = solve_parameters(5);
  auto maps = six_maps_n5(sol);
  REQUIRE(maps.size() == 6);
  for (const auto& km : maps) {
    CHECK(km.tau == km.sigma.inverse());
    CHECK(orbit_data(km.map).sigma == km.sigma);
    ExceptionalData ed = exceptional_data(km.map);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(base_index(sol, ed.p_plus[i]) != 0);
      CHECK(base_index(sol, ed.p_minus[i]) != 0);
    }
    // every base point that is not an indeterminacy point goes to a base point
    for (const auto& p : sol.base_locus) {
      ProjPoint q = embed(p);
      bool indet = false;
      for (const auto& pp : ed.p_plus) indet = indet || pp == q;
      if (!indet) CHECK(base_index(sol, km.map.apply(q)) != 0);
    }
  }
}

TEST_CASE("printed matrices give the constructed maps") {
  DillerSolution sol = solve_parameters(5);
  for (const auto& km : six_maps_n5(sol)) CHECK(printed_map_n5(sol, km.sigma).same_map(km.map));
  // T_(12) = (1/3)[[1,1,1],[r,-r,0],[0,-r,r]]
  const NFElem one = NFElem::one(sol.field), a5 = sol.alpha.pow(5);
  const NFElem r = (2 * a5 + one) / (2 * a5 - 3 * sol.alpha + one);
  Mat3 t = printed_t_matrix(sol, Permutation::parse("(12)", 3));
  const Rational third(1, 3);
  CHECK(t.a[0][0] == NFElem(sol.field, third));
  CHECK(t.a[1][0] == third * r);
  CHECK(t.a[1][1] == -third * r);
  CHECK(t.a[1][2].is_zero());
  CHECK(t.a[2][0].is_zero());
  CHECK(t.a[2][2] == third * r);
  const NFElem s = (2 * a5 + one) / (a5 - one);
  Mat3 S = printed_s_matrix(sol);
  CHECK(S.a[1][0] == third * s);
  CHECK(S.a[2][2] == -third * s);
}

}  // TEST_SUITE
