#include <doctest.h>

#include "coxforge/realize.hpp"
#include "oracles.hpp"

using namespace coxforge;

TEST_SUITE("realize") {

TEST_CASE("omega from the reflection word") {
  LatticeIsometry w = build_omega();
  CHECK(w.n() == 14);
  CHECK(w.column(11) == basis_vector(12, 14));
  CHECK(w.column(14) == basis_vector(11, 14));
  LatticeVector e0 = basis_vector(0, 14);
  e0[0] = 2;
  e0[1] = e0[2] = e0[3] = -1;
  CHECK(w.column(0) == e0);
  LatticeVector e1 = basis_vector(0, 14);
  e1[1] = e1[3] = -1;
  CHECK(w.column(1) == e1);
  CHECK(w.preserves_form());
  CHECK(w.fixes(kappa(14)));
}

TEST_CASE("the displayed action agrees with the word, column by column") {
  OmegaComparison c = compare_with_displayed(build_omega());
  CHECK(c.equal);
  CHECK(c.differing_columns.empty());
  // the comparison itemizes differences rather than hiding them
  OmegaComparison inv = compare_with_displayed(build_omega().inverse());
  CHECK_FALSE(inv.equal);
  CHECK_FALSE(inv.differing_columns.empty());
  CHECK_THROWS_AS(compare_with_displayed(build_omega1()), InvalidArgument);
}

TEST_CASE("Newton power sums against numeric roots") {
  auto s = newton_power_sums(polys::lehmer(), 6);
  CHECK(s[0] == 10);
  CHECK(s[2] == 1);
  CHECK(s[4] == 1);
  auto roots = oracle::roots(polys::lehmer());
  for (int k = 1; k <= 6; ++k) {
    std::complex<long double> acc = 0;
    for (auto r : roots) acc += std::pow(r, k);
    CHECK(std::abs(acc.real() - s[static_cast<std::size_t>(k)].get_d()) < 1e-9L);
  }
  auto t = newton_power_sums(IntPolynomial{-1, 1} * polys::lehmer(), 4);
  CHECK(t[2] == 2);
  CHECK(t[4] == 2);
  CHECK_THROWS_AS(newton_power_sums(IntPolynomial{1, 2}, 2), InvalidArgument);
}

TEST_CASE("trace splits over the Lehmer part and the 4-cycle block") {
  LatticeIsometry w = build_omega(), w1 = build_omega1();
  oracle::IntMat m = oracle::to_mat(w), m1 = oracle::to_mat(w1);
  for (int k = 1; k <= 12; ++k) {
    const long long block = k % 4 == 0 ? 4 : 0;
    CHECK(oracle::trace_pow(m, k) == oracle::trace_pow(m1, k) + block);
    CHECK(trace_power(w, k) == trace_power(w1, k) + block);
  }
}

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(build_omega1()) == IntPolynomial{-1, 1} * polys::lehmer());
  CHECK(char_poly(build_omega()) == IntPolynomial{-1, 1} * polys::lehmer() * IntPolynomial{-1, 0, 0, 0, 1});
  CHECK(oracle::faddeev_charpoly(oracle::to_mat(build_omega())) == char_poly(build_omega()));
}

TEST_CASE("nonrealizability certificate") {
  Certificate c = nonrealizability_certificate();
  CHECK(c.passed());
  CHECK(c.all_values_exact);
  CHECK(c.conclusion.rfind("not realizable", 0) == 0);
  bool typo = false, assumption = false;
  for (const auto& n : c.notes) {
    typo = typo || n.find("W_16") != std::string::npos;
    assumption = assumption || n.find("assuming") != std::string::npos;
  }
  CHECK(typo);
  CHECK(assumption);
  CHECK(nonrealizability_certificate().to_text() == c.to_text());
}

}  // TEST_SUITE
