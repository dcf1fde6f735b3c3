#include "coxforge/realize.hpp"

#include "coxforge/salem.hpp"

namespace coxforge {

LatticeIsometry build_omega1() { return word_element({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 10); }

LatticeIsometry build_omega() { return word_element({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13}, 14); }

LatticeIsometry displayed_omega() {
  const int n = 14;
  std::vector<LatticeVector> cols(static_cast<std::size_t>(n + 1), LatticeVector(static_cast<std::size_t>(n + 1), 0));
  auto set = [&](int col, std::initializer_list<std::pair<int, int>> terms) {
    for (auto [i, c] : terms) cols[static_cast<std::size_t>(col)][static_cast<std::size_t>(i)] = c;
  };
  set(0, {{0, 2}, {1, -1}, {2, -1}, {3, -1}});
  set(1, {{0, 1}, {1, -1}, {3, -1}});
  set(2, {{0, 1}, {1, -1}, {2, -1}});
  for (int j = 3; j <= 9; ++j) set(j, {{j + 1, 1}});
  set(10, {{0, 1}, {2, -1}, {3, -1}});
  for (int j = 11; j <= 13; ++j) set(j, {{j + 1, 1}});
  set(14, {{11, 1}});
  std::vector<std::int64_t> rows(static_cast<std::size_t>((n + 1) * (n + 1)));
  for (int r = 0; r <= n; ++r)
    for (int c = 0; c <= n; ++c) rows[static_cast<std::size_t>(r * (n + 1) + c)] = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
  return LatticeIsometry::from_rows(n, rows);
}

OmegaComparison compare_with_displayed(const LatticeIsometry& omega) {
  OmegaComparison out;
  LatticeIsometry d = displayed_omega();
  if (omega.n() != d.n()) throw InvalidArgument("omega must live in W_14");
  for (int c = 0; c <= d.n(); ++c)
    if (omega.column(c) != d.column(c)) out.differing_columns.push_back(c);
  out.equal = out.differing_columns.empty();
  return out;
}

std::vector<Integer> newton_power_sums(const IntPolynomial& p, int up_to) {
  if (!p.is_monic()) throw InvalidArgument("power sums need a monic polynomial");
  const int d = p.degree();
  // e_i = (-1)^i c_{d-i}
  auto e = [&](int i) -> Integer {
    if (i > d) return 0;
    Integer c = p[static_cast<std::size_t>(d - i)];
    return i % 2 ? Integer(-c) : c;
  };
  std::vector<Integer> s(static_cast<std::size_t>(up_to + 1), 0);
  s[0] = d;
  for (int k = 1; k <= up_to; ++k) {
    Integer acc = 0;
    for (int i = 1; i < k; ++i) {
      Integer term = e(i) * s[static_cast<std::size_t>(k - i)];
      acc += (i - 1) % 2 ? Integer(-term) : term;
    }
    Integer last = e(k) * k;
    acc += (k - 1) % 2 ? Integer(-last) : last;
    s[static_cast<std::size_t>(k)] = acc;
  }
  return s;
}

Certificate nonrealizability_certificate() {
  Certificate c;
  c.subject = "omega = (s0 s1 ... s9)(s11 s12 s13) in W_14 is not realized by a rational surface automorphism";
  c.notes.push_back("omega is taken in W_14 (basis e0..e14); a W_16 reading is treated as a typo");
  c.notes.push_back("Lefschetz numbers use L = 2 + trace, assuming isolated periodic non-fixed points as in the argument");

  const IntPolynomial t_minus_1{-1, 1};
  const IntPolynomial leh = polys::lehmer();
  const LatticeIsometry w1 = build_omega1();
  const LatticeIsometry w = build_omega();

  IntPolynomial cp1 = char_poly(w1);
  c.add("char poly of omega_1 = (t-1) * Lehmer", cp1.to_string(), cp1 == t_minus_1 * leh);
  SalemVerdict lv = is_salem(leh);
  c.add("Lehmer polynomial is Salem (so irreducible, no root of unity)", lv.is_salem ? "yes" : lv.reason, lv.is_salem);

  const auto tr1_2 = trace_power(w1, 2), tr1_4 = trace_power(w1, 4);
  c.add("trace(omega_1^2)", std::to_string(tr1_2), tr1_2 == 2);
  c.add("trace(omega_1^4)", std::to_string(tr1_4), tr1_4 == 2);
  auto ps = newton_power_sums(t_minus_1 * leh, 4);
  bool newton_ok = ps[2] == tr1_2 && ps[4] == tr1_4;
  c.add("power sums of (t-1) * Lehmer agree with the matrix traces",
        "p2 = " + ps[2].get_str() + ", p4 = " + ps[4].get_str(), newton_ok);
  c.add("trace(omega_1^2) = trace(omega_1^4), so omega_1 leaves no period-4 cycle", tr1_2 == tr1_4 ? "equal" : "different",
        tr1_2 == tr1_4);

  IntPolynomial cp = char_poly(w);
  const IntPolynomial t4_minus_1{-1, 0, 0, 0, 1};
  c.add("char poly of omega = (t-1) * Lehmer * (t^4-1)", cp.to_string(), cp == t_minus_1 * leh * t4_minus_1);
  const auto tr2 = trace_power(w, 2), tr4 = trace_power(w, 4);
  const auto L2 = lefschetz_number(w, 2), L4 = lefschetz_number(w, 4);
  c.add("trace(omega^2) = trace(omega_1^2) + 0", std::to_string(tr2), tr2 == tr1_2);
  c.add("trace(omega^4) = trace(omega_1^4) + 4", std::to_string(tr4), tr4 == tr1_4 + 4);
  c.add("Lefschetz L2 = 2 + trace(omega^2)", std::to_string(L2), L2 == 2 + tr2);
  c.add("Lefschetz L4 = 2 + trace(omega^4)", std::to_string(L4), L4 == 2 + tr4);
  c.add("deficit L4 - L2 forced by the cycle e11 -> e12 -> e13 -> e14", std::to_string(L4 - L2), L4 - L2 == 4);
  c.add("omega preserves the form and kappa_14", w.preserves_form() && w.fixes(kappa(14)) ? "yes" : "no",
        w.preserves_form() && w.fixes(kappa(14)));

  OmegaComparison cmp = compare_with_displayed(w);
  std::string diff;
  for (int col : cmp.differing_columns) diff += (diff.empty() ? "e" : ", e") + std::to_string(col);
  c.add("word product agrees with the displayed column images", cmp.equal ? "all 15 columns agree" : "differ at " + diff, cmp.equal);

  c.conclusion = c.passed()
                     ? "not realizable: blowing down e11..e14 would leave an automorphism realizing omega_1 with a period-4 "
                       "cycle, which trace(omega_1^2) = trace(omega_1^4) excludes"
                     : "certificate incomplete: a step failed";
  return c;
}

}  // namespace coxforge
