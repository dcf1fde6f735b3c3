#pragma once

#include <vector>

#include "coxforge/certificate.hpp"
#include "coxforge/lattice.hpp"

namespace coxforge {

/// omega_1 = s_0 s_1 ... s_9 in W_10.
LatticeIsometry build_omega1();
/// omega = omega_1 omega_2 in W_14 with omega_2 = s_11 s_12 s_13.
LatticeIsometry build_omega();
/// The column images as displayed alongside the word, typed in by hand.
LatticeIsometry displayed_omega();

struct OmegaComparison {
  bool equal = false;
  std::vector<int> differing_columns;
};
OmegaComparison compare_with_displayed(const LatticeIsometry& omega);

/// Power sums of the roots of a monic polynomial (Newton's identities).
std::vector<Integer> newton_power_sums(const IntPolynomial& p, int up_to);

/// Characteristic polynomial, trace and Lefschetz facts showing that omega
/// cannot come from a rational surface automorphism.
Certificate nonrealizability_certificate();

}  // namespace coxforge
