#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxforge/diller.hpp"
#include "coxforge/lattice.hpp"

namespace coxforge {

/// Index (line - 1) n + j of the base point (1 + t_j, line); 0 when p is not
/// in the base locus.
int base_index(const DillerSolution& sol, const ProjPoint& p);

/// Pullback action on Z^{1,3n} of a basic map whose indeterminacy points lie
/// in the base locus, derived by exact point tracking:
///   e0 -> 2 e0 - sum E(p_i^+),
///   E(f(q)) -> E(q) for base points q other than the p_i^+,
///   E(p_i^-) -> e0 - E(p_j^+) - E(p_k^+).
/// Throws OrbitMismatch if the base locus is not carried to itself.
LatticeIsometry induced_action(const QuadraticMap& f, const DillerSolution& sol);

/// M = s_kappa P with s_kappa the reflection through e0 - e_a - e_b - e_c and P
/// a permutation of e_1..e_N.
struct Presentation {
  std::array<int, 3> kappa{0, 0, 0};
  Permutation perm;
  /// "s(5,10,15) (5 4 3 2 1)(10 9 8 7 6)(15 14 13 12 11)"; cycles written as
  /// a -> b, each led by its smallest reflection index.
  std::string text() const;
};

/// Presentation with the reflection through the given three indices, or
/// nullopt if s_kappa M is not a permutation matrix.
std::optional<Presentation> presentation(const LatticeIsometry& m, std::array<int, 3> kappa);

/// Cycle string, a -> b, each cycle led by its largest point.
std::string cycles_from_largest(const Permutation& p);
/// Same, but a cycle containing one of the leaders starts at the smallest of them.
std::string cycles_led_by(const Permutation& p, const std::vector<int>& leaders);

/// The orbit model: slot off_i + j stands for f^{j-1}(p_i^-), the last slot of
/// orbit i is p_{sigma(i)}^+.
LatticeIsometry action_from_orbit_data(const OrbitData& data);

/// Conjugates an orbit-model action with n1 = n2 = n3 = n into the geometric
/// basis, where slot j of orbit i is the point (1 + t_j, tau^j(i)).
LatticeIsometry orbit_to_geometric(const LatticeIsometry& orbit_action, int n, const Permutation& tau);

/// Characteristic polynomial from the three closed formulas (cyclic,
/// transposition, identity sigma).
IntPolynomial bk_charpoly(const OrbitData& data);

/// The printed n = 5 actions, s_kappa times the listed cycles.
struct PrintedAction {
  Permutation sigma{3};
  std::string cycles;                      // as printed
  std::optional<LatticeIsometry> matrix;   // nullopt when the cycles do not parse
  std::string parse_error;
};
PrintedAction printed_action(const Permutation& sigma);

struct ErratumEntry {
  Permutation sigma{3};
  std::string status;  // "match", "mismatch", "unparseable"
  LatticeIsometry derived;
  std::string derived_text;
  std::string printed_text;
  std::string detail;  // parse error or differing columns
  bool derived_preserves_form = false;
  bool derived_fixes_kappa = false;
};

/// Derived versus printed action for each of the six n = 5 maps.
std::vector<ErratumEntry> errata_report(const DillerSolution& sol);

}  // namespace coxforge
