#pragma once

#include <string>
#include <vector>

#include "coxforge/cubic.hpp"
#include "coxforge/planemaps.hpp"

namespace coxforge {

/// Parameters of the cubic-fixing maps with orbit data (n, n, n, sigma).
struct DillerSolution {
  int n = 0;
  FieldPtr field;
  NFElem alpha;
  std::vector<NFElem> t;  // t[j-1] = t_j = -3 alpha^j / (1 + 2 alpha^n)
  /// base_locus[(i-1) n + j - 1] = (1 + t_j, i).
  std::vector<CubicPoint> base_locus;

  const NFElem& t_param(int j) const { return t.at(static_cast<std::size_t>(j - 1)); }
  const CubicPoint& base_point(int line, int j) const {
    return base_locus.at(static_cast<std::size_t>((line - 1) * n + j - 1));
  }
};

/// alpha is the largest real root of the cyclotomic-free part of chi_n.
DillerSolution solve_parameters(int n);

/// The basic map with p_i^+ = (1 + t_n, i), p_i^- = (1 + t_1, tau(i)),
/// restriction (t, i) -> (alpha (t - 1) + 1, tau(i)), and f([1:0:0]) = [1:0:0]
/// on the nose. Throws InadmissibleTau for a tau that is not in S_3.
QuadraticMap construct_map(const DillerSolution& sol, const Permutation& tau);
QuadraticMap construct_map(int n, const Permutation& tau);

/// A constructed map together with the exact checks run on it.
struct ValidatedMap {
  Permutation tau{3};
  Permutation sigma{3};  // expected: tau^n
  QuadraticMap map;
  OrbitData orbit;
  RestrictionMap restriction;
  bool orbit_ok = false;        // orbit_data == (n, n, n, tau^n)
  bool restriction_ok = false;  // a = alpha, tau recovered
  bool valid() const { return orbit_ok && restriction_ok; }
};

ValidatedMap construct_validated(const DillerSolution& sol, const Permutation& tau,
                                 int max_iter = kDefaultMaxIter);

/// Cubic group-law identities for a map built by construct_map.
struct CriticalSums {
  NFElem sum_minus;  // parameters of p_1^-, p_2^-, p_3^-
  NFElem sum_plus;   // parameters of p_1^+, p_2^+, p_3^+
  bool minus_ok = false;              // sum_minus = 3 (alpha - 1)
  bool plus_ok = false;               // sum_plus = 3 (1 - alpha) / alpha
  bool exceptional_lines_ok = false;  // q_i = f|_C^{-1}(p_i^-) on L_i, collinear with p_j^+, p_k^+
};
CriticalSums critical_sums(const DillerSolution& sol, const QuadraticMap& f);

/// All six n = 5 maps keyed by sigma in s3_elements() order; tau = sigma^{-1}.
struct KeyedMap {
  Permutation sigma{3};
  Permutation tau{3};
  QuadraticMap map;
};
std::vector<KeyedMap> six_maps_n5(const DillerSolution& sol);

/// The printed n = 5 matrices S and T_sigma, with f_sigma = T_sigma J3 S^{-1}.
Mat3 printed_s_matrix(const DillerSolution& sol);
Mat3 printed_t_matrix(const DillerSolution& sol, const Permutation& sigma);
QuadraticMap printed_map_n5(const DillerSolution& sol, const Permutation& sigma);

}  // namespace coxforge
