#pragma once

#include <vector>

#include "coxforge/polynomial.hpp"

namespace coxforge {

using RatMatrix = std::vector<std::vector<Rational>>;

/// det(t I - A) by similarity reduction to upper Hessenberg form over Q.
RatPolynomial charpoly(RatMatrix a);
/// Same, for a matrix with integer entries; the result is monic in Z[t].
IntPolynomial charpoly_integer(const RatMatrix& a);

/// Integer kernel basis of an integer matrix (rows = equations), as rows.
/// Computed by unimodular column reduction, so the rows span the full
/// relation lattice, not just a finite-index sublattice.
std::vector<std::vector<Integer>> integer_kernel(const std::vector<std::vector<Integer>>& a);

}  // namespace coxforge
