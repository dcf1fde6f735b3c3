#pragma once

#include <vector>

#include "coxforge/polynomial.hpp"

namespace coxforge {

/// Polynomial in x whose coefficients (ascending in x) lie in Z[t].
using BivariatePolynomial = std::vector<IntPolynomial>;

/// Res_x(a, b) as an element of Z[t]; Sylvester determinant by Bareiss
/// elimination with exact division in Z[t].
IntPolynomial resultant_x(const BivariatePolynomial& a, const BivariatePolynomial& b);

/// Integer resultant of two univariate polynomials.
Integer resultant(const IntPolynomial& a, const IntPolynomial& b);

/// Squarefree polynomial whose roots are all products of a root of p with a
/// root of q. Both inputs monic.
IntPolynomial min_poly_of_product(const IntPolynomial& p, const IntPolynomial& q);

/// prod (t - r^k) over the roots r of p, with multiplicity (not squarefreed).
IntPolynomial power_polynomial(const IntPolynomial& p, unsigned k);

/// Mod-p degree screen. For several primes not dividing the discriminant the
/// distinct-degree factorization of p mod ell bounds which degrees a factor
/// over Q can have; the intersection over primes is returned.
struct IrreducibilityScreen {
  std::vector<int> possible_factor_degrees;  // proper degrees still possible, ascending
  std::vector<unsigned long> primes;
  bool irreducible() const { return possible_factor_degrees.empty(); }
};
IrreducibilityScreen irreducibility_screen(const IntPolynomial& p, int max_primes = 12);

}  // namespace coxforge
