#pragma once

#include <json.hpp>

#include "coxforge/certificate.hpp"
#include "coxforge/cubic.hpp"
#include "coxforge/groupengine.hpp"
#include "coxforge/lattice.hpp"
#include "coxforge/picard.hpp"
#include "coxforge/salem.hpp"

namespace coxforge::json {

// nlohmann::json keeps object keys in a std::map, so dumps are key-sorted.
using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json rational(const Rational& q);  // "p/q", or "p" for integers
Json interval(const RationalInterval& r);
Json polynomial(const IntPolynomial& p);
Json nfelem(const NFElem& x);
Json proj_point(const ProjPoint& p);
Json mat3(const Mat3& m);
Json quadratic_map(const QuadraticMap& f);
Json cubic_point(const CubicPoint& p);
Json restriction(const RestrictionMap& r);
Json orbit(const OrbitData& d);
Json lattice(const LatticeIsometry& m);
Json salem_verdict(const SalemVerdict& v);
Json certificate(const Certificate& c);
Json enumeration(const EnumerationResult& e);
Json classify(const ClassifyResult& r);

/// Inverses for the exact types; throw ParseError on malformed input.
IntPolynomial parse_polynomial(const Json& j);
Rational parse_rational(const Json& j);
LatticeIsometry parse_lattice(const Json& j);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace coxforge::json
