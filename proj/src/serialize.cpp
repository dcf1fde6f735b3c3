#include "coxforge/serialize.hpp"

namespace coxforge::json {

Json rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Json interval(const RationalInterval& r) { return Json::array({rational(r.lo), rational(r.hi)}); }

Json polynomial(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

Json nfelem(const NFElem& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(rational(c));
  return {{"minpoly", polynomial(x.field()->minpoly())}, {"root_index", x.field()->root_index()}, {"coeffs", coeffs}};
}

Json proj_point(const ProjPoint& p) {
  ProjPoint c = p.canonical();
  return Json::array({nfelem(c.x[0]), nfelem(c.x[1]), nfelem(c.x[2])});
}

Json mat3(const Mat3& m) {
  Json rows = Json::array();
  for (const auto& row : m.a) rows.push_back(Json::array({nfelem(row[0]), nfelem(row[1]), nfelem(row[2])}));
  return rows;
}

Json quadratic_map(const QuadraticMap& f) {
  return {{"kind", kind_name(f.kind())}, {"t_plus", mat3(f.t_plus())}, {"t_minus", mat3(f.t_minus())}};
}

Json cubic_point(const CubicPoint& p) {
  if (p.at_infinity) return {{"t", "infinity"}, {"line", nullptr}};
  return {{"t", nfelem(p.t)}, {"line", p.line}};
}

Json restriction(const RestrictionMap& r) {
  return {{"a", nfelem(r.a)}, {"b", nfelem(r.b)}, {"tau", s3_label(r.tau)}};
}

Json orbit(const OrbitData& d) {
  Json j = {{"lengths", d.lengths}, {"sigma", s3_label(d.sigma)}, {"finite", d.finite()}};
  j["tau"] = d.tau ? Json(s3_label(*d.tau)) : Json(nullptr);
  return j;
}

Json lattice(const LatticeIsometry& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Json salem_verdict(const SalemVerdict& v) {
  const auto& w = v.witness;
  Json j = {{"is_salem", v.is_salem},
            {"degree", v.degree},
            {"monic", v.monic},
            {"reciprocal", v.reciprocal},
            {"squarefree", v.squarefree},
            {"cyclotomic_free", v.cyclotomic_free},
            {"reason", v.reason},
            {"roots",
             {{"real_gt1", w.n_real_gt1},
              {"real_lt_neg1", w.n_real_lt_neg1},
              {"real_in_unit", w.n_real_in_unit},
              {"on_circle", w.n_on_circle},
              {"off_circle_complex", w.n_off_circle_complex}}}};
  j["largest_root"] = v.largest_root ? interval(*v.largest_root) : Json(nullptr);
  if (v.largest_root) j["largest_root_approx"] = v.largest_root->approx();
  return j;
}

Json certificate(const Certificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back({{"name", s.name}, {"value", s.value}, {"passed", s.passed}});
  return {{"subject", c.subject},   {"notes", c.notes},       {"steps", steps},
          {"conclusion", c.conclusion}, {"all_values_exact", c.all_values_exact}, {"passed", c.passed()}};
}

Json enumeration(const EnumerationResult& e) {
  return {{"max_len", e.max_len},
          {"states", e.states},
          {"distinct_matrices", e.distinct_matrices},
          {"distinct_normal_forms", e.distinct_normal_forms},
          {"sound", e.sound},
          {"injective", e.injective},
          {"words_per_length", e.words_per_length}};
}

Json classify(const ClassifyResult& r) {
  return {{"n", r.n},
          {"structure_label", r.label},
          {"reference_label", r.reference_label},
          {"matches_reference", r.matches_reference},
          {"valid_generators", r.valid_generators},
          {"invalid_generators", r.invalid_generators},
          {"linear_group_order", r.linear_group_order},
          {"linear_group_abelian", r.linear_group_abelian},
          {"line_permutation_group", r.line_permutation_group},
          {"relations", certificate(r.relations)},
          {"enumeration", enumeration(r.enumeration)},
          {"normal_form_table_size", r.enumeration.distinct_normal_forms},
          {"evidence", r.evidence}};
}

IntPolynomial parse_polynomial(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array");
  std::vector<Integer> c;
  for (const auto& v : j) {
    if (v.is_number_integer()) {
      c.emplace_back(static_cast<long>(v.get<long long>()));
    } else if (v.is_string()) {
      Integer z;
      if (z.set_str(v.get<std::string>(), 10) != 0) throw ParseError("bad integer " + v.get<std::string>());
      c.push_back(z);
    } else {
      throw ParseError("polynomial coefficient must be an integer or a decimal string");
    }
  }
  return IntPolynomial(std::move(c));
}

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) throw ParseError("rational must be a string");
  Rational q;
  if (q.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad rational " + j.get<std::string>());
  q.canonicalize();
  return q;
}

LatticeIsometry parse_lattice(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("lattice matrix must be a non-empty array of rows");
  const std::size_t d = j.size();
  std::vector<std::int64_t> m;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != d) throw ParseError("lattice matrix must be square");
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError("lattice entries must be integers");
      m.push_back(v.get<std::int64_t>());
    }
  }
  return LatticeIsometry::from_rows(static_cast<int>(d) - 1, std::move(m));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace coxforge::json
