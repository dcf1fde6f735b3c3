#include "coxforge/cli.hpp"

#include <set>
#include <sstream>

#include "coxforge/realize.hpp"

namespace coxforge::cli {

using json::Json;

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"construct", "orbit", "action", "charpoly", "salem",
                                          "group",     "theoremc", "errata", "sweep"};
  return c;
}

std::string RunReport::render(const RunConfig& cfg) const { return cfg.output == "json" ? json::dump(data) : text; }

namespace {

std::string approx(const RationalInterval& r, int digits = 10) {
  std::ostringstream os;
  os.precision(digits);
  os << r.approx();
  return os.str();
}

bool interval_contains_root(const RationalInterval& r, const NumberField& F) { return r.overlaps(F.root_enclosure()); }

Json config_json(const RunConfig& cfg) {
  Json j = {{"command", cfg.command}, {"n", cfg.n},           {"tau", cfg.tau},         {"eps", json::rational(cfg.eps)},
            {"max_len", cfg.max_len}, {"max_iter", cfg.max_iter}, {"seed", cfg.seed}, {"n_min", cfg.n_min},
            {"n_max", cfg.n_max},     {"certify", cfg.certify}};
  j["poly"] = cfg.poly ? Json(*cfg.poly) : Json(nullptr);
  return j;
}

void certificate_text(const Certificate& c, std::string& out) { out += c.to_text(); }

Permutation parse_tau(const std::string& s) {
  Permutation p = Permutation::parse(s, 3);
  return p;
}

// ---- construct / orbit / action -------------------------------------------

Json parameters_json(const DillerSolution& sol) {
  Json t = Json::array();
  for (const auto& tj : sol.t) t.push_back(json::nfelem(tj));
  Json base = Json::array();
  for (const auto& p : sol.base_locus) base.push_back(json::cubic_point(p));
  return {{"minpoly", json::polynomial(sol.field->minpoly())},
          {"alpha", json::nfelem(sol.alpha)},
          {"alpha_enclosure", json::interval(sol.alpha.enclosure())},
          {"alpha_approx", static_cast<double>(sol.alpha.approx())},
          {"t", t},
          {"base_locus", base}};
}

RunReport cmd_construct(const RunConfig& cfg) {
  RunReport rep;
  const Permutation tau = parse_tau(cfg.tau);
  DillerSolution sol = solve_parameters(cfg.n);
  ValidatedMap vm = construct_validated(sol, tau, cfg.max_iter);
  ExceptionalData ed = exceptional_data(vm.map);
  CriticalSums cs = critical_sums(sol, vm.map);

  Certificate c;
  c.subject = "basic map for n = " + std::to_string(cfg.n) + ", tau = " + s3_label(tau);
  c.add("orbit data = (n, n, n, tau^n)", vm.orbit.to_string() + ", expected sigma " + s3_label(vm.sigma), vm.orbit_ok);
  c.add("restriction t -> alpha (t - 1) + 1 on lines permuted by tau", s3_label(vm.restriction.tau), vm.restriction_ok);
  bool in_base = true;
  for (std::size_t i = 0; i < 3; ++i)
    if (base_index(sol, ed.p_plus[i]) == 0 || base_index(sol, ed.p_minus[i]) == 0) in_base = false;
  c.add("indeterminacy points of f and f^-1 lie in the base locus", in_base ? "yes" : "no", in_base);
  c.add("sum of p^- parameters = 3 (alpha - 1)", cs.sum_minus.to_string(), cs.minus_ok);
  c.add("sum of p^+ parameters = 3 (1 - alpha) / alpha", cs.sum_plus.to_string(), cs.plus_ok);
  c.add("q_i on L_i collinear with p_j^+, p_k^+", cs.exceptional_lines_ok ? "yes" : "no", cs.exceptional_lines_ok);
  const ProjPoint vertex = coordinate_point(sol.field, 1);
  const bool fixes_vertex = vm.map.apply(vertex) == vertex;
  c.add("f fixes the vertex [1:0:0]", fixes_vertex ? "yes" : "no", fixes_vertex);

  rep.data = {{"n", cfg.n},
              {"tau", s3_label(tau)},
              {"sigma", s3_label(vm.sigma)},
              {"parameters", parameters_json(sol)},
              {"map", json::quadratic_map(vm.map)},
              {"orbit", json::orbit(vm.orbit)},
              {"restriction", json::restriction(vm.restriction)},
              {"verification", json::certificate(c)}};
  rep.text = "alpha ~ " + approx(sol.alpha.enclosure(), 12) + " root of " + sol.field->minpoly().to_string() + "\n";
  for (int i = 1; i <= 3; ++i) {
    rep.text += "T- column " + std::to_string(i) + ": " + vm.map.t_minus().column(i).to_string() + "\n";
  }
  for (int i = 1; i <= 3; ++i) {
    rep.text += "T+ column " + std::to_string(i) + ": " + vm.map.t_plus().column(i).to_string() + "\n";
  }
  certificate_text(c, rep.text);
  rep.exit_code = c.passed() ? 0 : 1;
  return rep;
}

RunReport cmd_orbit(const RunConfig& cfg) {
  RunReport rep;
  const Permutation tau = parse_tau(cfg.tau);
  QuadraticMap f = construct_map(cfg.n, tau);
  OrbitData d = orbit_data(f, cfg.max_iter);
  const Permutation sigma = tau.pow(cfg.n);
  const bool ok = d.lengths == std::array<int, 3>{cfg.n, cfg.n, cfg.n} && d.sigma == sigma;
  rep.data = {{"n", cfg.n}, {"tau", s3_label(tau)}, {"orbit", json::orbit(d)}, {"expected_sigma", s3_label(sigma)}, {"matches", ok}};
  rep.text = "orbit data " + d.to_string() + (ok ? " matches" : " does not match") + " (" + std::to_string(cfg.n) + ", " +
             std::to_string(cfg.n) + ", " + std::to_string(cfg.n) + ", " + s3_label(sigma) + ")\n";
  rep.exit_code = ok ? 0 : 1;
  return rep;
}

RunReport cmd_action(const RunConfig& cfg) {
  RunReport rep;
  const Permutation tau = parse_tau(cfg.tau);
  DillerSolution sol = solve_parameters(cfg.n);
  ValidatedMap vm = construct_validated(sol, tau, cfg.max_iter);
  LatticeIsometry m = induced_action(vm.map, sol);
  const int N = 3 * cfg.n;
  IntPolynomial cp = char_poly(m);
  CyclotomicSplit split = split_cyclotomic(cp);
  RationalInterval rho = spectral_radius(m, cfg.eps);

  Certificate c;
  c.subject = "Picard action of f for n = " + std::to_string(cfg.n) + ", tau = " + s3_label(tau);
  c.add("preserves the intersection form", m.preserves_form() ? "yes" : "no", m.preserves_form());
  c.add("fixes kappa", m.fixes(kappa(N)) ? "yes" : "no", m.fixes(kappa(N)));
  c.add("Salem factor of the char poly = minimal polynomial of alpha", split.remainder.to_string(),
        split.remainder == sol.field->minpoly());
  c.add("spectral radius enclosure meets alpha", json::interval(rho).dump(), interval_contains_root(rho, *sol.field));
  if (vm.orbit.finite()) {
    LatticeIsometry model = orbit_to_geometric(action_from_orbit_data(vm.orbit), cfg.n, tau);
    c.add("equals the orbit-data model in the geometric basis", model == m ? "yes" : "no", model == m);
  } else {
    c.add("equals the orbit-data model in the geometric basis", "orbit data not finite", false);
  }

  auto pres = presentation(m, {cfg.n, 2 * cfg.n, 3 * cfg.n});
  Json cyc = Json::array();
  for (const auto& [k, mult] : split.factors) cyc.push_back(Json::array({k, mult}));
  rep.data = {{"n", cfg.n},
              {"tau", s3_label(tau)},
              {"matrix", json::lattice(m)},
              {"presentation", pres ? Json(pres->text()) : Json(nullptr)},
              {"char_poly", json::polynomial(cp)},
              {"cyclotomic_factors", cyc},
              {"salem_factor", json::polynomial(split.remainder)},
              {"spectral_radius", json::interval(rho)},
              {"spectral_radius_approx", rho.approx()},
              {"verification", json::certificate(c)}};
  rep.text = (pres ? pres->text() + "\n" : std::string()) + m.describe() + "\nchar poly " + cp.to_string() +
             "\nspectral radius ~ " + approx(rho) + "\n";
  certificate_text(c, rep.text);
  rep.exit_code = c.passed() ? 0 : 1;
  return rep;
}

// ---- charpoly -------------------------------------------------------------

RunReport cmd_charpoly(const RunConfig& cfg) {
  RunReport rep;
  if (cfg.n < 1) throw InvalidArgument("n must be positive");
  std::set<Permutation> sigmas;
  for (const auto& tau : s3_elements()) sigmas.insert(tau.pow(cfg.n));
  Certificate c;
  c.subject = "char poly of the orbit-data model against the closed formulas, n = " + std::to_string(cfg.n);
  Json rows = Json::array();
  for (const auto& sigma : s3_elements()) {
    if (!sigmas.count(sigma)) continue;
    OrbitData d;
    d.lengths = {cfg.n, cfg.n, cfg.n};
    d.sigma = sigma;
    IntPolynomial model = char_poly(action_from_orbit_data(d));
    IntPolynomial bk = bk_charpoly(d);
    IntPolynomial sm = strip_cyclotomic(model), sb = strip_cyclotomic(bk);
    const bool ok = sm == sb;
    RationalInterval rho = spectral_radius_of(sb, cfg.eps);
    c.add("sigma = " + s3_label(sigma) + ": stripped polynomials agree", sm.to_string(), ok);
    rows.push_back({{"sigma", s3_label(sigma)},
                    {"model_char_poly", json::polynomial(model)},
                    {"formula_char_poly", json::polynomial(bk)},
                    {"stripped", json::polynomial(sm)},
                    {"exactly_equal", model == bk},
                    {"agree_up_to_cyclotomic", ok},
                    {"spectral_radius", json::interval(rho)},
                    {"spectral_radius_approx", rho.approx()}});
    rep.text += s3_label(sigma) + ": " + (ok ? "agree" : "DIFFER") + ", Salem part " + sm.to_string() + ", radius ~ " +
                approx(rho) + "\n";
  }
  rep.data = {{"n", cfg.n}, {"rows", rows}, {"verification", json::certificate(c)}};
  rep.exit_code = c.passed() ? 0 : 1;
  return rep;
}

// ---- salem ----------------------------------------------------------------

std::string verdict_line(const std::string& name, const SalemVerdict& v) {
  std::string s = name + ": " + (v.is_salem ? "Salem" : "not Salem (" + v.reason + ")") + ", degree " + std::to_string(v.degree);
  if (v.largest_root) s += ", largest root ~ " + approx(*v.largest_root);
  return s;
}

RunReport cmd_salem(const RunConfig& cfg) {
  RunReport rep;
  if (cfg.poly) {
    IntPolynomial p = parse_coefficients(*cfg.poly);
    SalemVerdict v = is_salem(p, cfg.eps);
    rep.data = {{"polynomial", json::polynomial(p)}, {"verdict", json::salem_verdict(v)}};
    rep.text = verdict_line(p.to_string(), v) + "\n";
    return rep;
  }
  const IntPolynomial phi = polys::phi(), leh = polys::lehmer();
  Certificate c;
  c.subject = "Salem suite";
  SalemVerdict vp = is_salem(phi, cfg.eps), vl = is_salem(leh, cfg.eps);
  c.add("phi is Salem", verdict_line("phi", vp), vp.is_salem);
  c.add("Lehmer polynomial is Salem", verdict_line("Lehmer", vl), vl.is_salem);
  Json powers = Json::array();
  for (unsigned k = 1; k <= 5; ++k) {
    SalemVerdict v = power_is_salem(phi, k, cfg.eps);
    powers.push_back({{"k", k}, {"verdict", json::salem_verdict(v)}});
    c.add("phi^" + std::to_string(k) + " Salem of degree 4", verdict_line("power " + std::to_string(k), v),
          v.is_salem && v.degree == 4);
  }
  ProductClass pc = product_class(phi, leh, cfg.eps);
  Json prods = Json::array();
  for (const auto& e : pc.products)
    prods.push_back({{"label", e.label},
                     {"polynomial", json::polynomial(e.polynomial)},
                     {"verdict", json::salem_verdict(e.verdict)},
                     {"minimal_polynomial_certified", e.minimal_polynomial_certified}});
  const bool nonsalem = pc.kind == ProductClass::Kind::NonSalemProducts && pc.all_products_fail();
  c.add("phi and Lehmer: no common base, all four products fail", std::to_string(pc.products.size()) + " products", nonsalem);
  GapCheck gap = dpower_gap_check(phi, cfg.eps);
  Json roots = Json::array();
  for (const auto& r : gap.roots) {
    Json e = {{"k", r.k},
              {"polynomial", json::polynomial(r.polynomial)},
              {"irreducible_certified", r.irreducible_certified},
              {"roots_outside_circle", r.roots_outside_circle}};
    e["largest_root"] = r.largest_root ? json::interval(*r.largest_root) : Json(nullptr);
    roots.push_back(e);
  }
  std::string fourth = gap.roots.size() >= 3 && gap.roots[2].largest_root ? approx(*gap.roots[2].largest_root) : "?";
  c.add("delta^(1/4) < Lehmer's number", fourth + " < " + approx(gap.lehmer_root), gap.fourth_root_below_lehmer);
  c.add("square and cube roots are not Salem", gap.low_roots_not_salem ? "yes" : "no", gap.low_roots_not_salem);

  rep.data = {{"phi", json::salem_verdict(vp)},
              {"lehmer", json::salem_verdict(vl)},
              {"phi_powers", powers},
              {"product_class", {{"kind", pc.kind == ProductClass::Kind::NonSalemProducts ? "non_salem_products" : "common_power_base"},
                                 {"products", prods}}},
              {"gap_check", {{"roots", roots}, {"lehmer_root", json::interval(gap.lehmer_root)}, {"passed", gap.passed()}}},
              {"verification", json::certificate(c)}};
  certificate_text(c, rep.text);
  rep.exit_code = c.passed() ? 0 : 1;
  return rep;
}

// ---- group / sweep --------------------------------------------------------

RunReport cmd_group(const RunConfig& cfg) {
  RunReport rep;
  ClassifyResult r = classify_subgroup(cfg.n, cfg.max_len, cfg.seed, cfg.max_iter);
  rep.data = json::classify(r);
  rep.text = "n = " + std::to_string(r.n) + ": " + r.label + " (tabulated " + r.reference_label + ")\n";
  for (const auto& e : r.evidence) rep.text += "  " + e + "\n";
  if (cfg.certify) {
    certificate_text(r.relations, rep.text);
    const bool ok = r.relations.passed() && r.enumeration.sound && r.enumeration.injective;
    rep.exit_code = ok ? 0 : 1;
  }
  return rep;
}

RunReport cmd_sweep(const RunConfig& cfg) {
  RunReport rep;
  if (cfg.n_min < 4 || cfg.n_max < cfg.n_min) throw InvalidArgument("sweep needs 4 <= n-min <= n-max");
  Json rows = Json::array();
  rep.text = "n  tau    sigma  orbit                 valid  structure\n";
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    DillerSolution sol = solve_parameters(n);
    ClassifyResult cr = classify_subgroup(n, cfg.max_len, cfg.seed, cfg.max_iter);
    for (const auto& tau : s3_elements()) {
      ValidatedMap vm = construct_validated(sol, tau, cfg.max_iter);
      rows.push_back({{"n", n},
                      {"tau", s3_label(tau)},
                      {"sigma", s3_label(vm.sigma)},
                      {"orbit", json::orbit(vm.orbit)},
                      {"validated", vm.valid()},
                      {"structure_label", cr.label},
                      {"reference_label", cr.reference_label}});
      char line[160];
      std::snprintf(line, sizeof line, "%-2d %-6s %-6s %-21s %-6s %s\n", n, s3_label(tau).c_str(), s3_label(vm.sigma).c_str(),
                    vm.orbit.to_string().c_str(), vm.valid() ? "yes" : "no", cr.label.c_str());
      rep.text += line;
    }
  }
  rep.data = {{"rows", rows}};
  return rep;
}

// ---- theoremc / errata ----------------------------------------------------

RunReport cmd_theoremc(const RunConfig&) {
  RunReport rep;
  Certificate c = nonrealizability_certificate();
  LatticeIsometry w = build_omega();
  OmegaComparison cmp = compare_with_displayed(w);
  rep.text = w.describe() + "\n" + c.to_text();
  rep.data = {{"certificate", json::certificate(c)},
              {"omega", json::lattice(w)},
              {"displayed_agrees", cmp.equal},
              {"differing_columns", cmp.differing_columns},
              {"rendering", rep.text}};
  rep.exit_code = c.passed() ? 0 : 1;
  return rep;
}

RunReport cmd_errata(const RunConfig&) {
  RunReport rep;
  DillerSolution sol = solve_parameters(5);
  Certificate c;
  c.subject = "printed n = 5 maps and actions against the derived ones";
  Json rows = Json::array();
  auto maps = six_maps_n5(sol);
  auto report = errata_report(sol);
  for (std::size_t i = 0; i < report.size(); ++i) {
    const auto& e = report[i];
    const bool same = printed_map_n5(sol, e.sigma).same_map(maps[i].map);
    const std::string lbl = s3_label(e.sigma);
    c.add("sigma = " + lbl + ": printed matrices give the constructed map", same ? "yes" : "no", same);
    c.add("sigma = " + lbl + ": derived action preserves form and kappa", e.derived_preserves_form && e.derived_fixes_kappa ? "yes" : "no",
          e.derived_preserves_form && e.derived_fixes_kappa);
    rows.push_back({{"sigma", lbl},
                    {"status", e.status},
                    {"printed", e.printed_text},
                    {"derived", e.derived_text},
                    {"detail", e.detail},
                    {"printed_matrices_match", same}});
    rep.text += lbl + ": " + e.status + "\n  printed " + e.printed_text + "\n  derived " + e.derived_text + "\n";
    if (!e.detail.empty()) rep.text += "  " + e.detail + "\n";
  }
  certificate_text(c, rep.text);
  rep.data = {{"entries", rows}, {"verification", json::certificate(c)}};
  rep.exit_code = c.passed() ? 0 : 1;
  return rep;
}

}  // namespace

RunReport run(const RunConfig& cfg) {
  RunReport rep;
  try {
    if (cfg.output != "json" && cfg.output != "text") throw InvalidArgument("output must be json or text");
    if (cfg.command == "construct") rep = cmd_construct(cfg);
    else if (cfg.command == "orbit") rep = cmd_orbit(cfg);
    else if (cfg.command == "action") rep = cmd_action(cfg);
    else if (cfg.command == "charpoly") rep = cmd_charpoly(cfg);
    else if (cfg.command == "salem") rep = cmd_salem(cfg);
    else if (cfg.command == "group") rep = cmd_group(cfg);
    else if (cfg.command == "theoremc") rep = cmd_theoremc(cfg);
    else if (cfg.command == "errata") rep = cmd_errata(cfg);
    else if (cfg.command == "sweep") rep = cmd_sweep(cfg);
    else throw InvalidArgument("unknown command '" + cfg.command + "'");
  } catch (const Error& e) {
    const bool usage = e.kind() == "InvalidArgument" || e.kind() == "ParseError" || e.kind() == "InadmissibleTau";
    rep = RunReport{};
    rep.exit_code = usage ? 2 : 1;
    rep.data = {{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
    rep.text = std::string("error: ") + e.what() + "\n";
  }
  rep.data["schema"] = json::kSchemaVersion;
  rep.data["config"] = config_json(cfg);
  rep.data["exit_code"] = rep.exit_code;
  return rep;
}

}  // namespace coxforge::cli
