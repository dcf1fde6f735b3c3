#include <doctest.h>

#include <random>
#include <set>

#include "coxforge/groupengine.hpp"

using namespace coxforge;

namespace {

const GroupEngine& engine5() {
  static const GroupEngine eng(5);
  return eng;
}

Permutation P(const char* s) { return Permutation::parse(s, 3); }

GenWord random_word(std::mt19937_64& rng, int len) {
  GenWord w;
  for (int i = 0; i < len; ++i) w.push_back(Letter{s3_elements()[rng() % 6], rng() % 2 == 1});
  return w;
}

}  // namespace

TEST_SUITE("groupengine") {

TEST_CASE("word parsing") {
  GenWord w = parse_word("f(12) f(13)^-1");
  REQUIRE(w.size() == 2);
  CHECK(w[0].rho == P("(12)"));
  CHECK_FALSE(w[0].inverse);
  CHECK(w[1].rho == P("(13)"));
  CHECK(w[1].inverse);
  CHECK(parse_word("id*(123),(132)^-1").size() == 3);
  CHECK(parse_word("").empty());
  CHECK(parse_word("1").empty());
  CHECK(parse_word(word_to_string(w)) == w);
  GenWord inv = inverse_word(w);
  CHECK(inv[0].rho == P("(13)"));
  CHECK_FALSE(inv[0].inverse);
  CHECK(inv[1].inverse);
  CHECK_THROWS_AS(parse_word("(14)"), ParseError);
  CHECK_THROWS_AS(parse_word("f(12)^2"), ParseError);
}

TEST_CASE("generators for n = 5") {
  const GroupEngine& eng = engine5();
  CHECK(eng.all_valid());
  for (const auto& g : eng.generators()) {
    CHECK(g.tau == g.rho.inverse());
    CHECK(g.orbit.sigma == g.rho);
    CHECK(g.action * g.action_inverse == LatticeIsometry::identity(15));
    CHECK(g.restriction.a == eng.solution().alpha);
  }
}

TEST_CASE("word evaluation") {
  const GroupEngine& eng = engine5();
  CHECK(eng.eval_lattice({}).is_identity());
  CHECK(eng.eval_lattice(parse_word("id id^-1")).is_identity());
  CHECK(eng.eval_lattice(parse_word("(12) id^-1")) == eng.linear_action(P("(12)")));
  // birational evaluation is composition right to left
  std::mt19937_64 rng(1);
  const auto& f12 = *eng.generator(P("(12)")).map;
  const auto& f13 = *eng.generator(P("(13)")).map;
  for (const auto& p : eng.sample_points(3)) {
    CHECK(eng.eval_point(parse_word("(12) (13)"), p) == f12.apply(f13.apply(p)));
    CHECK(eng.eval_point(parse_word("(12) (12)^-1"), p) == p);
  }
}

TEST_CASE("lattice evaluation is a homomorphism on concatenation") {
  const GroupEngine& eng = engine5();
  std::mt19937_64 rng(2);
  for (int it = 0; it < 20; ++it) {
    GenWord a = random_word(rng, 3), b = random_word(rng, 3);
    GenWord ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    // [a..., b...] = a o b, pullbacks compose in reverse
    CHECK(eng.eval_lattice(ab) == eng.eval_lattice(b) * eng.eval_lattice(a));
  }
}

TEST_CASE("dihedral relations and commutation") {
  const GroupEngine& eng = engine5();
  Certificate d = eng.verify_dihedral();
  CHECK(d.passed());
  CHECK_NOTHROW(d.require());
  Certificate c = eng.verify_commutation();
  CHECK(c.passed());
  for (const auto& s : eng.generators()) {
    LatticeIsometry L = eng.linear_action(s.rho);
    CHECK(L * eng.generators().front().action == eng.generators().front().action * L);
  }
  std::set<LatticeIsometry> Ls;
  for (const auto& s : s3_elements()) Ls.insert(eng.linear_action(s));
  CHECK(Ls.size() == 6);
  CHECK(eng.linear_group().size() == 6);
}

TEST_CASE("normal forms") {
  const GroupEngine& eng = engine5();
  NormalForm a = eng.normal_form(parse_word("(12) (13)"));
  CHECK(a.power == 2);
  CHECK(eng.eval_normal_form(a) == eng.eval_lattice(parse_word("(12) (13)")));
  // the linear part is the composite L_(12) o L_(13)
  NormalForm l = eng.normal_form(parse_word("(12) id^-1 (13) id^-1"));
  CHECK(l.power == 0);
  CHECK(l.rho == a.rho);
  NormalForm b = eng.normal_form(parse_word("id^-1 id^-1 id^-1"));
  CHECK(b.rho.is_identity());
  CHECK(b.power == -3);
  CHECK(b.to_string() == "Lid fid^-3");
}

TEST_CASE("normal forms are sound on random words") {
  const GroupEngine& eng = engine5();
  std::mt19937_64 rng(3);
  for (int it = 0; it < 40; ++it) {
    GenWord w = random_word(rng, 1 + static_cast<int>(rng() % 7));
    CHECK(eng.eval_normal_form(eng.normal_form(w)) == eng.eval_lattice(w));
  }
}

TEST_CASE("enumeration up to length 4") {
  EnumerationResult r = engine5().enumerate(4);
  CHECK(r.sound);
  CHECK(r.injective);
  CHECK(r.distinct_matrices == r.distinct_normal_forms);
  // L fid^k for |k| <= 4 and six L
  CHECK(r.distinct_normal_forms == 6 * 9);
}

TEST_CASE("determinants") {
  const GroupEngine& eng = engine5();
  const NFElem& a = eng.solution().alpha;
  CHECK(eng.word_determinant(parse_word("id")) == a);
  CHECK(eng.word_determinant(parse_word("id id^-1")) == NFElem::one(a.field()));
  CHECK(eng.word_determinant(parse_word("(12) (13)")) == a * a);
  std::mt19937_64 rng(4);
  for (int it = 0; it < 20; ++it) {
    GenWord u = random_word(rng, 3), v = random_word(rng, 2);
    GenWord uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(eng.word_determinant(uv) == eng.word_determinant(u) * eng.word_determinant(v));
    CHECK(eng.word_restriction(uv).a == eng.word_determinant(uv));
  }
}

TEST_CASE("word restriction matches pointwise evaluation on the cubic") {
  const GroupEngine& eng = engine5();
  std::mt19937_64 rng(5);
  for (int it = 0; it < 6; ++it) {
    GenWord w = random_word(rng, 3);
    RestrictionMap r = eng.word_restriction(w);
    for (int line = 1; line <= 3; ++line) {
      CubicPoint p{NFElem(eng.solution().field, Rational(7 + it)), line};
      CHECK(locate(eng.eval_point(w, embed(p))).value() == r.apply(p));
    }
  }
}

TEST_CASE("dynamical degrees of words") {
  const GroupEngine& eng = engine5();
  const Rational eps(1, 100000000);
  DyndegResult sq = eng.word_dyndeg(parse_word("id id"), eps);
  CHECK(sq.agrees);
  CHECK(std::abs(sq.radius.approx() - 3.5464554) < 1e-6);
  DyndegResult l = eng.word_dyndeg(parse_word("(123) id^-1"), eps);
  CHECK(l.power == 0);
  CHECK(l.radius.contains(Rational(1)));
  DyndegResult q = eng.word_dyndeg(parse_word("(12) (13)^-1"), eps);
  CHECK(q.power == 0);
  CHECK(q.radius.contains(Rational(1)));
  std::mt19937_64 rng(6);
  for (int it = 0; it < 10; ++it) {
    GenWord w = random_word(rng, 4);
    DyndegResult x = eng.word_dyndeg(w, eps), y = eng.word_dyndeg(inverse_word(w), eps);
    CHECK(x.agrees);
    CHECK(x.radius.overlaps(y.radius));
  }
}

TEST_CASE("classification labels") {
  CHECK(reference_label(5) == "D3 ⋊ Z");
  CHECK(reference_label(7) == "D3 ⋊ Z");
  CHECK(reference_label(4) == "Z/3Z ⋊ Z");
  CHECK(reference_label(9) == "(Z/2Z)^2 ⋊ Z");
  CHECK(reference_label(6) == "Z");
  ClassifyResult r = classify_subgroup(5, 4);
  CHECK(r.label == "D3 ⋊ Z");
  CHECK(r.matches_reference);
  CHECK(r.linear_group_order == 6);
  CHECK_FALSE(r.linear_group_abelian);
  CHECK(r.valid_generators.size() == 6);
  CHECK(r.relations.passed());
}

TEST_CASE("classification reports deviations with evidence") {
  ClassifyResult r = classify_subgroup(4, 3);
  // the label is read off the certified linear group, whatever the table says
  CHECK(r.relations.passed());
  if (r.linear_group_order == 6 && !r.linear_group_abelian) CHECK(r.label == "D3 ⋊ Z");
  if (!r.matches_reference) {
    bool surfaced = false;
    for (const auto& e : r.evidence) surfaced = surfaced || e.find("differs from the tabulated") != std::string::npos;
    CHECK(surfaced);
  }
}

}  // TEST_SUITE
