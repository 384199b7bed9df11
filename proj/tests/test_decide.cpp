#include <doctest.h>

#include "generators.hpp"
#include "gpi/catalog.hpp"
#include "gpi/decide.hpp"
#include "gpi/parse.hpp"

using namespace gpi;

namespace {

const FieldSpec Q;

NCPoly P(const std::string& s, bool unital = false, const FieldSpec& f = Q) {
  return parse_expr(s, f, unital);
}

GElem e(const AlgebraSpec& spec, std::initializer_list<int> idx, long c = 1) {
  return GElem::basis(spec, subset_of(idx), Scalar(spec.field(), c));
}

// Independent check of a classification: re-evaluate the witness.
void check_witness(const NCPoly& f, const AlgebraSpec& spec, const Classification& c) {
  if (c.verdict == Verdict::Identity) {
    CHECK(!c.witness.has_value());
    return;
  }
  REQUIRE(c.witness.has_value());
  GElem v = gen::naive_evaluate(f.in_context(spec.unital()), c.witness->assignment, spec);
  CHECK(v == c.witness->value);
  CHECK(!v.is_zero());
  CHECK(is_central_element(v) == (c.verdict == Verdict::Central));
}

}  // namespace

TEST_CASE("is_identity examples") {
  CHECK(is_identity(h_poly(2, Q, true), AlgebraSpec(2, true)).identity);
  CHECK(is_identity(h_poly(2, Q, true), AlgebraSpec(2, true), Strategy::Generic).identity);
  CHECK(is_identity(P("[x1,x2,x3]", true), AlgebraSpec(4, true)).identity);
  const FieldSpec F3(3);
  auto cube = is_identity(P("x1^3", false, F3), AlgebraSpec(5, false, F3));
  CHECK(cube.identity);
  CHECK(cube.strategy == Strategy::Generic);
  auto c12 = is_identity(P("[x1,x2]", true), AlgebraSpec(2, true));
  CHECK(!c12.identity);
  REQUIRE(c12.witness);
  CHECK(c12.witness->value == e(AlgebraSpec(2, true), {1, 2}, 2));
  CHECK_THROWS_AS(is_identity(P("x1^3", false, F3), AlgebraSpec(5, false, F3),
                              Strategy::Multilinear),
                  PreconditionError);
  CHECK_THROWS_AS(is_identity(P("x1"), AlgebraSpec(2, true)), Mismatch);
}

TEST_CASE("classify examples") {
  const AlgebraSpec g4(4, true), g2(2, true), g03(3, false), g04(4, false);
  CHECK(classify(P("[x1,x2]", true), g4).verdict == Verdict::Central);
  auto c1 = classify(P("x1", true), g2);
  CHECK(c1.verdict == Verdict::Noncentral);
  check_witness(P("x1", true), g2, c1);
  auto circ = classify(P("x1 o x2"), g03);
  CHECK(circ.verdict == Verdict::Central);
  REQUIRE(circ.witness);
  CHECK(circ.witness->value == e(g03, {1, 2, 3}, 2));
  auto prod = classify(P("x1*x2"), g04);
  CHECK(prod.verdict == Verdict::Noncentral);
  check_witness(P("x1*x2"), g04, prod);
  CHECK(classify(P("[x1,x2,x3]"), g04).verdict == Verdict::Identity);
  CHECK(classify(P("x1^3", true, FieldSpec(3)), AlgebraSpec(3, true, FieldSpec(3)))
            .infinite_field_semantics);
}

TEST_CASE("property: multilinear and generic strategies agree") {
  for (int k = 0; k < 120; ++k) {
    bool unital = k % 2;
    int m = 1 + k % 3;
    const AlgebraSpec spec(m, unital);
    NCPoly f = gen::homogeneous_poly(Q, unital, 3, 4, 4);
    // bias toward identities: straightening differences lie in T^(3)
    if (k % 3 == 0) f = f - reassemble(nf_t3(f)) + nc_commutator({P("x1", unital), P("x2", unital), P("x1", unital)});
    auto a = is_identity(f, spec, Strategy::Multilinear);
    auto b = is_identity(f, spec, Strategy::Generic);
    CHECK(a.identity == b.identity);
    CHECK(a.identity == gen::vanishes_on_generic(f, spec));
  }
}

TEST_CASE("property: witnesses are sound") {
  for (int k = 0; k < 80; ++k) {
    bool unital = k % 2;
    const FieldSpec f = k % 4 < 2 ? Q : FieldSpec(3);
    const AlgebraSpec spec(2 + k % 3, unital, f);
    NCPoly p = gen::poly(f, unital, 3, 3, 3);
    auto c = classify(p, spec);
    check_witness(p, spec, c);
  }
}

TEST_CASE("property: identities vanish at random points, nonidentities are witnessed") {
  for (int k = 0; k < 60; ++k) {
    const AlgebraSpec spec(3, false, FieldSpec(5));
    NCPoly p = gen::homogeneous_poly(spec.field(), false, 2, 4, 3);
    auto r = is_identity(p, spec);
    if (r.identity) {
      for (int s = 0; s < 10; ++s) {
        Evaluation<Scalar> at;
        for (Var v : p.variables()) at.emplace(v, gen::element(spec));
        CHECK(evaluate(p, at, spec).is_zero());
      }
    } else {
      REQUIRE(r.witness);
      CHECK(!evaluate(p, r.witness->assignment, spec).is_zero());
    }
  }
}

TEST_CASE("noncentral witnesses by the 1 + e construction") {
  const AlgebraSpec g4(4, true), g2(2, true);
  auto a = find_noncentral_witness(SSElement({{1, 1}}, {{2, 3, 0, 0}}), g4);
  REQUIRE(a.outcome == NoncentralAttempt::Outcome::Found);
  REQUIRE(a.witness);
  CHECK(to_string(a.witness->assignment) == "x1 -> 1 + e{1}; x2 -> 1 + e{2}; x3 -> 1 + e{3}");
  CHECK(parity_split(a.witness->value).odd.coefficient(subset_of({1, 2, 3})) != Scalar::zero(Q));
  CHECK(!is_central_element(a.witness->value));
  auto b = find_noncentral_witness(SSElement({{1, 1}}, {}), g2);
  CHECK(b.outcome == NoncentralAttempt::Outcome::Found);
  auto c = find_noncentral_witness(SSElement({{1, 1}}, {{2, 3, 0, 0}, {4, 5, 0, 0}}), g4);
  CHECK(c.outcome == NoncentralAttempt::Outcome::HypothesisViolated);
  CHECK_THROWS_AS(find_noncentral_witness(SSElement({{1, 1}}, {}), AlgebraSpec(2, false)),
                  PreconditionError);
}

TEST_CASE("bounded membership examples") {
  auto swap = tspace_member_bounded(P("[x2,x1]"), std::vector<NCPoly>{P("[x1,x2]")});
  CHECK(swap.member);
  CHECK(swap.verified);
  REQUIRE(swap.combination.size() == 1);
  NCPoly recombined = swap.combination[0].instance.scaled(swap.combination[0].coefficient);
  CHECK(nf_t3(recombined - P("[x2,x1]")).is_zero());

  GeneratorSet t3 = t_ideal_generators(AlgebraSpec(4, false));
  auto v = tspace_member_bounded(P("[x1,x2]*[x1,x3]"), t3);
  CHECK(v.member);

  MembershipBounds two;
  two.max_word_degree = 2;
  auto miss = tspace_member_bounded(P("x1*x2"), std::vector<NCPoly>{P("[x1,x2]")}, two);
  CHECK(!miss.member);
}

TEST_CASE("property: membership recovers random instance combinations") {
  const AlgebraSpec spec(4, false);
  GeneratorSet cp = cp_generators(spec);
  for (int k = 0; k < 15; ++k) {
    NCPoly a = substitute(cp.elements[0].poly, {{1, P("x1*x2")}, {2, P("x3")}});
    NCPoly b = substitute(cp.elements[0].poly, {{1, P("x3")}, {2, P("x2*x1")}});
    NCPoly f = a.scaled(gen::scalar(Q, true)) + b.scaled(gen::scalar(Q));
    auto r = tspace_member_bounded(f, cp);
    CHECK(r.member);
    CHECK(r.verified);
    NCPoly sum(Q, false);
    for (const auto& entry : r.combination) sum += entry.instance.scaled(entry.coefficient);
    CHECK(nf_t3(sum - f).is_zero());
  }
}

TEST_CASE("text records") {
  const AlgebraSpec g03(3, false);
  std::string rec = to_string(classify(P("x1 o x2"), g03));
  CHECK(rec.find("verdict: central") != std::string::npos);
  CHECK(rec.find("value: 2 * e{1,2,3}") != std::string::npos);
}
