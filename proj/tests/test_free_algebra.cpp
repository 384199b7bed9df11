#include <doctest.h>

#include "generators.hpp"
#include "gpi/catalog.hpp"
#include "gpi/free_algebra.hpp"
#include "gpi/parse.hpp"

using namespace gpi;

namespace {

const FieldSpec Q;

NCPoly x(Var i, bool unital = false) { return NCPoly::variable(Q, unital, i); }

NCPoly P(const std::string& s, bool unital = false, const FieldSpec& f = Q) {
  return parse_expr(s, f, unital);
}

}  // namespace

TEST_CASE("commutator and circle expansions") {
  CHECK(nc_commutator(x(1), x(2)) == x(1) * x(2) - x(2) * x(1));
  CHECK(nc_circle(x(1), x(2)) == x(1) * x(2) + x(2) * x(1));
  CHECK(nc_commutator({x(1), x(2), x(3)}) ==
        P("x1*x2*x3 - x2*x1*x3 - x3*x1*x2 + x3*x2*x1"));
  CHECK(nc_circle_chain({x(1), x(2), x(3)}) == nc_circle(nc_circle(x(1), x(2)), x(3)));
}

TEST_CASE("substitute examples") {
  CHECK(substitute(nc_commutator(x(1), x(2)), {{1, x(2)}, {2, x(1)}}) ==
        -nc_commutator(x(1), x(2)));
  CHECK(substitute(nc_power(x(1), 2), {{1, x(1) + x(2)}}) ==
        P("x1^2 + x1*x2 + x2*x1 + x2^2"));
  CHECK(substitute(x(1), {{1, x(1) * x(2)}}) == x(1) * x(2));
  CHECK_THROWS_AS(substitute(x(1), {{1, P("1 + x2", true)}}), Mismatch);
}

TEST_CASE("evaluate examples") {
  const AlgebraSpec g2(2, true), g03(3, false);
  Evaluation<Scalar> at{{1, GElem::generator(g2, 1)}, {2, GElem::generator(g2, 2)}};
  CHECK(evaluate(nc_commutator(x(1, true), x(2, true)), at, g2) ==
        GElem::basis(g2, subset_of({1, 2}), Scalar(Q, 2L)));
  CHECK(gen::vanishes_on_generic(h_poly(2, Q, true), g2));
  Evaluation<Scalar> at3{{1, GElem::basis(g03, subset_of({1, 2}), Scalar::one(Q))},
                         {2, GElem::generator(g03, 3)}};
  CHECK(evaluate(nc_circle(x(1), x(2)), at3, g03) ==
        GElem::basis(g03, subset_of({1, 2, 3}), Scalar(Q, 2L)));
  CHECK_THROWS_AS(evaluate(P("1 + x1", true), at, AlgebraSpec(2, false)), Mismatch);
}

TEST_CASE("property: prefix-sharing evaluation equals word-by-word evaluation") {
  for (int k = 0; k < 200; ++k) {
    bool unital = k % 2;
    const FieldSpec f = k % 3 ? Q : FieldSpec(5);
    const AlgebraSpec spec(4, unital, f);
    NCPoly p = gen::poly(f, unital, 3, 5, 6);
    Evaluation<Scalar> at;
    for (Var v = 1; v <= 3; ++v) at.emplace(v, gen::element(spec));
    CHECK(evaluate(p, at, spec) == gen::naive_evaluate(p, at, spec));
  }
}

TEST_CASE("property: substitution then evaluation equals evaluation of the images") {
  const AlgebraSpec spec(5, false);
  for (int k = 0; k < 100; ++k) {
    NCPoly f = gen::poly(Q, false, 2, 3);
    NCSubstitution s{{1, gen::poly(Q, false, 3, 2)}, {2, gen::poly(Q, false, 3, 2)}};
    Evaluation<Scalar> at;
    for (Var v = 1; v <= 3; ++v) at.emplace(v, gen::element(spec));
    Evaluation<Scalar> images;
    for (const auto& [v, img] : s) images.emplace(v, evaluate(img, at, spec));
    CHECK(evaluate(substitute(f, s), at, spec) == evaluate(f, images, spec));
  }
}

TEST_CASE("multihomogeneous components") {
  auto c = multihomog_components(P("x1 + x1*x2"));
  REQUIRE(c.size() == 2);
  CHECK(c[0].second == x(1));
  CHECK(c[1].second == x(1) * x(2));
  CHECK(multihomog_components(P("x1*x2 + x2*x1")).size() == 1);
  CHECK(multihomog_components(NCPoly(Q, false)).empty());
  for (int k = 0; k < 100; ++k) {
    NCPoly f = gen::poly(Q, false, 3, 4, 6);
    NCPoly sum(Q, false);
    for (const auto& [md, part] : multihomog_components(f)) {
      CHECK(part.is_multihomogeneous());
      CHECK(multidegree(part.terms().begin()->first) == md);
      sum += part;
    }
    CHECK(sum == f);
  }
}

TEST_CASE("multilinearize examples") {
  CHECK(multilinearize(nc_power(x(1), 2), 1) == P("x1*x2 + x2*x1"));
  NCPoly cube = multilinearize(nc_power(x(1), 3), 1);
  CHECK(cube.terms().size() == 6);
  for (const auto& [w, c] : cube.terms()) {
    CHECK(c == Scalar::one(Q));
    CHECK(multidegree(w) == Multidegree{{1, 1}, {2, 1}, {3, 1}});
  }
  CHECK(multilinearize(P("x1*x2*x1"), 1) == P("x1*x2*x3 + x3*x2*x1"));
  CHECK(linearization_copies(P("x1*x2*x1"), 1) == std::vector<Var>{1, 3});
}

TEST_CASE("property: full linearization restitutes d! f") {
  for (int k = 0; k < 60; ++k) {
    NCPoly f = gen::homogeneous_poly(Q, false, 2, 4);
    Var v = 1;
    std::uint32_t d = multidegree(f.terms().begin()->first)[v];
    if (d == 0) continue;
    NCPoly lin = multilinearize(f, v);
    NCSubstitution back;
    for (Var c : linearization_copies(f, v)) back.emplace(c, x(v));
    long fact = 1;
    for (std::uint32_t i = 2; i <= d; ++i) fact *= i;
    CHECK(substitute(lin, back) == f.scaled(Scalar(Q, fact)));
  }
}

TEST_CASE("is_essential examples") {
  CHECK(is_essential(P("x1*x2 + x2*x1")));
  CHECK(!is_essential(P("x1 + x1*x2")));
  CHECK(is_essential(P("x1*x2*x3")));
}

TEST_CASE("context rules") {
  CHECK_THROWS_AS(NCPoly::constant(Q, Scalar::one(Q)).in_context(false), PreconditionError);
  CHECK_THROWS_AS(x(1) + x(1, true), Mismatch);
  CHECK(x(1).in_context(true) == x(1, true));
}

TEST_CASE("parser grammar") {
  const FieldSpec F3(3);
  CHECK(P("[x1,x2]*x1^2*x2^2", false, F3) == w_poly(1, F3));
  CHECK(P("x1 o x2 o x3") == circle_chain(3, Q));
  CHECK(P("[x1,x2,x3]") == nc_commutator(nc_commutator(x(1), x(2)), x(3)));
  CHECK(P("x1*x2 o x3") == nc_circle(x(1) * x(2), x(3)));
  CHECK(P("x1 + x2 o x3") == x(1) + nc_circle(x(2), x(3)));
  CHECK(P("-x1^2 + 1/2*x2") == -nc_power(x(1), 2) + x(2).scaled(Scalar(Q, mpq_class(1, 2))));
  CHECK(P("2 + x1", true) == NCPoly::constant(Q, Scalar(Q, 2L)) + x(1, true));
  CHECK(P("(x1 + x2)^2") == nc_power(x(1) + x(2), 2));
}

TEST_CASE("parser errors carry positions") {
  try {
    P("x1 + ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  try {
    P("x1 * (x2 + x3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 13);
  }
  CHECK_THROWS_AS(P("2 + x1"), ParseError);
  CHECK_THROWS_AS(P("x0"), ParseError);
  CHECK_THROWS_AS(P("[x1]"), ParseError);
  CHECK_THROWS_AS(P("x1 x2"), ParseError);
}

TEST_CASE("property: parse(print(f)) == f") {
  for (int k = 0; k < 300; ++k) {
    bool unital = k % 2;
    const FieldSpec f = k % 3 ? Q : FieldSpec(5);
    NCPoly p = gen::poly(f, unital, 4, 4, 6);
    if (unital && k % 4 == 1) p += NCPoly::constant(f, gen::scalar(f));
    CHECK(parse_expr(to_string(p), f, unital) == p);
  }
}
