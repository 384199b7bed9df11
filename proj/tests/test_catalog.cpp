#include <doctest.h>

#include "gpi/catalog.hpp"
#include "gpi/decide.hpp"
#include "gpi/parse.hpp"

using namespace gpi;

namespace {

bool contains(const GeneratorSet& g, const NCPoly& f) {
  for (const auto& e : g.elements)
    if (e.poly == f) return true;
  return false;
}

NCPoly P(const std::string& s, const FieldSpec& f = FieldSpec{}, bool unital = false) {
  return parse_expr(s, f, unital);
}

}  // namespace

TEST_CASE("named polynomials") {
  const FieldSpec Q, F3(3);
  CHECK(h_poly(2, Q) == P("[x1,x2]*[x3,x4]"));
  CHECK(w_poly(1, F3) == P("[x1,x2]*x1^2*x2^2", F3));
  CHECK(w_poly(2, F3) == P("[x1,x2]*x1^2*x2^2*[x3,x4]*x3^2*x4^2", F3));
  CHECK(circle_chain(3, Q) == P("(x1 o x2) o x3"));
  CHECK_THROWS_AS(w_poly(1, Q), PreconditionError);
  CHECK_THROWS_AS(h_poly(0, Q), PreconditionError);
}

TEST_CASE("T-ideal generators") {
  const FieldSpec Q, F3(3);
  for (const FieldSpec& f : {Q, F3}) {
    GeneratorSet g = t_ideal_generators(AlgebraSpec(3, true, f));
    REQUIRE(g.elements.size() == 2);
    CHECK(g.elements[0].poly == P("[x1,x2,x3]", f, true));
    CHECK(g.elements[1].poly == h_poly(2, f, true));
  }
  GeneratorSet g04 = t_ideal_generators(AlgebraSpec(4, false, F3));
  CHECK(g04.elements.size() == 3);
  CHECK(contains(g04, P("x1^3", F3)));
  CHECK(contains(g04, P("[x1,x2,x3]", F3)));
  CHECK(contains(g04, P("x1 o x2 o x3", F3)));
  GeneratorSet g05 = t_ideal_generators(AlgebraSpec(5, false));
  CHECK(contains(g05, P("(x1 o x2 o x3)*x4")));
  CHECK(contains(g05, P("x4*(x1 o x2 o x3)")));
  CHECK(contains(t_ideal_generators(AlgebraSpec(9, false, F3)), w_poly(1, F3)));
  CHECK(!contains(t_ideal_generators(AlgebraSpec(7, false, F3)), w_poly(1, F3)));
}

TEST_CASE("CP generators") {
  const FieldSpec Q, F3(3);
  CHECK(cp_generators(AlgebraSpec(3, true)).polys() ==
        std::vector<NCPoly>{P("[x1,x2]", Q, true), P("[x1,x2]*[x3,x4]", Q, true),
                            P("x3*[x1,x2]", Q, true)});
  GeneratorSet g9 = cp_generators(AlgebraSpec(9, false, F3));
  CHECK(contains(g9, P("x3*[x1,x2]*x1^2*x2^2", F3)));
  REQUIRE(g9.r0.has_value());
  CHECK(*g9.r0 == 1);
  GeneratorSet g2 = cp_generators(AlgebraSpec(2, true, F3));
  CHECK(contains(g2, P("x1^3", F3, true)));
  CHECK(contains(g2, P("x3^3*[x1,x2]*x1^2*x2^2", F3, true)));
  CHECK(g2.infinite_field_semantics);
}

TEST_CASE("verbatim chain length reading") {
  GeneratorSet literal = cp_generators(AlgebraSpec(3, false), true);
  GeneratorSet adopted = cp_generators(AlgebraSpec(3, false));
  CHECK(contains(literal, P("x1")));
  CHECK(!contains(adopted, P("x1")));
  CHECK(classify(P("x1"), AlgebraSpec(3, false)).verdict == Verdict::Noncentral);
}

TEST_CASE("h_n is not an identity of G(m) when 2n <= m") {
  const FieldSpec Q;
  for (int m = 2; m <= 6; ++m) {
    const AlgebraSpec spec(m, true);
    for (std::uint32_t n = 1; 2 * n <= static_cast<std::uint32_t>(m); ++n) {
      Evaluation<Scalar> at;
      for (Var i = 1; i <= 2 * n; ++i) at.emplace(i, GElem::generator(spec, static_cast<int>(i)));
      GElem v = evaluate(h_poly(n, Q, true), at, spec);
      Subset all = (Subset{1} << (2 * n)) - 1;
      CHECK(v == GElem::basis(spec, all, Scalar(Q, 2L).pow(n)));
    }
  }
}

TEST_CASE("characteristic 2 is out of scope") {
  CHECK_THROWS_AS(AlgebraSpec(3, false, FieldSpec(2)), OutOfScope);
}

TEST_CASE("compact generator text parses back to the generator") {
  for (const FieldSpec& f : {FieldSpec{}, FieldSpec(3), FieldSpec(5)})
    for (int m = 1; m <= 13; ++m)
      for (bool u : {true, false}) {
        const AlgebraSpec spec(m, u, f);
        for (const auto& set : {t_ideal_generators(spec), cp_generators(spec),
                                cp_generators(spec, true)})
          for (const auto& g : set.elements) CHECK(parse_expr(g.expr, f, u) == g.poly);
      }
}
