#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "gpi/canonical.hpp"
#include "gpi/catalog.hpp"
#include "gpi/parse.hpp"

using namespace gpi;

namespace {

const FieldSpec Q;

NCPoly P(const std::string& s, bool unital = false, const FieldSpec& f = Q) {
  return parse_expr(s, f, unital);
}

SSElement S(const std::string& s) {
  auto u = as_ss_element(P(s, true));
  REQUIRE(u.has_value());
  return *u;
}

std::string nf(const std::string& s) { return to_string(nf_t3(P(s))); }

}  // namespace

TEST_CASE("SS element invariants") {
  CHECK_THROWS_AS(SSElement({{2, 1}, {1, 1}}, {}), PreconditionError);
  CHECK_THROWS_AS(SSElement({{1, 1}}, {{1, 2, 0, 0}}), PreconditionError);
  CHECK_THROWS_AS(SSElement({}, {{2, 1, 0, 0}}), PreconditionError);
  CHECK_THROWS_AS(SSElement({}, {}), PreconditionError);
  SSElement u({{3, 1}}, {{1, 2, 1, 0}});
  CHECK(u.degree() == 4);
  CHECK(u.lbeg() == 1);
  CHECK(u.lend() == 1);
  CHECK(u.in_end(1));
  CHECK(u.in_beginning(3));
  CHECK(to_string(u) == "x3*[x1,x2]*x1");
  CHECK(u.to_ncpoly(Q, false) == P("x3*[x1,x2]*x1"));
}

TEST_CASE("nf_t3 examples") {
  CHECK(nf("x2*x1") == "x1*x2 - [x1,x2]");
  CHECK(nf_t3(P("[x1,x2]*[x1,x3]")).is_zero());
  CHECK(nf_t3(P("[x1,x3]*[x2,x4]")) == nf_t3(P("-[x1,x2]*[x3,x4]")));
  CHECK(nf("x1*[x1,x2]*x3") == "x3*[x1,x2]*x1");
  CHECK(nf("x1*x2*x1*x2") == "x1^2*x2^2 - [x1,x2]*x1*x2");
  CHECK(nf_t3(P("[x1,x2,x3]")).is_zero());
}

TEST_CASE("property: nf_t3 is sound against generic evaluation") {
  for (int k = 0; k < 40; ++k) {
    bool unital = k % 2;
    int m = 2 + k % 3;
    NCPoly f = gen::poly(Q, unital, 3, 4, 3);
    NCPoly back = reassemble(nf_t3(f));
    CHECK(gen::vanishes_on_generic(f - back, AlgebraSpec(m, unital)));
  }
}

TEST_CASE("property: nf_t3 is linear and idempotent") {
  for (int k = 0; k < 150; ++k) {
    const FieldSpec f = k % 2 ? Q : FieldSpec(3);
    NCPoly a = gen::poly(f, false, 4, 5), b = gen::poly(f, false, 4, 5);
    NormalForm na = nf_t3(a);
    CHECK(nf_t3(reassemble(na)) == na);
    NCPoly sum = reassemble(na) + reassemble(nf_t3(b));
    CHECK(nf_t3(a + b) == nf_t3(sum));
    Scalar c = gen::scalar(f);
    CHECK(nf_t3(a.scaled(c)) == nf_t3(reassemble(na).scaled(c)));
  }
}

TEST_CASE("property: an SS element is its own normal form") {
  for (int k = 0; k < 200; ++k) {
    SSElement u = gen::ss_element(6, 3);
    NormalForm n = nf_t3(u.to_ncpoly(Q, false));
    REQUIRE(n.terms.size() == 1);
    CHECK(n.terms.begin()->first == u);
    CHECK(n.terms.begin()->second == Scalar::one(Q));
    CHECK(as_ss_element(u.to_ncpoly(Q, true)) == u);
  }
}

TEST_CASE("venkova order examples") {
  CHECK(venkova_compare(S("x1"), S("x1^2")) > 0);
  CHECK(venkova_compare(S("x1*x2"), S("[x1,x2]")) > 0);
  CHECK(venkova_compare(S("x1*x2^2"), S("x1^2*x2")) > 0);
  CHECK(venkova_compare(S("x3*x4*[x1,x2]"), S("x1*x2*[x3,x4]")) > 0);
  CHECK(venkova_compare(S("x1*x2"), S("x1*x2")) == 0);
}

TEST_CASE("property: venkova order is a strict total order") {
  std::vector<SSElement> sample;
  for (int k = 0; k < 80; ++k) sample.push_back(gen::ss_element(4, 2));
  for (const auto& a : sample)
    for (const auto& b : sample) {
      int ab = venkova_compare(a, b);
      CHECK(ab == -venkova_compare(b, a));
      CHECK((ab == 0) == (a == b));
      for (const auto& c : sample)
        if (ab > 0 && venkova_compare(b, c) > 0) CHECK(venkova_compare(a, c) > 0);
    }
}

TEST_CASE("enumerate_bss") {
  auto two = enumerate_bss(2, 0, 2, 2);
  std::set<std::string> names;
  for (const auto& u : two) names.insert(to_string(u));
  CHECK(names == std::set<std::string>{"x1", "x2", "[x1,x2]"});
  for (std::size_t i = 0; i + 1 < two.size(); ++i)
    CHECK(venkova_compare(two[i], two[i + 1]) > 0);
  for (const auto& u : enumerate_bss(1, 0, 4, 3)) CHECK(u.lend() == 0);
  for (int m = 1; m <= 6; ++m)
    for (const auto& u : enumerate_bss(m, 0, 6, 4)) {
      CHECK(in_bss(u, m, 0));
      if (m % 2 == 0) CHECK(!is_extremal(u, m));
    }
  for (const auto& u : enumerate_bss(5, 3, 5, 3))
    for (const auto& b : u.beginning()) CHECK(b.exponent <= 2);
}

TEST_CASE("property: enumerate_bss is exactly the BSS elements in the window") {
  for (int k = 0; k < 300; ++k) {
    SSElement u = gen::ss_element(3, 3);
    for (int m = 1; m <= 5; ++m) {
      auto list = enumerate_bss(m, 0, 5, 3);
      bool listed = std::find(list.begin(), list.end(), u) != list.end();
      CHECK(listed == (in_bss(u, m, 0) && u.degree() <= 5));
    }
  }
}

TEST_CASE("extremal and R1 and M predicates") {
  CHECK(is_extremal(S("x1*x2"), 3));
  CHECK(!is_extremal(S("[x1,x2]"), 3));
  CHECK(!in_R1(S("[x1,x2]*x1^2*x2^2"), 3));
  CHECK(!in_R1(S("x1^3*[x2,x3]"), 3));
  CHECK(in_R1(S("x1^2*[x2,x3]"), 3));
  CHECK(in_M(S("x2*[x1,x3]"), 2, 3, 5, 0));
  CHECK(!in_M(S("x2*[x1,x3]"), 2, 4, 5, 0));
  CHECK(in_M_prime(S("x1*x2"), 1, 2, 0));
  CHECK(!in_M_prime(S("x1^3*x2"), 1, 2, 3));
}

TEST_CASE("circle expansion") {
  CHECK(circle_expansion(1, Q) == P("x1"));
  CHECK(circle_expansion(2, Q) == P("2*x1*x2 - [x1,x2]"));
  CHECK(circle_expansion(3, Q) ==
        P("4*x1*x2*x3 - 2*x3*[x1,x2] - 2*x2*[x1,x3] - 2*x1*[x2,x3]"));
  for (std::uint32_t n = 1; n <= 6; ++n)
    CHECK(nf_t3(circle_chain(n, Q) - circle_expansion(n, Q)).is_zero());
  const FieldSpec F5(5);
  for (std::uint32_t n = 1; n <= 5; ++n)
    CHECK(nf_t3(circle_chain(n, F5) - circle_expansion(n, F5)).is_zero());
}
