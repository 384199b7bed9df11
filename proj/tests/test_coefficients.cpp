#include <doctest.h>

#include "generators.hpp"
#include "gpi/coefficients.hpp"

using namespace gpi;

namespace {

long mod(long a, long p) { return ((a % p) + p) % p; }

CoeffPoly t(const FieldSpec& f, Indeterminate i) { return CoeffPoly::variable(f, i); }

CoeffPoly random_cpoly(const FieldSpec& f) {
  CoeffPoly c(f);
  for (int k = 0; k < gen::small_int(0, 4); ++k) {
    CoeffPoly term(gen::scalar(f));
    for (int j = 0; j < gen::small_int(0, 2); ++j)
      term *= t(f, static_cast<Indeterminate>(gen::small_int(1, 3)));
    c += term;
  }
  return c;
}

}  // namespace

TEST_CASE("field spec rejects characteristic 2 and composites") {
  CHECK_THROWS_AS(FieldSpec(2), OutOfScope);
  CHECK_THROWS_AS(FieldSpec(9), PreconditionError);
  CHECK_THROWS_AS(FieldSpec(1), PreconditionError);
  CHECK(FieldSpec(7).characteristic() == 7);
  CHECK(FieldSpec{}.is_rational());
}

TEST_CASE("F_p arithmetic agrees with machine integers mod p") {
  for (std::uint64_t p : {3u, 5u, 7u, 101u}) {
    const FieldSpec f(p);
    const long lp = static_cast<long>(p);
    for (int k = 0; k < 300; ++k) {
      long a = gen::small_int(-500, 500), b = gen::small_int(-500, 500);
      Scalar x(f, a), y(f, b);
      CHECK((x + y).residue() == static_cast<std::uint64_t>(mod(a + b, lp)));
      CHECK((x - y).residue() == static_cast<std::uint64_t>(mod(a - b, lp)));
      CHECK((x * y).residue() == static_cast<std::uint64_t>(mod(a * b, lp)));
      if (mod(b, lp) != 0) CHECK((x / y) * y == x);
      CHECK(Scalar(f, lp) * x == Scalar::zero(f));
    }
  }
}

TEST_CASE("rational scalars are exact") {
  const FieldSpec Q;
  Scalar a(Q, mpq_class(1, 3)), b(Q, mpq_class(1, 6));
  CHECK(a + b == Scalar(Q, mpq_class(1, 2)));
  CHECK((a / b) == Scalar(Q, 2L));
  CHECK(Scalar(Q, 2L).pow(10) == Scalar(Q, 1024L));
  CHECK_THROWS_AS(Scalar::zero(Q).inverse(), PreconditionError);
  CHECK(to_string(Scalar(Q, mpq_class(-3, 4))) == "-3/4");
}

TEST_CASE("mixing fields is rejected") {
  CHECK_THROWS_AS(Scalar(FieldSpec(3), 1L) + Scalar(FieldSpec(5), 1L), Mismatch);
  CHECK_THROWS_AS(Scalar(FieldSpec{}, 1L) * Scalar(FieldSpec(5), 1L), Mismatch);
}

TEST_CASE("parse_scalar") {
  CHECK(parse_scalar("-7/14", FieldSpec{}) == Scalar(FieldSpec{}, mpq_class(-1, 2)));
  CHECK(parse_scalar("1/2", FieldSpec(5)) == Scalar(FieldSpec(5), 3L));
  CHECK_THROWS(parse_scalar("1/0", FieldSpec{}));
  CHECK_THROWS(parse_scalar("1/3", FieldSpec(3)));
}

TEST_CASE("cp_mul examples") {
  const FieldSpec Q;
  CHECK(cp_mul(t(Q, 1), t(Q, 2)) == t(Q, 1) * t(Q, 2));
  CHECK((t(Q, 1) + CoeffPoly::constant(Q, 1)) * (t(Q, 1) - CoeffPoly::constant(Q, 1)) ==
        t(Q, 1) * t(Q, 1) - CoeffPoly::constant(Q, 1));
  const FieldSpec F3(3);
  CHECK((t(F3, 1) + CoeffPoly::constant(F3, 2)) * (t(F3, 1) + CoeffPoly::constant(F3, 1)) ==
        t(F3, 1) * t(F3, 1) + CoeffPoly::constant(F3, 2));
}

TEST_CASE("cp_is_zero examples") {
  const FieldSpec Q;
  CHECK(cp_is_zero(CoeffPoly(Q)));
  CHECK(cp_is_zero(t(Q, 1) - t(Q, 1)));
  const FieldSpec F3(3);
  CHECK(cp_is_zero(CoeffPoly::constant(F3, 3) * t(F3, 1)));
}

TEST_CASE("property: CoeffPoly ring laws") {
  for (const FieldSpec& f : {FieldSpec{}, FieldSpec(3), FieldSpec(5)}) {
    for (int k = 0; k < 150; ++k) {
      CoeffPoly a = random_cpoly(f), b = random_cpoly(f), c = random_cpoly(f);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      CoeffPoly ab = a * b;
      for (const auto& [e, s] : ab.terms()) CHECK(!s.is_zero());
    }
  }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  const FieldSpec f(7);
  for (int k = 0; k < 150; ++k) {
    CoeffPoly a = random_cpoly(f), b = random_cpoly(f);
    std::map<Indeterminate, Scalar> at;
    for (Indeterminate i = 1; i <= 3; ++i) at.emplace(i, gen::scalar(f));
    CHECK((a * b).evaluate(at) == a.evaluate(at) * b.evaluate(at));
    CHECK((a + b).evaluate(at) == a.evaluate(at) + b.evaluate(at));
  }
}

TEST_CASE("partial substitution keeps the other indeterminates") {
  const FieldSpec Q;
  CoeffPoly a = t(Q, 1) * t(Q, 2) + t(Q, 2);
  CoeffPoly b = a.substitute({{1, Scalar(Q, 3L)}});
  CHECK(b == t(Q, 2).pow(1) * CoeffPoly::constant(Q, 4));
  CHECK(a.degree_in(2) == 1);
  CHECK(a.indeterminates() == std::vector<Indeterminate>{1, 2});
}

TEST_CASE("primality") {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 0; n < 60; ++n)
    if (is_prime(n)) primes.push_back(n);
  CHECK(primes == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                                             43, 47, 53, 59});
}
