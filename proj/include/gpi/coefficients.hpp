#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gpi/error.hpp"

namespace gpi {

/// Ground field: characteristic 0 means the rationals, otherwise an odd
/// prime p. Characteristic 2 throws OutOfScope.
class FieldSpec {
 public:
  FieldSpec() = default;
  explicit FieldSpec(std::uint64_t characteristic);

  static FieldSpec rationals() { return FieldSpec{}; }

  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint64_t p_ = 0;
};

std::string to_string(const FieldSpec& f);

/// Exact field element of Q or F_p.
class Scalar {
 public:
  Scalar() = default;  // zero of Q
  Scalar(const FieldSpec& field, long value);
  Scalar(const FieldSpec& field, const mpz_class& value);
  Scalar(const FieldSpec& field, const mpq_class& value);

  static Scalar zero(const FieldSpec& f) { return Scalar(f, 0L); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, 1L); }

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// Sign used for printing: residues are always nonnegative.
  bool is_negative() const noexcept;

  /// Rational value (char 0) or the residue as an integer (char p).
  mpq_class to_rational() const;
  std::uint64_t residue() const noexcept { return r_; }

  Scalar inverse() const;
  Scalar pow(std::uint64_t n) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void check_same(const Scalar& o) const;

  FieldSpec field_;
  mpq_class q_;          // characteristic 0
  std::uint64_t r_ = 0;  // characteristic p, in [0, p)
};

/// Canonical text: integers, a/b, or residues 0..p-1.
std::string to_string(const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);
/// Parses "n" or "a/b" (optionally signed) into the given field.
Scalar parse_scalar(const std::string& text, const FieldSpec& field);

using Indeterminate = std::uint32_t;

/// Sparse exponent vector over indeterminates t_i: sorted by index, no zero
/// exponents.
using Exponents = std::vector<std::pair<Indeterminate, std::uint32_t>>;

/// Hands out fresh indeterminate indices for one computation session.
class IndeterminatePool {
 public:
  IndeterminatePool() = default;
  explicit IndeterminatePool(Indeterminate first) : next_(first) {}

  Indeterminate fresh() { return next_++; }
  /// Reserves `count` consecutive indices and returns the first.
  Indeterminate reserve(Indeterminate count) {
    Indeterminate base = next_;
    next_ += count;
    return base;
  }
  Indeterminate next() const noexcept { return next_; }

 private:
  Indeterminate next_ = 0;
};

/// Commutative multivariate polynomial over a FieldSpec. Canonical: no
/// stored zero coefficients, sparse exponent vectors.
class CoeffPoly {
 public:
  using Terms = std::map<Exponents, Scalar>;

  CoeffPoly() = default;
  explicit CoeffPoly(const FieldSpec& field) : field_(field) {}
  CoeffPoly(const Scalar& constant);  // NOLINT: scalars embed implicitly
  static CoeffPoly variable(const FieldSpec& field, Indeterminate t);
  static CoeffPoly constant(const FieldSpec& field, long c) {
    return CoeffPoly(Scalar(field, c));
  }

  const FieldSpec& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds c * t^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Scalar& c);

  std::vector<Indeterminate> indeterminates() const;
  std::uint32_t degree_in(Indeterminate t) const;

  /// Substitutes t -> value for the listed indeterminates.
  CoeffPoly substitute(const std::map<Indeterminate, Scalar>& values) const;
  /// Value when every indeterminate is assigned.
  Scalar evaluate(const std::map<Indeterminate, Scalar>& values) const;

  CoeffPoly& operator+=(const CoeffPoly& o);
  CoeffPoly& operator-=(const CoeffPoly& o);
  CoeffPoly& operator*=(const CoeffPoly& o);
  CoeffPoly operator-() const;
  CoeffPoly pow(std::uint64_t n) const;

  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  friend bool operator==(const CoeffPoly& a, const CoeffPoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const CoeffPoly& o) const;

  FieldSpec field_;
  Terms terms_;
};

CoeffPoly cp_mul(const CoeffPoly& a, const CoeffPoly& b);
bool cp_is_zero(const CoeffPoly& a);

/// Terms in lexicographic exponent order, e.g. "t1^2*t2 - 3*t4 + 1/2".
std::string to_string(const CoeffPoly& p);
std::ostream& operator<<(std::ostream& os, const CoeffPoly& p);

bool is_prime(std::uint64_t n);

}  // namespace gpi
