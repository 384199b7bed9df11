#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gpi/coefficients.hpp"
#include "gpi/grassmann.hpp"

namespace gpi {

using Var = std::uint32_t;  // x_i, i >= 1

/// Monomial: sequence of variable indices. The empty word is 1.
using Word = std::vector<Var>;

/// Degree-lexicographic order on words.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// deg_{x_i} for each occurring variable.
using Multidegree = std::map<Var, std::uint32_t>;

Multidegree multidegree(const Word& w);
std::string word_to_string(const Word& w);  // "x1^2*x2", "1" for empty

/// Element of k_1<X> (unital context) or k_0<X>.
class NCPoly {
 public:
  using Terms = std::map<Word, Scalar, DegLexLess>;

  explicit NCPoly(const FieldSpec& field = FieldSpec{}, bool unital = false)
      : field_(field), unital_(unital) {}

  static NCPoly variable(const FieldSpec& field, bool unital, Var i);
  static NCPoly monomial(const FieldSpec& field, bool unital, const Word& w,
                         const Scalar& c);
  /// c * 1; requires a unital context.
  static NCPoly constant(const FieldSpec& field, const Scalar& c);

  const FieldSpec& field() const noexcept { return field_; }
  bool unital() const noexcept { return unital_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;

  void add_term(const Word& w, const Scalar& c);

  /// Largest word length; 0 for the zero polynomial.
  std::size_t degree() const;
  /// Sorted variables occurring in some word.
  std::vector<Var> variables() const;
  Var max_variable() const;
  bool is_multihomogeneous() const;

  /// Same terms viewed in another context (the empty word forbids k_0).
  NCPoly in_context(bool unital) const;

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly operator-() const;
  NCPoly scaled(const Scalar& c) const;

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.field_ == b.field_ && a.unital_ == b.unital_ &&
           a.terms_ == b.terms_;
  }

  void check_same(const NCPoly& o) const;

 private:
  FieldSpec field_;
  bool unital_;
  Terms terms_;
};

NCPoly nc_mul(const NCPoly& a, const NCPoly& b);
NCPoly nc_power(const NCPoly& a, std::uint64_t n);
NCPoly nc_commutator(const NCPoly& a, const NCPoly& b);
/// Left-normed [a1, a2, ..., an] = [[a1, a2], ..., an].
NCPoly nc_commutator(const std::vector<NCPoly>& args);
NCPoly nc_circle(const NCPoly& a, const NCPoly& b);
/// (a1 o a2 o ... ) o an, left-associated.
NCPoly nc_circle_chain(const std::vector<NCPoly>& args);

/// Endomorphism data: unassigned variables map to themselves.
using NCSubstitution = std::map<Var, NCPoly>;
NCPoly substitute(const NCPoly& f, const NCSubstitution& s);

/// Evaluation data: every variable of f must be assigned.
template <class C>
using Evaluation = std::map<Var, GrassmannElement<C>>;

/// Homomorphic image of f in `spec`, coefficients lifted into C. Words are
/// walked in lexicographic order so shared prefixes are multiplied once.
template <class C>
GrassmannElement<C> evaluate(const NCPoly& f, const Evaluation<C>& s,
                             const AlgebraSpec& spec);

std::vector<std::pair<Multidegree, NCPoly>> multihomog_components(
    const NCPoly& f);

/// Full linearization in `variable`: its d occurrences become `variable`
/// followed by d-1 fresh variables above f's largest index, summed over all
/// assignments of the d copies to the occurrences.
NCPoly multilinearize(const NCPoly& f, Var variable);
/// Fresh copies used by multilinearize(f, variable), in order.
std::vector<Var> linearization_copies(const NCPoly& f, Var variable);

bool is_essential(const NCPoly& f);

/// Canonical text in degree-lexicographic order, e.g. "x2*x1 - 1/2*x1^2*x2".
std::string to_string(const NCPoly& f);

}  // namespace gpi
