#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpi/canonical.hpp"
#include "gpi/catalog.hpp"
#include "gpi/free_algebra.hpp"
#include "gpi/grassmann.hpp"

namespace gpi {

enum class Verdict { Identity, Central, Noncentral };
enum class Strategy { Multilinear, Generic };

std::string to_string(Verdict v);    // "identity", "central", "noncentral"
std::string to_string(Strategy s);   // "multilinear", "generic"

/// Concrete substitution into the algebra and the resulting value.
struct Witness {
  Evaluation<Scalar> assignment;
  GElem value;
};

struct IdentityResult {
  bool identity;
  Strategy strategy;
  /// Present when `identity` is false and a scalar point was found (over
  /// F_p the generic strategy can fail to find one).
  std::optional<Witness> witness;
};

/// Multilinear is used when the characteristic is 0 or every variable
/// degree of every multihomogeneous component is below p; `force` overrides
/// (Multilinear is rejected when it is not complete).
IdentityResult is_identity(const NCPoly& f, const AlgebraSpec& spec,
                           std::optional<Strategy> force = std::nullopt);

/// True when the multilinear strategy is complete for f over `field`.
bool multilinear_applicable(const NCPoly& f, const FieldSpec& field);

struct Classification {
  Verdict verdict;
  Strategy strategy;
  /// identity: none; central: a nonvanishing value; noncentral: a value
  /// outside the centre.
  std::optional<Witness> witness;
  /// Unitary algebra over F_p: answers are for the algebra over an infinite
  /// extension field.
  bool infinite_field_semantics = false;
};

Classification classify(const NCPoly& f, const AlgebraSpec& spec,
                        std::optional<Strategy> force = std::nullopt);

struct NoncentralAttempt {
  enum class Outcome { Found, HypothesisViolated, ConstructionFailed };
  Outcome outcome;
  std::string reason;
  std::optional<Witness> witness;
};

/// The 1 + e substitution for an SS element on a unitary G(m): the first
/// beginning variable (char p: first with exponent not divisible by p) goes
/// to 1 + e_1, end variables in order to 1 + e_2, 1 + e_3, ..., the other
/// beginning variables to 1. Requires lbeg(u) >= 1, 2 lend(u) <= m - 2 and,
/// for p > 2, a beginning exponent not divisible by p.
NoncentralAttempt find_noncentral_witness(const SSElement& u,
                                          const AlgebraSpec& spec);

struct MembershipBounds {
  std::uint32_t max_word_degree = 0;  // 0: deg of the target
  std::size_t max_words = 64;         // per substituted variable
};

struct MembershipEntry {
  std::size_t generator;                 // index into the generator set
  std::map<Var, std::vector<Word>> words;  // per generator variable
  Scalar coefficient;
  NCPoly instance;  // coefficient of the marker monomial
};

struct MembershipReport {
  bool member = false;
  std::vector<MembershipEntry> combination;
  MembershipBounds bounds;
  std::size_t candidates = 0;
  bool truncated = false;  // some word list hit max_words
  bool verified = false;   // residual re-checked
};

/// Bounded search for f in gens^S + T^(3). Absence is not a proof of
/// non-membership. Requires characteristic 0 or every relevant degree < p.
MembershipReport tspace_member_bounded(const NCPoly& f,
                                       const GeneratorSet& gens,
                                       MembershipBounds bounds = {});
MembershipReport tspace_member_bounded(const NCPoly& f,
                                       const std::vector<NCPoly>& gens,
                                       MembershipBounds bounds = {});

/// Assignment in expression syntax: "x1 -> e{1,2}; x2 -> 1 + e{3}".
std::string to_string(const Evaluation<Scalar>& assignment);
/// Multi-line record: verdict, strategy, witness, value.
std::string to_string(const Classification& c);
std::string to_string(const MembershipReport& r,
                      const std::vector<std::string>& generator_labels = {});

}  // namespace gpi
