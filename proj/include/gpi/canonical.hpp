#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpi/coefficients.hpp"
#include "gpi/free_algebra.hpp"

namespace gpi {

struct BeginFactor {
  Var var;
  std::uint32_t exponent;  // >= 1
  friend bool operator==(const BeginFactor&, const BeginFactor&) = default;
};

/// [x_first, x_second] * x_first^beta_first * x_second^beta_second
struct EndPair {
  Var first, second;
  std::uint32_t beta_first = 0, beta_second = 0;
  friend bool operator==(const EndPair&, const EndPair&) = default;
};

/// Element of SS: x_{i1}^{a1} ... x_{it}^{at} times a globally increasing
/// product of end pairs.
class SSElement {
 public:
  SSElement() = default;
  /// Throws PreconditionError unless the invariants hold.
  SSElement(std::vector<BeginFactor> beginning, std::vector<EndPair> end);

  const std::vector<BeginFactor>& beginning() const noexcept { return beginning_; }
  const std::vector<EndPair>& end() const noexcept { return end_; }

  std::uint32_t degree() const;
  std::size_t lbeg() const noexcept { return beginning_.size(); }
  std::size_t lend() const noexcept { return end_.size(); }
  std::uint32_t degree_in(Var v) const;
  /// deg_{x_i} for every occurring variable.
  Multidegree multidegree() const;
  bool in_beginning(Var v) const;
  bool in_end(Var v) const;
  /// Sorted end indices j1 < j2 < ... < j2s.
  std::vector<Var> end_variables() const;

  /// The element as a polynomial of the free algebra.
  NCPoly to_ncpoly(const FieldSpec& field, bool unital) const;

  friend bool operator==(const SSElement&, const SSElement&) = default;

 private:
  std::vector<BeginFactor> beginning_;
  std::vector<EndPair> end_;
};

/// Text such as "x3*[x1,x2]*x1" (zero beta exponents omitted); parses back
/// with parse_expr.
std::string to_string(const SSElement& u);

/// -1, 0, +1 as u <, =, > v in Venkova's order.
int venkova_compare(const SSElement& u, const SSElement& v);

/// Map ordering with the Venkova-greatest element first.
struct VenkovaDescending {
  bool operator()(const SSElement& a, const SSElement& b) const {
    return venkova_compare(a, b) > 0;
  }
};

/// f = scalar + sum terms[u] * u  (mod T^(3)); scalar only in unital context.
struct NormalForm {
  FieldSpec field;
  bool unital = false;
  Scalar scalar;
  std::map<SSElement, Scalar, VenkovaDescending> terms;

  bool is_zero() const { return scalar.is_zero() && terms.empty(); }
  void add(const SSElement& u, const Scalar& c);
  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.field == b.field && a.unital == b.unital &&
           a.scalar == b.scalar && a.terms == b.terms;
  }
};

NormalForm nf_t3(const NCPoly& f);
/// The polynomial scalar + sum c_u * u.
NCPoly reassemble(const NormalForm& nf);
/// "0", or terms in Venkova-descending order, e.g. "x1*x2 - [x1,x2]".
std::string to_string(const NormalForm& nf);

/// The single SS element u with nf_t3(f) = u, if there is one.
std::optional<SSElement> as_ss_element(const NCPoly& f);

/// BSS membership (exponent caps (m+1)/2 and, for p > 2, p - 1).
bool in_bss(const SSElement& u, int m, std::uint64_t p);
/// deg(u) <= m, exponents <= (m+1)/2 and deg(u) - lend(u) = (m+1)/2.
bool is_extremal(const SSElement& u, int m);
/// Every u in BSS(m) over x_1..x_window with deg(u) <= min(d, m), in
/// Venkova-descending order.
std::vector<SSElement> enumerate_bss(int m, std::uint64_t p, std::uint32_t d,
                                     Var window);
/// Every SS element over x_1..x_window of degree <= d, Venkova-descending.
std::vector<SSElement> enumerate_ss(Var window, std::uint32_t d);

bool in_R1(const SSElement& u, std::uint64_t p);
/// M'_{t,n}: lbeg > 0, x_t in the beginning, variables exactly x_1..x_n and,
/// for p > 2, deg_{x_t} u not divisible by p.
bool in_M_prime(const SSElement& u, Var t, Var n, std::uint64_t p);
/// M_{t,n}: x_t is the last beginning variable, variables exactly x_1..x_n,
/// exponent caps (m+1)/2 and, for p > 2, p - 1.
bool in_M(const SSElement& u, Var t, Var n, int m, std::uint64_t p);

/// Sum over s and 2s-subsets J of {1..n} of (-1)^s 2^(n-1-s) P_n(J) Q(J).
NCPoly circle_expansion(std::uint32_t n, const FieldSpec& field,
                        bool unital = false);

}  // namespace gpi
