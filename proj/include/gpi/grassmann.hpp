#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gpi/coefficients.hpp"

namespace gpi {

/// G(m) when unital, G_0(m) otherwise, over `field`.
class AlgebraSpec {
 public:
  static constexpr int kMaxGenerators = 62;

  AlgebraSpec(int m, bool unital, FieldSpec field = FieldSpec{});

  int m() const noexcept { return m_; }
  bool unital() const noexcept { return unital_; }
  const FieldSpec& field() const noexcept { return field_; }
  std::uint64_t full_mask() const noexcept {
    return (std::uint64_t{1} << m_) - 1;
  }

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;

 private:
  int m_;
  bool unital_;
  FieldSpec field_;
};

std::string to_string(const AlgebraSpec& spec);  // "G(3) over Q", "G0(4) over F_3"

/// Basis subset of {1..m}: bit i-1 stands for e_i.
using Subset = std::uint64_t;

inline Subset subset_of(std::initializer_list<int> generators) {
  Subset s = 0;
  for (int i : generators) s |= Subset{1} << (i - 1);
  return s;
}

/// Sign of e_S * e_T relative to e_{S u T} for disjoint S, T:
/// (-1)^#{(s,t) in S x T : s > t}.
inline int basis_sign(Subset s, Subset t) noexcept {
  unsigned parity = 0;
  while (t) {
    int bit = std::countr_zero(t);
    t &= t - 1;
    parity += std::popcount(s >> bit >> 1);
  }
  return (parity & 1) ? -1 : 1;
}

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Scalar> {
  static Scalar zero(const FieldSpec& f) { return Scalar::zero(f); }
  static Scalar one(const FieldSpec& f) { return Scalar::one(f); }
};

template <>
struct CoeffTraits<CoeffPoly> {
  static CoeffPoly zero(const FieldSpec& f) { return CoeffPoly(f); }
  static CoeffPoly one(const FieldSpec& f) {
    return CoeffPoly(Scalar::one(f));
  }
};

/// Element of G(m) / G_0(m) with coefficients C (Scalar or CoeffPoly).
/// Invariants: no stored zero coefficient, every subset inside {1..m}, no
/// unit term when the algebra is nonunitary.
template <class C>
class GrassmannElement {
 public:
  using Terms = std::map<Subset, C>;

  explicit GrassmannElement(const AlgebraSpec& spec) : spec_(spec) {}

  static GrassmannElement zero(const AlgebraSpec& spec) {
    return GrassmannElement(spec);
  }
  static GrassmannElement one(const AlgebraSpec& spec);
  static GrassmannElement generator(const AlgebraSpec& spec, int i);
  static GrassmannElement basis(const AlgebraSpec& spec, Subset s,
                                const C& coeff);

  const AlgebraSpec& spec() const noexcept { return spec_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of e_S (zero when absent).
  C coefficient(Subset s) const;

  void add_term(Subset s, const C& coeff);

  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  GrassmannElement operator-() const;
  GrassmannElement scaled(const C& factor) const;

  friend GrassmannElement operator+(GrassmannElement a,
                                    const GrassmannElement& b) {
    return a += b;
  }
  friend GrassmannElement operator-(GrassmannElement a,
                                    const GrassmannElement& b) {
    return a -= b;
  }
  friend GrassmannElement operator*(const GrassmannElement& a,
                                    const GrassmannElement& b) {
    return g_mul(a, b);
  }
  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
    return a.spec_ == b.spec_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const GrassmannElement& o) const;

  AlgebraSpec spec_;
  Terms terms_;
};

using GElem = GrassmannElement<Scalar>;
using GenericElem = GrassmannElement<CoeffPoly>;

template <class C>
struct ParityPair {
  GrassmannElement<C> even;  // scalar part + C-part
  GrassmannElement<C> odd;   // H-part
};

template <class C>
GrassmannElement<C> g_mul(const GrassmannElement<C>& a,
                          const GrassmannElement<C>& b);
/// n-fold product; n = 0 yields 1 and is rejected for nonunitary algebras.
template <class C>
GrassmannElement<C> g_power(const GrassmannElement<C>& a, std::uint64_t n);
template <class C>
GrassmannElement<C> g_commutator(const GrassmannElement<C>& a,
                                 const GrassmannElement<C>& b);
template <class C>
GrassmannElement<C> g_circle(const GrassmannElement<C>& a,
                             const GrassmannElement<C>& b);
template <class C>
ParityPair<C> parity_split(const GrassmannElement<C>& a);
/// Union of the subsets carrying nonzero coefficients.
template <class C>
Subset support(const GrassmannElement<C>& a);
/// True iff `a` commutes with e_1..e_m. With CoeffPoly coefficients this is
/// centrality as an identity in the indeterminates.
template <class C>
bool is_central_element(const GrassmannElement<C>& a);

/// Every basis coefficient (2^m, or 2^m - 1 without the unit) is a fresh
/// indeterminate t_{base + S}, where base is reserved from `pool`.
GenericElem generic_element(const AlgebraSpec& spec, IndeterminatePool& pool);

/// Scalar element viewed with constant CoeffPoly coefficients.
GenericElem to_generic(const GElem& a);

std::vector<int> subset_indices(Subset s);  // 1-based, increasing
std::string subset_to_string(Subset s);     // "1" or "e{1,3}"

/// Canonical text: terms by (subset size, index list); "1" for the unit.
std::string to_string(const GElem& a);
std::string to_string(const GenericElem& a);
GElem parse_grassmann(const std::string& text, const AlgebraSpec& spec);

extern template class GrassmannElement<Scalar>;
extern template class GrassmannElement<CoeffPoly>;

}  // namespace gpi
