#pragma once

#include <random>
#include <vector>

#include "gpi/canonical.hpp"
#include "gpi/free_algebra.hpp"
#include "gpi/grassmann.hpp"

namespace gen {

using namespace gpi;

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20240917);
  return r;
}

inline long small_int(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Scalar scalar(const FieldSpec& f, bool nonzero = false) {
  if (f.is_rational() && small_int(0, 3) == 0) {
    long d = small_int(1, 4);
    long n = small_int(-6, 6);
    if (nonzero && n == 0) n = 1;
    return Scalar(f, mpq_class(n, d));
  }
  long hi = f.is_rational() ? 6 : static_cast<long>(f.characteristic()) - 1;
  long v = small_int(nonzero ? 1 : 0, hi);
  return Scalar(f, small_int(0, 1) ? v : -v);
}

inline GElem element(const AlgebraSpec& spec, int max_terms = 5) {
  GElem g(spec);
  int n = static_cast<int>(small_int(0, max_terms));
  for (int i = 0; i < n; ++i) {
    Subset s = static_cast<Subset>(small_int(spec.unital() ? 0 : 1,
                                             static_cast<long>(spec.full_mask())));
    g.add_term(s, scalar(spec.field()));
  }
  return g;
}

inline Word word(Var vars, std::size_t max_len, std::size_t min_len = 1) {
  Word w(static_cast<std::size_t>(small_int(static_cast<long>(min_len),
                                            static_cast<long>(max_len))));
  for (auto& v : w) v = static_cast<Var>(small_int(1, vars));
  return w;
}

inline NCPoly poly(const FieldSpec& f, bool unital, Var vars, std::size_t max_len,
                   int max_terms = 4) {
  NCPoly p(f, unital);
  int n = static_cast<int>(small_int(1, max_terms));
  for (int i = 0; i < n; ++i) p.add_term(word(vars, max_len), scalar(f));
  return p;
}

/// Multihomogeneous: random rearrangements of one random word.
inline NCPoly homogeneous_poly(const FieldSpec& f, bool unital, Var vars,
                               std::size_t max_len, int max_terms = 4) {
  Word base = word(vars, max_len);
  NCPoly p(f, unital);
  int n = static_cast<int>(small_int(1, max_terms));
  for (int i = 0; i < n; ++i) {
    Word w = base;
    std::shuffle(w.begin(), w.end(), rng());
    p.add_term(w, scalar(f));
  }
  return p;
}

inline SSElement ss_element(Var window, std::uint32_t max_exp = 2) {
  for (;;) {
    std::vector<Var> order;
    for (Var v = 1; v <= window; ++v)
      if (small_int(0, 1)) order.push_back(v);
    if (order.empty()) continue;
    std::vector<BeginFactor> beg;
    std::vector<Var> rest;
    for (Var v : order) {
      if (small_int(0, 1))
        beg.push_back({v, static_cast<std::uint32_t>(small_int(1, max_exp))});
      else
        rest.push_back(v);
    }
    if (rest.size() % 2) {
      beg.push_back({rest.back(), 1});
      rest.pop_back();
      std::sort(beg.begin(), beg.end(),
                [](const BeginFactor& a, const BeginFactor& b) { return a.var < b.var; });
    }
    std::vector<EndPair> end;
    for (std::size_t i = 0; i < rest.size(); i += 2)
      end.push_back({rest[i], rest[i + 1],
                     static_cast<std::uint32_t>(small_int(0, max_exp - 1)),
                     static_cast<std::uint32_t>(small_int(0, max_exp - 1))});
    return SSElement(beg, end);
  }
}

/// Reference evaluation: each word multiplied out independently.
template <class C>
GrassmannElement<C> naive_evaluate(const NCPoly& f, const Evaluation<C>& s,
                                   const AlgebraSpec& spec) {
  GrassmannElement<C> out(spec);
  for (const auto& [w, c] : f.terms()) {
    if (w.empty()) {
      out += GrassmannElement<C>::one(spec).scaled(C(c));
      continue;
    }
    GrassmannElement<C> acc = s.at(w[0]);
    for (std::size_t k = 1; k < w.size(); ++k) acc = acc * s.at(w[k]);
    out += acc.scaled(C(c));
  }
  return out;
}

inline bool vanishes_on_generic(const NCPoly& f, const AlgebraSpec& spec) {
  IndeterminatePool pool;
  Evaluation<CoeffPoly> s;
  for (Var v : f.variables()) s.emplace(v, generic_element(spec, pool));
  return naive_evaluate(f.in_context(spec.unital()), s, spec).is_zero();
}

}  // namespace gen
