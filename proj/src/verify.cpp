#include "gpi/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "gpi/canonical.hpp"
#include "gpi/catalog.hpp"
#include "gpi/decide.hpp"
#include "gpi/parse.hpp"

namespace gpi {

namespace {

using Checks = std::vector<CheckResult>;
using Suite = std::function<void(const VerifyOptions&, Checks&)>;

bool wants_m(const VerifyOptions& o, int m) { return !o.m || *o.m == m; }
bool wants_p(const VerifyOptions& o, std::uint64_t p) { return !o.p || *o.p == p; }

FieldSpec field_of(std::uint64_t p) { return p ? FieldSpec(p) : FieldSpec{}; }

std::string params(int m, std::uint64_t p, bool unital) {
  return std::string(unital ? "G(" : "G0(") + std::to_string(m) + "), p=" +
         std::to_string(p);
}

NCPoly X(Var i, bool unital = false, const FieldSpec& f = FieldSpec{}) {
  return NCPoly::variable(f, unital, i);
}

// Evaluation at full generic elements of `spec` (2^m indeterminates each).
bool vanishes_generically(const NCPoly& f, const AlgebraSpec& spec) {
  IndeterminatePool pool;
  Evaluation<CoeffPoly> s;
  for (Var v : f.variables()) s.emplace(v, generic_element(spec, pool));
  return evaluate(f.in_context(spec.unital()), s, spec).is_zero();
}

// ---------------------------------------------------------------- handy

void suite_handy(const VerifyOptions&, Checks& out) {
  const FieldSpec Q;
  const AlgebraSpec g3(3, true, Q);
  NCPoly u = X(1), v = X(2), w = X(3), x = X(4);
  auto c = [](const NCPoly& a, const NCPoly& b) { return nc_commutator(a, b); };

  std::vector<std::pair<std::string, NCPoly>> cases;
  cases.emplace_back("(i) [u,vw] = [u,v]w + v[u,w]",
                     c(u, v * w) - (c(u, v) * w + v * c(u, w)));
  cases.emplace_back("(ii) [u,vw] = [u,v]w + [u,w]v + [v,[u,w]]",
                     c(u, v * w) - (c(u, v) * w + c(u, w) * v + c(v, c(u, w))));
  {
    std::vector<NCPoly> vs{X(2), X(3), X(4)};
    NCPoly prod = vs[0] * vs[1] * vs[2];
    NCPoly rhs(Q, false);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      NCPoly term = c(u, vs[i]);
      for (std::size_t j = 0; j < vs.size(); ++j)
        if (j != i) term = term * vs[j];
      rhs += term;
    }
    cases.emplace_back("(iii) [u,v1v2v3] = sum [u,vi] prod_{j!=i} vj",
                       c(u, prod) - rhs);
  }
  cases.emplace_back("(iv) [u,v][w,x] = -[u,w][v,x]",
                     c(u, v) * c(w, x) + c(u, w) * c(v, x));
  cases.emplace_back("(v) [u,v][u,w] = 0", c(u, v) * c(u, w));
  cases.emplace_back("(vi) [u,v]uw = [u,v]wu", c(u, v) * u * w - c(u, v) * w * u);
  {
    NCPoly vii(Q, false);
    for (std::uint64_t n : {2u, 3u}) {
      NCPoly lhs = nc_power(u, n) * nc_power(v, n);
      Scalar binom(Q, static_cast<long>(n * (n - 1) / 2));
      NCPoly rhs = nc_power(u * v, n) +
                   (c(u, v) * nc_power(u, n - 1) * nc_power(v, n - 1)).scaled(binom);
      // separate variables per n keep the two differences independent
      NCSubstitution shift{{1, X(2 * n + 1)}, {2, X(2 * n + 2)}};
      vii += substitute(lhs - rhs, shift);
    }
    cases.emplace_back("(vii) x1^n x2^n = (x1x2)^n + C(n,2)[x1,x2]x1^(n-1)x2^(n-1), n = 2, 3",
                       vii);
  }
  for (const auto& [name, diff] : cases) {
    bool nf_zero = nf_t3(diff).is_zero();
    bool gen_zero = vanishes_generically(diff, g3);
    out.push_back({"handy", name, nf_zero && gen_zero,
                   std::string("nf_t3 ") + (nf_zero ? "0" : "nonzero") +
                       ", generic G(3) " + (gen_zero ? "0" : "nonzero")});
  }
}

// --------------------------------------------------------------- useful

GElem random_element(const AlgebraSpec& spec, std::mt19937_64& rng,
                     int parity = -1) {
  GElem g(spec);
  const std::uint64_t p = spec.field().characteristic();
  for (Subset s = spec.unital() ? 0 : 1; s <= spec.full_mask(); ++s) {
    if (parity >= 0 && std::popcount(s) % 2 != parity) continue;
    if (rng() % 2) continue;
    long c = static_cast<long>(rng() % (p ? p - 1 : 7)) + 1;
    g.add_term(s, Scalar(spec.field(), (rng() % 2) ? c : -c));
  }
  return g;
}

void suite_useful(const VerifyOptions& o, Checks& out) {
  std::mt19937_64 rng(o.seed);
  for (int m : {3, 4}) {
    if (!wants_m(o, m)) continue;
    for (std::uint64_t p : {3u, 5u}) {
      if (!wants_p(o, p)) continue;
      const AlgebraSpec spec(m, false, FieldSpec(p));
      const std::string where = params(m, p, false) + ", 100 samples";
      bool ii = true, iii = true, iv = true, v = true, vi = true;
      for (int k = 0; k < 100; ++k) {
        GElem h = random_element(spec, rng, 1), u = random_element(spec, rng, 1);
        ii &= (h * u == -(u * h)) && (h * h).is_zero();

        GElem g = random_element(spec, rng);
        auto [c, hh] = parity_split(g);
        for (std::uint64_t n = 1; n <= 6; ++n) {
          GElem rhs = n == 1 ? c + hh
                             : g_power(c, n) + (g_power(c, n - 1) * hh)
                                                   .scaled(Scalar(spec.field(), static_cast<long>(n)));
          iii &= g_power(g, n) == rhs;
        }
        iv &= g_power(g, p).is_zero();

        GElem g1 = random_element(spec, rng), g2 = random_element(spec, rng);
        auto s1 = parity_split(g1);
        auto s2 = parity_split(g2);
        for (std::uint64_t m1 = 0; m1 <= 2; ++m1)
          for (std::uint64_t m2 = 0; m2 <= 2; ++m2) {
            GElem lhs = g_commutator(g1, g2);
            GElem rhs = s1.odd * s2.odd;
            if (m1) {
              lhs = lhs * g_power(g1, m1);
              rhs = g_power(s1.even, m1) * rhs;
            }
            if (m2) {
              lhs = lhs * g_power(g2, m2);
              rhs = (m1 ? g_power(s1.even, m1) * g_power(s2.even, m2) * (s1.odd * s2.odd)
                        : g_power(s2.even, m2) * (s1.odd * s2.odd));
            }
            v &= lhs == rhs.scaled(Scalar(spec.field(), 2L));
          }

        GElem w = random_element(spec, rng);
        if (!w.is_zero()) vi &= g_power(w, w.terms().size() + 1).is_zero();
      }
      out.push_back({"useful", "(ii) hu = -uh, h^2 = 0 for odd h, u; " + where, ii, ""});
      out.push_back({"useful", "(iii) g^n = c^n + n c^(n-1) h, n <= 6; " + where, iii, ""});
      out.push_back({"useful", "(iv) g^p = 0; " + where, iv, ""});
      out.push_back({"useful",
                     "(v) [g1,g2]g1^m1 g2^m2 = 2 c1^m1 c2^m2 h1 h2, m_i <= 2; " + where,
                     v, ""});
      out.push_back({"useful", "(vi) u^(n+1) = 0 with n basis terms; " + where, vi, ""});
    }
  }
}

// --------------------------------------------------------------- centre

// Rank over Q of the map a -> ([a,e_1], ..., [a,e_m]) on the basis.
std::size_t commutator_rank(const AlgebraSpec& spec) {
  std::vector<Subset> basis;
  for (Subset s = spec.unital() ? 0 : 1; s <= spec.full_mask(); ++s) basis.push_back(s);
  // rows: (generator i, subset T) ; columns: basis index
  std::map<std::pair<int, Subset>, std::map<std::size_t, Scalar>> rows;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    GElem b = GElem::basis(spec, basis[k], Scalar::one(spec.field()));
    for (int i = 1; i <= spec.m(); ++i) {
      GElem comm = g_commutator(b, GElem::generator(spec, i));
      for (const auto& [t, c] : comm.terms()) rows[{i, t}][k] = c;
    }
  }
  std::vector<std::map<std::size_t, Scalar>> pivots(basis.size());
  std::vector<bool> used(basis.size(), false);
  std::size_t rank = 0;
  for (auto& [key, row] : rows) {
    auto r = row;
    while (!r.empty()) {
      std::size_t col = r.begin()->first;
      if (!used[col]) {
        Scalar inv = r.begin()->second.inverse();
        for (auto& [k, x] : r) x *= inv;
        pivots[col] = r;
        used[col] = true;
        ++rank;
        break;
      }
      Scalar f = r.begin()->second;
      for (const auto& [k, x] : pivots[col]) {
        r[k] -= f * x;
        if (r[k].is_zero()) r.erase(k);
      }
    }
  }
  return rank;
}

void suite_centre(const VerifyOptions& o, Checks& out) {
  for (int m = 2; m <= 5; ++m) {
    if (!wants_m(o, m)) continue;
    for (bool unital : {true, false}) {
      const AlgebraSpec spec(m, unital, FieldSpec{});
      bool agree = true;
      std::size_t central = 0;
      for (Subset s = unital ? 0 : 1; s <= spec.full_mask(); ++s) {
        GElem b = GElem::basis(spec, s, Scalar::one(spec.field()));
        bool brute = true;
        for (Subset t = unital ? 0 : 1; t <= spec.full_mask(); ++t) {
          GElem o2 = GElem::basis(spec, t, Scalar::one(spec.field()));
          if (!(b * o2 == o2 * b)) brute = false;
        }
        agree &= brute == is_central_element(b);
        central += brute;
      }
      std::size_t even = 0;
      for (Subset s = unital ? 0 : 1; s <= spec.full_mask(); ++s)
        even += std::popcount(s) % 2 == 0;
      std::size_t expected = even + (m % 2 == 1 ? 1 : 0);
      std::size_t dim = (spec.full_mask() + (unital ? 1 : 0)) - commutator_rank(spec);
      std::ostringstream d;
      d << "centre dimension " << dim << ", expected " << expected
        << ", central basis elements " << central;
      out.push_back({"centre", "is_central_element vs brute force, " + params(m, 0, unital),
                     agree && dim == expected && central == expected, d.str()});
    }
  }
}

// ---------------------------------------------------------- t-unitary

void suite_t_unitary(const VerifyOptions& o, Checks& out) {
  for (int m = 2; m <= 5; ++m) {
    if (!wants_m(o, m)) continue;
    for (std::uint64_t p : {0u, 3u, 5u}) {
      if (!wants_p(o, p)) continue;
      const FieldSpec f = field_of(p);
      const AlgebraSpec spec(m, true, f);
      const std::uint32_t b = static_cast<std::uint32_t>(m / 2 + 1);
      auto r = is_identity(h_poly(b, f, true), spec, Strategy::Generic);
      auto r3 = is_identity(nc_commutator({X(1, true, f), X(2, true, f), X(3, true, f)}), spec);
      out.push_back({"t-unitary", "h_" + std::to_string(b) + " and [x1,x2,x3] identities of " +
                                      params(m, p, true),
                     r.identity && r3.identity, "generic strategy"});
      Evaluation<Scalar> at;
      Subset all = 0;
      for (Var i = 1; i <= 2 * (b - 1); ++i) {
        at.emplace(i, GElem::generator(spec, static_cast<int>(i)));
        all |= Subset{1} << (i - 1);
      }
      GElem value = evaluate(h_poly(b - 1, f, true), at, spec);
      GElem expected = GElem::basis(spec, all, Scalar(f, 2L).pow(b - 1));
      out.push_back({"t-unitary",
                     "h_" + std::to_string(b - 1) + "(e1,...) = 2^" + std::to_string(b - 1) +
                         " e1...e" + std::to_string(2 * (b - 1)) + " in " + params(m, p, true),
                     value == expected && !value.is_zero(), "value " + to_string(value)});
    }
  }
}

// ------------------------------------------------------- t-nonunitary

void suite_t_nonunitary(const VerifyOptions& o, Checks& out) {
  std::vector<std::pair<int, std::uint64_t>> cases;
  for (int m = 2; m <= 6; ++m)
    for (std::uint64_t p : {0u, 3u, 5u}) cases.emplace_back(m, p);
  cases.emplace_back(9, 3);
  for (const auto& [m, p] : cases) {
    if (!wants_m(o, m) || !wants_p(o, p)) continue;
    const AlgebraSpec spec(m, false, field_of(p));
    GeneratorSet gens = t_ideal_generators(spec);
    bool ok = true;
    std::string detail;
    for (const auto& g : gens.elements) {
      auto r = is_identity(g.poly, spec);
      ok &= r.identity;
      detail += (detail.empty() ? "" : ", ") + g.label + ": " +
                (r.identity ? "identity" : "NOT identity") + " (" + to_string(r.strategy) + ")";
    }
    out.push_back({"t-nonunitary", "T-ideal generators of " + params(m, p, false), ok, detail});
  }
}

// --------------------------------------------------- circle-expansion

void suite_circle(const VerifyOptions& o, Checks& out) {
  std::vector<std::uint32_t> ns{1, 2, 3, 4, 5};
  if (o.n) ns = {*o.n};
  for (std::uint64_t p : {0u, 3u}) {
    if (!wants_p(o, p)) continue;
    const FieldSpec f = field_of(p);
    for (std::uint32_t n : ns) {
      NCPoly diff = circle_chain(n, f) - circle_expansion(n, f);
      bool zero = nf_t3(diff).is_zero();
      out.push_back({"circle-expansion",
                     "nf_t3(circle_chain(" + std::to_string(n) + ") - closed form) = 0, p=" +
                         std::to_string(p),
                     zero, ""});
    }
  }
}

// ------------------------------------------------------------------ cp

void suite_cp(const VerifyOptions& o, Checks& out) {
  for (bool unital : {true, false}) {
    for (int m = 2; m <= (unital ? 5 : 6); ++m) {
      if (!wants_m(o, m)) continue;
      for (std::uint64_t p : {0u, 3u}) {
        if (!wants_p(o, p)) continue;
        const FieldSpec f = field_of(p);
        const AlgebraSpec spec(m, unital, f);
        GeneratorSet gens = cp_generators(spec);
        bool ok = true;
        std::string detail;
        for (const auto& g : gens.elements) {
          Classification c = classify(g.poly, spec);
          ok &= c.verdict != Verdict::Noncentral;
          detail += (detail.empty() ? "" : ", ") + g.label + ": " + to_string(c.verdict);
        }
        out.push_back({"cp", "generators central-or-identity on " + params(m, p, unital) +
                                 (gens.infinite_field_semantics ? " (infinite-field semantics)" : ""),
                       ok, detail});

        Evaluation<Scalar> at{{1, GElem::generator(spec, 1)}, {2, GElem::generator(spec, 2)}};
        GElem value = evaluate(nc_commutator(X(1, unital, f), X(2, unital, f)), at, spec);
        bool strict = classify(nc_commutator(X(1, unital, f), X(2, unital, f)), spec).verdict ==
                      Verdict::Central;
        out.push_back({"cp", "[x1,x2] strictly central on " + params(m, p, unital) +
                                 ", [e1,e2] = 2e1e2",
                       strict && value == GElem::basis(spec, subset_of({1, 2}), Scalar(f, 2L)),
                       "value " + to_string(value)});

        if (!unital && m % 2 == 1) {
          const std::uint32_t k = static_cast<std::uint32_t>((m + 1) / 2);
          NCPoly chain = circle_chain(k, f);
          Evaluation<Scalar> w;
          for (Var i = 1; i < k; ++i)
            w.emplace(i, GElem::basis(spec, subset_of({static_cast<int>(2 * i - 1),
                                                       static_cast<int>(2 * i)}),
                                      Scalar::one(f)));
          w.emplace(k, GElem::generator(spec, m));
          GElem cv = evaluate(chain, w, spec);
          GElem expected = GElem::basis(spec, spec.full_mask(), Scalar(f, 2L).pow(k - 1));
          bool central = classify(chain, spec).verdict == Verdict::Central;
          out.push_back({"cp", "circle chain of length " + std::to_string(k) +
                                   " strictly central on " + params(m, p, false),
                         central && cv == expected, "value " + to_string(cv)});
        }
      }
    }
  }
}

// ---------------------------------------------------------- fin-unitary

void suite_fin_unitary(const VerifyOptions& o, Checks& out) {
  const std::vector<SSElement> elements = enumerate_ss(5, 4);
  for (int m = 2; m <= 5; ++m) {
    if (!wants_m(o, m)) continue;
    for (std::uint64_t p : {0u, 3u}) {
      if (!wants_p(o, p)) continue;
      const FieldSpec f = field_of(p);
      const AlgebraSpec spec(m, true, f);
      std::size_t mismatches = 0, noncentral = 0, witnessed = 0;
      std::string first_bad;
      for (const auto& u : elements) {
        bool exp_ok = p == 0 || std::any_of(u.beginning().begin(), u.beginning().end(),
                                            [p](const BeginFactor& b) { return b.exponent % p; });
        bool predicted = u.lbeg() >= 1 && 2 * static_cast<int>(u.lend()) <= m - 2 && exp_ok;
        Classification c = classify(u.to_ncpoly(f, true), spec);
        bool actual = c.verdict == Verdict::Noncentral;
        noncentral += actual;
        if (predicted) {
          auto w = find_noncentral_witness(u, spec);
          if (w.outcome == NoncentralAttempt::Outcome::Found) ++witnessed;
          else actual = false;  // the construction must succeed as well
        }
        if (actual != predicted) {
          ++mismatches;
          if (first_bad.empty()) first_bad = to_string(u);
        }
      }
      std::ostringstream d;
      d << elements.size() << " SS elements, " << noncentral << " noncentral, "
        << witnessed << " 1+e witnesses";
      if (mismatches) d << ", " << mismatches << " mismatches (first " << first_bad << ")";
      out.push_back({"fin-unitary", "noncentral <=> 2 lend <= m-2 (and p-condition) on " +
                                        params(m, p, true),
                     mismatches == 0, d.str()});
    }
  }
}

// -------------------------------------------------------------- venkova

struct IvDecision {
  bool by_iv = false;
  Var j = 0;
};

IvDecision decided_by_iv(const SSElement& u, const SSElement& v) {
  if (u.degree() != v.degree() || u.lend() != v.lend() ||
      u.multidegree() != v.multidegree())
    return {};
  for (const auto& [x, d] : u.multidegree()) {
    bool bu = u.in_beginning(x), bv = v.in_beginning(x);
    if (bu != bv) return {!bu, x};
  }
  return {};
}

void suite_venkova(const VerifyOptions& o, Checks& out) {
  std::vector<SSElement> all;
  std::size_t pairs = 0;
  bool tri = true, remark = true;
  std::size_t iv_pairs = 0;
  for (int m = 1; m <= 4; ++m) {
    if (!wants_m(o, m)) continue;
    auto list = enumerate_bss(m, 0, 4, 4);
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = 0; j < list.size(); ++j) {
        ++pairs;
        int a = venkova_compare(list[i], list[j]);
        int b = venkova_compare(list[j], list[i]);
        tri &= (a == -b) && ((a == 0) == (list[i] == list[j]));
        if (i + 1 < list.size() && j == i + 1) tri &= a > 0;  // sorted descending
        IvDecision d = decided_by_iv(list[i], list[j]);
        if (d.by_iv && a > 0) {
          ++iv_pairs;
          bool found = false;
          for (const auto& [x, deg] : list[i].multidegree())
            if (x > d.j && list[i].in_beginning(x) && list[j].in_end(x)) found = true;
          remark &= found;
        }
      }
    for (auto& u : list)
      if (std::find(all.begin(), all.end(), u) == all.end()) all.push_back(u);
  }
  std::mt19937_64 rng(o.seed + 9);
  bool trans = true;
  const std::size_t samples = 20000;
  for (std::size_t k = 0; k < samples && !all.empty(); ++k) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const auto& c = all[rng() % all.size()];
    if (venkova_compare(a, b) > 0 && venkova_compare(b, c) > 0)
      trans &= venkova_compare(a, c) > 0;
    if (venkova_compare(a, b) >= 0 && venkova_compare(b, c) >= 0)
      trans &= venkova_compare(a, c) >= 0;
  }
  // every triple of the smallest list exhaustively
  auto small = enumerate_bss(3, 0, 4, 3);
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small)
        if (venkova_compare(a, b) > 0 && venkova_compare(b, c) > 0)
          trans &= venkova_compare(a, c) > 0;
  out.push_back({"venkova", "trichotomy and antisymmetry on enumerate_bss(m<=4, d<=4)", tri,
                 std::to_string(pairs) + " ordered pairs"});
  out.push_back({"venkova", "transitivity", trans,
                 std::to_string(samples) + " sampled triples over " + std::to_string(all.size()) +
                     " elements, plus all triples of BSS(3) over x1..x3"});
  out.push_back({"venkova", "condition (iv) implies some k > j in beginning(u) and end(v)", remark,
                 std::to_string(iv_pairs) + " pairs decided by (iv)"});
}

// --------------------------------------------------------- theorem-3.1

// All monomial substitution instances of `g` whose multidegree is `target`.
void monomial_instances(const NCPoly& g, const Multidegree& target,
                        const std::vector<Var>& vars, std::vector<NCPoly>& out) {
  const std::vector<Var> zs = g.variables();
  if (!g.is_multihomogeneous()) return;
  const Multidegree gdeg = multidegree(g.terms().begin()->first);
  std::uint32_t tdeg = 0;
  for (const auto& [v, d] : target) tdeg += d;
  std::vector<Word> words;
  std::function<void(Word&)> grow = [&](Word& w) {
    if (!w.empty()) words.push_back(w);
    if (w.size() >= tdeg) return;
    for (Var v : vars) {
      w.push_back(v);
      grow(w);
      w.pop_back();
    }
  };
  Word empty;
  grow(empty);
  NCSubstitution s;
  Multidegree left = target;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == zs.size()) {
      for (const auto& [v, d] : left)
        if (d) return;
      NCPoly inst = substitute(g, s);
      if (!inst.is_zero()) out.push_back(inst);
      return;
    }
    const std::uint32_t times = gdeg.at(zs[j]);
    for (const Word& w : words) {
      Multidegree md = multidegree(w);
      bool fits = true;
      for (const auto& [v, d] : md) fits &= left[v] >= d * times;
      if (!fits) continue;
      for (const auto& [v, d] : md) left[v] -= d * times;
      s[zs[j]] = NCPoly::monomial(g.field(), g.unital(), w, Scalar::one(g.field()));
      rec(j + 1);
      for (const auto& [v, d] : md) left[v] += d * times;
    }
    s.erase(zs[j]);
  };
  rec(0);
}

void suite_theorem31(const VerifyOptions& o, Checks& out) {
  std::mt19937_64 rng(o.seed + 31);
  const FieldSpec Q;
  for (int m : {3, 4}) {
    if (!wants_m(o, m) || !wants_p(o, 0)) continue;
    const AlgebraSpec spec(m, false, Q);
    GeneratorSet gens = cp_generators(spec);
    std::vector<Multidegree> shapes{{{1, 1}, {2, 1}},
                                    {{1, 2}, {2, 1}},
                                    {{1, 1}, {2, 1}, {3, 1}},
                                    {{1, 1}, {2, 2}},
                                    {{1, 2}, {2, 1}, {3, 1}},
                                    {{1, 1}, {2, 1}, {3, 2}},
                                    {{1, 2}, {2, 2}},
                                    {{1, 1}, {2, 1}, {3, 1}, {4, 1}}};
    std::size_t built = 0, central_ok = 0, recovered = 0;
    std::string detail;
    for (std::size_t k = 0; built < 10 && k < 200; ++k) {
      const Multidegree& shape = shapes[k % shapes.size()];
      std::vector<Var> vars;
      for (const auto& [v, d] : shape) vars.push_back(v);
      std::vector<NCPoly> pool;
      for (const auto& g : gens.elements) monomial_instances(g.poly, shape, vars, pool);
      if (pool.empty()) continue;
      NCPoly f(Q, false);
      for (int t = 0; t < 3; ++t)
        f += pool[rng() % pool.size()].scaled(Scalar(Q, static_cast<long>(rng() % 5) - 2));
      // plus an element of T^(3) with the same multidegree
      if (vars.size() >= 3 && shape.size() == 3) {
        NCPoly t3 = nc_commutator({X(vars[0]), X(vars[1]), X(vars[2])});
        if (multidegree(t3.terms().begin()->first) == shape) f += t3;
      }
      if (f.is_zero()) continue;
      ++built;
      Verdict v = classify(f, spec).verdict;
      central_ok += v != Verdict::Noncentral;
      MembershipReport r = tspace_member_bounded(f, gens);
      recovered += r.member && r.verified;
    }
    out.push_back({"theorem-3.1", "U(" + std::to_string(m) +
                                      ")-combinations central-or-identity and recovered by "
                                      "bounded membership, p=0",
                   built == 10 && central_ok == 10 && recovered == 10,
                   std::to_string(built) + " built, " + std::to_string(central_ok) +
                       " central-or-identity, " + std::to_string(recovered) + " recovered"});

    auto ss = enumerate_ss(10, 3);
    std::shuffle(ss.begin(), ss.end(), rng);
    std::size_t tested = 0, not_found = 0;
    for (const auto& u : ss) {
      if (tested == 10) break;
      NCPoly f = u.to_ncpoly(Q, false);
      if (classify(f, spec).verdict != Verdict::Noncentral) continue;
      ++tested;
      not_found += !tspace_member_bounded(f, gens).member;
    }
    out.push_back({"theorem-3.1", "noncentral SS elements not found in the CP(G0(" +
                                      std::to_string(m) + ")) slice, p=0",
                   tested == 10 && not_found == 10,
                   std::to_string(not_found) + "/" + std::to_string(tested) +
                       " not found; bounded search is a semidecision, absence within bounds "
                       "is evidence, not proof"});
  }
}

// ------------------------------------------------------------ extremal

void suite_extremal(const VerifyOptions& o, Checks& out) {
  const FieldSpec Q;
  const int m = 3;
  if (!wants_m(o, m) || !wants_p(o, 0)) return;
  {
    NCPoly diff = X(1) * X(2) - nc_circle(X(1), X(2)).scaled(Scalar(Q, mpq_class(1, 2)));
    NormalForm nf = nf_t3(diff);
    bool ok = nf.terms.size() == 1;
    for (const auto& [u, c] : nf.terms)
      ok &= in_bss(u, m, 0) && !is_extremal(u, m) && c == Scalar(Q, mpq_class(1, 2)) &&
            to_string(u) == "[x1,x2]";
    out.push_back({"extremal", "x1x2 - 1/2 (x1 o x2) = 1/2 [x1,x2] mod T^(3), non-extremal", ok,
                   "nf " + to_string(nf)});
  }
  const std::uint32_t k = (m + 1) / 2;
  std::size_t checked = 0;
  bool ok = true;
  std::string bad;
  for (const auto& u : enumerate_bss(m, 0, m, 4)) {
    if (!is_extremal(u, m) || u.lbeg() == 0) continue;
    ++checked;
    // letters of the beginning and the end powers, then one commutator per
    // end pair
    Word letters;
    for (const auto& b : u.beginning()) letters.insert(letters.end(), b.exponent, b.var);
    for (const auto& e : u.end()) {
      letters.insert(letters.end(), e.beta_first, e.first);
      letters.insert(letters.end(), e.beta_second, e.second);
    }
    NCSubstitution s;
    Var z = 1;
    for (Var letter : letters) s[z++] = X(letter);
    for (const auto& e : u.end()) s[z++] = nc_commutator(X(e.first), X(e.second));
    if (z - 1 != k) {
      ok = false;
      bad = to_string(u) + " (substitution length)";
      continue;
    }
    NCPoly chain = substitute(circle_chain(k, Q), s);
    NCPoly diff = u.to_ncpoly(Q, false) - chain.scaled(Scalar(Q, 2L).pow(k - 1).inverse());
    NormalForm nf = nf_t3(diff);
    for (const auto& [v, c] : nf.terms)
      if (is_extremal(v, m) || !in_bss(v, m, 0) || v.lend() <= u.lend()) {
        ok = false;
        bad = to_string(u);
      }
  }
  out.push_back({"extremal", "every extremal element of BSS(3) with nonempty beginning reduces to "
                             "non-extremal BSS(3) elements",
                 ok && checked > 0,
                 std::to_string(checked) + " extremal elements" + (bad.empty() ? "" : ", failed at " + bad)});
}

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> r{
      {"handy", suite_handy},
      {"useful", suite_useful},
      {"centre", suite_centre},
      {"t-unitary", suite_t_unitary},
      {"t-nonunitary", suite_t_nonunitary},
      {"circle-expansion", suite_circle},
      {"cp", suite_cp},
      {"fin-unitary", suite_fin_unitary},
      {"venkova", suite_venkova},
      {"theorem-3.1", suite_theorem31},
      {"extremal", suite_extremal},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

bool has_suite(const std::string& name) {
  return name == "all" ||
         std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& options) {
  if (!has_suite(name)) throw PreconditionError("unknown verification suite '" + name + "'");
  Checks out;
  for (const auto& [n, fn] : registry())
    if (name == "all" || name == n) fn(options, out);
  return out;
}

}  // namespace gpi
