#include "gpi/decide.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace gpi {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Identity: return "identity";
    case Verdict::Central: return "central";
    case Verdict::Noncentral: return "noncentral";
  }
  return "?";
}

std::string to_string(Strategy s) {
  return s == Strategy::Multilinear ? "multilinear" : "generic";
}

namespace {

void check_inputs(const NCPoly& f, const AlgebraSpec& spec) {
  if (spec.field().characteristic() == 2)
    throw OutOfScope("characteristic 2 is out of scope");
  if (!(f.field() == spec.field()))
    throw Mismatch("polynomial over " + to_string(f.field()) +
                   " tested on " + to_string(spec));
  if (f.unital() != spec.unital())
    throw Mismatch(std::string("polynomial from ") +
                   (f.unital() ? "k1<X>" : "k0<X>") + " tested on " +
                   to_string(spec));
}

// Scalar grid 0, 1, -1, 2, -2, ... (all residues once in F_p).
std::vector<Scalar> grid(const FieldSpec& field, std::uint32_t degree) {
  std::vector<Scalar> out;
  const std::uint64_t p = field.characteristic();
  const std::uint64_t want = p ? p : degree + 1;
  out.push_back(Scalar::zero(field));
  for (long k = 1; out.size() < want; ++k) {
    out.push_back(Scalar(field, k));
    if (out.size() < want) out.push_back(Scalar(field, -k));
  }
  return out;
}

// Fixes the indeterminates of P one at a time so that P stays nonzero.
std::optional<std::map<Indeterminate, Scalar>> nonroot(CoeffPoly P) {
  std::map<Indeterminate, Scalar> point;
  for (Indeterminate t : P.indeterminates()) {
    bool fixed = false;
    for (const Scalar& v : grid(P.field(), P.degree_in(t))) {
      CoeffPoly Q = P.substitute({{t, v}});
      if (!Q.is_zero()) {
        P = std::move(Q);
        point.emplace(t, v);
        fixed = true;
        break;
      }
    }
    if (!fixed) return std::nullopt;
  }
  return point;
}

GElem specialize(const GenericElem& g, const std::map<Indeterminate, Scalar>& point) {
  std::map<Indeterminate, Scalar> full = point;
  for (const auto& [s, c] : g.terms())
    for (Indeterminate t : c.indeterminates())
      full.try_emplace(t, Scalar::zero(g.spec().field()));
  GElem out(g.spec());
  for (const auto& [s, c] : g.terms()) out.add_term(s, c.evaluate(full));
  return out;
}

// Turns a symbolic assignment on which `target` does not vanish into a
// scalar one. `keep` lists the variables reported in the witness.
std::optional<Witness> scalar_witness(const NCPoly& target,
                                      const Evaluation<CoeffPoly>& generic,
                                      const AlgebraSpec& spec,
                                      const NCPoly& reported) {
  GenericElem value = evaluate(target, generic, spec);
  if (value.is_zero())
    throw Error("internal: failing pattern evaluates to zero");
  const CoeffPoly& P = value.terms().begin()->second;
  auto point = nonroot(P);
  if (!point) return std::nullopt;
  Evaluation<Scalar> assignment;
  for (const auto& [v, g] : generic) assignment.emplace(v, specialize(g, *point));
  if (evaluate(target, assignment, spec).is_zero())
    throw Error("internal: witness point does not survive");
  Evaluation<Scalar> shown;
  for (Var v : reported.variables()) shown.emplace(v, assignment.at(v));
  for (const auto& [v, g] : assignment)
    if (!shown.count(v)) shown.emplace(v, g);
  return Witness{std::move(shown), evaluate(reported, assignment, spec)};
}

// One slot of a pattern: the basis element a copy or slot is sent to.
struct Slot {
  Var var;
  Subset mask;
};

Evaluation<CoeffPoly> slots_to_generic(const std::vector<Slot>& slots,
                                       const std::vector<Var>& vars,
                                       const AlgebraSpec& spec,
                                       IndeterminatePool& pool) {
  Evaluation<CoeffPoly> out;
  for (Var v : vars) out.emplace(v, GenericElem(spec));
  for (const auto& s : slots)
    out.at(s.var).add_term(s.mask, CoeffPoly::variable(spec.field(), pool.fresh()));
  return out;
}

struct Failure {
  std::vector<Slot> slots;
};

std::optional<Failure> multilinear_failure(const NCPoly& component,
                                           const AlgebraSpec& spec) {
  std::vector<std::pair<Var, Var>> ys;  // (linearized variable, original)
  NCPoly L = component;
  for (Var v : component.variables()) {
    for (Var c : linearization_copies(L, v)) ys.emplace_back(c, v);
    L = multilinearize(L, v);
  }
  if (ys.empty()) {
    if (L.is_zero()) return std::nullopt;
    return Failure{};
  }
  std::sort(ys.begin(), ys.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  std::map<Var, std::size_t> pos;
  for (std::size_t i = 0; i < ys.size(); ++i) pos[ys[i].first] = i;
  std::vector<std::pair<std::vector<std::size_t>, Scalar>> words;
  for (const auto& [w, c] : L.terms()) {
    std::vector<std::size_t> idx;
    for (Var v : w) idx.push_back(pos.at(v));
    words.emplace_back(std::move(idx), c);
  }

  const int m = spec.m();
  std::vector<Subset> masks(ys.size());
  std::set<std::vector<bool>> seen;
  std::optional<Failure> found;

  auto evaluate_leaf = [&]() {
    std::vector<bool> parity(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i)
      parity[i] = std::popcount(masks[i]) % 2 == 1;
    if (!seen.insert(parity).second) return;
    Scalar total = Scalar::zero(spec.field());
    for (const auto& [idx, c] : words) {
      Subset acc = 0;
      int sign = 1;
      for (std::size_t i : idx) {
        sign *= basis_sign(acc, masks[i]);
        acc |= masks[i];
      }
      total += sign > 0 ? c : -c;
    }
    if (!total.is_zero()) {
      Failure f;
      for (std::size_t i = 0; i < ys.size(); ++i)
        f.slots.push_back({ys[i].second, masks[i]});
      found = std::move(f);
    }
  };

  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int next) {
    if (found) return;
    if (i == ys.size()) {
      evaluate_leaf();
      return;
    }
    if (next + 2 <= m) {  // even pair
      masks[i] = (Subset{3} << next);
      rec(i + 1, next + 2);
      if (found) return;
    }
    if (next + 1 <= m) {  // odd generator
      masks[i] = Subset{1} << next;
      rec(i + 1, next + 1);
      if (found) return;
    }
    if (spec.unital()) {
      masks[i] = 0;
      rec(i + 1, next);
    }
  };
  rec(0, 0);
  return found;
}

std::optional<Failure> generic_failure(const NCPoly& component,
                                       const AlgebraSpec& spec) {
  Multidegree md = component.is_zero() ? Multidegree{}
                                       : multidegree(component.terms().begin()->first);
  std::vector<std::pair<Var, std::uint32_t>> vars(md.begin(), md.end());
  const int m = spec.m();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pattern(vars.size());
  std::optional<Failure> found;

  auto try_pattern = [&]() {
    std::vector<Slot> slots;
    int next = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (spec.unital()) slots.push_back({vars[i].first, 0});
      for (std::uint32_t k = 0; k < pattern[i].second; ++k, next += 2)
        slots.push_back({vars[i].first, Subset{3} << next});
      for (std::uint32_t k = 0; k < pattern[i].first; ++k, ++next)
        slots.push_back({vars[i].first, Subset{1} << next});
    }
    IndeterminatePool pool;
    std::vector<Var> vs;
    for (const auto& [v, d] : vars) vs.push_back(v);
    auto generic = slots_to_generic(slots, vs, spec, pool);
    if (!evaluate(component, generic, spec).is_zero()) found = Failure{slots};
  };

  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int cost) {
    if (found) return;
    if (i == vars.size()) {
      bool maximal = cost == m;
      if (!maximal) {
        maximal = true;
        for (std::size_t k = 0; k < vars.size(); ++k)
          if (pattern[k].first + pattern[k].second < vars[k].second)
            maximal = false;
      }
      if (maximal) try_pattern();
      return;
    }
    const std::uint32_t d = vars[i].second;
    for (std::uint32_t c = std::min<std::uint32_t>(d, (m - cost) / 2) + 1; c-- > 0;) {
      for (std::uint32_t o = std::min<std::uint32_t>(d - c, m - cost - 2 * c) + 1; o-- > 0;) {
        pattern[i] = {o, c};
        rec(i + 1, cost + static_cast<int>(o + 2 * c));
        if (found) return;
      }
    }
  };
  rec(0, 0);
  return found;
}

}  // namespace

bool multilinear_applicable(const NCPoly& f, const FieldSpec& field) {
  const std::uint64_t p = field.characteristic();
  if (p == 0) return true;
  for (const auto& [w, c] : f.terms())
    for (const auto& [v, d] : multidegree(w))
      if (d >= p) return false;
  return true;
}

IdentityResult is_identity(const NCPoly& f, const AlgebraSpec& spec,
                           std::optional<Strategy> force) {
  check_inputs(f, spec);
  const bool ml_ok = multilinear_applicable(f, spec.field());
  Strategy strategy = force.value_or(ml_ok ? Strategy::Multilinear : Strategy::Generic);
  if (strategy == Strategy::Multilinear && !ml_ok)
    throw PreconditionError("multilinear strategy is incomplete: a variable degree reaches p");

  for (const auto& [md, component] : multihomog_components(f)) {
    auto failure = strategy == Strategy::Multilinear
                       ? multilinear_failure(component, spec)
                       : generic_failure(component, spec);
    if (!failure) continue;
    IndeterminatePool pool;
    std::vector<Var> vars = f.variables();
    auto generic = slots_to_generic(failure->slots, vars, spec, pool);
    // Variables outside the failing component still need images.
    if (spec.unital()) {
      for (Var v : vars)
        if (!md.count(v))
          generic.at(v).add_term(0, CoeffPoly::variable(spec.field(), pool.fresh()));
    }
    return {false, strategy, scalar_witness(f, generic, spec, f)};
  }
  return {true, strategy, std::nullopt};
}

Classification classify(const NCPoly& f, const AlgebraSpec& spec,
                        std::optional<Strategy> force) {
  check_inputs(f, spec);
  const bool inf = spec.unital() && spec.field().characteristic() > 0;
  IdentityResult base = is_identity(f, spec, force);
  if (base.identity) return {Verdict::Identity, base.strategy, std::nullopt, inf};

  const Var y = f.max_variable() + 1;
  NCPoly target = nc_commutator(f, NCPoly::variable(f.field(), f.unital(), y));
  IdentityResult comm = is_identity(target, spec, force);
  if (comm.identity) return {Verdict::Central, comm.strategy, base.witness, inf};

  std::optional<Witness> w;
  if (comm.witness) {
    Evaluation<Scalar> a = comm.witness->assignment;
    GElem value = evaluate(f, a, spec);
    if (is_central_element(value))
      throw Error("internal: noncentral witness has a central value");
    a.erase(y);
    w = Witness{std::move(a), std::move(value)};
  }
  return {Verdict::Noncentral, comm.strategy, std::move(w), inf};
}

NoncentralAttempt find_noncentral_witness(const SSElement& u,
                                          const AlgebraSpec& spec) {
  using O = NoncentralAttempt::Outcome;
  if (!spec.unital())
    throw PreconditionError("the 1 + e construction needs a unitary algebra");
  if (spec.field().characteristic() == 2)
    throw OutOfScope("characteristic 2 is out of scope");
  const std::uint64_t p = spec.field().characteristic();
  if (u.lbeg() == 0) return {O::HypothesisViolated, "empty beginning", std::nullopt};
  if (2 * static_cast<int>(u.lend()) > spec.m() - 2)
    return {O::HypothesisViolated,
            "2*lend(u) = " + std::to_string(2 * u.lend()) + " > m - 2 = " +
                std::to_string(spec.m() - 2),
            std::nullopt};
  std::optional<Var> a;
  for (const auto& b : u.beginning())
    if (p == 0 || b.exponent % p != 0) {
      a = b.var;
      break;
    }
  if (!a)
    return {O::HypothesisViolated,
            "every beginning exponent is divisible by " + std::to_string(p),
            std::nullopt};

  const GElem one = GElem::one(spec);
  Evaluation<Scalar> assignment;
  for (const auto& b : u.beginning()) assignment.emplace(b.var, one);
  assignment.at(*a) = one + GElem::generator(spec, 1);
  int next = 2;
  for (Var v : u.end_variables())
    assignment.emplace(v, one + GElem::generator(spec, next++));
  GElem value = evaluate(u.to_ncpoly(spec.field(), true), assignment, spec);
  if (is_central_element(value))
    return {O::ConstructionFailed, "value " + to_string(value) + " is central",
            std::nullopt};
  return {O::Found, "", Witness{std::move(assignment), std::move(value)}};
}

namespace {

using Column = std::size_t;
using SparseVec = std::map<Column, Scalar>;

struct Row {
  SparseVec vec;                       // leading entry 1 at the pivot
  std::map<std::size_t, Scalar> combo;  // in terms of candidates
};

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  for (const auto& [k, v] : x) {
    auto [it, ins] = y.try_emplace(k, a * v);
    if (!ins) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

// Incremental exact elimination; rows keyed by pivot column.
class Eliminator {
 public:
  // Reduces v; returns the combination c with v_original = reduced + sum c_k cand_k.
  std::map<std::size_t, Scalar> reduce(SparseVec& v) const {
    std::map<std::size_t, Scalar> combo;
    auto it = v.begin();
    while (it != v.end()) {
      auto r = rows_.find(it->first);
      if (r == rows_.end()) {
        ++it;
        continue;
      }
      Column c = it->first;
      Scalar factor = it->second;
      axpy(v, -factor, r->second.vec);
      axpy(combo, factor, r->second.combo);
      it = v.lower_bound(c);
    }
    return combo;
  }

  void insert(SparseVec v, std::size_t candidate) {
    auto combo = reduce(v);
    if (v.empty()) return;
    std::map<std::size_t, Scalar> own;
    for (const auto& [k, c] : combo) own.emplace(k, -c);
    const FieldSpec& field = v.begin()->second.field();
    axpy(own, Scalar::one(field), {{candidate, Scalar::one(field)}});
    Scalar inv = v.begin()->second.inverse();
    for (auto& [k, x] : v) x *= inv;
    for (auto& [k, x] : own) x *= inv;
    Column pivot = v.begin()->first;
    rows_.emplace(pivot, Row{std::move(v), std::move(own)});
  }

 private:
  std::map<Column, Row> rows_;
};

struct Candidate {
  std::size_t generator;
  std::map<Var, std::vector<Word>> words;
  NCPoly poly;
};

bool md_leq(const Multidegree& a, const Multidegree& b) {
  for (const auto& [v, d] : a) {
    auto it = b.find(v);
    if (it == b.end() || it->second < d) return false;
  }
  return true;
}

void md_add(Multidegree& a, const Multidegree& b) {
  for (const auto& [v, d] : b) a[v] += d;
}

void md_sub(Multidegree& a, const Multidegree& b) {
  for (const auto& [v, d] : b)
    if ((a[v] -= d) == 0) a.erase(v);
}

// Sum over distinct arrangements of the chosen word multisets into the
// occurrences of each generator variable.
NCPoly partial_linearization(const NCPoly& g,
                             const std::map<Var, std::vector<Word>>& words) {
  NCPoly out(g.field(), g.unital());
  for (const auto& [w, c] : g.terms()) {
    std::map<Var, std::vector<std::size_t>> where;
    for (std::size_t i = 0; i < w.size(); ++i) where[w[i]].push_back(i);
    std::vector<Var> order;
    std::map<Var, std::vector<std::size_t>> perm;
    for (const auto& [v, pos] : where) {
      order.push_back(v);
      std::vector<std::size_t> idx(words.at(v).size());
      for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
      // identical words share an index so permutations stay distinct
      for (std::size_t k = 1; k < idx.size(); ++k)
        if (words.at(v)[k] == words.at(v)[k - 1]) idx[k] = idx[k - 1];
      perm[v] = idx;
    }
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == order.size()) {
        std::vector<const Word*> at(w.size());
        for (const auto& [v, pos] : where)
          for (std::size_t i = 0; i < pos.size(); ++i)
            at[pos[i]] = &words.at(v)[perm[v][i]];
        Word u;
        for (const Word* piece : at) u.insert(u.end(), piece->begin(), piece->end());
        out.add_term(u, c);
        return;
      }
      Var v = order[k];
      std::sort(perm[v].begin(), perm[v].end());
      do {
        rec(k + 1);
      } while (std::next_permutation(perm[v].begin(), perm[v].end()));
    };
    rec(0);
  }
  return out;
}

std::vector<Word> words_within(const std::vector<Var>& vars, const Multidegree& cap,
                               std::uint32_t max_len, bool allow_empty) {
  std::vector<Word> out;
  if (allow_empty) out.push_back({});
  std::vector<Word> layer{{}};
  for (std::uint32_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      Multidegree md = multidegree(w);
      for (Var v : vars) {
        auto it = cap.find(v);
        if (it == cap.end() || (md.count(v) ? md[v] : 0) + 1 > it->second) continue;
        Word u = w;
        u.push_back(v);
        next.push_back(u);
      }
    }
    for (const Word& w : next) out.push_back(w);
    layer = std::move(next);
  }
  return out;
}

void check_membership_field(const NCPoly& f, const std::vector<NCPoly>& gens) {
  const std::uint64_t p = f.field().characteristic();
  if (p == 2) throw OutOfScope("characteristic 2 is out of scope");
  for (const auto& g : gens) f.check_same(g);
  if (p == 0) return;
  auto small = [p](const NCPoly& h) {
    for (const auto& [w, c] : h.terms())
      for (const auto& [v, d] : multidegree(w))
        if (d >= p) return false;
    return true;
  };
  if (!small(f))
    throw PreconditionError("membership search needs target degrees below p");
  for (const auto& g : gens)
    if (!small(g))
      throw PreconditionError("membership search needs generator degrees below p");
}

}  // namespace

MembershipReport tspace_member_bounded(const NCPoly& f,
                                       const std::vector<NCPoly>& gens,
                                       MembershipBounds bounds) {
  check_membership_field(f, gens);
  MembershipReport report;
  report.bounds = bounds;
  const std::uint32_t max_len =
      bounds.max_word_degree ? bounds.max_word_degree
                             : static_cast<std::uint32_t>(std::max<std::size_t>(f.degree(), 1));
  const std::vector<Var> vars = f.variables();
  bool all_found = true;

  for (const auto& [target_md, target] : multihomog_components(f)) {
    std::uint32_t target_deg = 0;
    for (const auto& [v, d] : target_md) target_deg += d;

    std::vector<Candidate> cands;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      for (const auto& [gmd, gc] : multihomog_components(gens[gi])) {
        std::uint32_t gdeg = 0;
        for (const auto& [v, d] : gmd) gdeg += d;
        if (gdeg == 0) {
          if (target_deg == 0) cands.push_back({gi, {}, gc});
          continue;
        }
        if (!f.unital() && gdeg > target_deg) continue;
        std::uint32_t len_cap = std::min<std::uint32_t>(
            max_len, f.unital() ? target_deg : target_deg - (gdeg - 1));
        std::vector<Word> pool = words_within(vars, target_md, len_cap, f.unital());
        if (pool.size() > bounds.max_words) {
          pool.resize(bounds.max_words);
          report.truncated = true;
        }
        std::vector<Multidegree> pool_md;
        for (const Word& w : pool) pool_md.push_back(multidegree(w));

        std::vector<std::pair<Var, std::uint32_t>> zs(gmd.begin(), gmd.end());
        std::map<Var, std::vector<Word>> choice;
        Multidegree acc;
        std::function<void(std::size_t, std::uint32_t, std::size_t)> rec =
            [&](std::size_t j, std::uint32_t left, std::size_t from) {
              if (j == zs.size()) {
                if (acc == target_md) {
                  NCPoly inst = partial_linearization(gc, choice);
                  if (!inst.is_zero()) cands.push_back({gi, choice, std::move(inst)});
                }
                return;
              }
              if (left == 0) {
                rec(j + 1, j + 1 < zs.size() ? zs[j + 1].second : 0, 0);
                return;
              }
              for (std::size_t k = from; k < pool.size(); ++k) {
                md_add(acc, pool_md[k]);
                if (md_leq(acc, target_md)) {
                  choice[zs[j].first].push_back(pool[k]);
                  rec(j, left - 1, k);
                  choice[zs[j].first].pop_back();
                }
                md_sub(acc, pool_md[k]);
              }
            };
        if (!zs.empty()) rec(0, zs[0].second, 0);
      }
    }
    report.candidates += cands.size();

    std::map<SSElement, Column, VenkovaDescending> columns;
    auto to_vec = [&](const NCPoly& h) {
      NormalForm nf = nf_t3(h);
      SparseVec v;
      if (!nf.scalar.is_zero()) v.emplace(0, nf.scalar);
      for (const auto& [u, c] : nf.terms) {
        auto [it, ins] = columns.try_emplace(u, columns.size() + 1);
        v.emplace(it->second, c);
      }
      return v;
    };
    Eliminator elim;
    for (std::size_t k = 0; k < cands.size(); ++k) elim.insert(to_vec(cands[k].poly), k);
    SparseVec tv = to_vec(target);
    auto combo = elim.reduce(tv);
    if (!tv.empty()) {
      all_found = false;
      break;
    }
    for (const auto& [k, c] : combo)
      report.combination.push_back({cands[k].generator, cands[k].words, c, cands[k].poly});
  }
  report.member = all_found;
  if (!report.member) {
    report.combination.clear();
    return report;
  }
  NCPoly residual = f;
  for (const auto& e : report.combination) residual -= e.instance.scaled(e.coefficient);
  bool ok = nf_t3(residual).is_zero();
  if (ok && !residual.is_zero()) {
    int m = static_cast<int>(std::clamp<std::size_t>(residual.degree(), 1, 12));
    ok = is_identity(residual, AlgebraSpec(m, residual.unital(), residual.field())).identity;
  }
  if (!ok) throw Error("internal: membership combination failed re-verification");
  report.verified = true;
  return report;
}

MembershipReport tspace_member_bounded(const NCPoly& f,
                                       const GeneratorSet& gens,
                                       MembershipBounds bounds) {
  return tspace_member_bounded(f, gens.polys(), bounds);
}

std::string to_string(const Evaluation<Scalar>& assignment) {
  std::string out;
  for (const auto& [v, g] : assignment) {
    if (!out.empty()) out += "; ";
    out += "x" + std::to_string(v) + " -> " + to_string(g);
  }
  return out;
}

std::string to_string(const Classification& c) {
  std::ostringstream os;
  os << "verdict: " << to_string(c.verdict) << "\n";
  os << "strategy: " << to_string(c.strategy)
     << (c.infinite_field_semantics ? " (infinite-field semantics)" : "") << "\n";
  if (c.witness) {
    os << "witness: " << to_string(c.witness->assignment) << "\n";
    os << "value: " << to_string(c.witness->value) << "\n";
  } else if (c.verdict != Verdict::Identity) {
    os << "witness: none found over the prime field\n";
  }
  return os.str();
}

std::string to_string(const MembershipReport& r,
                      const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "outcome: " << (r.member ? "member" : "not-found-within-bound") << "\n";
  os << "bounds: word degree "
     << (r.bounds.max_word_degree ? std::to_string(r.bounds.max_word_degree) : "deg(f)")
     << ", words per variable " << r.bounds.max_words
     << (r.truncated ? " (reached)" : "") << "\n";
  os << "candidates: " << r.candidates << "\n";
  for (const auto& e : r.combination) {
    os << "  " << to_string(e.coefficient) << " * g" << e.generator + 1;
    if (e.generator < labels.size()) os << " (" << labels[e.generator] << ")";
    os << " at ";
    bool first = true;
    for (const auto& [v, ws] : e.words) {
      os << (first ? "" : ", ") << "x" << v << " <- {";
      first = false;
      for (std::size_t i = 0; i < ws.size(); ++i)
        os << (i ? ", " : "") << word_to_string(ws[i]);
      os << "}";
    }
    os << "\n";
  }
  if (r.member) os << "verified: " << (r.verified ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace gpi
