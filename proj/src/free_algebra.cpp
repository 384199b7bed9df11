#include "gpi/free_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gpi {

Multidegree multidegree(const Word& w) {
  Multidegree d;
  for (Var v : w) ++d[v];
  return d;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(w[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

NCPoly NCPoly::variable(const FieldSpec& field, bool unital, Var i) {
  if (i == 0) throw PreconditionError("variables are numbered from 1");
  NCPoly r(field, unital);
  r.terms_.emplace(Word{i}, Scalar::one(field));
  return r;
}

NCPoly NCPoly::monomial(const FieldSpec& field, bool unital, const Word& w,
                        const Scalar& c) {
  NCPoly r(field, unital);
  r.add_term(w, c);
  return r;
}

NCPoly NCPoly::constant(const FieldSpec& field, const Scalar& c) {
  NCPoly r(field, true);
  r.add_term({}, c);
  return r;
}

Scalar NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  if (!(c.field() == field_))
    throw Mismatch("coefficient field differs from the polynomial field");
  if (w.empty() && !unital_)
    throw PreconditionError("constant term in the nonunitary free algebra");
  if (std::find(w.begin(), w.end(), Var{0}) != w.end())
    throw PreconditionError("variables are numbered from 1");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::size_t NCPoly::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

std::vector<Var> NCPoly::variables() const {
  std::set<Var> vs;
  for (const auto& [w, c] : terms_) vs.insert(w.begin(), w.end());
  return {vs.begin(), vs.end()};
}

Var NCPoly::max_variable() const {
  Var m = 0;
  for (const auto& [w, c] : terms_)
    for (Var v : w) m = std::max(m, v);
  return m;
}

bool NCPoly::is_multihomogeneous() const {
  if (terms_.empty()) return true;
  Multidegree d = multidegree(terms_.begin()->first);
  for (const auto& [w, c] : terms_)
    if (multidegree(w) != d) return false;
  return true;
}

NCPoly NCPoly::in_context(bool unital) const {
  NCPoly r(field_, unital);
  for (const auto& [w, c] : terms_) r.add_term(w, c);
  return r;
}

void NCPoly::check_same(const NCPoly& o) const {
  if (!(field_ == o.field_))
    throw Mismatch("field mismatch: " + to_string(field_) + " vs " +
                   to_string(o.field_));
  if (unital_ != o.unital_)
    throw Mismatch("cannot mix k0<X> and k1<X> polynomials");
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  check_same(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  check_same(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly r(field_, unital_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
  NCPoly r(field_, unital_);
  for (const auto& [w, d] : terms_) r.add_term(w, d * c);
  return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  a.check_same(b);
  NCPoly r(a.field(), a.unital());
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add_term(w, cu * cv);
    }
  }
  return r;
}

NCPoly nc_mul(const NCPoly& a, const NCPoly& b) { return a * b; }

NCPoly nc_power(const NCPoly& a, std::uint64_t n) {
  if (n == 0) return NCPoly::constant(a.field(), Scalar::one(a.field()));
  NCPoly r = a;
  for (std::uint64_t i = 1; i < n; ++i) r = r * a;
  return r;
}

NCPoly nc_commutator(const NCPoly& a, const NCPoly& b) {
  return a * b - b * a;
}

NCPoly nc_commutator(const std::vector<NCPoly>& args) {
  if (args.size() < 2)
    throw PreconditionError("a commutator needs at least two arguments");
  NCPoly r = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) r = nc_commutator(r, args[i]);
  return r;
}

NCPoly nc_circle(const NCPoly& a, const NCPoly& b) { return a * b + b * a; }

NCPoly nc_circle_chain(const std::vector<NCPoly>& args) {
  if (args.empty()) throw PreconditionError("empty circle chain");
  NCPoly r = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) r = nc_circle(r, args[i]);
  return r;
}

NCPoly substitute(const NCPoly& f, const NCSubstitution& s) {
  for (const auto& [v, img] : s) {
    f.check_same(img);
    if (!f.unital() && !img.coefficient({}).is_zero())
      throw PreconditionError("image of x" + std::to_string(v) +
                              " has a constant term");
  }
  NCPoly out(f.field(), f.unital());
  for (const auto& [w, c] : f.terms()) {
    NCPoly acc(f.field(), f.unital());
    for (std::size_t k = 0; k < w.size(); ++k) {
      auto it = s.find(w[k]);
      NCPoly img = it != s.end() ? it->second
                                 : NCPoly::variable(f.field(), f.unital(), w[k]);
      acc = k == 0 ? img.scaled(c) : acc * img;
      if (acc.is_zero()) break;
    }
    if (w.empty()) acc = NCPoly::constant(f.field(), c);
    out += acc;
  }
  return out;
}

template <class C>
GrassmannElement<C> evaluate(const NCPoly& f, const Evaluation<C>& s,
                             const AlgebraSpec& spec) {
  if (!(f.field() == spec.field()))
    throw Mismatch("polynomial over " + to_string(f.field()) +
                   " evaluated in " + to_string(spec));
  for (const auto& [v, img] : s)
    if (!(img.spec() == spec))
      throw Mismatch("image of x" + std::to_string(v) + " lies outside " +
                     to_string(spec));

  std::vector<std::pair<const Word*, const Scalar*>> words;
  words.reserve(f.terms().size());
  for (const auto& [w, c] : f.terms()) {
    for (Var v : w)
      if (!s.count(v))
        throw PreconditionError("variable x" + std::to_string(v) +
                                " is not assigned");
    words.emplace_back(&w, &c);
  }
  std::sort(words.begin(), words.end(),
            [](const auto& a, const auto& b) { return *a.first < *b.first; });

  GrassmannElement<C> out(spec);
  // prefix[k] is the image of the first k letters of the previous word
  // (k >= 1); a zero prefix kills every word that extends it.
  std::vector<GrassmannElement<C>> prefix;
  const Word* prev = nullptr;
  for (const auto& [wp, cp] : words) {
    const Word& w = *wp;
    if (w.empty()) {
      if (!spec.unital())
        throw PreconditionError("constant term evaluated in " +
                                to_string(spec));
      out.add_term(0, C(*cp));
      continue;
    }
    std::size_t common = 0;
    if (prev) {
      while (common < prev->size() && common < w.size() &&
             (*prev)[common] == w[common] && common < prefix.size())
        ++common;
    }
    prefix.erase(prefix.begin() + static_cast<std::ptrdiff_t>(common), prefix.end());
    bool dead = !prefix.empty() && prefix.back().is_zero();
    for (std::size_t k = common; k < w.size() && !dead; ++k) {
      const GrassmannElement<C>& img = s.at(w[k]);
      prefix.push_back(k == 0 ? img : g_mul(prefix.back(), img));
      dead = prefix.back().is_zero();
    }
    prev = &w;
    if (dead) continue;
    out += prefix.back().scaled(C(*cp));
  }
  return out;
}

template GElem evaluate(const NCPoly&, const Evaluation<Scalar>&,
                        const AlgebraSpec&);
template GenericElem evaluate(const NCPoly&, const Evaluation<CoeffPoly>&,
                              const AlgebraSpec&);

std::vector<std::pair<Multidegree, NCPoly>> multihomog_components(
    const NCPoly& f) {
  std::map<Multidegree, NCPoly> parts;
  for (const auto& [w, c] : f.terms()) {
    auto [it, ins] = parts.try_emplace(multidegree(w), f.field(), f.unital());
    it->second.add_term(w, c);
  }
  return {parts.begin(), parts.end()};
}

std::vector<Var> linearization_copies(const NCPoly& f, Var variable) {
  std::uint32_t d = 0;
  if (!f.is_zero()) {
    Multidegree md = multidegree(f.terms().begin()->first);
    auto it = md.find(variable);
    d = it == md.end() ? 0 : it->second;
  }
  std::vector<Var> copies{variable};
  Var next = std::max(f.max_variable(), variable);
  for (std::uint32_t i = 1; i < d; ++i) copies.push_back(++next);
  return copies;
}

NCPoly multilinearize(const NCPoly& f, Var variable) {
  if (!f.is_multihomogeneous())
    throw PreconditionError("multilinearize needs a multihomogeneous input");
  std::vector<Var> copies = linearization_copies(f, variable);
  if (copies.size() < 2) return f;
  NCPoly out(f.field(), f.unital());
  for (const auto& [w, c] : f.terms()) {
    std::vector<std::size_t> where;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] == variable) where.push_back(i);
    std::vector<Var> perm = copies;
    std::sort(perm.begin(), perm.end());
    do {
      Word u = w;
      for (std::size_t k = 0; k < where.size(); ++k) u[where[k]] = perm[k];
      out.add_term(u, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

bool is_essential(const NCPoly& f) {
  if (f.is_zero()) return true;
  auto vars_of = [](const Word& w) { return std::set<Var>(w.begin(), w.end()); };
  std::set<Var> first = vars_of(f.terms().begin()->first);
  for (const auto& [w, c] : f.terms())
    if (vars_of(w) != first) return false;
  return true;
}

std::string to_string(const NCPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    Scalar mag = c.is_negative() ? -c : c;
    if (first)
      os << (c.is_negative() ? "-" : "");
    else
      os << (c.is_negative() ? " - " : " + ");
    first = false;
    if (w.empty())
      os << to_string(mag);
    else if (mag.is_one())
      os << word_to_string(w);
    else
      os << to_string(mag) << '*' << word_to_string(w);
  }
  return os.str();
}

}  // namespace gpi
