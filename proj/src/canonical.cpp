#include "gpi/canonical.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gpi {

SSElement::SSElement(std::vector<BeginFactor> beginning,
                     std::vector<EndPair> end)
    : beginning_(std::move(beginning)), end_(std::move(end)) {
  if (beginning_.empty() && end_.empty())
    throw PreconditionError("SS element with empty beginning and end");
  Var last = 0;
  for (const auto& b : beginning_) {
    if (b.var <= last)
      throw PreconditionError("beginning indices must increase");
    if (b.exponent == 0)
      throw PreconditionError("beginning exponents must be positive");
    last = b.var;
  }
  last = 0;
  for (const auto& e : end_) {
    if (e.first <= last || e.second <= e.first)
      throw PreconditionError("end indices must increase globally");
    last = e.second;
  }
  for (const auto& b : beginning_)
    if (in_end(b.var))
      throw PreconditionError("x" + std::to_string(b.var) +
                              " occurs in both beginning and end");
}

std::uint32_t SSElement::degree() const {
  std::uint32_t d = 0;
  for (const auto& b : beginning_) d += b.exponent;
  for (const auto& e : end_) d += 2 + e.beta_first + e.beta_second;
  return d;
}

std::uint32_t SSElement::degree_in(Var v) const {
  for (const auto& b : beginning_)
    if (b.var == v) return b.exponent;
  for (const auto& e : end_) {
    if (e.first == v) return 1 + e.beta_first;
    if (e.second == v) return 1 + e.beta_second;
  }
  return 0;
}

Multidegree SSElement::multidegree() const {
  Multidegree d;
  for (const auto& b : beginning_) d[b.var] = b.exponent;
  for (const auto& e : end_) {
    d[e.first] = 1 + e.beta_first;
    d[e.second] = 1 + e.beta_second;
  }
  return d;
}

bool SSElement::in_beginning(Var v) const {
  return std::any_of(beginning_.begin(), beginning_.end(),
                     [v](const BeginFactor& b) { return b.var == v; });
}

bool SSElement::in_end(Var v) const {
  return std::any_of(end_.begin(), end_.end(), [v](const EndPair& e) {
    return e.first == v || e.second == v;
  });
}

std::vector<Var> SSElement::end_variables() const {
  std::vector<Var> out;
  for (const auto& e : end_) {
    out.push_back(e.first);
    out.push_back(e.second);
  }
  return out;
}

NCPoly SSElement::to_ncpoly(const FieldSpec& field, bool unital) const {
  Word w;
  for (const auto& b : beginning_) w.insert(w.end(), b.exponent, b.var);
  NCPoly out = NCPoly::monomial(field, true, w, Scalar::one(field));
  for (const auto& e : end_) {
    NCPoly a = NCPoly::variable(field, true, e.first);
    NCPoly b = NCPoly::variable(field, true, e.second);
    Word tail(e.beta_first, e.first);
    tail.insert(tail.end(), e.beta_second, e.second);
    out = out * nc_commutator(a, b) *
          NCPoly::monomial(field, true, tail, Scalar::one(field));
  }
  return out.in_context(unital);
}

std::string to_string(const SSElement& u) {
  std::vector<std::string> parts;
  for (const auto& b : u.beginning())
    parts.push_back(word_to_string(Word(b.exponent, b.var)));
  for (const auto& e : u.end()) {
    parts.push_back("[x" + std::to_string(e.first) + ",x" +
                    std::to_string(e.second) + "]");
    if (e.beta_first) parts.push_back(word_to_string(Word(e.beta_first, e.first)));
    if (e.beta_second)
      parts.push_back(word_to_string(Word(e.beta_second, e.second)));
  }
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
  return out;
}

int venkova_compare(const SSElement& u, const SSElement& v) {
  auto du = u.degree(), dv = v.degree();
  if (du != dv) return du < dv ? 1 : -1;
  if (u.lend() != v.lend()) return u.lend() < v.lend() ? 1 : -1;
  Multidegree mu = u.multidegree(), mv = v.multidegree();
  std::set<Var> vars;
  for (const auto& [x, d] : mu) vars.insert(x);
  for (const auto& [x, d] : mv) vars.insert(x);
  for (Var x : vars) {
    auto a = mu.count(x) ? mu[x] : 0u;
    auto b = mv.count(x) ? mv[x] : 0u;
    if (a != b) return a < b ? 1 : -1;
  }
  for (Var x : vars) {
    bool bu = u.in_beginning(x), bv = v.in_beginning(x);
    if (bu != bv) return bv ? 1 : -1;
  }
  return 0;
}

void NormalForm::add(const SSElement& u, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(u, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

namespace {

// Straightening state: P(w) * Q(J), with P(w) the increasing product of
// x_i^{w_i} and Q(J) the increasing commutator product over the sorted set
// J. Letters of J commute with everything in the presence of Q(J).
struct StraightKey {
  std::vector<std::uint32_t> w;
  std::vector<Var> J;
  bool operator<(const StraightKey& o) const {
    return w != o.w ? w < o.w : J < o.J;
  }
};

using StraightState = std::map<StraightKey, Scalar>;

void add_state(StraightState& s, StraightKey key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = s.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
  }
}

StraightState times_letter(const StraightState& in, Var a,
                           const FieldSpec& field) {
  StraightState out;
  for (const auto& [key, c] : in) {
    StraightKey plain = key;
    ++plain.w[a];
    add_state(out, std::move(plain), c);
    if (std::binary_search(key.J.begin(), key.J.end(), a)) continue;
    // x_b^k x_a = x_a x_b^k - k x_b^{k-1} [x_a, x_b] for b > a.
    for (Var b = a + 1; b < key.w.size(); ++b) {
      if (key.w[b] == 0 || std::binary_search(key.J.begin(), key.J.end(), b))
        continue;
      StraightKey next = key;
      --next.w[b];
      auto above = [&](Var x) {
        return key.J.end() - std::upper_bound(key.J.begin(), key.J.end(), x);
      };
      bool odd = (above(a) + above(b)) % 2 != 0;
      next.J.insert(std::upper_bound(next.J.begin(), next.J.end(), a), a);
      next.J.insert(std::upper_bound(next.J.begin(), next.J.end(), b), b);
      Scalar coeff = c * Scalar(field, static_cast<long>(key.w[b]));
      add_state(out, std::move(next), odd ? coeff : -coeff);
    }
  }
  return out;
}

SSElement key_to_ss(const StraightKey& key) {
  std::vector<BeginFactor> beginning;
  std::vector<EndPair> end;
  for (Var i = 1; i < key.w.size(); ++i)
    if (key.w[i] > 0 && !std::binary_search(key.J.begin(), key.J.end(), i))
      beginning.push_back({i, key.w[i]});
  for (std::size_t r = 0; r + 1 < key.J.size(); r += 2)
    end.push_back({key.J[r], key.J[r + 1], key.w[key.J[r]], key.w[key.J[r + 1]]});
  return SSElement(std::move(beginning), std::move(end));
}

}  // namespace

NormalForm nf_t3(const NCPoly& f) {
  NormalForm nf{f.field(), f.unital(), Scalar::zero(f.field()), {}};
  const std::size_t width = f.max_variable() + 1;

  std::vector<std::pair<const Word*, const Scalar*>> words;
  for (const auto& [w, c] : f.terms()) words.emplace_back(&w, &c);
  std::sort(words.begin(), words.end(),
            [](const auto& a, const auto& b) { return *a.first < *b.first; });

  // stack[k] is the straightened image of the first k letters of the
  // previous word, with coefficient 1.
  std::vector<StraightState> stack;
  stack.push_back({{StraightKey{std::vector<std::uint32_t>(width, 0), {}},
                    Scalar::one(f.field())}});
  const Word* prev = nullptr;
  StraightState total;
  for (const auto& [wp, cp] : words) {
    const Word& w = *wp;
    std::size_t common = 0;
    if (prev)
      while (common < prev->size() && common < w.size() &&
             (*prev)[common] == w[common])
        ++common;
    stack.resize(common + 1);
    for (std::size_t k = common; k < w.size(); ++k)
      stack.push_back(times_letter(stack.back(), w[k], f.field()));
    prev = &w;
    for (const auto& [key, c] : stack.back()) add_state(total, key, c * *cp);
  }
  for (const auto& [key, c] : total) {
    bool empty = key.J.empty() &&
                 std::all_of(key.w.begin(), key.w.end(),
                             [](std::uint32_t e) { return e == 0; });
    if (empty)
      nf.scalar += c;
    else
      nf.add(key_to_ss(key), c);
  }
  return nf;
}

NCPoly reassemble(const NormalForm& nf) {
  NCPoly out(nf.field, nf.unital);
  if (!nf.scalar.is_zero()) out += NCPoly::constant(nf.field, nf.scalar);
  for (const auto& [u, c] : nf.terms)
    out += u.to_ncpoly(nf.field, nf.unital).scaled(c);
  return out;
}

std::string to_string(const NormalForm& nf) {
  if (nf.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Scalar& c, const std::string& body) {
    Scalar mag = c.is_negative() ? -c : c;
    if (first)
      os << (c.is_negative() ? "-" : "");
    else
      os << (c.is_negative() ? " - " : " + ");
    first = false;
    if (body.empty())
      os << to_string(mag);
    else if (mag.is_one())
      os << body;
    else
      os << to_string(mag) << '*' << body;
  };
  if (!nf.scalar.is_zero()) emit(nf.scalar, "");
  for (const auto& [u, c] : nf.terms) emit(c, to_string(u));
  return os.str();
}

std::optional<SSElement> as_ss_element(const NCPoly& f) {
  NormalForm nf = nf_t3(f);
  if (!nf.scalar.is_zero() || nf.terms.size() != 1 ||
      !nf.terms.begin()->second.is_one())
    return std::nullopt;
  return nf.terms.begin()->first;
}

namespace {

std::uint32_t exponent_cap(int m, std::uint64_t p) {
  std::uint64_t cap = static_cast<std::uint64_t>(m + 1) / 2;
  if (p > 2) cap = std::min<std::uint64_t>(cap, p - 1);
  return static_cast<std::uint32_t>(cap);
}

bool exponents_within(const SSElement& u, std::uint32_t cap) {
  for (const auto& b : u.beginning())
    if (b.exponent > cap) return false;
  for (const auto& e : u.end())
    if (e.beta_first > cap || e.beta_second > cap) return false;
  return true;
}

}  // namespace

bool in_bss(const SSElement& u, int m, std::uint64_t p) {
  std::int64_t excess = static_cast<std::int64_t>(u.degree()) -
                        static_cast<std::int64_t>(u.lend());
  return u.degree() <= static_cast<std::uint32_t>(m) && 2 * excess <= m + 1 &&
         exponents_within(u, exponent_cap(m, p));
}

bool is_extremal(const SSElement& u, int m) {
  std::int64_t excess = static_cast<std::int64_t>(u.degree()) -
                        static_cast<std::int64_t>(u.lend());
  return u.degree() <= static_cast<std::uint32_t>(m) && 2 * excess == m + 1 &&
         exponents_within(u, exponent_cap(m, 0));
}

namespace {

// Every SS element over x_1..x_window with degree <= max_deg and exponents
// <= cap, in generation order.
std::vector<SSElement> enumerate_raw(Var window, std::uint32_t max_deg,
                                     std::uint32_t cap) {
  std::vector<SSElement> out;
  std::vector<BeginFactor> beginning;
  std::vector<std::pair<Var, std::uint32_t>> ends;  // (variable, beta)

  auto emit = [&]() {
    if ((beginning.empty() && ends.empty()) || ends.size() % 2) return;
    std::vector<EndPair> pairs;
    for (std::size_t r = 0; r < ends.size(); r += 2)
      pairs.push_back({ends[r].first, ends[r + 1].first, ends[r].second,
                       ends[r + 1].second});
    out.emplace_back(beginning, std::move(pairs));
  };

  auto rec = [&](auto&& self, Var x, std::uint32_t deg) -> void {
    if (x > window) {
      emit();
      return;
    }
    self(self, x + 1, deg);
    for (std::uint32_t a = 1; a <= cap && deg + a <= max_deg; ++a) {
      beginning.push_back({x, a});
      self(self, x + 1, deg + a);
      beginning.pop_back();
    }
    for (std::uint32_t b = 0; b <= cap && deg + 1 + b <= max_deg; ++b) {
      ends.emplace_back(x, b);
      self(self, x + 1, deg + 1 + b);
      ends.pop_back();
    }
  };
  rec(rec, 1, 0);
  return out;
}

void sort_descending(std::vector<SSElement>& v) {
  std::sort(v.begin(), v.end(), [](const SSElement& a, const SSElement& b) {
    return venkova_compare(a, b) > 0;
  });
}

}  // namespace

std::vector<SSElement> enumerate_bss(int m, std::uint64_t p, std::uint32_t d,
                                     Var window) {
  const std::uint32_t max_deg =
      std::min<std::uint32_t>(d, static_cast<std::uint32_t>(m));
  std::vector<SSElement> out;
  for (auto& u : enumerate_raw(window, max_deg, exponent_cap(m, p)))
    if (in_bss(u, m, p)) out.push_back(std::move(u));
  sort_descending(out);
  return out;
}

std::vector<SSElement> enumerate_ss(Var window, std::uint32_t d) {
  std::vector<SSElement> out = enumerate_raw(window, d, d);
  sort_descending(out);
  return out;
}

bool in_R1(const SSElement& u, std::uint64_t p) {
  if (u.lbeg() == 0) return false;
  if (p <= 2) return true;
  return std::any_of(u.beginning().begin(), u.beginning().end(),
                     [p](const BeginFactor& b) { return b.exponent % p != 0; });
}

namespace {

bool covers_exactly(const SSElement& u, Var n) {
  Multidegree d = u.multidegree();
  if (d.size() != n) return false;
  return d.begin()->first == 1 && d.rbegin()->first == n;
}

}  // namespace

bool in_M_prime(const SSElement& u, Var t, Var n, std::uint64_t p) {
  if (t < 1 || t > n || u.lbeg() == 0 || !u.in_beginning(t)) return false;
  if (!covers_exactly(u, n)) return false;
  return p <= 2 || u.degree_in(t) % p != 0;
}

bool in_M(const SSElement& u, Var t, Var n, int m, std::uint64_t p) {
  if (t < 1 || t > n || u.lbeg() == 0) return false;
  if (u.beginning().back().var != t) return false;
  if (!covers_exactly(u, n)) return false;
  return exponents_within(u, exponent_cap(m, p));
}

NCPoly circle_expansion(std::uint32_t n, const FieldSpec& field, bool unital) {
  if (n < 1) throw PreconditionError("circle_expansion needs n >= 1");
  if (n > 20) throw PreconditionError("circle_expansion: n too large");
  NCPoly out(field, true);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::uint32_t size = static_cast<std::uint32_t>(std::popcount(mask));
    if (size % 2) continue;
    std::uint32_t s = size / 2;
    Word p;
    std::vector<Var> J;
    for (Var i = 1; i <= n; ++i)
      ((mask >> (i - 1)) & 1 ? J : p).push_back(i);
    NCPoly term = NCPoly::monomial(field, true, p, Scalar::one(field));
    for (std::size_t r = 0; r < J.size(); r += 2)
      term = term * nc_commutator(NCPoly::variable(field, true, J[r]),
                                  NCPoly::variable(field, true, J[r + 1]));
    Scalar c = Scalar(field, 2L).pow(n - 1 - s);
    out += term.scaled(s % 2 ? -c : c);
  }
  return out.in_context(unital);
}

}  // namespace gpi
