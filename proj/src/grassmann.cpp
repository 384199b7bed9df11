#include "gpi/grassmann.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gpi {

AlgebraSpec::AlgebraSpec(int m, bool unital, FieldSpec field)
    : m_(m), unital_(unital), field_(field) {
  if (m < 1 || m > kMaxGenerators)
    throw PreconditionError("number of generators must be in [1, 62], got " +
                            std::to_string(m));
}

std::string to_string(const AlgebraSpec& spec) {
  return (spec.unital() ? "G(" : "G0(") + std::to_string(spec.m()) +
         ") over " + to_string(spec.field());
}

template <class C>
void GrassmannElement<C>::check_same(const GrassmannElement& o) const {
  if (!(spec_ == o.spec_))
    throw Mismatch("algebra mismatch: " + to_string(spec_) + " vs " +
                   to_string(o.spec_));
}

template <class C>
GrassmannElement<C> GrassmannElement<C>::one(const AlgebraSpec& spec) {
  if (!spec.unital())
    throw PreconditionError("the nonunitary algebra has no unit");
  GrassmannElement r(spec);
  r.terms_.emplace(0, CoeffTraits<C>::one(spec.field()));
  return r;
}

template <class C>
GrassmannElement<C> GrassmannElement<C>::generator(const AlgebraSpec& spec,
                                                   int i) {
  if (i < 1 || i > spec.m())
    throw PreconditionError("generator e" + std::to_string(i) +
                            " outside the algebra");
  GrassmannElement r(spec);
  r.terms_.emplace(Subset{1} << (i - 1), CoeffTraits<C>::one(spec.field()));
  return r;
}

template <class C>
GrassmannElement<C> GrassmannElement<C>::basis(const AlgebraSpec& spec,
                                               Subset s, const C& coeff) {
  GrassmannElement r(spec);
  r.add_term(s, coeff);
  return r;
}

template <class C>
C GrassmannElement<C>::coefficient(Subset s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? CoeffTraits<C>::zero(spec_.field()) : it->second;
}

template <class C>
void GrassmannElement<C>::add_term(Subset s, const C& coeff) {
  if (coeff.is_zero()) return;
  if (!(coeff.field() == spec_.field()))
    throw Mismatch("coefficient field differs from the algebra field");
  if (s & ~spec_.full_mask())
    throw PreconditionError("basis subset outside {1..m}");
  if (s == 0 && !spec_.unital())
    throw PreconditionError("unit term in a nonunitary algebra");
  auto [it, inserted] = terms_.try_emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <class C>
GrassmannElement<C>& GrassmannElement<C>::operator+=(
    const GrassmannElement& o) {
  check_same(o);
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

template <class C>
GrassmannElement<C>& GrassmannElement<C>::operator-=(
    const GrassmannElement& o) {
  check_same(o);
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

template <class C>
GrassmannElement<C> GrassmannElement<C>::operator-() const {
  GrassmannElement r(spec_);
  for (const auto& [s, c] : terms_) r.terms_.emplace(s, -c);
  return r;
}

template <class C>
GrassmannElement<C> GrassmannElement<C>::scaled(const C& factor) const {
  GrassmannElement r(spec_);
  for (const auto& [s, c] : terms_) r.add_term(s, c * factor);
  return r;
}

template class GrassmannElement<Scalar>;
template class GrassmannElement<CoeffPoly>;

template <class C>
GrassmannElement<C> g_mul(const GrassmannElement<C>& a,
                          const GrassmannElement<C>& b) {
  if (!(a.spec() == b.spec()))
    throw Mismatch("algebra mismatch: " + to_string(a.spec()) + " vs " +
                   to_string(b.spec()));
  GrassmannElement<C> out(a.spec());
  for (const auto& [s, ca] : a.terms()) {
    for (const auto& [t, cb] : b.terms()) {
      if (s & t) continue;
      C prod = ca * cb;
      if (basis_sign(s, t) < 0) prod = -prod;
      out.add_term(s | t, prod);
    }
  }
  return out;
}

template <class C>
GrassmannElement<C> g_power(const GrassmannElement<C>& a, std::uint64_t n) {
  if (n == 0) return GrassmannElement<C>::one(a.spec());
  GrassmannElement<C> r = a;
  for (std::uint64_t i = 1; i < n && !r.is_zero(); ++i) r = g_mul(r, a);
  return r;
}

template <class C>
GrassmannElement<C> g_commutator(const GrassmannElement<C>& a,
                                 const GrassmannElement<C>& b) {
  return g_mul(a, b) - g_mul(b, a);
}

template <class C>
GrassmannElement<C> g_circle(const GrassmannElement<C>& a,
                             const GrassmannElement<C>& b) {
  return g_mul(a, b) + g_mul(b, a);
}

template <class C>
ParityPair<C> parity_split(const GrassmannElement<C>& a) {
  ParityPair<C> out{GrassmannElement<C>(a.spec()),
                    GrassmannElement<C>(a.spec())};
  for (const auto& [s, c] : a.terms())
    (std::popcount(s) % 2 == 0 ? out.even : out.odd).add_term(s, c);
  return out;
}

template <class C>
Subset support(const GrassmannElement<C>& a) {
  Subset s = 0;
  for (const auto& [t, c] : a.terms()) s |= t;
  return s;
}

template <class C>
bool is_central_element(const GrassmannElement<C>& a) {
  const AlgebraSpec& spec = a.spec();
  for (int i = 1; i <= spec.m(); ++i) {
    auto e = GrassmannElement<C>::generator(spec, i);
    if (!g_commutator(a, e).is_zero()) return false;
  }
  return true;
}

#define GPI_INSTANTIATE(C)                                                   \
  template GrassmannElement<C> g_mul(const GrassmannElement<C>&,            \
                                     const GrassmannElement<C>&);           \
  template GrassmannElement<C> g_power(const GrassmannElement<C>&,          \
                                       std::uint64_t);                      \
  template GrassmannElement<C> g_commutator(const GrassmannElement<C>&,     \
                                            const GrassmannElement<C>&);    \
  template GrassmannElement<C> g_circle(const GrassmannElement<C>&,         \
                                        const GrassmannElement<C>&);        \
  template ParityPair<C> parity_split(const GrassmannElement<C>&);          \
  template Subset support(const GrassmannElement<C>&);                      \
  template bool is_central_element(const GrassmannElement<C>&);

GPI_INSTANTIATE(Scalar)
GPI_INSTANTIATE(CoeffPoly)
#undef GPI_INSTANTIATE

GenericElem generic_element(const AlgebraSpec& spec, IndeterminatePool& pool) {
  const Indeterminate count = Indeterminate{1} << spec.m();
  if (spec.m() > 20)
    throw PreconditionError("generic_element: 2^m coefficients too many");
  const Indeterminate base = pool.reserve(count);
  GenericElem g(spec);
  for (Subset s = spec.unital() ? 0 : 1; s < count; ++s)
    g.add_term(s, CoeffPoly::variable(spec.field(),
                                      base + static_cast<Indeterminate>(s)));
  return g;
}

GenericElem to_generic(const GElem& a) {
  GenericElem g(a.spec());
  for (const auto& [s, c] : a.terms()) g.add_term(s, CoeffPoly(c));
  return g;
}

std::vector<int> subset_indices(Subset s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

std::string subset_to_string(Subset s) {
  if (s == 0) return "1";
  std::string out = "e{";
  bool first = true;
  for (int i : subset_indices(s)) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

namespace {

std::vector<Subset> canonical_order(std::vector<Subset> keys) {
  std::sort(keys.begin(), keys.end(), [](Subset a, Subset b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return subset_indices(a) < subset_indices(b);
  });
  return keys;
}

template <class C>
std::vector<Subset> sorted_keys(const GrassmannElement<C>& a) {
  std::vector<Subset> keys;
  for (const auto& [s, c] : a.terms()) keys.push_back(s);
  return canonical_order(std::move(keys));
}

}  // namespace

std::string to_string(const GElem& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (Subset s : sorted_keys(a)) {
    const Scalar& c = a.terms().at(s);
    Scalar mag = c.is_negative() ? -c : c;
    if (first)
      os << (c.is_negative() ? "-" : "");
    else
      os << (c.is_negative() ? " - " : " + ");
    first = false;
    if (s == 0)
      os << to_string(mag);
    else if (mag.is_one())
      os << subset_to_string(s);
    else
      os << to_string(mag) << " * " << subset_to_string(s);
  }
  return os.str();
}

std::string to_string(const GenericElem& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (Subset s : sorted_keys(a)) {
    if (!first) os << " + ";
    first = false;
    const CoeffPoly& c = a.terms().at(s);
    std::string text = to_string(c);
    if (c.size() > 1) text = "(" + text + ")";
    if (s == 0)
      os << text;
    else if (text == "1")
      os << subset_to_string(s);
    else
      os << text << " * " << subset_to_string(s);
  }
  return os.str();
}

namespace {

class GrassmannLexer {
 public:
  explicit GrassmannLexer(const std::string& text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= text_.size();
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c))
      throw ParseError(pos_, std::string("expected '") + c + "'");
  }
  std::string number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
      ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected a number");
    return text_.substr(start, pos_ - start);
  }
  std::size_t pos() const { return pos_; }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

Subset parse_basis(GrassmannLexer& lx, const AlgebraSpec& spec) {
  lx.expect('e');
  lx.expect('{');
  Subset s = 0;
  int last = 0;
  do {
    std::size_t at = lx.pos();
    int i = std::stoi(lx.number());
    if (i < 1 || i > spec.m())
      throw ParseError(at, "generator index outside 1.." + std::to_string(spec.m()));
    if (i <= last) throw ParseError(at, "generator indices must increase");
    last = i;
    s |= Subset{1} << (i - 1);
  } while (lx.accept(','));
  lx.expect('}');
  return s;
}

}  // namespace

GElem parse_grassmann(const std::string& text, const AlgebraSpec& spec) {
  GrassmannLexer lx(text);
  GElem out(spec);
  bool first = true;
  while (!lx.done()) {
    bool negative = false;
    if (lx.accept('-'))
      negative = true;
    else if (!first && !lx.accept('+'))
      throw ParseError(lx.pos(), "expected '+' or '-'");
    else if (first)
      lx.accept('+');
    first = false;
    Scalar coeff = Scalar::one(spec.field());
    Subset s = 0;
    if (lx.peek() == 'e') {
      s = parse_basis(lx, spec);
    } else {
      std::size_t at = lx.pos();
      std::string num = lx.number();
      try {
        coeff = parse_scalar(num, spec.field());
      } catch (const ParseError&) {
        throw ParseError(at, "malformed coefficient '" + num + "'");
      }
      if (lx.accept('*')) {
        if (lx.peek() == 'e')
          s = parse_basis(lx, spec);
        else if (lx.accept('1'))
          s = 0;
        else
          throw ParseError(lx.pos(), "expected a basis element");
      }
    }
    if (negative) coeff = -coeff;
    if (s == 0 && !spec.unital() && !coeff.is_zero())
      throw ParseError(lx.pos(), "unit term in a nonunitary algebra");
    out.add_term(s, coeff);
  }
  if (first) throw ParseError(0, "empty Grassmann element");
  return out;
}

}  // namespace gpi
