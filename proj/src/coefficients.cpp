#include "gpi/coefficients.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace gpi {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint64_t characteristic) : p_(characteristic) {
  if (p_ == 2) throw OutOfScope("characteristic 2 is out of scope");
  if (p_ != 0 && !is_prime(p_))
    throw PreconditionError("characteristic must be 0 or an odd prime, got " +
                            std::to_string(p_));
  if (p_ > (std::uint64_t{1} << 31))
    throw PreconditionError("characteristic too large (limit 2^31)");
}

std::string to_string(const FieldSpec& f) {
  return f.is_rational() ? "Q" : "F_" + std::to_string(f.characteristic());
}

namespace {

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r = v % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Scalar::Scalar(const FieldSpec& field, long value) : field_(field) {
  if (field_.is_rational()) {
    q_ = value;
  } else {
    r_ = reduce(mpz_class(value), field_.characteristic());
  }
}

Scalar::Scalar(const FieldSpec& field, const mpz_class& value)
    : field_(field) {
  if (field_.is_rational())
    q_ = value;
  else
    r_ = reduce(value, field_.characteristic());
}

Scalar::Scalar(const FieldSpec& field, const mpq_class& value)
    : field_(field) {
  if (field_.is_rational()) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  const std::uint64_t p = field_.characteristic();
  std::uint64_t den = reduce(value.get_den(), p);
  if (den == 0)
    throw PreconditionError("denominator divisible by the characteristic");
  r_ = reduce(value.get_num(), p) * mod_pow(den, p - 2, p) % p;
}

bool Scalar::is_zero() const noexcept {
  return field_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const noexcept {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

bool Scalar::is_negative() const noexcept {
  return field_.is_rational() && q_ < 0;
}

mpq_class Scalar::to_rational() const {
  if (field_.is_rational()) return q_;
  return mpq_class(mpz_class(static_cast<unsigned long>(r_)));
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw Mismatch("scalar field mismatch: " + gpi::to_string(field_) +
                   " vs " + gpi::to_string(o.field_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  Scalar r(*this);
  if (field_.is_rational())
    r.q_ = 1 / q_;
  else
    r.r_ = mod_pow(r_, field_.characteristic() - 2, field_.characteristic());
  return r;
}

Scalar Scalar::pow(std::uint64_t n) const {
  Scalar r = one(field_);
  Scalar b = *this;
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational())
    q_ += o.q_;
  else
    r_ = (r_ + o.r_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational())
    q_ -= o.q_;
  else
    r_ = (r_ + field_.characteristic() - o.r_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    r_ = r_ * o.r_ % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (field_.is_rational())
    r.q_ = -q_;
  else
    r.r_ = (field_.characteristic() - r_) % field_.characteristic();
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string to_string(const Scalar& s) {
  if (s.field().is_rational()) return s.to_rational().get_str();
  return std::to_string(s.residue());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << to_string(s);
}

Scalar parse_scalar(const std::string& text, const FieldSpec& field) {
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw ParseError(0, "not a number: '" + text + "'");
  if (q.get_den() == 0) throw ParseError(0, "zero denominator in '" + text + "'");
  q.canonicalize();
  return Scalar(field, q);
}

// ---------------------------------------------------------------------------

CoeffPoly::CoeffPoly(const Scalar& constant) : field_(constant.field()) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

CoeffPoly CoeffPoly::variable(const FieldSpec& field, Indeterminate t) {
  CoeffPoly p(field);
  p.terms_.emplace(Exponents{{t, 1}}, Scalar::one(field));
  return p;
}

void CoeffPoly::check_same(const CoeffPoly& o) const {
  if (!(field_ == o.field_))
    throw Mismatch("polynomial field mismatch: " + gpi::to_string(field_) +
                   " vs " + gpi::to_string(o.field_));
}

void CoeffPoly::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<Indeterminate> CoeffPoly::indeterminates() const {
  std::vector<Indeterminate> out;
  for (const auto& [e, c] : terms_)
    for (const auto& [t, k] : e) out.push_back(t);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint32_t CoeffPoly::degree_in(Indeterminate t) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_)
    for (const auto& [s, k] : e)
      if (s == t) d = std::max(d, k);
  return d;
}

CoeffPoly CoeffPoly::substitute(
    const std::map<Indeterminate, Scalar>& values) const {
  CoeffPoly out(field_);
  for (const auto& [e, c] : terms_) {
    Exponents rest;
    Scalar coeff = c;
    for (const auto& [t, k] : e) {
      auto it = values.find(t);
      if (it == values.end())
        rest.emplace_back(t, k);
      else
        coeff *= it->second.pow(k);
    }
    out.add_term(rest, coeff);
  }
  return out;
}

Scalar CoeffPoly::evaluate(const std::map<Indeterminate, Scalar>& values) const {
  CoeffPoly r = substitute(values);
  if (r.is_zero()) return Scalar::zero(field_);
  if (r.terms_.size() != 1 || !r.terms_.begin()->first.empty())
    throw PreconditionError("evaluate: unassigned indeterminate");
  return r.terms_.begin()->second;
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

namespace {

Exponents multiply_exponents(const Exponents& a, const Exponents& b) {
  Exponents out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  a.check_same(b);
  CoeffPoly out(a.field_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term(multiply_exponents(ea, eb), ca * cb);
  return out;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& o) {
  *this = *this * o;
  return *this;
}

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly out(field_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

CoeffPoly CoeffPoly::pow(std::uint64_t n) const {
  CoeffPoly r = CoeffPoly(Scalar::one(field_));
  CoeffPoly b = *this;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

CoeffPoly cp_mul(const CoeffPoly& a, const CoeffPoly& b) { return a * b; }
bool cp_is_zero(const CoeffPoly& a) { return a.is_zero(); }

std::string to_string(const CoeffPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Scalar mag = c.is_negative() ? -c : c;
    if (first)
      os << (c.is_negative() ? "-" : "");
    else
      os << (c.is_negative() ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (!mag.is_one() || e.empty()) {
      os << to_string(mag);
      wrote = true;
    }
    for (const auto& [t, k] : e) {
      if (wrote) os << '*';
      os << 't' << t;
      if (k != 1) os << '^' << k;
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CoeffPoly& p) {
  return os << to_string(p);
}

}  // namespace gpi
