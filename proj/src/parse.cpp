#include "gpi/parse.hpp"

#include <cctype>

namespace gpi {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const FieldSpec& field)
      : text_(text), field_(field) {}

  NCPoly run() {
    NCPoly out = sum();
    skip();
    if (pos_ < text_.size())
      throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return out;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
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
    if (!accept(c)) {
      if (pos_ >= text_.size())
        throw ParseError(pos_, std::string("expected '") + c + "' before end of input");
      throw ParseError(pos_, std::string("expected '") + c + "'");
    }
  }
  // The circle keyword: 'o' not followed by an identifier character.
  bool at_circle() {
    if (peek() != 'o') return false;
    std::size_t next = pos_ + 1;
    return next >= text_.size() ||
           !(std::isalnum(static_cast<unsigned char>(text_[next])) || text_[next] == '_');
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) {
      if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
      throw ParseError(pos_, "expected a number");
    }
    return text_.substr(start, pos_ - start);
  }

  NCPoly sum() {
    NCPoly out = circ();
    for (;;) {
      if (accept('+'))
        out += circ();
      else if (accept('-'))
        out -= circ();
      else
        return out;
    }
  }

  NCPoly circ() {
    NCPoly out = prod();
    while (at_circle()) {
      ++pos_;
      out = nc_circle(out, prod());
    }
    return out;
  }

  NCPoly prod() {
    NCPoly out = unary();
    while (accept('*')) out = out * unary();
    return out;
  }

  NCPoly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  NCPoly power() {
    NCPoly base = atom();
    if (accept('^')) {
      std::size_t at = pos_;
      std::string e = digits();
      if (e.size() > 4) throw ParseError(at, "exponent too large");
      base = nc_power(base, std::stoul(e));
    }
    return base;
  }

  NCPoly atom() {
    char c = peek();
    if (c == '\0') throw ParseError(pos_, "unexpected end of input");
    if (c == 'x') {
      ++pos_;
      std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError(at, "expected a variable index after 'x'");
      std::string idx = digits();
      if (idx.size() > 6 || std::stoul(idx) == 0)
        throw ParseError(at, "variable index out of range");
      return NCPoly::variable(field_, true, static_cast<Var>(std::stoul(idx)));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      std::string num = digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::string den = digits();
        if (mpz_class(den) == 0) throw ParseError(at, "zero denominator");
        num += "/" + den;
      }
      return NCPoly::constant(field_, parse_scalar(num, field_));
    }
    if (accept('(')) {
      NCPoly inner = sum();
      expect(')');
      return inner;
    }
    if (accept('[')) {
      NCPoly acc = sum();
      expect(',');
      acc = nc_commutator(acc, sum());
      while (accept(',')) acc = nc_commutator(acc, sum());
      expect(']');
      return acc;
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  const std::string& text_;
  FieldSpec field_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_expr(const std::string& text, const FieldSpec& field, bool unital) {
  NCPoly f = Parser(text, field).run();
  if (!unital) {
    if (!f.coefficient({}).is_zero())
      throw ParseError(0, "constant term in the nonunitary free algebra");
    return f.in_context(false);
  }
  return f;
}

}  // namespace gpi
