#include "gpi/catalog.hpp"

namespace gpi {

namespace {

NCPoly var(const FieldSpec& f, bool unital, Var i) {
  return NCPoly::variable(f, unital, i);
}

NCPoly pow_var(const FieldSpec& f, bool unital, Var i, std::uint64_t e) {
  return NCPoly::monomial(f, unital, Word(e, i), Scalar::one(f));
}

void reject_char_two(const AlgebraSpec& spec) {
  if (spec.field().characteristic() == 2)
    throw OutOfScope("characteristic 2 is out of scope");
}

std::string alg_name(const AlgebraSpec& spec) {
  return (spec.unital() ? "G(" : "G0(") + std::to_string(spec.m()) + ")";
}

std::string x(Var i) { return "x" + std::to_string(i); }

std::string h_text(std::uint32_t j) {
  std::string out;
  for (Var k = 1; k <= j; ++k)
    out += (k > 1 ? "*[" : "[") + x(2 * k - 1) + "," + x(2 * k) + "]";
  return out;
}

std::string w_text(std::uint32_t n, std::uint64_t p) {
  std::string e = "^" + std::to_string(p - 1), out;
  for (Var k = 1; k <= n; ++k)
    out += (k > 1 ? "*[" : "[") + x(2 * k - 1) + "," + x(2 * k) + "]*" + x(2 * k - 1) + e +
           "*" + x(2 * k) + e;
  return out;
}

std::string chain_text(std::uint32_t n) {
  std::string out = x(1);
  for (Var k = 2; k <= n; ++k) out += " o " + x(k);
  return out;
}

std::string pow_text(Var i, std::uint64_t p) { return x(i) + "^" + std::to_string(p); }

}  // namespace

NCPoly h_poly(std::uint32_t j, const FieldSpec& field, bool unital) {
  if (j < 1) throw PreconditionError("h_j needs j >= 1");
  NCPoly out = nc_commutator(var(field, unital, 1), var(field, unital, 2));
  for (Var r = 2; r <= j; ++r)
    out = out * nc_commutator(var(field, unital, 2 * r - 1),
                              var(field, unital, 2 * r));
  return out;
}

NCPoly w_poly(std::uint32_t n, const FieldSpec& field, bool unital) {
  if (n < 1) throw PreconditionError("w_n needs n >= 1");
  const std::uint64_t p = field.characteristic();
  if (p == 0) throw PreconditionError("w_n is defined only for p > 2");
  std::optional<NCPoly> out;
  for (Var k = 1; k <= n; ++k) {
    NCPoly factor =
        nc_commutator(var(field, unital, 2 * k - 1), var(field, unital, 2 * k)) *
        pow_var(field, unital, 2 * k - 1, p - 1) *
        pow_var(field, unital, 2 * k, p - 1);
    out = out ? *out * factor : factor;
  }
  return *out;
}

NCPoly circle_chain(std::uint32_t n, const FieldSpec& field, bool unital) {
  if (n < 1) throw PreconditionError("circle chain needs n >= 1");
  std::vector<NCPoly> args;
  for (Var i = 1; i <= n; ++i) args.push_back(var(field, unital, i));
  return nc_circle_chain(args);
}

std::vector<NCPoly> GeneratorSet::polys() const {
  std::vector<NCPoly> out;
  for (const auto& g : elements) out.push_back(g.poly);
  return out;
}

GeneratorSet t_ideal_generators(const AlgebraSpec& spec) {
  reject_char_two(spec);
  const FieldSpec& f = spec.field();
  const bool u = spec.unital();
  const int m = spec.m();
  const std::uint64_t p = f.characteristic();
  GeneratorSet g{"T(" + alg_name(spec) + ")", GeneratorKind::TIdeal, spec, {},
                 static_cast<std::uint32_t>(m / 2 + 1), std::nullopt, false, ""};
  if (p > 2) g.r0 = mpq_class(m + 1, 2 * (2 * p - 1));
  if (g.r0) g.r0->canonicalize();

  NCPoly triple = nc_commutator({var(f, u, 1), var(f, u, 2), var(f, u, 3)});
  if (u) {
    g.elements.push_back({triple, "[x1,x2,x3]", "[x1,x2,x3]"});
    g.elements.push_back({h_poly(g.b_m, f, u), "h_" + std::to_string(g.b_m), h_text(g.b_m)});
    g.infinite_field_semantics = true;
    if (p > 2) g.note = "stated for an infinite field of characteristic p";
    return g;
  }
  if (p > 2)
    g.elements.push_back({pow_var(f, u, 1, p), pow_text(1, p), pow_text(1, p)});
  g.elements.push_back({triple, "[x1,x2,x3]", "[x1,x2,x3]"});
  if (m % 2 == 0) {
    std::uint32_t k = static_cast<std::uint32_t>(m / 2 + 1);
    g.elements.push_back(
        {circle_chain(k, f, u), "circle chain of length " + std::to_string(k), chain_text(k)});
  } else {
    std::uint32_t k = static_cast<std::uint32_t>((m + 1) / 2);
    NCPoly chain = circle_chain(k, f, u);
    NCPoly tail = var(f, u, k + 1);
    std::string name = "circle chain of length " + std::to_string(k);
    g.elements.push_back(
        {chain * tail, "(" + name + ")*" + x(k + 1), "(" + chain_text(k) + ")*" + x(k + 1)});
    g.elements.push_back(
        {tail * chain, x(k + 1) + "*(" + name + ")", x(k + 1) + "*(" + chain_text(k) + ")"});
    if (p > 2 && (m + 1) % (2 * p - 1) == 0) {
      std::uint32_t n = static_cast<std::uint32_t>((m + 1) / (2 * (2 * p - 1)));
      if (n >= 1) g.elements.push_back({w_poly(n, f, u), "w_" + std::to_string(n), w_text(n, p)});
    }
  }
  return g;
}

GeneratorSet cp_generators(const AlgebraSpec& spec, bool verbatim) {
  reject_char_two(spec);
  const FieldSpec& f = spec.field();
  const bool u = spec.unital();
  const int m = spec.m();
  const std::uint64_t p = f.characteristic();
  GeneratorSet g{"CP(" + alg_name(spec) + ")", GeneratorKind::TSpace, spec, {},
                 static_cast<std::uint32_t>(m / 2 + 1), std::nullopt, false, ""};
  if (p > 2) {
    g.r0 = mpq_class(m + 1, 2 * (2 * p - 1));
    g.r0->canonicalize();
  }
  NCPoly c12 = nc_commutator(var(f, u, 1), var(f, u, 2));
  g.elements.push_back({c12, "[x1,x2]", "[x1,x2]"});
  g.elements.push_back({h_poly(2, f, u), "[x1,x2][x3,x4]", h_text(2)});

  if (u) {
    g.infinite_field_semantics = p > 2;
    if (g.b_m >= 2) {
      std::uint32_t b = g.b_m;
      g.elements.push_back({var(f, u, 2 * b - 1) * h_poly(b - 1, f, u),
                            x(2 * b - 1) + "*h_" + std::to_string(b - 1),
                            x(2 * b - 1) + "*" + h_text(b - 1)});
    }
    if (p > 2) {
      g.elements.push_back({pow_var(f, u, 1, p), pow_text(1, p), pow_text(1, p)});
      for (std::uint32_t k = 1; k + 1 <= g.b_m; ++k)
        g.elements.push_back({pow_var(f, u, 2 * k + 1, p) * w_poly(k, f, u),
                              pow_text(2 * k + 1, p) + "*w_" + std::to_string(k),
                              pow_text(2 * k + 1, p) + "*" + w_text(k, p)});
    }
    return g;
  }

  std::uint32_t B = static_cast<std::uint32_t>(m / 2 + (verbatim ? 0 : 1));
  if (verbatim) g.note = "verbatim chain length floor(m/2)";
  if (B >= 1) {
    NCPoly chain = circle_chain(B, f, u);
    std::string name = "circle chain of length " + std::to_string(B);
    g.elements.push_back({chain, name, chain_text(B)});
    g.elements.push_back({chain * var(f, u, B + 1), "(" + name + ")*" + x(B + 1),
                          "(" + chain_text(B) + ")*" + x(B + 1)});
  }
  if (p > 2) {
    g.elements.push_back({pow_var(f, u, 1, p), pow_text(1, p), pow_text(1, p)});
    g.elements.push_back({var(f, u, 2) * pow_var(f, u, 1, p),
                          "x2*" + pow_text(1, p), "x2*" + pow_text(1, p)});
    mpz_class r0_floor = g.r0->get_num() / g.r0->get_den();
    for (std::uint32_t k = 1; k <= r0_floor.get_ui(); ++k)
      g.elements.push_back({w_poly(k, f, u), "w_" + std::to_string(k), w_text(k, p)});
    if (m % 2 == 1 && g.r0->get_den() == 1) {
      std::uint32_t r = static_cast<std::uint32_t>(g.r0->get_num().get_ui());
      g.elements.push_back({var(f, u, 2 * r + 1) * w_poly(r, f, u),
                            x(2 * r + 1) + "*w_" + std::to_string(r),
                            x(2 * r + 1) + "*" + w_text(r, p)});
    }
  }
  return g;
}

}  // namespace gpi
