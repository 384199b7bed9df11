#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpi/free_algebra.hpp"
#include "gpi/grassmann.hpp"

namespace gpi {

/// h_j = [x1,x2][x3,x4]...[x_{2j-1},x_{2j}]
NCPoly h_poly(std::uint32_t j, const FieldSpec& field, bool unital = false);
/// w_n = prod_k [x_{2k-1},x_{2k}] x_{2k-1}^{p-1} x_{2k}^{p-1}; needs p > 2.
NCPoly w_poly(std::uint32_t n, const FieldSpec& field, bool unital = false);
/// (x1 o x2 o ...) o xn
NCPoly circle_chain(std::uint32_t n, const FieldSpec& field,
                    bool unital = false);

enum class GeneratorKind { TIdeal, TSpace };

struct Generator {
  NCPoly poly;
  std::string label;  // e.g. "h_2", "x_3*w_1"
  std::string expr;   // compact form in the expression grammar
};

struct GeneratorSet {
  std::string name;  // e.g. "T(G0(4))", "CP(G(3))"
  GeneratorKind kind;
  AlgebraSpec spec;
  std::vector<Generator> elements;
  std::uint32_t b_m;                   // floor(m/2) + 1
  std::optional<mpq_class> r0;         // (m+1)/(2(2p-1)) when p > 2
  bool infinite_field_semantics = false;
  std::string note;                    // free-form remark for the reader

  std::vector<NCPoly> polys() const;
};

/// Generators of T(G(m)) / T(G0(m)) as a T-ideal.
GeneratorSet t_ideal_generators(const AlgebraSpec& spec);
/// Generators of CP(G(m)) / CP(G0(m)) as a T-space. With `verbatim` the
/// nonunitary circle chains use floor(m/2) instead of floor(m/2) + 1.
GeneratorSet cp_generators(const AlgebraSpec& spec, bool verbatim = false);

}  // namespace gpi
