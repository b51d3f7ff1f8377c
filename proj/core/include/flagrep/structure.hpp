#pragma once

#include <memory>
#include <optional>

#include "flagrep/complex.hpp"

namespace flagrep {

struct DecompositionCertificate {
  enum class Kind { RibBase, Shed };
  Kind kind = Kind::RibBase;
  std::optional<Vertex> vertex;
  std::optional<Tuple> sub_a;
  // deletion branch, link branch
  std::shared_ptr<const DecompositionCertificate> deletion;
  std::shared_ptr<const DecompositionCertificate> link;
  // some link descent in this subtree used a' that is not covered by a
  bool non_covering = false;
};

struct DecompositionResult {
  bool ok = false;
  std::shared_ptr<const DecompositionCertificate> certificate;
};

bool is_color_shifted(const ColoredComplex& c);
bool is_color_compressed(const ColoredComplex& c);
// Complex-level C_t: each fiber of color-t parts becomes a colex initial segment of the present V_t.
ColoredComplex color_compress(const ColoredComplex& c, int t);

DecompositionResult is_vertex_decomposable(const ColoredComplex& c);
// a may have any length; the coloring of c is not used.
DecompositionResult is_macaulay_decomposable(const ColoredComplex& c, const Tuple& a);
// Is c an a-rib of a simplex over some ordered partition of its vertices?
bool is_rib_of_simplex(const ColoredComplex& c, const Tuple& a);

enum class SplitPolicy { HighestColor, LowestColor };
std::optional<Vertex> macaulay_shedding_vertex(const ColoredComplex& c,
                                               SplitPolicy policy = SplitPolicy::HighestColor);

}  // namespace flagrep
