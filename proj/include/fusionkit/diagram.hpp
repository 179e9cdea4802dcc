#pragma once

// SVG drawings of rank-2 weight diagrams: lattice points, the weights of a
// module (optionally shifted) with multiplicities, Weyl reflection lines, the
// dominant chamber and the affine wall <x, theta> = k + h^vee.

#include <optional>
#include <string>

#include "fusionkit/cartan.hpp"

namespace fusionkit {

struct DiagramSpec {
  AlgebraId algebra{Family::A, 2};
  std::optional<Weight> highest;  // no module drawn when empty
  std::optional<Weight> shift;    // plotted points are beta + shift
  std::optional<Label> level;     // draws the affine wall and the alcove
  bool show_axes = true;          // reflection lines and chamber shading
  bool show_mults = true;
};

/// Byte-stable SVG text. Throws std::invalid_argument unless the algebra has
/// rank 2 and level (if given) is >= 1.
std::string render_svg(const DiagramSpec& spec);

}  // namespace fusionkit
