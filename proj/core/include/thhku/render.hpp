#pragma once

#include <string>

#include "thhku/torsion_block.hpp"

namespace thhku {

// Layout shared by both formats: x = (degree - origin) / 4 and y = h + j/5,
// so a u-step moves (0.5, 0.2) and a p-step moves (0, 1).
struct DiagramLayout {
  int origin = 0;  // degree placed at x = 0; block.lo when negative
};

std::string render_tikz(const TorsionBlock& block, DiagramLayout layout = {-1});
std::string render_svg(const TorsionBlock& block, DiagramLayout layout = {-1});

}  // namespace thhku
