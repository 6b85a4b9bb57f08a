#pragma once

#include "latcoh/homology.hpp"

#include <string>

namespace latcoh {

/// Weight table with the origin at the lower left, i across and j up,
/// right-aligned in columns of equal width.
std::string render_ascii(const WeightRectangle& rect);

/// Same table as SVG. Birth cells of H^0 classes get a solid frame, those of
/// H^1 classes a dashed one, and the lattice points of `path` are shaded.
std::string render_svg(const WeightRectangle& rect, const MonotonePath& path = {});

}  // namespace latcoh
