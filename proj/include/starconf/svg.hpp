#pragma once

// Static SVG rendering of plane configurations in the affine chart x2 = 1.

#include <string>

#include "starconf/json_io.hpp"

namespace starconf {

/// Renders "points", "hyperplanes" and "conics" of a configuration JSON.
/// The viewport is the bounding box of the finite points padded by 15%
/// (or [-10, 10]^2 without points). Throws unless n = 2.
std::string render_svg(const Json& config);

}  // namespace starconf
