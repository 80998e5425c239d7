#pragma once

// Drawings of cobordism matrices. Sources are drawn on the top edge and
// targets on the bottom edge unless the direction is flipped.

#include <string>

#include "dcc/matcat.hpp"
#include "dcc/serialize.hpp"

namespace dcc {

enum class RenderFormat { Svg, Dot, Json };
enum class Direction { TopDown, BottomUp };

std::string render(const MatArrow& m, const Alphabet& al, RenderFormat format,
                   Direction direction = Direction::TopDown);

/// Parses "svg", "dot" or "json"; throws std::invalid_argument otherwise.
RenderFormat parse_render_format(const std::string& name);
/// Parses "down" or "up".
Direction parse_direction(const std::string& name);

}  // namespace dcc
