#pragma once

#include <optional>
#include <string>

#include "pog/diagram.hpp"

namespace pog {

enum class RenderFormat { Svg, Dot };

std::optional<RenderFormat> render_format_from_string(const std::string& s);

/// Each block on its own circle (blocks left to right), vertices equally
/// spaced, boundary edges as arcs, chords as segments. Crossed chords are
/// drawn in red and every crossing point gets a mark. Byte-deterministic.
/// Throws InvalidInput on an invalid diagram.
std::string render(const Diagram& d, RenderFormat f);

}  // namespace pog
