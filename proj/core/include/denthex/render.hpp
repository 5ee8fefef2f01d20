#pragma once

#include <optional>
#include <string>
#include <vector>

#include "denthex/lattice.hpp"

namespace denthex {

/// ASCII picture on the half-column grid with / \ _ glyphs. Without a tiling
/// all triangle edges of the region are drawn; with one, the edge interior to
/// each lozenge is omitted. Byte-deterministic for a fixed input.
std::string render_ascii(const Region& r,
                         const std::optional<std::vector<Lozenge>>& tiling = std::nullopt);

/// SVG document with one polygon per cell and, when given, one outlined
/// polygon per lozenge. Byte-deterministic for a fixed input.
std::string render_svg(const Region& r,
                       const std::optional<std::vector<Lozenge>>& tiling = std::nullopt);

}  // namespace denthex
