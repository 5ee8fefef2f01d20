#pragma once

#include <string>

#include "denthex/lattice.hpp"

namespace denthex {

/// Parses a region spec document:
///   {"a":2,"b":2,"c":2,"k":1,
///    "alpha":[{"side":"S","pos":1},{"side":"NE","pos":2}],
///    "beta":[{"side":"N","pos":1}]}
/// Sides: S, NE, NW for alpha dents; N, SE, SW for beta dents. Positions are
/// 1-based along the counterclockwise boundary walk from the western corner.
/// Throws ParseError on malformed JSON and InvalidDent/InvalidParams on
/// semantic problems.
HexDentSpec parse_spec(const std::string& json_text);

HexDentSpec load_spec_file(const std::string& path);

/// Inverse of parse_spec (used for sweep failure reproducers).
std::string spec_to_json(const HexDentSpec& spec);

}  // namespace denthex
