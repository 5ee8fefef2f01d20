#pragma once

#include <vector>

#include "denthex/exact.hpp"
#include "denthex/lattice.hpp"

namespace denthex {

/// Exact number of perfect matchings of the region's planar dual: branch on
/// the first live cell in canonical order, propagate forced moves after every
/// branch, memoize on the residual cell set. Returns 0 for unbalanced or
/// untileable regions. Pure; safe to call concurrently on distinct inputs.
Count count_tilings(const Region& r);

/// Same engine on an explicit graph; throws NotBipartite.
Count count_matchings(const Graph& g);

/// Up to `limit` distinct tilings in deterministic DFS order, each a sorted
/// set of lozenges partitioning the region.
std::vector<std::vector<Lozenge>> enumerate_tilings(const Region& r, long limit);

}  // namespace denthex
