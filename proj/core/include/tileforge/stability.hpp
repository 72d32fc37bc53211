#pragma once

#include <vector>

#include "tileforge/assembly.hpp"
#include "tileforge/tas.hpp"

namespace tileforge {

// Weight of the bond between c and its neighbor in direction d (0 if unbound).
int bond_strength(const Assembly& a, const Tileset& ts, const Coord& c, Dir d);

// Minimum cut of the binding graph. Exact for any size via a fast path at
// tau<=2 group queries; general weighted global min-cut (Stoer-Wagner) is
// used by is_tau_stable only when needed (tau >= 3).
// Returns true iff every cut has weight >= tau. Single tiles are stable.
bool is_tau_stable(const Assembly& a, const Tileset& ts, int tau);

// Global min cut by Stoer-Wagner; intended for small assemblies.
// Requires the binding graph to be connected and at least 2 tiles.
int64_t min_cut_stoer_wagner(const Assembly& a, const Tileset& ts);

}  // namespace tileforge
