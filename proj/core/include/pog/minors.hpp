#pragma once

#include "pog/graph.hpp"

namespace pog {

enum class MinorPattern { K4, K23 };

/// Default size guard (non-isolated vertices) for the exact minor routines.
inline constexpr int kDefaultMinorGuard = 15;

/// Exact minor test for K4 or K2,3.
///
/// Both patterns have maximum degree three, so minor containment coincides with
/// topological containment. K4 is decided by series-parallel reduction; K2,3 by
/// looking for a hub pair joined by three internally disjoint paths of length >= 2.
/// Throws GuardExceeded("too large for exact minor search") above `guard`.
bool has_minor(const Graph& g, MinorPattern pattern, int guard = kDefaultMinorGuard);

/// {K4, K2,3}-minor-free.
bool is_outerplanar(const Graph& g, int guard = kDefaultMinorGuard);

}  // namespace pog
