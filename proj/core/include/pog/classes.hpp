#pragma once

#include <optional>

#include "pog/diagram.hpp"
#include "pog/minors.hpp"

namespace pog {

struct ClassFlags {
  bool outerplanar = false;
  bool k4_minor_free = false;
  bool k23_minor_free = false;
  bool pseudo_outerplanar = false;
  /// Some valid drawing has every block on a closed disk.
  bool quasi_hamiltonian_po = false;
};

/// Minor flags use the exact minor tests (guard `minor_guard`); the drawing
/// flags use exhaustive order search (guard `block_guard` per block).
ClassFlags class_membership(const Graph& g, int minor_guard = kDefaultMinorGuard,
                            int block_guard = kDefaultRecognizeGuard);

/// A valid drawing whose blocks are all closed disks, if one exists.
std::optional<Diagram> recognize_closed(const Graph& g, int guard = kDefaultRecognizeGuard);

}  // namespace pog
