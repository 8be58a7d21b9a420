#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pog/diagram.hpp"

namespace pog {

enum class Family { Pn, Qn, Gn, Mat12, Fig1, RandomPO };

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

struct FamilySpec {
  Family family = Family::Pn;
  int n = 1;
  std::uint64_t seed = 0;
  double density = 0.5;  // RandomPO only
};

/// Cycle x0..xn w yn..y0 v u plus chords x_i y_i, x0 v and y0 u.
/// Vertices: x_i = i, w = n+1, y_i = 2n+2-i, v = 2n+3, u = 2n+4.
Diagram gen_pn(int n);

/// Cycle z1..z2n with a triangle u_i v_i w_i hung on z_{2i-1} z_{2i} by four
/// edges. Group i occupies 5(i-1)..5i-1 as z_{2i-1}, v_i, u_i, w_i, z_{2i}.
/// For n = 1 the "cycle" z1 z2 is a single edge, so Q_1 has 8 edges.
Diagram gen_qn(int n);

/// Cycle v1..vn, chords v1 v_i (3 <= i <= n-1) and v_{2i} v_{2i+2}
/// (1 <= i <= n/2 - 1). v_i = i-1.
Diagram gen_gn(int n);

/// Twelve vertices: four five-edge fans S_1, S_4, S_7, S_10 around the circle
/// plus the diagonals v1 v7 and v4 v10. v_i = i-1.
Diagram gen_mat12();

/// K4 on 0..3 and K2,3 with hubs 0, 4 and leaves 5, 6, 7.
Diagram gen_fig1();

/// Random circular order, its boundary cycle, then chords tried in random
/// order and kept with probability `density` when the drawing stays valid.
Diagram gen_random_po(int n, std::uint64_t seed, double density);

/// Dispatches on the family; throws InvalidInput on out-of-range parameters.
Diagram generate(const FamilySpec& spec);

}  // namespace pog
