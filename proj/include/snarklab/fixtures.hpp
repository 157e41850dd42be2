#pragma once

#include "snarklab/multipole.hpp"

namespace snarklab {
namespace fixtures {

/// Outer cycle 0-1-2-3-4-0, inner pentagram 5-7-9-6-8-5, spokes i <-> i+5.
Multipole petersen();
Multipole k4();
Multipole k33();
Multipole cube_q3();
/// Isaacs flower snark J_n, n odd. Vertices c_i=4i, x_i=4i+1, y_i=4i+2, z_i=4i+3.
Multipole flower_snark(int n);
/// 4-cycle with one dangling edge per vertex; cyclic semiedge order.
Multipole c4_pole();
/// Two isolated edges; semiedge order (a1, a2, b1, b2) per edge.
Multipole two_isolated_edges_pole();
/// Two adjacent vertices each carrying two dangling edges; order (u1, u2, v1, v2).
Multipole adjacent_pair_gadget();

}  // namespace fixtures
}  // namespace snarklab
