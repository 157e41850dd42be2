#pragma once

#include <string>

#include "snarklab/multipole.hpp"

namespace snarklab {

/// Encode a simple closed graph as a graph6 line (no trailing newline, no header).
std::string graph6_encode(const Multipole& g);

/// Decode one graph6 line; an optional ">>graph6<<" header is accepted.
Multipole graph6_decode(const std::string& line);

}  // namespace snarklab
