#pragma once

#include <vector>

#include "snarklab/multipole.hpp"

namespace snarklab {

struct TwoFactorWitness {
  std::vector<std::vector<int>> circuits;  // vertex sequences
  int odd_circuits = 0;
};

struct OddnessResult {
  int oddness = 0;
  TwoFactorWitness witness;
};

/// Minimum number of odd circuits over all 2-factors, by enumerating
/// complements of perfect matchings. Input must be bridgeless.
OddnessResult oddness(const Multipole& g);

struct ResistanceResult {
  int resistance = 0;
  std::vector<int> removal;  // edge ids
  bool removal_independent = true;
};

/// Minimum number of edges whose removal leaves a colorable graph; removal
/// sets are unrestricted (size 1 is impossible and skipped).
ResistanceResult resistance(const Multipole& g);

struct MeasuresRecord {
  int oddness = 0;
  int resistance = 0;
  TwoFactorWitness witness_two_factor;
  std::vector<int> witness_removal;
};

MeasuresRecord measures_record(const Multipole& g);

/// All perfect matchings as sorted edge-id lists, in a fixed order.
std::vector<std::vector<int>> perfect_matchings(const Multipole& g);

}  // namespace snarklab
