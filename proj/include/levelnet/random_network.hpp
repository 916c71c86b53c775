#pragma once

// Seeded random generation of recoverable binary level-<=2 networks.
//
// Networks are grown recursively: a taxon set becomes either a tree split
// or a blob shaped like a catalog generator whose sides carry recursively
// grown groups.  Every reticulation side carries a group; generators with a
// parallel arc pair carry at least one group on it (a bare parallel pair
// cannot be seen by any restriction, so such networks are not determined by
// their trinets and are excluded by construction).  Output is a
// deterministic function of the request and is validated before return.

#include <cstdint>
#include <string>

#include "levelnet/network.hpp"

namespace levelnet {

struct RandomNetSpec {
  int leafCount = 3;         // >= 3
  int reticulationBudget = 2;  // maximum reticulations per blob: 0, 1 or 2
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument on leafCount < 3 or a budget outside 0..2.
Network randomLevel2Network(const RandomNetSpec& spec);

// A simple network with the given catalog generator: one pendant leaf per
// reticulation side, every other leaf pendant on a random arc side.
// Requires one leaf per reticulation side, plus one on the parallel pair
// for G1 and G2d, and two leaves total for G2a (a network whose only leaf
// hangs below the bottom reticulation of G2a is not recoverable).
Network randomSimpleNetwork(const std::string& generatorId, int leafCount,
                            std::uint64_t seed);

}  // namespace levelnet
