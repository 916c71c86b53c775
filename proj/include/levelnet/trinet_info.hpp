#pragma once

// Per-entry analysis record for trinets/binets.
//
// The reconstruction stages repeatedly ask the same questions of each
// collection entry (level, simplicity, minimal cut-arc sets, generator and
// side placements, same-side and ordering relations).  analyzeTrinet
// answers them once; the answers are pure functions of the network.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "levelnet/generator.hpp"
#include "levelnet/network.hpp"

namespace levelnet {

struct TrinetInfo {
  int leafCount = 0;
  int level = 0;
  bool simple = false;
  // Proper minimal cut-arc sets (empty for simple networks).
  std::vector<std::set<std::string>> minimalCutArcSets;

  // Populated when simple and level >= 1 and the generator is in the
  // catalog ("G1", "G2a".."G2d"); empty string otherwise.
  std::string generatorId;
  // One leaf->catalog-side map per generator automorphism (all equivalent
  // placements of this entry onto the catalog shape).
  std::vector<std::map<std::string, std::string>> placements;

  // Unordered leaf pairs sharing an arc side of the entry's own generator
  // (stored with first < second).
  std::set<std::pair<std::string, std::string>> sameSide;
  // Ordered same-side pairs (x,y) where the parent of x is an ancestor of y
  // (x nearer the root).
  std::set<std::pair<std::string, std::string>> before;

  // For each unordered taxon pair {p,q} of the entry: the entry taxa that
  // descend from LSA({p,q}).  Keyed by the sorted pair.
  std::map<std::pair<std::string, std::string>, std::set<std::string>>
      taxaBelowPairLsa;
};

TrinetInfo analyzeTrinet(const Network& net);

// Memoized lookup keyed by certificate; safe to call repeatedly.
const TrinetInfo& analyzeTrinetCached(const std::string& certificateKey,
                                      const Network& net);

}  // namespace levelnet
