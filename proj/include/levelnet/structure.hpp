#pragma once

// Structural queries over valid networks: lowest stable ancestors,
// recoverability, biconnected components, level, cut-arc sets, simplicity.

#include <set>
#include <string>
#include <vector>

#include "levelnet/network.hpp"

namespace levelnet {

// Lowest stable ancestor of taxon set A: the unique lowest vertex contained
// in every root-to-a path for every a in A.  Computed by removal
// reachability: v stabilizes a iff deleting v disconnects the root from a;
// the common stabilizers of A form a chain and the reachability-last one is
// returned.  Throws on unknown taxa or empty A.
Vertex lsa(const Network& net, const std::set<std::string>& A);

// True iff lsa(net, all taxa) is the root.
bool isRecoverable(const Network& net);

// Partition of the arc indices (positions in net.arcs()) into maximal
// cut-arc-free subgraphs of the underlying undirected multigraph; a cut-arc
// is a singleton component.  A parallel pair is never a cut-arc.
std::vector<std::vector<int>> biconnectedComponents(const Network& net);

// Maximum number of reticulations inside one biconnected component (0 for a
// tree).  A reticulation belongs to the component holding its in-arcs.
int level(const Network& net);
bool isStrictLevel(const Network& net, int k);

struct CutArcSetReport {
  // Descendant-taxon sets of cut-arcs with at least two taxa, plus X itself.
  std::vector<std::set<std::string>> sets;
  // Members of `sets` other than X that strictly contain no other member
  // with more than one taxon.  Empty iff the network is simple.
  std::vector<std::set<std::string>> minimalSets;
};

CutArcSetReport cutArcSets(const Network& net);

// True iff the network has no minimal cut-arc set (every cut-arc is pendant).
bool isSimple(const Network& net);

}  // namespace levelnet
