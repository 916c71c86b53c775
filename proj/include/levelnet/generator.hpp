#pragma once

// Generator catalog for simple level-1 and level-2 networks.
//
// The generator of a simple network is the directed multigraph left after
// deleting its leaves and suppressing indegree-1 outdegree-1 vertices.  Its
// "sides" carry the leaves: every arc is an arc side (holding an ordered,
// possibly empty leaf list) and every indegree-2 outdegree-0 vertex is a
// reticulation side (holding exactly one leaf).  There is one level-1
// generator (G1) and there are four level-2 generators (G2a-G2d):
//
//   G1 : r=>t doubled arc; arc sides L,R; reticulation side T1=t.
//   G2a: r->a, r->b, a->b, a->c, b->c; sides S1..S5; reticulation side T1=c.
//   G2b: r->a, r->c, a->b, a->d, b->c, b->d; sides S1..S6; T1=c, T2=d.
//   G2c: r->a, r->b, a->c, b->c, a->d, b->d; sides L1,R1,L2,R2,L3,R3;
//        T1=c, T2=d (the only level-2 generator with symmetric
//        reticulation sides).
//   G2d: r->a, r->c, a=>b doubled arc (sides L,R), b->c; S1=(r,a),
//        S2=(r,c), S3=(b,c); reticulation side T1=c.
//
// Side symmetry: two reticulation sides are symmetric when some generator
// automorphism exchanges them; two arc sides are symmetric when an
// automorphism fixing every reticulation side does.  Parallel arc copies
// are always mutually symmetric.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "levelnet/network.hpp"

namespace levelnet {

struct Generator {
  std::string catalogId;  // "G1", "G2a".."G2d"; empty when unrecognized
  int vertexCount = 0;    // dense ids, 0 is the root
  std::vector<Arc> arcs;  // multiset; the index is the arc's identity
  std::map<std::string, int> arcSides;            // name -> arc index
  std::map<std::string, Vertex> reticulationSides;  // name -> (2,0) vertex

  std::vector<std::string> arcSideNames() const;           // sorted
  std::vector<std::string> reticulationSideNames() const;  // sorted
};

struct SymmetryClasses {
  std::vector<std::set<std::string>> reticulationClasses;
  std::vector<std::set<std::string>> arcClasses;
};

// Leaf placement on a generator: every reticulation side maps to exactly
// one leaf; every arc side holds an ordered list, tail (nearer the root)
// first.
struct SideAssignment {
  std::map<std::string, std::string> leafToSide;
  std::map<std::string, std::vector<std::string>> sideOrder;
};

// The five catalog generators, in order G1, G2a, G2b, G2c, G2d.
const std::vector<Generator>& generatorCatalog();
const Generator& catalogGenerator(const std::string& id);

// All side-level isomorphisms from g onto target: each maps g's side names
// to target's side names (parallel copies contribute both pairings).
// Empty when the generators are not isomorphic.
std::vector<std::map<std::string, std::string>> generatorSideIsomorphisms(
    const Generator& g, const Generator& target);

// Matches g against the catalog.  Returns the catalog id plus the
// lexicographically smallest side correspondence.  Throws when g matches no
// catalog entry (the input exceeded level 2).
struct GeneratorMatch {
  std::string catalogId;
  std::map<std::string, std::string> sideMap;  // g side -> catalog side
};
GeneratorMatch identifyGenerator(const Generator& g);

// Symmetry classes computed by automorphism enumeration.
SymmetryClasses symmetryClasses(const Generator& g);

// Generator of a simple network with level >= 1, together with where each
// leaf lives.  When the generator is recognized, sides carry catalog names;
// otherwise local names (catalogId empty).  Throws when the network is not
// simple or is a tree.
std::pair<Generator, SideAssignment> underlyingGenerator(const Network& net);

// Builds the simple network realizing an assignment: reticulation leaves
// pendant, arc sides subdivided per their ordered lists.  Throws when a
// reticulation side lacks a leaf or an unknown side/leaf appears.
Network attach(const Generator& g, const SideAssignment& assignment);

// True iff the trinet covers every arc side of its generator (and hence at
// least one side of each parallel pair).  The trinet's generator must match
// g's catalog id.
bool isCrucial(const Network& trinet, const Generator& g);

}  // namespace levelnet
