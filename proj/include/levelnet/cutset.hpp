#pragma once

// Cut-arc-set detection from trinets.
//
// For taxa x,y the deficiency phi(x,y) counts (with multiplicity) the
// trinets containing both that have a minimal cut-arc set excluding y.  The
// digraph Omega_i holds arc (x,y) iff phi(x,y) <= i.  The closure digraph
// D(T) holds arc (x,y) iff for every other taxon z some trinet on {x,y,z}
// has y below LSA({x,z}).  On exact input Omega_0 equals D(T), and the
// minimal sink sets of D(T) are exactly the minimal cut-arc sets of the
// underlying level-2 network; the finder walks i upward and extracts a set
// from the first Omega_i with an arc.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "levelnet/restriction.hpp"

namespace levelnet {

struct Digraph {
  std::set<std::string> vertices;
  std::set<std::pair<std::string, std::string>> arcs;  // no self-loops
};

struct Condensation {
  // Strongly connected components, ordered by smallest member.
  std::vector<std::set<std::string>> components;
  // Arcs between distinct components, as component indices; acyclic.
  std::set<std::pair<int, int>> componentArcs;
};

// phi over ordered taxon pairs; binets are ignored.  Pairs never co-covered
// by a trinet have deficiency 0.
std::map<std::pair<std::string, std::string>, long long> pairDeficiency(
    const TrinetCollection& T);

Digraph omega(const TrinetCollection& T, long long i);

Digraph closureDigraph(const TrinetCollection& T);

Condensation condense(const Digraph& d);

// Sink components of size >= 2 (each such component is a minimal sink set;
// this includes the full vertex set when the digraph is strongly connected).
std::vector<std::set<std::string>> minimalSinkSets(const Digraph& d);

// Algorithm: for i = 0,1,2,... build Omega_i; at the first i with an arc,
// return the smallest minimal sink set if one exists, else the taxa of the
// condensation vertex with the fewest children (at least one) united with
// its children's taxa.  All ties break lexicographically.  Throws
// "insufficient trinets" when fewer than two taxa are known.
std::set<std::string> findCutArcSet(const TrinetCollection& T);

}  // namespace levelnet
