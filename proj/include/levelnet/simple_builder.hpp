#pragma once

// Construction of a simple level-<=2 network from a multiset of trinets and
// binets on its leaf set.
//
// The pipeline scores candidate shapes by multiplicity-weighted fractions
// over the input multiset, all kept as exact rationals: pick the level from
// the share of strictly level-2 trinets, pick the generator by majority,
// assign reticulation leaves greedily, assign the remaining leaves to
// symmetric arc classes, split each class across its sides by pairwise
// same-side affinity, fix the one cross-class symmetry (the four-sided
// double-reticulation generator) by alignment scores, and order each side by
// pairwise ancestry fractions.  On the exact trinet multiset of a simple
// network every stage recovers that network's choice; on other inputs every
// choice is still deterministic (lexicographic tie-breaks throughout).

#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "levelnet/generator.hpp"
#include "levelnet/restriction.hpp"

namespace levelnet {

using Fraction = boost::multiprecision::cpp_rational;

// Multiplicity-weighted pairwise tables over a collection.
struct ScoreTables {
  // Share of trinet multiplicity (binets excluded) that is strictly level-2.
  Fraction p2{0};
  // q[{x,y}] (keys sorted, x < y): among simple trinets containing both,
  // the share with x and y on the same arc side of the trinet's own
  // generator.  Missing pair or empty denominator reads as 0; q(x,x) = 1 by
  // convention (applied where consumed, not stored).
  std::map<std::pair<std::string, std::string>, Fraction> q;
  // a[(x,y)] (ordered): among simple trinets with x,y on the same side,
  // the share in which the parent of x is an ancestor of y.  When the
  // denominator is nonzero, a(x,y) + a(y,x) = 1.
  std::map<std::pair<std::string, std::string>, Fraction> a;
};

ScoreTables scoreTables(const TrinetCollection& T);

struct LevelChoice {
  // True when the collection has exactly two taxa; the builder returns the
  // maximum-multiplicity binet and no level is chosen.
  bool useBinet = false;
  int k = 0;  // 1 or 2 when !useBinet
  Fraction p2{0};
};

// k = 1 when p2 < (n-2) / (2 * C(n,3)) over n = |L(T)|, else 2.  Throws on
// an empty collection.
LevelChoice chooseLevel(const TrinetCollection& T);

// Catalog id of the level-k generator underlying the largest multiplicity
// of strictly level-k trinets (k = 1 always yields "G1").  Ties break in
// catalog order.  Throws when no strictly level-k trinet has a generator.
std::string chooseGenerator(const TrinetCollection& T, int k);

struct ReticulationChoice {
  // Reticulation side name -> assigned taxon (every side assigned).
  std::map<std::string, std::string> sideToLeaf;
  // p[(x, classKey)]: share of generator-matching trinets with some
  // placement putting x on a reticulation side of that symmetry class.
  // classKey is the comma-joined sorted side names of the class.
  std::map<std::pair<std::string, std::string>, Fraction> p;
  // Certificate -> placements compatible with sideToLeaf (the entry belongs
  // to the pinned subset iff it has at least one).
  std::map<std::string, std::vector<std::map<std::string, std::string>>>
      pinnedPlacements;
};

// Greedy: repeatedly assign the (taxon, class) pair of maximum p to the
// first unfilled side of the class; ties prefer the smaller taxon, then the
// smaller class key.  Throws if taxa run out before sides do.
ReticulationChoice assignReticulationLeaves(const TrinetCollection& T,
                                            const Generator& g);

// Taxon -> arc class key for every taxon not holding a reticulation side,
// each taxon independently maximizing the share of pinned trinets placing
// it on that class.  A taxon absent from every pinned trinet falls to the
// lexicographically first class; a note is appended for it.
std::map<std::string, std::string> assignArcClasses(
    const TrinetCollection& T, const Generator& g,
    const ReticulationChoice& retic, std::vector<std::string>* notes);

// Split the taxa of one symmetric arc class across its sides: start from
// singleton parts, repeatedly merge the part pair of maximum average
// pairwise affinity r while there are more parts than sides or some
// cross-part pair has positive affinity, then map the parts to sides in
// lexicographic order.  r(x,y) = 3*sum_z min(q(x,z),q(y,z)) - sum_z q(x,z)
// - sum_z q(y,z), z ranging over the whole class including x and y.
std::map<std::string, std::set<std::string>> partitionArcClass(
    const std::vector<std::string>& classSides,
    const std::set<std::string>& classTaxa,
    const std::map<std::pair<std::string, std::string>, Fraction>& q);

// For the double-reticulation generator whose three arc-side pairs share
// one left/right symmetry: evaluate keeping or swapping sides 2 and/or 3
// against u(S,T) = sum_{x in S, y in T} q(x,y) - |S||T| summed over the six
// same-branch side pairs, and keep the first maximizer (identity on ties).
std::map<std::string, std::set<std::string>> alignSides2c(
    const std::map<std::string, std::set<std::string>>& sideTaxa,
    const std::map<std::pair<std::string, std::string>, Fraction>& q);

// Order one side root-first: repeatedly append the unplaced taxon x
// maximizing sum over unplaced y of a(x,y) - a(y,x); ties pick the smaller
// taxon.
std::vector<std::string> orderSide(
    const std::set<std::string>& sideTaxa,
    const std::map<std::pair<std::string, std::string>, Fraction>& a);

struct BuildReport {
  bool binet = false;
  int k = 0;
  Fraction p2{0};
  std::string generatorId;
  std::map<std::string, std::string> reticulationLeaf;  // side -> taxon
  std::map<std::string, std::string> arcClassOf;        // taxon -> class key
  std::map<std::string, std::vector<std::string>> sideOrder;  // final
  std::vector<std::string> notes;
};

// Full pipeline.  Returns a valid simple network on L(T) (or the chosen
// binet when |L(T)| = 2).  Throws std::invalid_argument on an empty
// collection and std::runtime_error naming the failing stage on
// inconsistent input.
Network buildSimple(const TrinetCollection& T, BuildReport* report = nullptr);

}  // namespace levelnet
