#pragma once

// Restriction of a network to a taxon subset, and the derived trinet/binet
// collections.
//
// N|A keeps exactly the vertices on some path from the lowest stable
// ancestor of A down to A, then exhaustively replaces parallel arc pairs by
// single arcs and suppresses indegree-1 outdegree-1 vertices until neither
// operation applies (contracting an outdegree-1 root on the way).  The
// result is a valid recoverable network on A with no parallel arcs.

#include <map>
#include <set>
#include <string>

#include "levelnet/network.hpp"

namespace levelnet {

// Throws on |A| < 2 or unknown taxa.
Network restrictTo(const Network& net, const std::set<std::string>& A);

struct TrinetEntry {
  Network representative;
  long long multiplicity = 0;
};

// Multiset of binets/trinets keyed by canonical form.  Every representative
// is a valid recoverable network on 2 or 3 leaves; adding an isomorphic
// network accumulates multiplicity onto the stored representative.
class TrinetCollection {
 public:
  void add(const Network& net, long long multiplicity = 1);

  // Distinct entries, keyed by certificate; deterministic iteration order.
  const std::map<std::string, TrinetEntry>& entries() const {
    return entries_;
  }
  long long totalMultiplicity() const { return totalMultiplicity_; }
  bool empty() const { return entries_.empty(); }
  // Union of all entry leaf sets.
  const std::set<std::string>& taxonUniverse() const { return taxa_; }

 private:
  std::map<std::string, TrinetEntry> entries_;
  std::set<std::string> taxa_;
  long long totalMultiplicity_ = 0;
};

// All restrictions to 3-element leaf subsets; an entry's multiplicity is the
// number of subsets whose restriction is isomorphic to it.  Requires a
// recoverable network with at least 3 leaves.
TrinetCollection trinets(const Network& net);

// As above plus all 2-element subsets; requires at least 2 leaves.
TrinetCollection binetsAndTrinets(const Network& net);

}  // namespace levelnet
