#pragma once

// Top-level reconstruction: recursively split the taxon set along a
// cut-arc set detected from the trinets, reconstruct the collapsed
// remainder and the simple part separately, and graft them back together.
//
// On the exact trinet multiset of a recoverable binary level-2 network the
// result is isomorphic to that network; on other inputs the pipeline still
// returns a valid network deterministically, recording every fallback it
// had to take in the report.

#include <string>
#include <vector>

#include "levelnet/enewick.hpp"
#include "levelnet/network.hpp"
#include "levelnet/restriction.hpp"

namespace levelnet {

struct ReconstructReport {
  // Multiplicity dropped at ingestion, by reason.
  long long droppedInvalid = 0;
  long long droppedNonRecoverable = 0;
  long long droppedOversized = 0;  // level above 2
  // Routine decisions, one line per recursion level: the cut-arc set that
  // was split off, or the level/generator choice of a simple part.
  std::vector<std::string> stages;
  // Fallbacks taken and stage diagnostics encountered; empty on exact input.
  std::vector<std::string> notes;
};

// Filter parsed file entries into a collection: entries that fail
// validation (or are not binets/trinets), are not recoverable, or exceed
// level 2 are counted into the report and skipped.
TrinetCollection ingest(const std::vector<TrinetFileEntry>& entries,
                        ReconstructReport& report);

// Replace every entry containing taxa outside A by its restriction to the
// out-of-A taxa plus one in-A representative (the lexicographically
// smallest), relabeling that representative to aStar; entries disjoint from
// A are copied unchanged and entries inside A are dropped.  Multiplicities
// of isomorphic results accumulate.
TrinetCollection collapseCollection(const TrinetCollection& T,
                                    const std::set<std::string>& A,
                                    const std::string& aStar);

// Restrictions T|(L(T) cap A) of all entries sharing at least two taxa
// with A.  An entry already inside A is copied unchanged.
TrinetCollection restrictCollection(const TrinetCollection& T,
                                    const std::set<std::string>& A);

// Replace the leaf named aStar in nStar by the whole network nPrime (the
// leaf's in-arc now points at nPrime's root).  Throws when aStar is
// missing or when the remaining label sets overlap.
Network graft(const Network& nStar, const std::string& aStar,
              const Network& nPrime);

// Full reconstruction.  Requires a nonempty collection on at least two
// taxa; entries above level 2 are dropped (counted in the report).  Throws
// std::runtime_error when no network can be produced at all.
Network reconstruct(const TrinetCollection& T,
                    ReconstructReport* report = nullptr);

}  // namespace levelnet
