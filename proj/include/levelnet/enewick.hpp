#pragma once

// Extended-Newick serialization.
//
// Networks interchange as extended Newick text: a rooted parenthesized
// subtree expression terminated by ";" in which each reticulation appears
// exactly twice under a #H<int> tag -- once as "(child)#Hk" (the defining
// occurrence) and once as a bare "#Hk" reference, one per parent.  Taxon
// names match [A-Za-z0-9_.-]+ and no branch lengths are used.
//
// The writer is canonical: children are ordered by smallest descendant
// taxon (ties broken by a structural key), #H tags are numbered by first
// appearance in that traversal, and write(parse(write(x))) == write(x).

#include <iosfwd>
#include <string>
#include <vector>

#include "levelnet/network.hpp"

namespace levelnet {

// Throws std::runtime_error with position information on syntax errors,
// dangling or duplicated #H tags, and duplicate taxa.  Structural (degree)
// violations are the caller's business via validate().
Network parseENewick(const std::string& text);

// Canonical serialization; throws if a label falls outside the taxon
// character set (reserved internal names must never be serialized).
std::string writeENewick(const Network& net);

// Trinet/binet list files: one extended-Newick line per entry, repeated
// lines encode multiplicity, '#'-prefixed lines are comments.
struct TrinetFileEntry {
  Network network;
  long long multiplicity = 1;
};

// Parses every non-comment line; identical consecutive or scattered lines
// are aggregated by exact line text.  Throws with a line number on the
// first malformed line.
std::vector<TrinetFileEntry> readTrinetFile(std::istream& in);
std::vector<TrinetFileEntry> readTrinetFileAt(const std::string& path);

// Writes one canonical line per network, repeated per multiplicity, with
// all lines sorted; byte-stable for equal collections.
void writeTrinetFile(const std::vector<TrinetFileEntry>& entries,
                     std::ostream& out);

bool isValidTaxonName(const std::string& name);

}  // namespace levelnet
