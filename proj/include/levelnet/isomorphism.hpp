#pragma once

// Labeled-digraph isomorphism for networks.
//
// Two networks are isomorphic when a bijection of their vertices preserves
// arcs (with multiplicity) and leaf labels.  Two independent implementations
// are provided and cross-checked in tests:
//   - certificate(): an exact canonical form via color refinement with
//     individualization (suitable as a map key; equal certificates iff
//     isomorphic),
//   - isomorphic(): a direct backtracking search with degree/label pruning.

#include <string>

#include "levelnet/network.hpp"

namespace levelnet {

// Canonical certificate: certificate(a) == certificate(b) iff a and b are
// isomorphic as leaf-labeled directed multigraphs.
std::string certificate(const Network& net);

// Backtracking isomorphism test (independent of certificate()).
bool isomorphic(const Network& a, const Network& b);

}  // namespace levelnet
