#pragma once

// Bundled instances used by tests, the acceptance harness and the data
// files under data/.  Each loader re-checks the structural claims the
// instance exists to witness and throws std::logic_error if a transcription
// error ever breaks them.

#include <utility>

#include "levelnet/network.hpp"
#include "levelnet/restriction.hpp"

namespace levelnet {

// Two distinct strictly level-3 networks on {a,b,c,d} displaying exactly
// the same trinet set: witnesses that level-3 networks are not determined
// by their trinets.  Self-check: both strictly level 3, not isomorphic,
// equal trinet sets.
std::pair<Network, Network> level3TrinetTwins();

// A recoverable strictly level-2 network on {a,b,c,d,e} whose only minimal
// cut-arc set is {c,d}: the worked end-to-end reconstruction example.
// Self-check: level 2, recoverable, minimal cut-arc sets == {{c,d}}.
Network workedLevel2Example();

// Its trinet multiset (ten 3-subsets, isomorphic restrictions merged).
TrinetCollection workedLevel2Trinets();

}  // namespace levelnet
