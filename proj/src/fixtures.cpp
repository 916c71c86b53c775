#include "levelnet/fixtures.hpp"

#include <stdexcept>

#include "levelnet/enewick.hpp"
#include "levelnet/isomorphism.hpp"
#include "levelnet/structure.hpp"

namespace levelnet {

namespace {

// Found by exhaustive search over simple strictly-level-3 networks on four
// taxa (all bridgeless degree-feasible skeletons, all leaf placements):
// three reticulation chains whose nesting order differs, which no 3-leaf
// restriction can separate.  Same text in data/level3_twin_a.enwk and
// data/level3_twin_b.enwk.
const char* kTwinA = "(((((a)#H1,(c)#H2),(b)#H3),d),(#H1,(#H3,#H2)));";
const char* kTwinB = "((((a)#H1,((b)#H2,(c)#H3)),d),((#H1,#H3),#H2));";

// Double-reticulation top blob over {a,b,e} with the cherry {c,d} hanging
// below the second reticulation; see data/worked_level2.enwk.
const char* kWorkedExample = "((((e)#H1,((c,d))#H2),a),((#H1,#H2),b));";

std::set<std::string> trinetKeySet(const Network& n) {
  std::set<std::string> keys;
  const TrinetCollection collection = trinets(n);
  for (const auto& [key, entry] : collection.entries()) keys.insert(key);
  return keys;
}

}  // namespace

std::pair<Network, Network> level3TrinetTwins() {
  Network a = parseENewick(kTwinA);
  Network b = parseENewick(kTwinB);
  if (!validate(a).empty() || !validate(b).empty())
    throw std::logic_error("level3TrinetTwins: invalid transcription");
  if (!isStrictLevel(a, 3) || !isStrictLevel(b, 3))
    throw std::logic_error("level3TrinetTwins: expected strictly level-3 pair");
  if (isomorphic(a, b))
    throw std::logic_error("level3TrinetTwins: the twins must be distinct");
  if (trinetKeySet(a) != trinetKeySet(b))
    throw std::logic_error("level3TrinetTwins: trinet sets differ");
  return {a, b};
}

Network workedLevel2Example() {
  Network n = parseENewick(kWorkedExample);
  if (!validate(n).empty())
    throw std::logic_error("workedLevel2Example: invalid transcription");
  if (!isStrictLevel(n, 2) || !isRecoverable(n))
    throw std::logic_error(
        "workedLevel2Example: expected a recoverable strictly level-2 network");
  CutArcSetReport report = cutArcSets(n);
  if (report.minimalSets !=
      std::vector<std::set<std::string>>{{"c", "d"}})
    throw std::logic_error(
        "workedLevel2Example: expected {c,d} as the only minimal cut-arc set");
  return n;
}

TrinetCollection workedLevel2Trinets() {
  return trinets(workedLevel2Example());
}

}  // namespace levelnet
