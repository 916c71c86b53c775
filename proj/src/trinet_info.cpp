#include "levelnet/trinet_info.hpp"

#include <mutex>

#include "levelnet/structure.hpp"

namespace levelnet {

TrinetInfo analyzeTrinet(const Network& net) {
  TrinetInfo info;
  info.leafCount = net.leafCount();
  info.level = level(net);
  info.simple = isSimple(net);
  info.minimalCutArcSets = cutArcSets(net).minimalSets;

  if (info.simple && info.level >= 1) {
    auto [gen, assignment] = underlyingGenerator(net);
    info.generatorId = gen.catalogId;

    if (!gen.catalogId.empty()) {
      // All placements of this entry's leaves onto catalog side names: the
      // returned assignment composed with every catalog automorphism.
      for (const auto& autoMap :
           generatorSideIsomorphisms(gen, catalogGenerator(gen.catalogId))) {
        std::map<std::string, std::string> placement;
        for (const auto& [leaf, side] : assignment.leafToSide)
          placement[leaf] = autoMap.at(side);
        info.placements.push_back(placement);
      }
    }

    // Same-side and before relations use the entry's own side lists and are
    // invariant under the choice of placement.
    for (const auto& [side, order] : assignment.sideOrder)
      for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i + 1; j < order.size(); ++j) {
          info.sameSide.insert({std::min(order[i], order[j]),
                               std::max(order[i], order[j])});
          info.before.insert({order[i], order[j]});
        }
  }

  // LSA descendants for each leaf pair, used by the closure digraph.
  const std::set<std::string> taxaSet = net.taxa();
  std::vector<std::string> taxa(taxaSet.begin(), taxaSet.end());
  for (size_t i = 0; i < taxa.size(); ++i)
    for (size_t j = i + 1; j < taxa.size(); ++j) {
      Vertex v = lsa(net, {taxa[i], taxa[j]});
      std::set<std::string> below = net.descendantTaxa(v);
      info.taxaBelowPairLsa[{taxa[i], taxa[j]}] = below;
    }
  return info;
}

const TrinetInfo& analyzeTrinetCached(const std::string& certificateKey,
                                      const Network& net) {
  static std::map<std::string, TrinetInfo> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(certificateKey);
  if (it == cache.end()) it = cache.emplace(certificateKey, analyzeTrinet(net)).first;
  return it->second;
}

}  // namespace levelnet
