#include "levelnet/random_network.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "levelnet/generator.hpp"
#include "levelnet/structure.hpp"

namespace levelnet {

namespace {

std::vector<std::string> makeTaxa(int n) {
  int width = 1;
  for (int p = 10; p <= n; p *= 10) ++width;
  std::vector<std::string> taxa;
  for (int i = 1; i <= n; ++i) {
    std::string num = std::to_string(i);
    taxa.push_back("t" + std::string(width - num.size(), '0') + num);
  }
  return taxa;
}

struct Grower {
  std::mt19937_64 rng;
  NetworkBuilder b;
  int budget;

  int randInt(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  }

  // Grow a subnetwork over taxa; returns its root vertex in the builder.
  Vertex grow(std::vector<std::string> taxa, bool top) {
    if (taxa.size() == 1) return b.addLeaf(taxa[0]);

    bool blobOk = budget >= 1 && taxa.size() >= 2;
    if (!blobOk || randInt(0, 99) >= 55) return treeSplit(std::move(taxa));
    return blob(std::move(taxa), top);
  }

  Vertex treeSplit(std::vector<std::string> taxa) {
    std::shuffle(taxa.begin(), taxa.end(), rng);
    size_t cut = (size_t)randInt(1, (int)taxa.size() - 1);
    std::vector<std::string> left(taxa.begin(), taxa.begin() + cut);
    std::vector<std::string> right(taxa.begin() + cut, taxa.end());
    Vertex l = grow(std::move(left), false);
    Vertex r = grow(std::move(right), false);
    Vertex v = b.addVertex();
    b.addArc(v, l);
    b.addArc(v, r);
    return v;
  }

  Vertex blob(std::vector<std::string> taxa, bool top) {
    std::vector<std::string> candidates{"G1"};
    if (budget >= 2)
      candidates = {"G1", "G2a", "G2b", "G2c", "G2d"};
    const Generator& g =
        catalogGenerator(candidates[randInt(0, (int)candidates.size() - 1)]);

    // Mandatory side groups: every reticulation side; one covered parallel
    // side for G1/G2d; one arc side for G2a so the blob never swallows its
    // whole taxon set below the bottom reticulation.
    std::vector<std::string> reticSides = g.reticulationSideNames();
    std::vector<std::string> arcSides = g.arcSideNames();
    std::vector<std::string> mandatoryArcs;
    if (g.catalogId == "G1" || g.catalogId == "G2d")
      mandatoryArcs.push_back("L");
    else if (g.catalogId == "G2a")
      mandatoryArcs.push_back(arcSides[randInt(0, (int)arcSides.size() - 1)]);

    size_t baseGroups = reticSides.size() + mandatoryArcs.size();
    if (taxa.size() < baseGroups) return treeSplit(std::move(taxa));

    int extraCap = (int)(taxa.size() - baseGroups);
    int extras = randInt(0, std::min(extraCap, 3));
    size_t totalGroups = baseGroups + extras;

    // Group sizes: all 1, remaining taxa sprinkled randomly.
    std::vector<int> sizes(totalGroups, 1);
    for (size_t i = totalGroups; i < taxa.size(); ++i)
      ++sizes[(size_t)randInt(0, (int)totalGroups - 1)];
    std::shuffle(taxa.begin(), taxa.end(), rng);

    std::vector<std::vector<std::string>> groups;
    size_t at = 0;
    for (int s : sizes) {
      groups.emplace_back(taxa.begin() + at, taxa.begin() + at + s);
      at += s;
    }

    // Group placement: reticulation sides, mandatory arc sides, then
    // uniformly random arc sides for the extras.
    std::map<std::string, std::vector<Vertex>> arcContents;  // side -> roots
    std::map<std::string, Vertex> reticContents;
    size_t gi = 0;
    for (const auto& side : reticSides)
      reticContents[side] = grow(std::move(groups[gi++]), false);
    for (const auto& side : mandatoryArcs)
      arcContents[side].push_back(grow(std::move(groups[gi++]), false));
    while (gi < groups.size()) {
      const std::string& side = arcSides[randInt(0, (int)arcSides.size() - 1)];
      arcContents[side].push_back(grow(std::move(groups[gi++]), false));
    }

    // Materialize the generator with its sides subdivided.
    std::vector<Vertex> mapped(g.vertexCount);
    for (Vertex v = 0; v < g.vertexCount; ++v) mapped[v] = b.addVertex();
    for (const auto& [side, v] : g.reticulationSides)
      b.addArc(mapped[v], reticContents.at(side));
    for (const auto& [side, arcIdx] : g.arcSides) {
      Vertex prev = mapped[g.arcs[arcIdx].tail];
      auto it = arcContents.find(side);
      if (it != arcContents.end())
        for (Vertex sub : it->second) {
          Vertex mid = b.addVertex();
          b.addArc(prev, mid);
          b.addArc(mid, sub);
          prev = mid;
        }
      b.addArc(prev, mapped[g.arcs[arcIdx].head]);
    }
    (void)top;
    return mapped[0];
  }
};

}  // namespace

Network randomLevel2Network(const RandomNetSpec& spec) {
  if (spec.leafCount < 3)
    throw std::invalid_argument("randomLevel2Network: need at least 3 leaves");
  if (spec.reticulationBudget < 0 || spec.reticulationBudget > 2)
    throw std::invalid_argument(
        "randomLevel2Network: reticulation budget must be 0, 1 or 2");

  std::vector<std::string> taxa = makeTaxa(spec.leafCount);
  for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
    Grower grower;
    std::seed_seq seq{spec.seed, attempt, (std::uint64_t)spec.leafCount,
                      (std::uint64_t)spec.reticulationBudget};
    grower.rng.seed(seq);
    grower.budget = spec.reticulationBudget;
    Vertex root = grower.grow(taxa, true);
    (void)root;
    Network net = grower.b.build();
    if (validate(net).empty() && isRecoverable(net) &&
        level(net) <= spec.reticulationBudget)
      return net;
  }
  throw std::runtime_error(
      "randomLevel2Network: no valid network after 100 attempts");
}

Network randomSimpleNetwork(const std::string& generatorId, int leafCount,
                            std::uint64_t seed) {
  const Generator& g = catalogGenerator(generatorId);
  std::vector<std::string> reticSides = g.reticulationSideNames();
  std::vector<std::string> arcSides = g.arcSideNames();
  bool hasParallel = generatorId == "G1" || generatorId == "G2d";
  int minimum = (int)reticSides.size() + (hasParallel ? 1 : 0);
  // One leaf must sit outside the bottom reticulation for the network to be
  // recoverable when the blob is the whole network.
  if (generatorId == "G2a") minimum = std::max(minimum, 2);
  if (leafCount < minimum)
    throw std::invalid_argument("randomSimpleNetwork: too few leaves for " +
                                generatorId);

  std::vector<std::string> taxa = makeTaxa(leafCount);
  for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
    std::mt19937_64 rng;
    std::seed_seq seq{seed, attempt, (std::uint64_t)leafCount};
    rng.seed(seq);
    auto randInt = [&](int lo, int hi) {
      return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    std::vector<std::string> pool = taxa;
    std::shuffle(pool.begin(), pool.end(), rng);

    SideAssignment assignment;
    std::map<std::string, std::vector<std::string>> onSide;
    size_t at = 0;
    for (const auto& side : reticSides) assignment.leafToSide[pool[at++]] = side;
    if (hasParallel) onSide["L"].push_back(pool[at++]);
    if (generatorId == "G2a" && at < pool.size() && onSide.empty())
      onSide[arcSides[(size_t)randInt(0, (int)arcSides.size() - 1)]].push_back(
          pool[at++]);
    while (at < pool.size())
      onSide[arcSides[(size_t)randInt(0, (int)arcSides.size() - 1)]].push_back(
          pool[at++]);

    for (auto& [side, leaves] : onSide) {
      assignment.sideOrder[side] = leaves;
      for (const auto& leaf : leaves) assignment.leafToSide[leaf] = side;
    }

    Network net = attach(g, assignment);
    int k = generatorId == "G1" ? 1 : 2;
    if (validate(net).empty() && isRecoverable(net) && isSimple(net) &&
        isStrictLevel(net, k))
      return net;
  }
  throw std::runtime_error(
      "randomSimpleNetwork: no valid network after 100 attempts");
}

}  // namespace levelnet
