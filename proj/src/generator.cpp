#include "levelnet/generator.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "levelnet/structure.hpp"

namespace levelnet {

std::vector<std::string> Generator::arcSideNames() const {
  std::vector<std::string> names;
  for (const auto& [name, idx] : arcSides) names.push_back(name);
  return names;  // std::map iterates sorted
}

std::vector<std::string> Generator::reticulationSideNames() const {
  std::vector<std::string> names;
  for (const auto& [name, v] : reticulationSides) names.push_back(name);
  return names;
}

namespace {

Generator makeGenerator(const std::string& id, int vertexCount,
                        std::vector<std::pair<std::string, Arc>> namedArcs,
                        std::map<std::string, Vertex> retics) {
  Generator g;
  g.catalogId = id;
  g.vertexCount = vertexCount;
  for (auto& [name, arc] : namedArcs) {
    g.arcSides[name] = static_cast<int>(g.arcs.size());
    g.arcs.push_back(arc);
  }
  g.reticulationSides = std::move(retics);
  return g;
}

std::vector<Generator> buildCatalog() {
  std::vector<Generator> cat;
  cat.push_back(makeGenerator("G1", 2,
                              {{"L", {0, 1}}, {"R", {0, 1}}},
                              {{"T1", 1}}));
  cat.push_back(makeGenerator("G2a", 4,
                              {{"S1", {0, 1}},
                               {"S2", {0, 2}},
                               {"S3", {1, 2}},
                               {"S4", {1, 3}},
                               {"S5", {2, 3}}},
                              {{"T1", 3}}));
  cat.push_back(makeGenerator("G2b", 5,
                              {{"S1", {0, 1}},
                               {"S2", {0, 3}},
                               {"S3", {1, 2}},
                               {"S4", {1, 4}},
                               {"S5", {2, 3}},
                               {"S6", {2, 4}}},
                              {{"T1", 3}, {"T2", 4}}));
  cat.push_back(makeGenerator("G2c", 5,
                              {{"L1", {0, 1}},
                               {"R1", {0, 2}},
                               {"L2", {1, 3}},
                               {"R2", {2, 3}},
                               {"L3", {1, 4}},
                               {"R3", {2, 4}}},
                              {{"T1", 3}, {"T2", 4}}));
  cat.push_back(makeGenerator("G2d", 4,
                              {{"S1", {0, 1}},
                               {"S2", {0, 3}},
                               {"L", {1, 2}},
                               {"R", {1, 2}},
                               {"S3", {2, 3}}},
                              {{"T1", 3}}));
  return cat;
}

int indegOf(const Generator& g, Vertex v) {
  int d = 0;
  for (const Arc& a : g.arcs)
    if (a.head == v) ++d;
  return d;
}
int outdegOf(const Generator& g, Vertex v) {
  int d = 0;
  for (const Arc& a : g.arcs)
    if (a.tail == v) ++d;
  return d;
}

// All vertex bijections g -> target preserving arcs with multiplicity.
std::vector<std::vector<Vertex>> vertexIsomorphisms(const Generator& g,
                                                    const Generator& target) {
  std::vector<std::vector<Vertex>> result;
  if (g.vertexCount != target.vertexCount ||
      g.arcs.size() != target.arcs.size())
    return result;

  auto multOf = [](const Generator& gen, Vertex t, Vertex h) {
    int m = 0;
    for (const Arc& a : gen.arcs)
      if (a.tail == t && a.head == h) ++m;
    return m;
  };

  std::vector<Vertex> perm(g.vertexCount);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Vertex v = 0; v < g.vertexCount && ok; ++v)
      if (indegOf(g, v) != indegOf(target, perm[v]) ||
          outdegOf(g, v) != outdegOf(target, perm[v]))
        ok = false;
    for (Vertex u = 0; u < g.vertexCount && ok; ++u)
      for (Vertex v = 0; v < g.vertexCount && ok; ++v)
        if (multOf(g, u, v) != multOf(target, perm[u], perm[v])) ok = false;
    if (ok) result.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

}  // namespace

const std::vector<Generator>& generatorCatalog() {
  static const std::vector<Generator> catalog = buildCatalog();
  return catalog;
}

const Generator& catalogGenerator(const std::string& id) {
  for (const Generator& g : generatorCatalog())
    if (g.catalogId == id) return g;
  throw std::invalid_argument("unknown generator id '" + id + "'");
}

std::vector<std::map<std::string, std::string>> generatorSideIsomorphisms(
    const Generator& g, const Generator& target) {
  std::vector<std::map<std::string, std::string>> result;
  for (const auto& perm : vertexIsomorphisms(g, target)) {
    // Reticulation sides follow the vertex map directly.
    std::map<std::string, std::string> reticMap;
    bool ok = true;
    for (const auto& [name, v] : g.reticulationSides) {
      bool found = false;
      for (const auto& [tname, tv] : target.reticulationSides)
        if (tv == perm[v]) {
          reticMap[name] = tname;
          found = true;
        }
      if (!found) ok = false;
    }
    if (!ok) continue;

    // Arc sides: group by mapped endpoint pair; parallel groups contribute
    // every pairing.
    std::map<std::pair<Vertex, Vertex>, std::vector<std::string>> gGroups;
    std::map<std::pair<Vertex, Vertex>, std::vector<std::string>> tGroups;
    for (const auto& [name, idx] : g.arcSides) {
      const Arc& a = g.arcs[idx];
      gGroups[{perm[a.tail], perm[a.head]}].push_back(name);
    }
    for (const auto& [name, idx] : target.arcSides) {
      const Arc& a = target.arcs[idx];
      tGroups[{a.tail, a.head}].push_back(name);
    }

    // Expand the per-group bijections (group sizes are 1 or 2 here).
    std::vector<std::map<std::string, std::string>> partial{{}};
    for (auto& [key, gNames] : gGroups) {
      auto it = tGroups.find(key);
      if (it == tGroups.end() || it->second.size() != gNames.size()) {
        partial.clear();
        break;
      }
      std::vector<std::string> tNames = it->second;
      std::sort(tNames.begin(), tNames.end());
      std::vector<std::map<std::string, std::string>> next;
      do {
        for (const auto& base : partial) {
          auto m = base;
          for (size_t i = 0; i < gNames.size(); ++i) m[gNames[i]] = tNames[i];
          next.push_back(std::move(m));
        }
      } while (std::next_permutation(tNames.begin(), tNames.end()));
      partial = std::move(next);
    }
    for (auto& arcMap : partial) {
      auto full = arcMap;
      for (const auto& [k, v] : reticMap) full[k] = v;
      result.push_back(std::move(full));
    }
  }
  // Deduplicate (distinct vertex maps can induce the same side map).
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

GeneratorMatch identifyGenerator(const Generator& g) {
  for (const Generator& cat : generatorCatalog()) {
    auto isos = generatorSideIsomorphisms(g, cat);
    if (isos.empty()) continue;
    return {cat.catalogId, isos.front()};  // sorted: front is lex-smallest
  }
  throw std::runtime_error(
      "generator matches no catalog entry (level exceeds 2)");
}

SymmetryClasses symmetryClasses(const Generator& g) {
  auto autos = generatorSideIsomorphisms(g, g);

  auto orbitsOf = [](const std::vector<std::string>& names,
                     const std::vector<std::map<std::string, std::string>>&
                         maps) {
    std::map<std::string, std::string> parent;
    for (const auto& n : names) parent[n] = n;
    std::function<std::string(const std::string&)> find =
        [&](const std::string& x) -> std::string {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& m : maps)
      for (const auto& n : names) {
        auto a = find(n), b = find(m.at(n));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    std::map<std::string, std::set<std::string>> groups;
    for (const auto& n : names) groups[find(n)].insert(n);
    std::vector<std::set<std::string>> out;
    for (auto& [rep, members] : groups) out.push_back(members);
    return out;
  };

  SymmetryClasses classes;
  classes.reticulationClasses = orbitsOf(g.reticulationSideNames(), autos);

  std::vector<std::map<std::string, std::string>> reticFixing;
  for (const auto& m : autos) {
    bool fixes = true;
    for (const auto& [name, v] : g.reticulationSides)
      if (m.at(name) != name) fixes = false;
    if (fixes) reticFixing.push_back(m);
  }
  classes.arcClasses = orbitsOf(g.arcSideNames(), reticFixing);
  return classes;
}

std::pair<Generator, SideAssignment> underlyingGenerator(const Network& net) {
  if (!isSimple(net))
    throw std::invalid_argument(
        "underlyingGenerator: network has a minimal cut-arc set");
  if (level(net) < 1)
    throw std::invalid_argument("underlyingGenerator: network is a tree");

  const int n = net.vertexCount();

  // Delete the leaves; record each leaf's parent.
  std::vector<bool> inH(n, false);
  std::map<Vertex, std::vector<std::string>> leavesAt;  // parent -> labels
  for (Vertex v = 0; v < n; ++v) {
    if (net.isLeaf(v))
      leavesAt[net.parents(v).front()].push_back(net.label(v));
    else
      inH[v] = true;
  }
  std::vector<Arc> hArcs;
  for (const Arc& a : net.arcs())
    if (inH[a.tail] && inH[a.head]) hArcs.push_back(a);

  auto hOutdeg = [&](Vertex v) {
    int d = 0;
    for (const Arc& a : hArcs)
      if (a.tail == v) ++d;
    return d;
  };
  auto hIndeg = [&](Vertex v) {
    int d = 0;
    for (const Arc& a : hArcs)
      if (a.head == v) ++d;
    return d;
  };

  // Generator vertices are the non-(1,1) vertices of H.
  std::map<Vertex, Vertex> toGen;
  int genCount = 0;
  // Root first so generator vertex 0 is the root.
  std::vector<Vertex> hVertices;
  for (Vertex v : net.topologicalOrder())
    if (inH[v]) hVertices.push_back(v);
  for (Vertex v : hVertices)
    if (!(hIndeg(v) == 1 && hOutdeg(v) == 1)) toGen[v] = genCount++;

  // Walk each generator out-arc through its chain of (1,1) vertices.
  Generator g;
  g.vertexCount = genCount;
  SideAssignment assignment;
  int arcCounter = 0;
  int reticCounter = 0;
  std::map<Vertex, std::string> reticName;
  for (const auto& [v, gv] : toGen)
    if (hIndeg(v) == 2 && hOutdeg(v) == 0) {
      std::string name = "r" + std::to_string(reticCounter++);
      g.reticulationSides[name] = gv;
      reticName[v] = name;
    }

  for (Vertex start : hVertices) {
    if (!toGen.count(start)) continue;
    for (const Arc& a : hArcs) {
      if (a.tail != start) continue;
      std::vector<Vertex> chain;
      Vertex cur = a.head;
      while (!toGen.count(cur)) {
        chain.push_back(cur);
        // (1,1) vertex: follow its unique H-out-arc.
        Vertex next = -1;
        for (const Arc& b : hArcs)
          if (b.tail == cur) next = b.head;
        cur = next;
      }
      std::string name = "e" + std::to_string(arcCounter++);
      g.arcSides[name] = static_cast<int>(g.arcs.size());
      g.arcs.push_back({toGen[start], toGen[cur]});
      std::vector<std::string> order;
      for (Vertex cv : chain) {
        for (const std::string& leaf : leavesAt[cv]) {
          order.push_back(leaf);
          assignment.leafToSide[leaf] = name;
        }
      }
      assignment.sideOrder[name] = order;
    }
  }
  for (const auto& [v, name] : reticName)
    for (const std::string& leaf : leavesAt[v])
      assignment.leafToSide[leaf] = name;

  // Relabel to catalog names when recognized.
  try {
    GeneratorMatch match = identifyGenerator(g);
    const Generator& cat = catalogGenerator(match.catalogId);
    SideAssignment renamed;
    for (const auto& [leaf, side] : assignment.leafToSide)
      renamed.leafToSide[leaf] = match.sideMap.at(side);
    for (const auto& [name, sideIdx] : cat.arcSides)
      renamed.sideOrder[name] = {};
    for (const auto& [side, order] : assignment.sideOrder)
      renamed.sideOrder[match.sideMap.at(side)] = order;
    return {cat, renamed};
  } catch (const std::runtime_error&) {
    for (const auto& [name, sideIdx] : g.arcSides)
      if (!assignment.sideOrder.count(name)) assignment.sideOrder[name] = {};
    return {g, assignment};  // unrecognized (level > 2); catalogId empty
  }
}

Network attach(const Generator& g, const SideAssignment& assignment) {
  NetworkBuilder b;
  std::vector<Vertex> mapped(g.vertexCount);
  for (Vertex v = 0; v < g.vertexCount; ++v) mapped[v] = b.addVertex();

  std::set<std::string> placed;
  for (const auto& [name, v] : g.reticulationSides) {
    std::string leaf;
    for (const auto& [l, side] : assignment.leafToSide)
      if (side == name) {
        if (!leaf.empty())
          throw std::invalid_argument("attach: reticulation side " + name +
                                      " assigned more than one leaf");
        leaf = l;
      }
    if (leaf.empty())
      throw std::invalid_argument("attach: reticulation side " + name +
                                  " has no leaf");
    Vertex lv = b.addLeaf(leaf);
    b.addArc(mapped[v], lv);
    placed.insert(leaf);
  }

  for (const auto& [name, arcIdx] : g.arcSides) {
    const Arc& a = g.arcs[arcIdx];
    std::vector<std::string> order;
    auto it = assignment.sideOrder.find(name);
    if (it != assignment.sideOrder.end()) order = it->second;
    Vertex prev = mapped[a.tail];
    for (const std::string& leaf : order) {
      Vertex mid = b.addVertex();
      Vertex lv = b.addLeaf(leaf);
      b.addArc(prev, mid);
      b.addArc(mid, lv);
      prev = mid;
      placed.insert(leaf);
    }
    b.addArc(prev, mapped[a.head]);
  }

  for (const auto& [leaf, side] : assignment.leafToSide)
    if (!placed.count(leaf))
      throw std::invalid_argument("attach: leaf '" + leaf +
                                  "' names unknown side '" + side + "'");
  return b.build();
}

bool isCrucial(const Network& trinet, const Generator& g) {
  auto [tg, assignment] = underlyingGenerator(trinet);
  if (tg.catalogId.empty() || g.catalogId.empty() ||
      tg.catalogId != g.catalogId)
    throw std::invalid_argument("isCrucial: generator mismatch");

  // Every arc side must carry a leaf; then each parallel pair trivially has
  // a covered side, so the second clause of the definition is implied.
  for (const auto& [name, idx] : tg.arcSides) {
    auto it = assignment.sideOrder.find(name);
    if (it == assignment.sideOrder.end() || it->second.empty()) return false;
  }
  return true;
}

}  // namespace levelnet
