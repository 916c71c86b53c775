#include "levelnet/cutset.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "levelnet/trinet_info.hpp"

namespace levelnet {

std::map<std::pair<std::string, std::string>, long long> pairDeficiency(
    const TrinetCollection& T) {
  std::map<std::pair<std::string, std::string>, long long> phi;
  for (const auto& x : T.taxonUniverse())
    for (const auto& y : T.taxonUniverse())
      if (x != y) phi[{x, y}] = 0;
  for (const auto& [key, entry] : T.entries()) {
    const TrinetInfo& info = analyzeTrinetCached(key, entry.representative);
    if (info.leafCount != 3) continue;
    std::set<std::string> taxa = entry.representative.taxa();
    for (const auto& x : taxa)
      for (const auto& y : taxa) {
        if (x == y) continue;
        for (const auto& mcas : info.minimalCutArcSets)
          if (!mcas.count(y)) {
            phi[{x, y}] += entry.multiplicity;
            break;
          }
      }
  }
  return phi;
}

Digraph omega(const TrinetCollection& T, long long i) {
  Digraph d;
  d.vertices = T.taxonUniverse();
  for (const auto& [pair, deficiency] : pairDeficiency(T))
    if (deficiency <= i) d.arcs.insert(pair);
  return d;
}

Digraph closureDigraph(const TrinetCollection& T) {
  Digraph d;
  d.vertices = T.taxonUniverse();
  // witness[{x,y}] = set of taxa z for which some trinet on {x,y,z} has y
  // below LSA({x,z}).
  std::map<std::pair<std::string, std::string>, std::set<std::string>> witness;
  for (const auto& [key, entry] : T.entries()) {
    const TrinetInfo& info = analyzeTrinetCached(key, entry.representative);
    if (info.leafCount != 3) continue;
    std::set<std::string> taxa = entry.representative.taxa();
    for (const auto& x : taxa)
      for (const auto& y : taxa) {
        if (x == y) continue;
        std::string z;  // the third taxon
        for (const auto& t : taxa)
          if (t != x && t != y) z = t;
        auto it = info.taxaBelowPairLsa.find({std::min(x, z), std::max(x, z)});
        if (it != info.taxaBelowPairLsa.end() && it->second.count(y))
          witness[{x, y}].insert(z);
      }
  }
  std::size_t others = d.vertices.size() >= 2 ? d.vertices.size() - 2 : 0;
  for (const auto& x : d.vertices)
    for (const auto& y : d.vertices) {
      if (x == y) continue;
      auto it = witness.find({x, y});
      std::size_t have = it == witness.end() ? 0 : it->second.size();
      if (have == others) d.arcs.insert({x, y});
    }
  return d;
}

Condensation condense(const Digraph& d) {
  // Tarjan SCC over the (deterministically ordered) vertex set.
  std::vector<std::string> verts(d.vertices.begin(), d.vertices.end());
  std::map<std::string, int> id;
  for (std::size_t i = 0; i < verts.size(); ++i) id[verts[i]] = (int)i;
  int n = (int)verts.size();
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : d.arcs) adj[id[u]].push_back(id[v]);

  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> onStack(n, false);
  std::vector<int> stack;
  int next = 0, ncomp = 0;
  std::function<void(int)> strongConnect = [&](int v) {
    index[v] = low[v] = next++;
    stack.push_back(v);
    onStack[v] = true;
    for (int w : adj[v]) {
      if (index[w] < 0) {
        strongConnect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (onStack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        onStack[w] = false;
        comp[w] = ncomp;
        if (w == v) break;
      }
      ++ncomp;
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[v] < 0) strongConnect(v);

  std::vector<std::set<std::string>> rawComponents(ncomp);
  for (int v = 0; v < n; ++v) rawComponents[comp[v]].insert(verts[v]);
  // Re-order components by smallest member for deterministic output.
  std::vector<int> order(ncomp);
  for (int c = 0; c < ncomp; ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return *rawComponents[a].begin() < *rawComponents[b].begin();
  });
  std::vector<int> rank(ncomp);
  for (int i = 0; i < ncomp; ++i) rank[order[i]] = i;

  Condensation c;
  c.components.resize(ncomp);
  for (int i = 0; i < ncomp; ++i) c.components[rank[i]] = rawComponents[i];
  for (const auto& [u, v] : d.arcs) {
    int cu = rank[comp[id[u]]], cv = rank[comp[id[v]]];
    if (cu != cv) c.componentArcs.insert({cu, cv});
  }
  return c;
}

std::vector<std::set<std::string>> minimalSinkSets(const Digraph& d) {
  Condensation c = condense(d);
  std::vector<bool> hasOut(c.components.size(), false);
  for (const auto& [u, v] : c.componentArcs) hasOut[u] = true;
  std::vector<std::set<std::string>> sinks;
  for (std::size_t i = 0; i < c.components.size(); ++i)
    if (!hasOut[i] && c.components[i].size() >= 2) sinks.push_back(c.components[i]);
  return sinks;
}

std::set<std::string> findCutArcSet(const TrinetCollection& T) {
  std::set<std::string> taxa = T.taxonUniverse();
  if (taxa.size() < 2) throw std::runtime_error("insufficient trinets");

  auto phi = pairDeficiency(T);
  long long maxPhi = 0;
  for (const auto& [pair, v] : phi) maxPhi = std::max(maxPhi, v);

  for (long long i = 0; i <= maxPhi; ++i) {
    Digraph d = omega(T, i);
    if (d.arcs.empty()) continue;

    std::vector<std::set<std::string>> sinks = minimalSinkSets(d);
    if (!sinks.empty()) {
      // Smallest sink set; ties resolved lexicographically by contents.
      const std::set<std::string>* best = nullptr;
      for (const auto& s : sinks) {
        if (!best || s.size() < best->size() ||
            (s.size() == best->size() &&
             std::lexicographical_compare(s.begin(), s.end(), best->begin(),
                                          best->end())))
          best = &s;
      }
      return *best;
    }

    // No sink component with >= 2 taxa: take the condensation vertex with the
    // fewest (but at least one) children together with those children.
    Condensation c = condense(d);
    std::vector<std::set<int>> children(c.components.size());
    for (const auto& [u, v] : c.componentArcs) children[u].insert(v);
    int best = -1;
    for (std::size_t p = 0; p < c.components.size(); ++p) {
      if (children[p].empty()) continue;
      if (best < 0 || children[p].size() < children[best].size() ||
          (children[p].size() == children[best].size() &&
           *c.components[p].begin() < *c.components[best].begin()))
        best = (int)p;
    }
    if (best < 0) continue;  // arcs exist, so this cannot happen
    std::set<std::string> out = c.components[best];
    for (int ch : children[best])
      out.insert(c.components[ch].begin(), c.components[ch].end());
    return out;
  }
  throw std::runtime_error("insufficient trinets: no omega level has an arc");
}

}  // namespace levelnet
