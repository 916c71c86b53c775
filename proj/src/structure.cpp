#include "levelnet/structure.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace levelnet {

Vertex lsa(const Network& net, const std::set<std::string>& A) {
  if (A.empty()) throw std::invalid_argument("lsa: empty taxon set");
  std::vector<Vertex> targets;
  for (const auto& name : A) {
    auto v = net.leafWithLabel(name);
    if (!v) throw std::invalid_argument("lsa: unknown taxon '" + name + "'");
    targets.push_back(*v);
  }
  const Vertex root = net.root();
  const Vertex n = net.vertexCount();

  // v stabilizes a iff with v removed the root no longer reaches a, i.e. v
  // lies on every root-to-a path.  The stabilizers of each vertex form a
  // chain, computed here as a dominator tree: process vertices in a
  // topological order of the part reachable from the root; each vertex's
  // immediate stabilizer is the nearest common one of its parents.
  std::set<Vertex> reach = net.reachableFrom(root);
  std::vector<int> pending(n, 0);
  for (const Arc& a : net.arcs())
    if (reach.count(a.tail) && reach.count(a.head)) ++pending[a.head];

  std::vector<Vertex> idom(n, -1);
  std::vector<int> depth(n, 0);
  idom[root] = root;
  auto meet = [&](Vertex a, Vertex b) {
    while (a != b) {
      if (depth[a] >= depth[b])
        a = idom[a];
      else
        b = idom[b];
    }
    return a;
  };
  std::vector<Vertex> queue{root};
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    if (v != root) {
      Vertex d = -1;
      for (Vertex p : net.parents(v)) {
        if (!reach.count(p)) continue;
        d = d < 0 ? p : meet(d, p);
      }
      idom[v] = d;
      depth[v] = depth[d] + 1;
    }
    for (Vertex c : net.children(v))
      if (--pending[c] == 0) queue.push_back(c);
  }

  // The last common stabilizer of the set is the deepest vertex that
  // stabilizes every target.
  Vertex ans = targets[0];
  if (idom[ans] < 0)
    throw std::logic_error("lsa: taxon not reachable from the root");
  for (size_t i = 1; i < targets.size(); ++i) {
    if (idom[targets[i]] < 0)
      throw std::logic_error("lsa: taxon not reachable from the root");
    ans = meet(ans, targets[i]);
  }
  return ans;
}

bool isRecoverable(const Network& net) {
  return lsa(net, net.taxa()) == net.root();
}

std::vector<std::vector<int>> biconnectedComponents(const Network& net) {
  const int n = net.vertexCount();
  const auto& arcs = net.arcs();
  const int m = static_cast<int>(arcs.size());

  // Undirected incidence: vertex -> (arc index, other endpoint).
  std::vector<std::vector<std::pair<int, Vertex>>> inc(n);
  for (int i = 0; i < m; ++i) {
    inc[arcs[i].tail].push_back({i, arcs[i].head});
    inc[arcs[i].head].push_back({i, arcs[i].tail});
  }

  // Bridge finding on the undirected multigraph (iterative DFS with edge
  // ids, so one arc of a parallel pair never blocks the other).
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> isBridge(m, false);
  int timer = 0;
  struct Frame {
    Vertex v;
    int parentEdge;
    size_t next;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    std::vector<Frame> stack{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < inc[f.v].size()) {
        auto [edge, to] = inc[f.v][f.next++];
        if (edge == f.parentEdge) continue;
        if (disc[to] == -1) {
          disc[to] = low[to] = timer++;
          stack.push_back({to, edge, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[to]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] > disc[parent]) isBridge[done.parentEdge] = true;
        }
      }
    }
  }

  // 2-edge-connected classes: components after deleting bridges.
  std::vector<int> comp(n, -1);
  int compCount = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = compCount;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (auto [edge, to] : inc[u]) {
        if (isBridge[edge] || comp[to] != -1) continue;
        comp[to] = compCount;
        stack.push_back(to);
      }
    }
    ++compCount;
  }

  std::vector<std::vector<int>> result;
  std::vector<int> groupIndex(compCount, -1);
  for (int i = 0; i < m; ++i) {
    if (isBridge[i]) {
      result.push_back({i});
      continue;
    }
    int c = comp[arcs[i].tail];
    if (groupIndex[c] == -1) {
      groupIndex[c] = static_cast<int>(result.size());
      result.push_back({});
    }
    result[groupIndex[c]].push_back(i);
  }
  return result;
}

int level(const Network& net) {
  const auto& arcs = net.arcs();
  int best = 0;
  for (const auto& component : biconnectedComponents(net)) {
    // Count reticulations whose in-arcs live in this component; both
    // in-arcs of a reticulation always share a component.
    std::set<Vertex> reticHeads;
    for (int i : component)
      if (net.isReticulation(arcs[i].head)) reticHeads.insert(arcs[i].head);
    if (component.size() == 1) continue;  // a cut-arc holds no blob
    best = std::max(best, static_cast<int>(reticHeads.size()));
  }
  return best;
}

bool isStrictLevel(const Network& net, int k) { return level(net) == k; }

CutArcSetReport cutArcSets(const Network& net) {
  const auto& arcs = net.arcs();
  const std::set<std::string> X = net.taxa();
  std::set<std::set<std::string>> sets;
  sets.insert(X);
  for (const auto& component : biconnectedComponents(net)) {
    if (component.size() != 1) continue;  // only cut-arcs contribute
    const Arc& a = arcs[component.front()];
    std::set<std::string> below = net.descendantTaxa(a.head);
    if (below.size() >= 2) sets.insert(below);
  }

  CutArcSetReport report;
  for (const auto& s : sets) report.sets.push_back(s);
  for (const auto& s : sets) {
    if (s == X) continue;
    bool minimal = true;
    for (const auto& other : sets) {
      if (other == s || other.size() < 2) continue;
      if (other.size() < s.size() &&
          std::includes(s.begin(), s.end(), other.begin(), other.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) report.minimalSets.push_back(s);
  }
  return report;
}

bool isSimple(const Network& net) { return cutArcSets(net).minimalSets.empty(); }

}  // namespace levelnet
