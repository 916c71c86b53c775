#include "levelnet/restriction.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "levelnet/isomorphism.hpp"
#include "levelnet/structure.hpp"

namespace levelnet {
namespace {

// Small mutable multigraph used during simplification.
struct Mutable {
  // adjacency as arc list; vertices flagged dead when removed
  std::vector<Arc> arcs;
  std::vector<bool> alive;
  std::vector<std::string> labels;

  int indeg(Vertex v) const {
    int d = 0;
    for (const Arc& a : arcs)
      if (a.head == v) ++d;
    return d;
  }
  int outdeg(Vertex v) const {
    int d = 0;
    for (const Arc& a : arcs)
      if (a.tail == v) ++d;
    return d;
  }

  // Collapses one parallel pair; true if something changed.
  bool collapseParallel() {
    for (size_t i = 0; i < arcs.size(); ++i)
      for (size_t j = i + 1; j < arcs.size(); ++j)
        if (arcs[i] == arcs[j]) {
          arcs.erase(arcs.begin() + j);
          return true;
        }
    return false;
  }

  // Suppresses one indegree-1 outdegree-1 vertex; true if changed.
  bool suppressUnary() {
    for (Vertex v = 0; v < static_cast<Vertex>(alive.size()); ++v) {
      if (!alive[v] || !labels[v].empty()) continue;
      if (indeg(v) != 1 || outdeg(v) != 1) continue;
      Vertex p = -1, c = -1;
      for (const Arc& a : arcs) {
        if (a.head == v) p = a.tail;
        if (a.tail == v) c = a.head;
      }
      arcs.erase(std::remove_if(arcs.begin(), arcs.end(),
                                [&](const Arc& a) {
                                  return a.head == v || a.tail == v;
                                }),
                 arcs.end());
      arcs.push_back({p, c});
      alive[v] = false;
      return true;
    }
    return false;
  }

  // Contracts an outdegree-1 root (indegree 0); true if changed.
  bool contractUnaryRoot() {
    for (Vertex v = 0; v < static_cast<Vertex>(alive.size()); ++v) {
      if (!alive[v] || !labels[v].empty()) continue;
      if (indeg(v) != 0 || outdeg(v) != 1) continue;
      arcs.erase(std::remove_if(arcs.begin(), arcs.end(),
                                [&](const Arc& a) { return a.tail == v; }),
                 arcs.end());
      alive[v] = false;
      return true;
    }
    return false;
  }

  Network toNetwork() const {
    std::vector<Vertex> remap(alive.size(), -1);
    NetworkBuilder b;
    for (Vertex v = 0; v < static_cast<Vertex>(alive.size()); ++v) {
      if (!alive[v]) continue;
      remap[v] = labels[v].empty() ? b.addVertex() : b.addLeaf(labels[v]);
    }
    for (const Arc& a : arcs) b.addArc(remap[a.tail], remap[a.head]);
    return b.build();
  }
};

}  // namespace

Network restrictTo(const Network& net, const std::set<std::string>& A) {
  if (A.size() < 2)
    throw std::invalid_argument("restrictTo: need at least 2 taxa");
  std::set<Vertex> targets;
  for (const auto& name : A) {
    auto v = net.leafWithLabel(name);
    if (!v)
      throw std::invalid_argument("restrictTo: unknown taxon '" + name + "'");
    targets.insert(*v);
  }

  const Vertex v0 = lsa(net, A);

  // Keep vertices on a v0-to-A path: reachable from v0 and reaching A.
  // One forward sweep from v0 plus one backward sweep from the targets.
  std::set<Vertex> below = net.reachableFrom(v0);
  std::set<Vertex> keep;
  std::vector<Vertex> stack;
  for (Vertex t : targets)
    if (below.count(t)) {
      keep.insert(t);
      stack.push_back(t);
    }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex p : net.parents(v))
      if (below.count(p) && keep.insert(p).second) stack.push_back(p);
  }

  Mutable g;
  g.alive.assign(net.vertexCount(), false);
  g.labels.assign(net.vertexCount(), "");
  for (Vertex v : keep) {
    g.alive[v] = true;
    if (targets.count(v)) g.labels[v] = net.label(v);
  }
  for (const Arc& a : net.arcs())
    if (keep.count(a.tail) && keep.count(a.head)) g.arcs.push_back(a);

  // Simplify to the fixpoint; the order of the two operations does not
  // affect the result (asserted on random instances in tests).
  while (g.collapseParallel() || g.suppressUnary() || g.contractUnaryRoot()) {
  }
  return g.toNetwork();
}

void TrinetCollection::add(const Network& net, long long multiplicity) {
  if (multiplicity <= 0)
    throw std::invalid_argument("TrinetCollection: multiplicity must be >= 1");
  const int leaves = net.leafCount();
  if (leaves != 2 && leaves != 3)
    throw std::invalid_argument(
        "TrinetCollection: entries must have 2 or 3 leaves");
  if (!validate(net).empty())
    throw std::invalid_argument("TrinetCollection: entry is not a valid network");
  if (!isRecoverable(net))
    throw std::invalid_argument("TrinetCollection: entry is not recoverable");

  std::string key = certificate(net);
  auto it = entries_.find(key);
  if (it == entries_.end())
    entries_[key] = {net, multiplicity};
  else
    it->second.multiplicity += multiplicity;
  totalMultiplicity_ += multiplicity;
  for (const auto& t : net.taxa()) taxa_.insert(t);
}

namespace {

TrinetCollection subsetsOfSizes(const Network& net, bool includePairs) {
  TrinetCollection out;
  const std::set<std::string> taxaSet = net.taxa();
  std::vector<std::string> taxa(taxaSet.begin(), taxaSet.end());
  const int n = static_cast<int>(taxa.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (includePairs)
        out.add(restrictTo(net, {taxa[i], taxa[j]}));
      for (int k = j + 1; k < n; ++k)
        out.add(restrictTo(net, {taxa[i], taxa[j], taxa[k]}));
    }
  return out;
}

}  // namespace

TrinetCollection trinets(const Network& net) {
  if (net.leafCount() < 3)
    throw std::invalid_argument("trinets: need at least 3 leaves");
  return subsetsOfSizes(net, false);
}

TrinetCollection binetsAndTrinets(const Network& net) {
  if (net.leafCount() < 2)
    throw std::invalid_argument("binetsAndTrinets: need at least 2 leaves");
  return subsetsOfSizes(net, true);
}

}  // namespace levelnet
