#include "levelnet/network.hpp"

#include <algorithm>
#include <stdexcept>

namespace levelnet {

Network::Network(int vertexCount, std::vector<Arc> arcs,
                 std::map<Vertex, std::string> leafLabels)
    : vertexCount_(vertexCount), arcs_(std::move(arcs)) {
  labels_.assign(vertexCount_, "");
  children_.assign(vertexCount_, {});
  parents_.assign(vertexCount_, {});
  for (const auto& [v, name] : leafLabels) {
    if (v < 0 || v >= vertexCount_)
      throw std::invalid_argument("leaf label on unknown vertex");
    labels_[v] = name;
    labelToVertex_[name] = v;
  }
  for (const Arc& a : arcs_) {
    if (a.tail < 0 || a.tail >= vertexCount_ || a.head < 0 ||
        a.head >= vertexCount_)
      throw std::invalid_argument("arc endpoint out of range");
    children_[a.tail].push_back(a.head);
    parents_[a.head].push_back(a.tail);
  }
  for (Vertex v = 0; v < vertexCount_; ++v) {
    std::sort(children_[v].begin(), children_[v].end());
    std::sort(parents_[v].begin(), parents_[v].end());
    if (parents_[v].empty() && root_ == -1) root_ = v;
  }
}

Network NetworkBuilder::build() const {
  std::map<Vertex, std::string> leafLabels;
  for (Vertex v = 0; v < static_cast<Vertex>(labels_.size()); ++v)
    if (!labels_[v].empty()) leafLabels[v] = labels_[v];
  return Network(static_cast<int>(labels_.size()), arcs_, leafLabels);
}

std::optional<Vertex> Network::leafWithLabel(const std::string& name) const {
  auto it = labelToVertex_.find(name);
  if (it == labelToVertex_.end()) return std::nullopt;
  return it->second;
}

std::set<std::string> Network::taxa() const {
  std::set<std::string> out;
  for (const auto& [name, v] : labelToVertex_) out.insert(name);
  return out;
}

std::vector<Vertex> Network::topologicalOrder() const {
  std::vector<int> remaining(vertexCount_);
  std::vector<Vertex> order;
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < vertexCount_; ++v) {
    remaining[v] = indegree(v);
    if (remaining[v] == 0) stack.push_back(v);
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Vertex c : children_[v])
      if (--remaining[c] == 0) stack.push_back(c);
  }
  return order;  // shorter than vertexCount_ iff a cycle exists
}

bool Network::isAcyclic() const {
  return static_cast<int>(topologicalOrder().size()) == vertexCount_;
}

std::set<Vertex> Network::reachableFrom(Vertex v) const {
  std::set<Vertex> seen{v};
  std::vector<Vertex> stack{v};
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex c : children_[u])
      if (seen.insert(c).second) stack.push_back(c);
  }
  return seen;
}

std::set<std::string> Network::descendantTaxa(Vertex v) const {
  std::set<std::string> out;
  for (Vertex u : reachableFrom(v))
    if (hasLabel(u)) out.insert(label(u));
  return out;
}

std::vector<std::string> validate(const Network& net) {
  std::vector<std::string> problems;
  const int n = net.vertexCount();
  if (n == 0) {
    problems.push_back("network has no vertices");
    return problems;
  }

  std::vector<Vertex> roots;
  for (Vertex v = 0; v < n; ++v)
    if (net.indegree(v) == 0) roots.push_back(v);
  if (roots.size() != 1)
    problems.push_back("expected exactly one indegree-0 vertex, found " +
                       std::to_string(roots.size()));

  for (Vertex v = 0; v < n; ++v) {
    const int in = net.indegree(v);
    const int out = net.outdegree(v);
    const bool ok = (in == 0 && out == 2) || (in == 1 && out == 2) ||
                    (in == 2 && out == 1) || (in == 1 && out == 0);
    if (!ok)
      problems.push_back("vertex " + std::to_string(v) + " has degree (" +
                         std::to_string(in) + "," + std::to_string(out) +
                         "), not one of (0,2),(1,2),(2,1),(1,0)");
    if (out == 0 && !net.hasLabel(v))
      problems.push_back("leaf vertex " + std::to_string(v) + " is unlabeled");
    if (out != 0 && net.hasLabel(v))
      problems.push_back("internal vertex " + std::to_string(v) +
                         " carries label '" + net.label(v) + "'");
  }

  std::set<std::string> seenLabels;
  int labeledCount = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!net.hasLabel(v)) continue;
    ++labeledCount;
    if (!seenLabels.insert(net.label(v)).second)
      problems.push_back("duplicate leaf label '" + net.label(v) + "'");
  }
  if (labeledCount != net.leafCount())
    problems.push_back("leaf label map inconsistent with labeled vertices");

  for (const Arc& a : net.arcs())
    if (a.tail == a.head)
      problems.push_back("self-loop at vertex " + std::to_string(a.tail));

  if (!net.isAcyclic()) problems.push_back("network contains a directed cycle");

  if (roots.size() == 1 && net.isAcyclic()) {
    std::set<Vertex> reach = net.reachableFrom(roots[0]);
    if (static_cast<int>(reach.size()) != n)
      problems.push_back("not every vertex is reachable from the root");
  }
  return problems;
}

}  // namespace levelnet
