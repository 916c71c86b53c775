#pragma once

// Rooted binary phylogenetic network data model.
//
// A network is a directed acyclic multigraph with exactly one indegree-0
// vertex (the root, outdegree 2) in which every other vertex is a tree
// vertex (indegree 1, outdegree 2), a reticulation (indegree 2, outdegree 1)
// or a labeled leaf (indegree 1, outdegree 0).  Parallel arcs are permitted
// (the arc container is a multiset); they arise in blobs whose underlying
// generator has a doubled arc.  Networks are immutable after construction;
// all queries are pure.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace levelnet {

using Vertex = int;

struct Arc {
  Vertex tail = -1;
  Vertex head = -1;
};

inline bool operator==(const Arc& a, const Arc& b) {
  return a.tail == b.tail && a.head == b.head;
}
inline bool operator<(const Arc& a, const Arc& b) {
  return std::tie(a.tail, a.head) < std::tie(b.tail, b.head);
}

class Network {
 public:
  Network() = default;
  Network(int vertexCount, std::vector<Arc> arcs,
          std::map<Vertex, std::string> leafLabels);

  int vertexCount() const { return vertexCount_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  // Label of a leaf vertex; empty string for unlabeled vertices.
  const std::string& label(Vertex v) const { return labels_[v]; }
  bool hasLabel(Vertex v) const { return !labels_[v].empty(); }
  std::optional<Vertex> leafWithLabel(const std::string& name) const;
  // Sorted set of all leaf labels.
  std::set<std::string> taxa() const;
  int leafCount() const { return static_cast<int>(labelToVertex_.size()); }

  int indegree(Vertex v) const { return static_cast<int>(parents_[v].size()); }
  int outdegree(Vertex v) const { return static_cast<int>(children_[v].size()); }
  // Adjacency with multiplicity: a parallel arc repeats its endpoint.
  const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }
  const std::vector<Vertex>& parents(Vertex v) const { return parents_[v]; }

  bool isLeaf(Vertex v) const { return outdegree(v) == 0; }
  bool isReticulation(Vertex v) const { return indegree(v) == 2; }

  // The unique indegree-0 vertex.  If the arc set is malformed (no such
  // vertex, or several) the first candidate or -1 is returned; validate()
  // reports the violation.
  Vertex root() const { return root_; }

  // Root-first order; only meaningful for acyclic inputs (validate checks).
  std::vector<Vertex> topologicalOrder() const;
  bool isAcyclic() const;

  // All vertices reachable from v by directed paths, including v.
  std::set<Vertex> reachableFrom(Vertex v) const;
  // Labels of the leaves reachable from v.
  std::set<std::string> descendantTaxa(Vertex v) const;

 private:
  int vertexCount_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::string> labels_;
  std::map<std::string, Vertex> labelToVertex_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::vector<Vertex>> parents_;
  Vertex root_ = -1;
};

// Incremental construction helper.  Vertex ids are dense 0..n-1 in creation
// order; build() freezes the graph into a Network.
class NetworkBuilder {
 public:
  Vertex addVertex() {
    labels_.emplace_back();
    return static_cast<Vertex>(labels_.size()) - 1;
  }
  Vertex addLeaf(const std::string& name) {
    labels_.push_back(name);
    return static_cast<Vertex>(labels_.size()) - 1;
  }
  void setLabel(Vertex v, const std::string& name) { labels_[v] = name; }
  void addArc(Vertex tail, Vertex head) { arcs_.push_back({tail, head}); }
  int vertexCount() const { return static_cast<int>(labels_.size()); }

  Network build() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Arc> arcs_;
};

// Structural invariant check.  Returns one human-readable description per
// violation; an empty result means the network satisfies every invariant.
std::vector<std::string> validate(const Network& net);

}  // namespace levelnet
