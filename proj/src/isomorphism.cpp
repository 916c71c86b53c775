#include "levelnet/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace levelnet {
namespace {

// --- certificate: color refinement with individualization ---------------
//
// Vertices start with colors derived from (indegree, outdegree, leaf label)
// and are refined by the multiset of neighbor colors until stable.  If the
// coloring is not discrete, the first ambiguous color class (in color order)
// is split by individualizing each member in turn; the lexicographically
// smallest certificate over all branches is the canonical form.  Exact for
// arbitrary graphs; intended for the desk-scale networks used here.

struct CertContext {
  const Network& net;
  int n;
};

std::vector<int> refine(const CertContext& ctx, std::vector<std::string> color) {
  const Network& net = ctx.net;
  // Refinement only ever splits classes, so the partition is stable exactly
  // when the class count stops growing.
  size_t classCount = std::set<std::string>(color.begin(), color.end()).size();
  while (true) {
    std::vector<std::string> next(ctx.n);
    for (Vertex v = 0; v < ctx.n; ++v) {
      std::vector<std::string> outc, inc;
      for (Vertex c : net.children(v)) outc.push_back(color[c]);
      for (Vertex p : net.parents(v)) inc.push_back(color[p]);
      std::sort(outc.begin(), outc.end());
      std::sort(inc.begin(), inc.end());
      std::string sig = color[v] + "|out:";
      for (const auto& s : outc) sig += s + ";";
      sig += "|in:";
      for (const auto& s : inc) sig += s + ";";
      next[v] = sig;
    }
    // Re-index signatures to compact color names, ordered by signature.
    std::map<std::string, int> index;
    for (const auto& s : next) index.emplace(s, 0);
    if (index.size() == classCount) break;
    classCount = index.size();
    int k = 0;
    for (auto& [sig, id] : index) id = k++;
    for (Vertex v = 0; v < ctx.n; ++v) color[v] = std::to_string(index[next[v]]);
  }
  // Final colors as integers ordered by color string.
  std::map<std::string, int> index;
  for (const auto& s : color) index.emplace(s, 0);
  int k = 0;
  for (auto& [sig, id] : index) id = k++;
  std::vector<int> out(ctx.n);
  for (Vertex v = 0; v < ctx.n; ++v) out[v] = index[color[v]];
  return out;
}

std::string certFromOrder(const CertContext& ctx, const std::vector<int>& rank) {
  // rank[v] = canonical position of v
  std::vector<std::pair<int, int>> arcRanks;
  for (const Arc& a : ctx.net.arcs())
    arcRanks.push_back({rank[a.tail], rank[a.head]});
  std::sort(arcRanks.begin(), arcRanks.end());
  std::vector<std::pair<int, std::string>> labels;
  for (Vertex v = 0; v < ctx.n; ++v)
    if (ctx.net.hasLabel(v)) labels.push_back({rank[v], ctx.net.label(v)});
  std::sort(labels.begin(), labels.end());
  std::ostringstream os;
  os << "n" << ctx.n << "/";
  for (const auto& [t, h] : arcRanks) os << t << ">" << h << ",";
  os << "/";
  for (const auto& [r, name] : labels) os << r << "=" << name << ",";
  return os.str();
}

std::string canonSearch(const CertContext& ctx, std::vector<std::string> color) {
  std::vector<int> colors = refine(ctx, std::move(color));
  // Group vertices by refined color.
  std::map<int, std::vector<Vertex>> classes;
  for (Vertex v = 0; v < ctx.n; ++v) classes[colors[v]].push_back(v);

  // Discrete coloring: every class a singleton -> canonical order found.
  bool discrete = true;
  for (const auto& [c, vs] : classes)
    if (vs.size() > 1) discrete = false;
  if (discrete) {
    std::vector<int> rank(ctx.n);
    int pos = 0;
    for (const auto& [c, vs] : classes) rank[vs.front()] = pos++;
    return certFromOrder(ctx, rank);
  }

  // Individualize each member of the first non-singleton class.
  const std::vector<Vertex>* target = nullptr;
  for (const auto& [c, vs] : classes)
    if (vs.size() > 1) {
      target = &vs;
      break;
    }
  std::string best;
  for (Vertex pick : *target) {
    std::vector<std::string> branch(ctx.n);
    for (Vertex v = 0; v < ctx.n; ++v)
      branch[v] = std::to_string(colors[v]) + (v == pick ? "*" : "");
    std::string cert = canonSearch(ctx, std::move(branch));
    if (best.empty() || cert < best) best = cert;
  }
  return best;
}

}  // namespace

std::string certificate(const Network& net) {
  CertContext ctx{net, net.vertexCount()};
  std::vector<std::string> init(ctx.n);
  for (Vertex v = 0; v < ctx.n; ++v) {
    if (net.hasLabel(v))
      init[v] = "L:" + net.label(v);
    else
      init[v] = "D:" + std::to_string(net.indegree(v)) + "," +
                std::to_string(net.outdegree(v));
  }
  return canonSearch(ctx, std::move(init));
}

namespace {

// --- backtracking isomorphism -------------------------------------------

// Multiplicity of arc (u,v).
int arcMult(const Network& net, Vertex u, Vertex v) {
  int m = 0;
  for (Vertex c : net.children(u))
    if (c == v) ++m;
  return m;
}

struct IsoSearch {
  const Network& a;
  const Network& b;
  std::vector<int> map;   // a-vertex -> b-vertex or -1
  std::vector<bool> used; // b-vertex already targeted
  std::vector<Vertex> order;

  bool compatible(Vertex va, Vertex vb) const {
    if (a.indegree(va) != b.indegree(vb)) return false;
    if (a.outdegree(va) != b.outdegree(vb)) return false;
    if (a.label(va) != b.label(vb)) return false;
    // Arcs to/from already-mapped vertices must match with multiplicity.
    for (Vertex u = 0; u < a.vertexCount(); ++u) {
      if (map[u] < 0) continue;
      if (arcMult(a, va, u) != arcMult(b, vb, map[u])) return false;
      if (arcMult(a, u, va) != arcMult(b, map[u], vb)) return false;
    }
    return true;
  }

  bool search(size_t idx) {
    if (idx == order.size()) return true;
    Vertex va = order[idx];
    for (Vertex vb = 0; vb < b.vertexCount(); ++vb) {
      if (used[vb] || !compatible(va, vb)) continue;
      map[va] = vb;
      used[vb] = true;
      if (search(idx + 1)) return true;
      map[va] = -1;
      used[vb] = false;
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const Network& a, const Network& b) {
  if (a.vertexCount() != b.vertexCount()) return false;
  if (a.arcs().size() != b.arcs().size()) return false;
  if (a.taxa() != b.taxa()) return false;
  // Degree histogram must agree.
  std::map<std::pair<int, int>, int> da, db;
  for (Vertex v = 0; v < a.vertexCount(); ++v)
    ++da[{a.indegree(v), a.outdegree(v)}];
  for (Vertex v = 0; v < b.vertexCount(); ++v)
    ++db[{b.indegree(v), b.outdegree(v)}];
  if (da != db) return false;

  IsoSearch s{a, b, std::vector<int>(a.vertexCount(), -1),
              std::vector<bool>(b.vertexCount(), false), {}};
  // Map vertices in a BFS-like order from the root so adjacency constraints
  // prune early; leaves are forced by their labels.
  std::vector<bool> seen(a.vertexCount(), false);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < a.vertexCount(); ++v)
    if (a.indegree(v) == 0) {
      queue.push_back(v);
      seen[v] = true;
    }
  for (size_t i = 0; i < queue.size(); ++i) {
    for (Vertex c : a.children(queue[i]))
      if (!seen[c]) {
        seen[c] = true;
        queue.push_back(c);
      }
  }
  for (Vertex v = 0; v < a.vertexCount(); ++v)
    if (!seen[v]) queue.push_back(v);
  s.order = queue;
  return s.search(0);
}

}  // namespace levelnet
