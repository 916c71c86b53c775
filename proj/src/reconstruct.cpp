#include "levelnet/reconstruct.hpp"

#include <algorithm>
#include <stdexcept>

#include "levelnet/cutset.hpp"
#include "levelnet/isomorphism.hpp"
#include "levelnet/simple_builder.hpp"
#include "levelnet/structure.hpp"
#include "levelnet/trinet_info.hpp"

namespace levelnet {

namespace {

Network relabelLeaf(const Network& net, const std::string& from,
                    const std::string& to) {
  NetworkBuilder b;
  for (Vertex v = 0; v < net.vertexCount(); ++v) {
    if (net.label(v) == from)
      b.addLeaf(to);
    else if (net.hasLabel(v))
      b.addLeaf(net.label(v));
    else
      b.addVertex();
  }
  for (const Arc& a : net.arcs()) b.addArc(a.tail, a.head);
  return b.build();
}

// When the taxa below a cut-arc are collapsed onto a single leaf, the part
// of the network strictly below that cut-arc must disappear with them.  A
// restriction to one representative taxon erases it almost everywhere: any
// parallel pair it leaves behind is collapsed away.  The one shape that
// survives is a bare two-reticulation diamond
//   z -> w, z -> h2, w -> h2, w -> h3, h2 -> h3, h3 -> leaf
// with no other taxa below z.  Contract that pendant part onto z so the
// collapsed leaf really is a plain leaf; repeat in case stacked blobs each
// left one behind.
Network contractCollapsedShadow(Network net, const std::string& target) {
  for (;;) {
    auto leafOpt = net.leafWithLabel(target);
    if (!leafOpt) return net;
    Vertex leaf = *leafOpt;
    if (net.parents(leaf).size() != 1) return net;
    Vertex h3 = net.parents(leaf)[0];
    if (net.parents(h3).size() != 2 || net.children(h3).size() != 1) return net;
    Vertex p1 = net.parents(h3)[0];
    Vertex p2 = net.parents(h3)[1];
    if (p1 == p2) return net;
    auto isRetic = [&](Vertex v) {
      return net.parents(v).size() == 2 && net.children(v).size() == 1;
    };
    Vertex h2, w;
    if (isRetic(p1) && net.children(p1)[0] == h3) {
      h2 = p1;
      w = p2;
    } else if (isRetic(p2) && net.children(p2)[0] == h3) {
      h2 = p2;
      w = p1;
    } else {
      return net;
    }
    if (net.parents(w).size() != 1 || net.children(w).size() != 2) return net;
    std::set<Vertex> wKids(net.children(w).begin(), net.children(w).end());
    if (wKids != std::set<Vertex>{h2, h3}) return net;
    std::set<Vertex> h2Par(net.parents(h2).begin(), net.parents(h2).end());
    if (h2Par.size() != 2 || !h2Par.count(w)) return net;
    Vertex z = *h2Par.begin() == w ? *h2Par.rbegin() : *h2Par.begin();
    if (net.parents(w)[0] != z) return net;
    if (net.children(z).size() != 2 || net.parents(z).size() != 1) return net;
    std::set<Vertex> zKids(net.children(z).begin(), net.children(z).end());
    if (zKids != std::set<Vertex>{w, h2}) return net;

    std::set<Vertex> drop = {w, h2, h3, leaf};
    NetworkBuilder b;
    std::vector<Vertex> remap(net.vertexCount(), -1);
    for (Vertex v = 0; v < net.vertexCount(); ++v) {
      if (drop.count(v)) continue;
      if (v == z)
        remap[v] = b.addLeaf(target);
      else
        remap[v] = net.hasLabel(v) ? b.addLeaf(net.label(v)) : b.addVertex();
    }
    for (const Arc& a : net.arcs()) {
      if (drop.count(a.tail) || drop.count(a.head) || a.tail == z) continue;
      b.addArc(remap[a.tail], remap[a.head]);
    }
    net = b.build();
  }
}

// Left caterpillar over the sorted taxa: ((...(x1,x2),...),xk).
Network caterpillar(const std::set<std::string>& taxa) {
  std::vector<std::string> list(taxa.begin(), taxa.end());
  NetworkBuilder b;
  Vertex cur = b.addLeaf(list[0]);
  for (size_t i = 1; i < list.size(); ++i) {
    Vertex leaf = b.addLeaf(list[i]);
    Vertex join = b.addVertex();
    b.addArc(join, cur);
    b.addArc(join, leaf);
    cur = join;
  }
  return b.build();
}

// New root joining the two networks side by side (label sets must already
// be disjoint).
Network joinAtRoot(const Network& left, const Network& right) {
  NetworkBuilder b;
  Vertex root = b.addVertex();
  auto copy = [&](const Network& n) {
    std::vector<Vertex> remap(n.vertexCount());
    for (Vertex v = 0; v < n.vertexCount(); ++v)
      remap[v] = n.hasLabel(v) ? b.addLeaf(n.label(v)) : b.addVertex();
    for (const Arc& a : n.arcs()) b.addArc(remap[a.tail], remap[a.head]);
    return remap[n.root()];
  };
  b.addArc(root, copy(left));
  b.addArc(root, copy(right));
  return b.build();
}

const TrinetEntry& maxMultiplicityBinet(const TrinetCollection& T) {
  const TrinetEntry* best = nullptr;
  for (const auto& [key, entry] : T.entries()) {
    if (entry.representative.leafCount() != 2) continue;
    if (!best || entry.multiplicity > best->multiplicity) best = &entry;
  }
  if (!best)
    throw std::runtime_error("reconstruct: two-taxon collection holds no binet");
  return *best;
}

std::string joinTaxa(const std::set<std::string>& taxa) {
  std::string out;
  for (const std::string& t : taxa) {
    if (!out.empty()) out += ",";
    out += t;
  }
  return out;
}

std::string describeBuild(const BuildReport& br) {
  if (br.binet) return "kept the maximum-multiplicity binet";
  return "k=" + std::to_string(br.k) + ", generator " + br.generatorId;
}

Network reconstructImpl(const TrinetCollection& T, int depth,
                        ReconstructReport& report) {
  const std::set<std::string>& X = T.taxonUniverse();
  const std::string at = "level " + std::to_string(depth) + ": ";
  if (X.size() < 2)
    throw std::runtime_error("reconstruct: need at least two taxa");
  if (X.size() == 2) {
    report.stages.push_back(at + "two taxa left ({" + joinTaxa(X) +
                            "}); kept the maximum-multiplicity binet");
    return maxMultiplicityBinet(T).representative;
  }

  std::set<std::string> A = findCutArcSet(T);

  if (A == X) {
    BuildReport br;
    Network n = buildSimple(T, &br);
    report.stages.push_back(at + "simple part on {" + joinTaxa(X) + "}; " +
                            describeBuild(br));
    for (const auto& note : br.notes) report.notes.push_back(note);
    return n;
  }

  // Decompose: reconstruct the collapsed remainder, build the simple part
  // on A, then graft the part back in place of the fresh leaf.
  std::string aStar = "⟨collapse:" + std::to_string(depth) + "⟩";
  report.stages.push_back(at + "cut-arc set {" + joinTaxa(A) +
                          "} collapsed onto " + aStar);
  TrinetCollection TStar = collapseCollection(T, A, aStar);
  Network nStar = reconstructImpl(TStar, depth + 1, report);

  TrinetCollection TPrime = restrictCollection(T, A);
  Network nPrime;
  if (TPrime.empty()) {
    nPrime = caterpillar(A);
    report.notes.push_back(
        "no entry covers two taxa of the cut-arc set; placed its " +
        std::to_string(A.size()) + " taxa as a caterpillar");
  } else {
    BuildReport br;
    try {
      nPrime = buildSimple(TPrime, &br);
      report.stages.push_back(at + "simple part on {" + joinTaxa(A) + "}; " +
                              describeBuild(br));
      for (const auto& note : br.notes) report.notes.push_back(note);
    } catch (const std::exception& e) {
      nPrime = caterpillar(TPrime.taxonUniverse());
      report.notes.push_back(std::string("simple construction failed (") +
                             e.what() + "); placed the covered taxa as a caterpillar");
    }
    std::set<std::string> covered = nPrime.taxa();
    if (covered != A) {
      // Sparse input: some taxa of A appear in no restricted entry.  Chain
      // them in above the built part.
      for (auto it = A.rbegin(); it != A.rend(); ++it)
        if (!covered.count(*it)) {
          nPrime = joinAtRoot(nPrime, caterpillar({*it}));
          report.notes.push_back("taxon '" + *it +
                                 "' missing from the restricted entries; "
                                 "attached above the simple part");
        }
    }
  }

  if (!nStar.leafWithLabel(aStar)) {
    report.notes.push_back(
        "no entry straddles the cut-arc set; joined the parts at a new root");
    return joinAtRoot(nStar, nPrime);
  }
  return graft(nStar, aStar, nPrime);
}

}  // namespace

TrinetCollection ingest(const std::vector<TrinetFileEntry>& entries,
                        ReconstructReport& report) {
  TrinetCollection T;
  for (const auto& e : entries) {
    int leaves = e.network.leafCount();
    if ((leaves != 2 && leaves != 3) || !validate(e.network).empty()) {
      report.droppedInvalid += e.multiplicity;
      continue;
    }
    if (!isRecoverable(e.network)) {
      report.droppedNonRecoverable += e.multiplicity;
      continue;
    }
    if (level(e.network) > 2) {
      report.droppedOversized += e.multiplicity;
      continue;
    }
    T.add(e.network, e.multiplicity);
  }
  return T;
}

TrinetCollection collapseCollection(const TrinetCollection& T,
                                    const std::set<std::string>& A,
                                    const std::string& aStar) {
  TrinetCollection out;
  for (const auto& [key, entry] : T.entries()) {
    std::set<std::string> taxa = entry.representative.taxa();
    std::set<std::string> outside;
    std::set<std::string> inside;
    for (const auto& t : taxa)
      (A.count(t) ? inside : outside).insert(t);
    if (inside.empty()) {
      out.add(entry.representative, entry.multiplicity);
      continue;
    }
    if (outside.empty()) continue;  // entirely below the cut-arc: dropped

    std::string a = *inside.begin();  // lexicographic representative
    std::set<std::string> keep = outside;
    keep.insert(a);
    Network restricted = keep == taxa ? entry.representative
                                      : restrictTo(entry.representative, keep);
    out.add(contractCollapsedShadow(relabelLeaf(restricted, a, aStar), aStar),
            entry.multiplicity);
  }
  return out;
}

TrinetCollection restrictCollection(const TrinetCollection& T,
                                    const std::set<std::string>& A) {
  TrinetCollection out;
  for (const auto& [key, entry] : T.entries()) {
    std::set<std::string> taxa = entry.representative.taxa();
    std::set<std::string> keep;
    for (const auto& t : taxa)
      if (A.count(t)) keep.insert(t);
    if (keep.size() < 2) continue;
    if (keep == taxa)
      out.add(entry.representative, entry.multiplicity);
    else
      out.add(restrictTo(entry.representative, keep), entry.multiplicity);
  }
  return out;
}

Network graft(const Network& nStar, const std::string& aStar,
              const Network& nPrime) {
  auto leaf = nStar.leafWithLabel(aStar);
  if (!leaf)
    throw std::invalid_argument("graft: no leaf named '" + aStar + "'");
  for (const auto& t : nStar.taxa())
    if (t != aStar && nPrime.taxa().count(t))
      throw std::invalid_argument("graft: label '" + t +
                                  "' appears on both sides");

  NetworkBuilder b;
  std::vector<Vertex> remap(nStar.vertexCount(), -1);
  for (Vertex v = 0; v < nStar.vertexCount(); ++v) {
    if (v == *leaf) continue;
    remap[v] = nStar.hasLabel(v) ? b.addLeaf(nStar.label(v)) : b.addVertex();
  }
  std::vector<Vertex> remapPrime(nPrime.vertexCount());
  for (Vertex v = 0; v < nPrime.vertexCount(); ++v)
    remapPrime[v] =
        nPrime.hasLabel(v) ? b.addLeaf(nPrime.label(v)) : b.addVertex();

  for (const Arc& a : nStar.arcs()) {
    if (a.head == *leaf)
      b.addArc(remap[a.tail], remapPrime[nPrime.root()]);
    else
      b.addArc(remap[a.tail], remap[a.head]);
  }
  for (const Arc& a : nPrime.arcs()) b.addArc(remapPrime[a.tail], remapPrime[a.head]);
  return b.build();
}

Network reconstruct(const TrinetCollection& T, ReconstructReport* report) {
  ReconstructReport local;
  ReconstructReport& rep = report ? *report : local;

  // Entries above level 2 cannot come from a level-2 network; drop them.
  TrinetCollection filtered;
  for (const auto& [key, entry] : T.entries()) {
    const TrinetInfo& info = analyzeTrinetCached(key, entry.representative);
    if (info.level > 2)
      rep.droppedOversized += entry.multiplicity;
    else
      filtered.add(entry.representative, entry.multiplicity);
  }
  if (filtered.empty())
    throw std::runtime_error("reconstruct: no usable entries");
  return reconstructImpl(filtered, 0, rep);
}

}  // namespace levelnet
