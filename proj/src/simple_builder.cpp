#include "levelnet/simple_builder.hpp"

#include <algorithm>
#include <stdexcept>

#include "levelnet/trinet_info.hpp"

namespace levelnet {

namespace {

std::string classKey(const std::set<std::string>& sides) {
  std::string key;
  for (const auto& s : sides) {
    if (!key.empty()) key += ",";
    key += s;
  }
  return key;
}

// q with the q(x,x) = 1 convention and missing pairs read as 0.
Fraction qValue(
    const std::map<std::pair<std::string, std::string>, Fraction>& q,
    const std::string& x, const std::string& y) {
  if (x == y) return Fraction(1);
  auto it = q.find({std::min(x, y), std::max(x, y)});
  return it == q.end() ? Fraction(0) : it->second;
}

Fraction aValue(
    const std::map<std::pair<std::string, std::string>, Fraction>& a,
    const std::string& x, const std::string& y) {
  auto it = a.find({x, y});
  return it == a.end() ? Fraction(0) : it->second;
}

int generatorLevel(const Generator& g) {
  // Reticulations of the generator: vertices of indegree 2.
  std::map<Vertex, int> indeg;
  for (const Arc& a : g.arcs) ++indeg[a.head];
  int count = 0;
  for (const auto& [v, d] : indeg)
    if (d == 2) ++count;
  return count;
}

}  // namespace

ScoreTables scoreTables(const TrinetCollection& T) {
  ScoreTables st;
  long long trinetMult = 0, level2Mult = 0;
  std::map<std::pair<std::string, std::string>, long long> qNum, qDen;
  std::map<std::pair<std::string, std::string>, long long> aNum, aDen;

  for (const auto& [key, entry] : T.entries()) {
    const TrinetInfo& info = analyzeTrinetCached(key, entry.representative);
    if (info.leafCount != 3) continue;
    trinetMult += entry.multiplicity;
    if (info.level == 2) level2Mult += entry.multiplicity;
    if (!info.simple) continue;

    std::set<std::string> taxa = entry.representative.taxa();
    std::vector<std::string> list(taxa.begin(), taxa.end());
    for (size_t i = 0; i < list.size(); ++i)
      for (size_t j = i + 1; j < list.size(); ++j) {
        std::pair<std::string, std::string> pr{list[i], list[j]};
        qDen[pr] += entry.multiplicity;
        if (info.sameSide.count(pr)) qNum[pr] += entry.multiplicity;
      }
    for (const auto& pr : info.sameSide) {
      aDen[pr] += entry.multiplicity;
      aDen[{pr.second, pr.first}] += entry.multiplicity;
      if (info.before.count(pr))
        aNum[pr] += entry.multiplicity;
      else
        aNum[{pr.second, pr.first}] += entry.multiplicity;
    }
  }

  st.p2 = trinetMult == 0 ? Fraction(0) : Fraction(level2Mult, trinetMult);
  for (const auto& [pr, den] : qDen)
    st.q[pr] = Fraction(qNum.count(pr) ? qNum[pr] : 0, den);
  for (const auto& [pr, den] : aDen)
    st.a[pr] = Fraction(aNum.count(pr) ? aNum[pr] : 0, den);
  return st;
}

LevelChoice chooseLevel(const TrinetCollection& T) {
  if (T.empty()) throw std::invalid_argument("chooseLevel: empty collection");
  LevelChoice lc;
  long long n = (long long)T.taxonUniverse().size();
  if (n == 2) {
    lc.useBinet = true;
    return lc;
  }
  lc.p2 = scoreTables(T).p2;
  // Threshold (n-2) / (2 * C(n,3)): strictly below means one reticulation.
  Fraction threshold(n - 2, 2 * (n * (n - 1) * (n - 2) / 6));
  lc.k = lc.p2 < threshold ? 1 : 2;
  return lc;
}

std::string chooseGenerator(const TrinetCollection& T, int k) {
  std::map<std::string, long long> count;
  for (const Generator& g : generatorCatalog())
    if (generatorLevel(g) == k) count[g.catalogId] = 0;
  if (count.empty())
    throw std::invalid_argument("chooseGenerator: level must be 1 or 2");

  for (const auto& [key, entry] : T.entries()) {
    const TrinetInfo& info = analyzeTrinetCached(key, entry.representative);
    if (info.leafCount != 3 || info.generatorId.empty()) continue;
    auto it = count.find(info.generatorId);
    if (it != count.end()) it->second += entry.multiplicity;
  }

  std::string best;
  long long bestCount = -1;
  // Catalog order decides ties.
  for (const Generator& g : generatorCatalog()) {
    auto it = count.find(g.catalogId);
    if (it != count.end() && it->second > bestCount) {
      best = g.catalogId;
      bestCount = it->second;
    }
  }
  if (bestCount <= 0)
    throw std::runtime_error("chooseGenerator: no strictly level-" +
                             std::to_string(k) + " trinet in the collection");
  return best;
}

ReticulationChoice assignReticulationLeaves(const TrinetCollection& T,
                                            const Generator& g) {
  ReticulationChoice rc;
  SymmetryClasses classes = symmetryClasses(g);

  // Generator-matching trinets and their total multiplicity.
  std::vector<std::string> tgCerts;
  long long tgMult = 0;
  for (const auto& [key, entry] : T.entries()) {
    const TrinetInfo& info = analyzeTrinetCached(key, entry.representative);
    if (info.leafCount == 3 && info.generatorId == g.catalogId) {
      tgCerts.push_back(key);
      tgMult += entry.multiplicity;
    }
  }

  // p[(x, classKey)] over all taxa and reticulation classes.
  for (const auto& cls : classes.reticulationClasses) {
    std::string ck = classKey(cls);
    for (const auto& x : T.taxonUniverse()) {
      long long num = 0;
      for (const auto& cert : tgCerts) {
        const TrinetEntry& entry = T.entries().at(cert);
        const TrinetInfo& info = analyzeTrinetCached(cert, entry.representative);
        bool hit = false;
        for (const auto& pl : info.placements) {
          auto it = pl.find(x);
          if (it != pl.end() && cls.count(it->second)) hit = true;
        }
        if (hit) num += entry.multiplicity;
      }
      rc.p[{x, ck}] = tgMult == 0 ? Fraction(0) : Fraction(num, tgMult);
    }
  }

  // Greedy fill: the class key maps to its sides still lacking a leaf.
  std::map<std::string, std::vector<std::string>> unfilled;
  for (const auto& cls : classes.reticulationClasses)
    unfilled[classKey(cls)] = std::vector<std::string>(cls.begin(), cls.end());
  std::set<std::string> unassigned = T.taxonUniverse();

  while (true) {
    bool anyUnfilled = false;
    for (const auto& [ck, sides] : unfilled)
      if (!sides.empty()) anyUnfilled = true;
    if (!anyUnfilled) break;
    if (unassigned.empty())
      throw std::runtime_error(
          "assignReticulationLeaves: fewer taxa than reticulation sides");

    const std::string* bestX = nullptr;
    const std::string* bestC = nullptr;
    Fraction bestP(-1);
    for (const auto& x : unassigned)
      for (const auto& [ck, sides] : unfilled) {
        if (sides.empty()) continue;
        const Fraction& p = rc.p.at({x, ck});
        if (p > bestP) {
          bestP = p;
          bestX = &x;
          bestC = &ck;
        }
      }
    std::string side = unfilled[*bestC].front();
    std::string chosen = *bestX;
    unfilled[*bestC].erase(unfilled[*bestC].begin());
    rc.sideToLeaf[side] = chosen;
    unassigned.erase(chosen);
  }

  // Pinned placements: those mapping every assigned leaf to its side.
  for (const auto& cert : tgCerts) {
    const TrinetEntry& entry = T.entries().at(cert);
    const TrinetInfo& info = analyzeTrinetCached(cert, entry.representative);
    std::vector<std::map<std::string, std::string>> kept;
    for (const auto& pl : info.placements) {
      bool ok = true;
      for (const auto& [side, leaf] : rc.sideToLeaf) {
        auto it = pl.find(leaf);
        bool leafOnSide = it != pl.end() && it->second == side;
        // The side is occupied in every generator-matching trinet; it must
        // be occupied by the assigned leaf.
        bool sideTaken = false;
        for (const auto& [l, s] : pl)
          if (s == side && l != leaf) sideTaken = true;
        if (!leafOnSide || sideTaken) ok = false;
      }
      if (ok) kept.push_back(pl);
    }
    if (!kept.empty()) rc.pinnedPlacements[cert] = kept;
  }
  return rc;
}

std::map<std::string, std::string> assignArcClasses(
    const TrinetCollection& T, const Generator& g,
    const ReticulationChoice& retic, std::vector<std::string>* notes) {
  SymmetryClasses classes = symmetryClasses(g);
  std::vector<std::string> classKeys;
  for (const auto& cls : classes.arcClasses) classKeys.push_back(classKey(cls));
  std::sort(classKeys.begin(), classKeys.end());
  std::map<std::string, const std::set<std::string>*> sidesOf;
  for (const auto& cls : classes.arcClasses) sidesOf[classKey(cls)] = &cls;

  std::set<std::string> reticLeaves;
  for (const auto& [side, leaf] : retic.sideToLeaf) reticLeaves.insert(leaf);

  long long pinnedMult = 0;
  for (const auto& [cert, pls] : retic.pinnedPlacements)
    pinnedMult += T.entries().at(cert).multiplicity;

  std::map<std::string, std::string> result;
  for (const auto& x : T.taxonUniverse()) {
    if (reticLeaves.count(x)) continue;
    std::string bestClass;
    Fraction bestP(-1);
    bool seen = false;
    for (const auto& ck : classKeys) {
      long long num = 0;
      for (const auto& [cert, pls] : retic.pinnedPlacements) {
        bool hit = false;
        for (const auto& pl : pls) {
          auto it = pl.find(x);
          if (it != pl.end() && sidesOf.at(ck)->count(it->second)) hit = true;
        }
        if (hit) num += T.entries().at(cert).multiplicity;
      }
      if (num > 0) seen = true;
      Fraction p = pinnedMult == 0 ? Fraction(0) : Fraction(num, pinnedMult);
      if (p > bestP) {
        bestP = p;
        bestClass = ck;
      }
    }
    result[x] = bestClass;
    if (!seen && notes)
      notes->push_back("taxon '" + x +
                       "' appears in no generator-matching trinet; defaulted "
                       "to arc class {" +
                       bestClass + "}");
  }
  return result;
}

std::map<std::string, std::set<std::string>> partitionArcClass(
    const std::vector<std::string>& classSides,
    const std::set<std::string>& classTaxa,
    const std::map<std::pair<std::string, std::string>, Fraction>& q) {
  // Pairwise affinity over the class, z ranging over classTaxa entirely.
  std::map<std::pair<std::string, std::string>, Fraction> r;
  for (const auto& x : classTaxa)
    for (const auto& y : classTaxa) {
      if (x >= y) continue;
      Fraction sumMin(0), sumX(0), sumY(0);
      for (const auto& z : classTaxa) {
        Fraction qxz = qValue(q, x, z), qyz = qValue(q, y, z);
        sumMin += std::min(qxz, qyz);
        sumX += qxz;
        sumY += qyz;
      }
      r[{x, y}] = 3 * sumMin - sumX - sumY;
    }
  auto rOf = [&](const std::string& x, const std::string& y) {
    return r.at({std::min(x, y), std::max(x, y)});
  };

  std::vector<std::set<std::string>> parts;
  for (const auto& x : classTaxa) parts.push_back({x});

  auto positiveCrossPair = [&]() {
    for (size_t i = 0; i < parts.size(); ++i)
      for (size_t j = i + 1; j < parts.size(); ++j)
        for (const auto& x : parts[i])
          for (const auto& y : parts[j])
            if (rOf(x, y) > 0) return true;
    return false;
  };

  while (parts.size() > 1 &&
         (parts.size() > classSides.size() || positiveCrossPair())) {
    size_t bi = 0, bj = 1;
    Fraction bestAvg;
    bool have = false;
    for (size_t i = 0; i < parts.size(); ++i)
      for (size_t j = i + 1; j < parts.size(); ++j) {
        Fraction sum(0);
        for (const auto& x : parts[i])
          for (const auto& y : parts[j]) sum += rOf(x, y);
        Fraction avg = sum / Fraction((long long)(parts[i].size() * parts[j].size()));
        if (!have || avg > bestAvg) {
          have = true;
          bestAvg = avg;
          bi = i;
          bj = j;
        }
      }
    parts[bi].insert(parts[bj].begin(), parts[bj].end());
    parts.erase(parts.begin() + bj);
    // Keep the part list sorted by contents so pair enumeration order (and
    // with it first-maximum tie-breaking) is deterministic.
    std::sort(parts.begin(), parts.end());
  }

  std::map<std::string, std::set<std::string>> sideTaxa;
  for (const auto& s : classSides) sideTaxa[s] = {};
  // parts are sorted; sides are taken in the given (lexicographic) order.
  std::vector<std::string> orderedSides = classSides;
  std::sort(orderedSides.begin(), orderedSides.end());
  for (size_t i = 0; i < parts.size(); ++i) sideTaxa[orderedSides[i]] = parts[i];
  return sideTaxa;
}

std::map<std::string, std::set<std::string>> alignSides2c(
    const std::map<std::string, std::set<std::string>>& sideTaxa,
    const std::map<std::pair<std::string, std::string>, Fraction>& q) {
  auto taxaOf = [&](const std::string& side) {
    auto it = sideTaxa.find(side);
    return it == sideTaxa.end() ? std::set<std::string>{} : it->second;
  };
  auto u = [&](const std::set<std::string>& S, const std::set<std::string>& T) {
    Fraction sum(0);
    for (const auto& x : S)
      for (const auto& y : T) sum += qValue(q, x, y);
    return sum - Fraction((long long)(S.size() * T.size()));
  };

  std::map<std::string, std::set<std::string>> best;
  Fraction bestScore;
  bool have = false;
  for (bool swap2 : {false, true})
    for (bool swap3 : {false, true}) {
      std::map<std::string, std::set<std::string>> option;
      option["L1"] = taxaOf("L1");
      option["R1"] = taxaOf("R1");
      option["L2"] = taxaOf(swap2 ? "R2" : "L2");
      option["R2"] = taxaOf(swap2 ? "L2" : "R2");
      option["L3"] = taxaOf(swap3 ? "R3" : "L3");
      option["R3"] = taxaOf(swap3 ? "L3" : "R3");
      Fraction score = u(option["L1"], option["L2"]) +
                       u(option["L1"], option["L3"]) +
                       u(option["L2"], option["L3"]) +
                       u(option["R1"], option["R2"]) +
                       u(option["R1"], option["R3"]) +
                       u(option["R2"], option["R3"]);
      // Strict improvement only: the identity option wins ties.
      if (!have || score > bestScore) {
        have = true;
        bestScore = score;
        best = option;
      }
    }
  return best;
}

std::vector<std::string> orderSide(
    const std::set<std::string>& sideTaxa,
    const std::map<std::pair<std::string, std::string>, Fraction>& a) {
  std::vector<std::string> pi;
  std::set<std::string> unplaced = sideTaxa;
  while (!unplaced.empty()) {
    const std::string* bestX = nullptr;
    Fraction bestScore;
    for (const auto& x : unplaced) {
      Fraction score(0);
      for (const auto& y : unplaced)
        if (y != x) score += aValue(a, x, y) - aValue(a, y, x);
      if (!bestX || score > bestScore) {
        bestX = &x;
        bestScore = score;
      }
    }
    std::string chosen = *bestX;
    pi.push_back(chosen);
    unplaced.erase(chosen);
  }
  return pi;
}

Network buildSimple(const TrinetCollection& T, BuildReport* report) {
  if (T.empty()) throw std::invalid_argument("buildSimple: empty collection");

  LevelChoice lc = chooseLevel(T);
  if (lc.useBinet) {
    // Two taxa: return the binet of maximum multiplicity (first key wins
    // ties; entries are keyed canonically).
    const TrinetEntry* best = nullptr;
    for (const auto& [key, entry] : T.entries()) {
      if (entry.representative.leafCount() != 2) continue;
      if (!best || entry.multiplicity > best->multiplicity) best = &entry;
    }
    if (!best)
      throw std::runtime_error("buildSimple: two-taxon collection holds no binet");
    if (report) {
      *report = BuildReport{};
      report->binet = true;
    }
    return best->representative;
  }

  std::string gid = chooseGenerator(T, lc.k);
  const Generator& g = catalogGenerator(gid);
  ReticulationChoice retic = assignReticulationLeaves(T, g);

  std::vector<std::string> notes;
  std::map<std::string, std::string> classOf =
      assignArcClasses(T, g, retic, &notes);

  ScoreTables st = scoreTables(T);

  SymmetryClasses classes = symmetryClasses(g);
  std::map<std::string, std::set<std::string>> sideTaxa;
  for (const auto& cls : classes.arcClasses) {
    std::string ck = classKey(cls);
    std::set<std::string> classTaxa;
    for (const auto& [x, c] : classOf)
      if (c == ck) classTaxa.insert(x);
    std::vector<std::string> sides(cls.begin(), cls.end());
    auto assigned = partitionArcClass(sides, classTaxa, st.q);
    for (auto& [side, taxa] : assigned) sideTaxa[side] = std::move(taxa);
  }

  if (gid == "G2c") sideTaxa = alignSides2c(sideTaxa, st.q);

  SideAssignment assignment;
  for (const auto& [side, leaf] : retic.sideToLeaf)
    assignment.leafToSide[leaf] = side;
  for (const auto& [side, taxa] : sideTaxa) {
    assignment.sideOrder[side] = orderSide(taxa, st.a);
    for (const auto& x : taxa) assignment.leafToSide[x] = side;
  }

  Network net = attach(g, assignment);
  std::vector<std::string> problems = validate(net);
  if (!problems.empty())
    throw std::runtime_error("buildSimple: attach produced an invalid network: " +
                             problems.front());

  if (report) {
    *report = BuildReport{};
    report->k = lc.k;
    report->p2 = lc.p2;
    report->generatorId = gid;
    report->reticulationLeaf = retic.sideToLeaf;
    report->arcClassOf = classOf;
    report->sideOrder = assignment.sideOrder;
    report->notes = notes;
  }
  return net;
}

}  // namespace levelnet
