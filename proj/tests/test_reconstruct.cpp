#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "levelnet/enewick.hpp"
#include "levelnet/fixtures.hpp"
#include "levelnet/isomorphism.hpp"
#include "levelnet/random_network.hpp"
#include "levelnet/reconstruct.hpp"
#include "levelnet/restriction.hpp"
#include "levelnet/structure.hpp"

namespace {

using namespace levelnet;

std::set<std::string> keySet(const TrinetCollection& collection) {
  std::set<std::string> keys;
  for (const auto& [key, entry] : collection.entries()) keys.insert(key);
  return keys;
}

long long multiplicityOf(const TrinetCollection& collection,
                         const Network& shape) {
  const auto& entries = collection.entries();
  auto it = entries.find(certificate(shape));
  return it == entries.end() ? 0 : it->second.multiplicity;
}

}  // namespace

TEST_SUITE("reconstruct") {
  TEST_CASE("a single trinet reconstructs to itself") {
    Network trinet = parseENewick("((a,(b)#H1),(c,#H1));");
    TrinetCollection T;
    T.add(trinet);
    Network result = reconstruct(T);
    CHECK(isomorphic(result, trinet));
  }

  TEST_CASE("the worked five-taxon example round trips deterministically") {
    Network n = workedLevel2Example();
    TrinetCollection T = binetsAndTrinets(n);
    ReconstructReport report;
    Network first = reconstruct(T, &report);
    CHECK(isomorphic(first, n));
    CHECK(report.notes.empty());
    CHECK(!report.stages.empty());
    Network second = reconstruct(T);
    CHECK(writeENewick(first) == writeENewick(second));
  }

  TEST_CASE("collapsing keeps disjoint entries and drops inside ones") {
    TrinetCollection T;
    T.add(parseENewick("((p,q),r);"), 2);   // disjoint from A
    T.add(parseENewick("((c,d),p);"));      // straddles A
    T.add(parseENewick("(c,d);"));          // inside A: dropped
    std::set<std::string> A = {"c", "d"};
    TrinetCollection collapsed = collapseCollection(T, A, "w");
    CHECK(multiplicityOf(collapsed, parseENewick("((p,q),r);")) == 2);
    CHECK(multiplicityOf(collapsed, parseENewick("(w,p);")) == 1);
    CHECK(multiplicityOf(collapsed, parseENewick("(c,d);")) == 0);
    long long total = 0;
    for (const auto& [key, entry] : collapsed.entries())
      total += entry.multiplicity;
    CHECK(total == 3);
  }

  TEST_CASE("a straddling trinet collapses onto one representative") {
    TrinetCollection T;
    T.add(parseENewick("((c,d),a);"));
    TrinetCollection collapsed = collapseCollection(T, {"c", "d"}, "w");
    CHECK(multiplicityOf(collapsed, parseENewick("(a,w);")) == 1);
  }

  TEST_CASE("collapsing the worked trinets matches the collapsed network") {
    Network n = workedLevel2Example();
    TrinetCollection collapsed =
        collapseCollection(binetsAndTrinets(n), {"c", "d"}, "w");
    Network nStar = parseENewick("((((e)#H1,(w)#H2),a),((#H1,#H2),b));");
    CHECK(keySet(collapsed) == keySet(binetsAndTrinets(nStar)));
  }

  TEST_CASE("restricting to the whole taxon set copies the collection") {
    TrinetCollection T = workedLevel2Trinets();
    std::set<std::string> X = {"a", "b", "c", "d", "e"};
    CHECK(keySet(restrictCollection(T, X)) == keySet(T));
  }

  TEST_CASE("restricting to a cut-arc set keeps only its inside story") {
    Network n = workedLevel2Example();
    TrinetCollection inside =
        restrictCollection(binetsAndTrinets(n), {"c", "d"});
    // Every trinet containing both c and d restricts to the same cherry;
    // entries sharing at most one taxon with {c,d} are excluded.
    REQUIRE(inside.entries().size() == 1);
    CHECK(multiplicityOf(inside, parseENewick("(c,d);")) == 4);
  }

  TEST_CASE("grafting replaces a leaf by a whole network") {
    Network outer = parseENewick("((a,w),b);");
    Network inner = parseENewick("(c,d);");
    Network combined = graft(outer, "w", inner);
    CHECK(validate(combined).empty());
    CHECK(isomorphic(combined, parseENewick("((a,(c,d)),b);")));
  }

  TEST_CASE("grafting rejects a missing hook or colliding labels") {
    Network outer = parseENewick("((a,w),b);");
    CHECK_THROWS(graft(outer, "zz", parseENewick("(c,d);")));
    CHECK_THROWS(graft(outer, "w", parseENewick("(a,d);")));
  }

  TEST_CASE("ingestion counts each reason separately") {
    std::vector<TrinetFileEntry> entries;
    entries.push_back({parseENewick("((a,b),c);"), 2});
    entries.push_back({parseENewick("(((a,b),c),d);"), 1});  // four taxa
    entries.push_back(
        {parseENewick("((((a)#H1,(c)#H2),(b)#H3),(#H1,(#H3,#H2)));"),
         3});                                           // level 3
    entries.push_back({parseENewick("(((a,b))#H1,#H1);"), 1});  // cycle cap
    ReconstructReport report;
    TrinetCollection T = ingest(entries, report);
    CHECK(report.droppedInvalid == 1);
    CHECK(report.droppedOversized == 3);
    CHECK(report.droppedNonRecoverable == 1);
    CHECK(multiplicityOf(T, parseENewick("((a,b),c);")) == 2);
    CHECK(T.entries().size() == 1);
  }

  TEST_CASE("nothing usable raises instead of inventing taxa") {
    std::vector<TrinetFileEntry> entries;
    entries.push_back({parseENewick("(((a,b))#H1,#H1);"), 1});
    ReconstructReport report;
    TrinetCollection T = ingest(entries, report);
    CHECK_THROWS_AS(reconstruct(T, &report), std::runtime_error);
  }

  TEST_CASE("random level-2 networks round trip through their trinets") {
    struct Instance {
      int leaves;
      std::uint64_t seed;
    };
    const Instance instances[] = {
        {5, 5001}, {10, 10000}, {11, 11002}, {12, 12000}, {12, 12001}};
    for (const Instance& instance : instances) {
      Network n = randomLevel2Network({instance.leaves, 2, instance.seed});
      ReconstructReport report;
      Network rebuilt = reconstruct(binetsAndTrinets(n), &report);
      CHECK(validate(rebuilt).empty());
      CHECK(isomorphic(rebuilt, n));
      CHECK(report.notes.empty());
    }
  }

  TEST_CASE("stage lines name the split and the simple parts") {
    Network n = workedLevel2Example();
    ReconstructReport report;
    reconstruct(binetsAndTrinets(n), &report);
    bool sawSplit = false;
    bool sawSimple = false;
    for (const std::string& line : report.stages) {
      if (line.find("cut-arc set {c,d}") != std::string::npos)
        sawSplit = true;
      if (line.find("generator") != std::string::npos) sawSimple = true;
    }
    CHECK(sawSplit);
    CHECK(sawSimple);
  }
}
