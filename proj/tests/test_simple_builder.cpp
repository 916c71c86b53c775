#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "levelnet/enewick.hpp"
#include "levelnet/generator.hpp"
#include "levelnet/isomorphism.hpp"
#include "levelnet/random_network.hpp"
#include "levelnet/restriction.hpp"
#include "levelnet/simple_builder.hpp"
#include "levelnet/structure.hpp"

namespace {

using namespace levelnet;

long long choose3(long long n) { return n * (n - 1) * (n - 2) / 6; }

// A doubled-arc blob with leaves p,q in order on one copy, r on the other
// and t below the reticulation.
Network pqrBlob() {
  SideAssignment assignment;
  assignment.leafToSide = {
      {"p", "L"}, {"q", "L"}, {"r", "R"}, {"t", "T1"}};
  assignment.sideOrder = {{"L", {"p", "q"}}, {"R", {"r"}}};
  return attach(catalogGenerator("G1"), assignment);
}

// A double-reticulation diamond with one leaf on every arc side.
Network diamondBlob() {
  SideAssignment assignment;
  assignment.leafToSide = {{"l1", "L1"}, {"r1", "R1"}, {"l2", "L2"},
                           {"r2", "R2"}, {"l3", "L3"}, {"r3", "R3"},
                           {"ta", "T1"}, {"tb", "T2"}};
  assignment.sideOrder = {{"L1", {"l1"}}, {"R1", {"r1"}}, {"L2", {"l2"}},
                          {"R2", {"r2"}}, {"L3", {"l3"}}, {"R3", {"r3"}}};
  return attach(catalogGenerator("G2c"), assignment);
}

}  // namespace

TEST_SUITE("simple_builder") {
  TEST_CASE("two-taxon collections short-circuit to the heaviest binet") {
    TrinetCollection T;
    T.add(parseENewick("(x,y);"), 3);
    T.add(parseENewick("((x)#H1,(y,#H1));"), 1);
    LevelChoice choice = chooseLevel(T);
    CHECK(choice.useBinet);
    BuildReport report;
    Network n = buildSimple(T, &report);
    CHECK(report.binet);
    CHECK(isomorphic(n, parseENewick("(x,y);")));
  }

  TEST_CASE("an all-tree or level-1 collection picks one reticulation") {
    Network blob = pqrBlob();
    LevelChoice choice = chooseLevel(binetsAndTrinets(blob));
    CHECK(!choice.useBinet);
    CHECK(choice.k == 1);
    CHECK(choice.p2 == 0);
  }

  TEST_CASE("exact double-reticulation input clears the level threshold") {
    for (const char* id : {"G2a", "G2b", "G2c", "G2d"}) {
      Network n = randomSimpleNetwork(id, 7, 21);
      long long leaves = n.leafCount();
      LevelChoice choice = chooseLevel(binetsAndTrinets(n));
      CHECK(choice.k == 2);
      CHECK(choice.p2 >= Fraction(leaves - 2, choose3(leaves)));
    }
  }

  TEST_CASE("empty collections are rejected") {
    TrinetCollection T;
    CHECK_THROWS_AS(chooseLevel(T), std::invalid_argument);
    CHECK_THROWS_AS(buildSimple(T), std::invalid_argument);
  }

  TEST_CASE("the generator vote follows the strictly level-k majority") {
    CHECK(chooseGenerator(binetsAndTrinets(pqrBlob()), 1) == "G1");
    for (const char* id : {"G2a", "G2b", "G2c", "G2d"}) {
      Network n = randomSimpleNetwork(id, 6, 33);
      CHECK(chooseGenerator(binetsAndTrinets(n), 2) == id);
    }
    // Mixed multiset: five of one shape beat three of another.
    TrinetCollection mixed;
    mixed.add(trinets(randomSimpleNetwork("G2a", 3, 1))
                  .entries()
                  .begin()
                  ->second.representative,
              5);
    mixed.add(trinets(randomSimpleNetwork("G2b", 3, 2))
                  .entries()
                  .begin()
                  ->second.representative,
              3);
    CHECK(chooseGenerator(mixed, 2) == "G2a");
  }

  TEST_CASE("generator choice demands evidence at the chosen level") {
    TrinetCollection treesOnly;
    treesOnly.add(parseENewick("((x,y),z);"));
    CHECK_THROWS(chooseGenerator(treesOnly, 2));
  }

  TEST_CASE("reticulation leaves are read off exact input") {
    Network blob = pqrBlob();
    ReticulationChoice choice =
        assignReticulationLeaves(binetsAndTrinets(blob), catalogGenerator("G1"));
    REQUIRE(choice.sideToLeaf.count("T1"));
    CHECK(choice.sideToLeaf.at("T1") == "t");
    CHECK(choice.p.at({"t", "T1"}) == 1);
  }

  TEST_CASE("reticulation scores count the supporting share") {
    // t sits below the reticulation in three trinets out of four.
    TrinetCollection T;
    T.add(parseENewick("((p,(t)#H1),(q,#H1));"), 3);
    T.add(parseENewick("((t,(p)#H1),(q,#H1));"), 1);
    ReticulationChoice choice =
        assignReticulationLeaves(T, catalogGenerator("G1"));
    CHECK(choice.p.at({"t", "T1"}) == Fraction(3, 4));
    CHECK(choice.p.at({"p", "T1"}) == Fraction(1, 4));
    CHECK(choice.sideToLeaf.at("T1") == "t");
  }

  TEST_CASE("a taxon invisible to the pinned trinets still lands in a class") {
    TrinetCollection T;
    T.add(parseENewick("((p,(t)#H1),(q,#H1));"), 3);
    T.add(parseENewick("((m,(p)#H1),(q,#H1));"), 1);
    ReticulationChoice retic =
        assignReticulationLeaves(T, catalogGenerator("G1"));
    REQUIRE(retic.sideToLeaf.at("T1") == "t");
    std::vector<std::string> notes;
    std::map<std::string, std::string> classes =
        assignArcClasses(T, catalogGenerator("G1"), retic, &notes);
    CHECK(classes.at("m") == "L,R");
    CHECK(classes.at("p") == "L,R");
    CHECK(classes.at("q") == "L,R");
    REQUIRE(notes.size() == 1);
    CHECK(notes[0].find("m") != std::string::npos);
  }

  TEST_CASE("same-side taxa are grouped before sides are filled") {
    ScoreTables tables = scoreTables(binetsAndTrinets(pqrBlob()));
    std::map<std::string, std::set<std::string>> sides = partitionArcClass(
        {"L", "R"}, {"p", "q", "r"}, tables.q);
    REQUIRE(sides.size() == 2);
    CHECK(sides.at("L") == std::set<std::string>{"p", "q"});
    CHECK(sides.at("R") == std::set<std::string>{"r"});
  }

  TEST_CASE("lonely classes still fill deterministically") {
    ScoreTables tables = scoreTables(binetsAndTrinets(pqrBlob()));
    std::map<std::string, std::set<std::string>> sides =
        partitionArcClass({"L", "R"}, {"p"}, tables.q);
    CHECK(sides.at("L") == std::set<std::string>{"p"});
    CHECK(sides.at("R").empty());
  }

  TEST_CASE("cross-branch alignment keeps a correct placement") {
    Network n = diamondBlob();
    ScoreTables tables = scoreTables(binetsAndTrinets(n));
    std::map<std::string, std::set<std::string>> truth = {
        {"L1", {"l1"}}, {"R1", {"r1"}}, {"L2", {"l2"}},
        {"R2", {"r2"}}, {"L3", {"l3"}}, {"R3", {"r3"}}};
    CHECK(alignSides2c(truth, tables.q) == truth);
  }

  TEST_CASE("cross-branch alignment undoes a swapped pair") {
    Network n = diamondBlob();
    ScoreTables tables = scoreTables(binetsAndTrinets(n));
    std::map<std::string, std::set<std::string>> truth = {
        {"L1", {"l1"}}, {"R1", {"r1"}}, {"L2", {"l2"}},
        {"R2", {"r2"}}, {"L3", {"l3"}}, {"R3", {"r3"}}};
    std::map<std::string, std::set<std::string>> swapped2 = truth;
    std::swap(swapped2["L2"], swapped2["R2"]);
    CHECK(alignSides2c(swapped2, tables.q) == truth);
    std::map<std::string, std::set<std::string>> swappedBoth = truth;
    std::swap(swappedBoth["L2"], swappedBoth["R2"]);
    std::swap(swappedBoth["L3"], swappedBoth["R3"]);
    CHECK(alignSides2c(swappedBoth, tables.q) == truth);
  }

  TEST_CASE("side order is recovered root-first") {
    SideAssignment assignment;
    assignment.leafToSide = {
        {"u", "S1"}, {"v", "S1"}, {"w", "S1"}, {"t", "T1"}};
    assignment.sideOrder = {{"S1", {"u", "v", "w"}}};
    Network n = attach(catalogGenerator("G2a"), assignment);
    ScoreTables tables = scoreTables(binetsAndTrinets(n));
    CHECK(orderSide({"u", "v", "w"}, tables.a) ==
          std::vector<std::string>{"u", "v", "w"});
    CHECK(orderSide({"u"}, tables.a) == std::vector<std::string>{"u"});
  }

  TEST_CASE("ancestry fractions of a pair sum to one when witnessed") {
    ScoreTables tables =
        scoreTables(binetsAndTrinets(randomSimpleNetwork("G2b", 7, 8)));
    CHECK(tables.p2 >= 0);
    CHECK(tables.p2 <= 1);
    for (const auto& [pair, value] : tables.q) {
      CHECK(pair.first < pair.second);
      CHECK(value >= 0);
      CHECK(value <= 1);
    }
    int witnessed = 0;
    for (const auto& [pair, value] : tables.a) {
      auto reverse = tables.a.find({pair.second, pair.first});
      if (reverse != tables.a.end()) {
        CHECK(value + reverse->second == 1);
        ++witnessed;
      }
    }
    CHECK(witnessed > 0);
  }

  TEST_CASE("every stage together rebuilds the blob it came from") {
    for (const char* id : {"G1", "G2a", "G2b", "G2c", "G2d"}) {
      int sinks =
          static_cast<int>(catalogGenerator(id).reticulationSides.size());
      for (int leaves = sinks + 2; leaves <= sinks + 6; ++leaves)
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
          Network n = randomSimpleNetwork(id, leaves, 1700 + seed);
          BuildReport report;
          Network rebuilt = buildSimple(binetsAndTrinets(n), &report);
          CHECK(validate(rebuilt).empty());
          CHECK(isomorphic(rebuilt, n));
          CHECK(report.generatorId == id);
          CHECK(report.k == (std::string(id) == "G1" ? 1 : 2));
          CHECK(report.notes.empty());
        }
    }
  }

  TEST_CASE("hand-built blobs survive the pipeline byte for byte") {
    Network blob = pqrBlob();
    Network rebuilt = buildSimple(binetsAndTrinets(blob));
    CHECK(writeENewick(rebuilt) == writeENewick(blob));
    Network diamond = diamondBlob();
    Network rebuiltDiamond = buildSimple(binetsAndTrinets(diamond));
    CHECK(writeENewick(rebuiltDiamond) == writeENewick(diamond));
  }
}
