#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "levelnet/generator.hpp"
#include "levelnet/isomorphism.hpp"
#include "levelnet/network.hpp"
#include "levelnet/random_network.hpp"
#include "levelnet/structure.hpp"

namespace {
using namespace levelnet;
}  // namespace

TEST_SUITE("random_network") {
  TEST_CASE("the same spec always yields the same network") {
    for (std::uint64_t seed : {0ULL, 7ULL, 90210ULL}) {
      Network a = randomLevel2Network({9, 2, seed});
      Network b = randomLevel2Network({9, 2, seed});
      CHECK(certificate(a) == certificate(b));
    }
  }

  TEST_CASE("different seeds explore different shapes") {
    std::set<std::string> shapes;
    for (std::uint64_t seed = 0; seed < 12; ++seed)
      shapes.insert(certificate(randomLevel2Network({8, 2, seed})));
    CHECK(shapes.size() > 1);
  }

  TEST_CASE("a zero budget grows plain trees") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      Network n = randomLevel2Network({7, 0, seed});
      CHECK(level(n) == 0);
      CHECK(n.leafCount() == 7);
    }
  }

  TEST_CASE("every sample is valid, recoverable and within level two") {
    int sampled = 0;
    for (int leaves : {3, 4, 6, 9, 12}) {
      for (int budget : {1, 2}) {
        for (std::uint64_t seed = 100; seed < 106; ++seed) {
          Network n = randomLevel2Network({leaves, budget, seed});
          CHECK(validate(n).empty());
          CHECK(isRecoverable(n));
          CHECK(level(n) <= budget);
          CHECK(n.leafCount() == leaves);
          ++sampled;
        }
      }
    }
    CHECK(sampled == 60);
  }

  TEST_CASE("impossible specs are rejected") {
    CHECK_THROWS_AS(randomLevel2Network({2, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(randomLevel2Network({8, 3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(randomLevel2Network({8, -1, 0}), std::invalid_argument);
  }

  TEST_CASE("simple networks come out simple with the requested generator") {
    for (const char* id : {"G1", "G2a", "G2b", "G2c", "G2d"}) {
      int sinks =
          static_cast<int>(catalogGenerator(id).reticulationSides.size());
      for (int leaves = sinks + 2; leaves <= sinks + 5; ++leaves)
        for (std::uint64_t seed = 40; seed < 43; ++seed) {
          Network n = randomSimpleNetwork(id, leaves, seed);
          CHECK(validate(n).empty());
          CHECK(isSimple(n));
          CHECK(n.leafCount() == leaves);
          CHECK(underlyingGenerator(n).first.catalogId == id);
        }
    }
  }

  TEST_CASE("simple generation needs one leaf per reticulation side") {
    CHECK_THROWS_AS(randomSimpleNetwork("G2b", 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(randomSimpleNetwork("G1", 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(randomSimpleNetwork("G2a", 1, 0), std::invalid_argument);
    CHECK_THROWS(randomSimpleNetwork("G9", 5, 0));
    // Two leaves when both hang below reticulations is already feasible.
    Network floor = randomSimpleNetwork("G2b", 2, 0);
    CHECK(validate(floor).empty());
    CHECK(isSimple(floor));
  }
}
