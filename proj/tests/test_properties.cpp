#include <random>

#include "doctest.h"

#include "cospec/oracle.hpp"
#include "cospec/selftest.hpp"
#include "cospec/spectral.hpp"

using namespace cospec;

TEST_SUITE("properties") {

TEST_CASE("the full randomized property battery passes on the default seed") {
  std::vector<SelftestResult> results = run_selftest(kDefaultSeed);
  REQUIRE(results.size() == 9);
  for (const SelftestResult& r : results) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("property battery is seed-robust") {
  for (std::uint64_t seed : {std::uint64_t{1}, std::uint64_t{424242}}) {
    for (const SelftestResult& r : run_selftest(seed)) {
      INFO("seed ", seed, " ", r.name, ": ", r.detail);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("random graphs: exact subgroup equals the definition sweep") {
  std::mt19937_64 rng(kDefaultSeed ^ 0x9e3779b97f4a7c15ull);
  for (int trial = 0; trial < 25; ++trial) {
    CayleyGraph x = random_cayley_graph(rng, 64);
    Subgroup exact = strongly_cospectral_subgroup(x);
    std::vector<GroupElement> swept =
        brute_force_sc_set(x, OraclePath::CharacterProjector);
    INFO("trial ", trial, " |G|=", x.group.size, " |S|=",
         x.connection_set.size());
    REQUIRE(swept.size() == exact.elements.size());
    for (std::size_t i = 0; i < swept.size(); ++i)
      CHECK(swept[i] == exact.elements[i]);
  }
}

}  // TEST_SUITE
