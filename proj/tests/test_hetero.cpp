#include <algorithm>
#include <cstdint>
#include <vector>

#include "doctest.h"

#include "cospec/hetero.hpp"

using namespace cospec;

TEST_SUITE("hetero") {

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(make_hetero_spec({}), std::invalid_argument);
  CHECK_THROWS_AS(make_hetero_spec({2}), std::invalid_argument);
  CHECK_THROWS_AS(make_hetero_spec({3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(make_hetero_spec({3, 63}), std::invalid_argument);
  HeteroSpec s = make_hetero_spec({5, 3, 4});
  CHECK(s.exponents == std::vector<unsigned>{3, 4, 5});  // sorted
}

TEST_CASE("block residues are the odd residues paired with their negatives") {
  CHECK(block_residues(3) == std::vector<std::uint64_t>{1, 7});
  CHECK(block_residues(4) == std::vector<std::uint64_t>{1, 3, 13, 15});
  CHECK(block_residues(5) ==
        std::vector<std::uint64_t>{1, 3, 5, 7, 25, 27, 29, 31});
  for (unsigned m = 3; m <= 8; ++m) {
    std::vector<std::uint64_t> t = block_residues(m);
    CHECK(t.size() == (std::uint64_t{1} << (m - 2)));
    std::uint64_t mod = std::uint64_t{1} << m;
    for (std::uint64_t r : t) {
      CHECK(r % 2 == 1);  // all residues odd
      CHECK(std::binary_search(t.begin(), t.end(), mod - r));  // inverse-closed
    }
  }
}

TEST_CASE("even character sums collapse to a three-value law") {
  // For even a: value 2^(m-2) at a = 0, -2^(m-2) at a = 2^(m-1), else 0.
  for (unsigned m = 3; m <= 7; ++m) {
    std::uint64_t mod = std::uint64_t{1} << m;
    std::int64_t peak = std::int64_t{1} << (m - 2);
    for (std::uint64_t a = 0; a < mod; a += 2) {
      CyclotomicInteger v = block_character_sum(m, a);
      REQUIRE(is_rational_integer(v));
      BigInt expect = a == 0 ? peak : (a == mod / 2 ? -peak : 0);
      CHECK(rational_value(v) == expect);
    }
  }
}

TEST_CASE("the block twist negates every odd character sum") {
  for (unsigned m = 3; m <= 7; ++m) {
    std::uint64_t mod = std::uint64_t{1} << m;
    std::uint64_t t = block_twist(m);
    CHECK(t == 1 + mod / 2);
    for (std::uint64_t a = 1; a < mod; a += 2) {
      CyclotomicInteger v = block_character_sum(m, a);
      CHECK(!is_zero(v));  // odd sums never vanish
      CHECK(cyc_equals(galois_apply(t, v), cyc_neg(v)));
    }
  }
}

TEST_CASE("build embeds one residue block per factor") {
  CayleyGraph x = build_hetero(make_hetero_spec({3, 4}));
  CHECK(x.group.orders == std::vector<std::uint64_t>{8, 16});
  CHECK(x.group.size == 128);
  REQUIRE(x.connection_set.size() == 6);  // 2 + 4
  // Every element is supported on exactly one coordinate.
  for (const GroupElement& s : x.connection_set) {
    int nonzero = 0;
    for (std::uint64_t c : s.coords) nonzero += c != 0;
    CHECK(nonzero == 1);
  }
  // The second block carries the 16-residues {1, 3, 13, 15}.
  std::vector<std::uint64_t> second;
  for (const GroupElement& s : x.connection_set)
    if (s.coords[0] == 0) second.push_back(s.coords[1]);
  std::sort(second.begin(), second.end());
  CHECK(second == std::vector<std::uint64_t>{1, 3, 13, 15});
}

TEST_CASE("the predicted subgroup is the full two-torsion") {
  HeteroSpec spec = make_hetero_spec({3, 4});
  Subgroup p = predicted_sc_subgroup(spec);
  CHECK(p.order == 4);
  std::vector<std::vector<std::uint64_t>> members;
  for (const GroupElement& e : p.elements) members.push_back(e.coords);
  std::vector<std::vector<std::uint64_t>> expect = {
      {0, 0}, {0, 8}, {4, 0}, {4, 8}};
  CHECK(members == expect);
}

}  // TEST_SUITE
