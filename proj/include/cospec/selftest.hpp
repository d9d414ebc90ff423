#pragma once
// Seeded property checks runnable from the CLI (`selftest`) and reused by
// the test suite: structural invariants of the spectral machinery on
// randomized inputs, with every instance derived from one reported seed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cospec/spectral.hpp"

namespace cospec {

inline constexpr std::uint64_t kDefaultSeed = 20240811;

struct SelftestResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs every property; each result names the property and reports counts or
// the first counterexample.
std::vector<SelftestResult> run_selftest(std::uint64_t seed,
                                         int threads = 1);

// Random valid Cayley graph: 1-3 cyclic factors with |G| <= max_size,
// connection set inverse-closed, identity-free, nonempty.
CayleyGraph random_cayley_graph(std::mt19937_64& rng,
                                std::uint64_t max_size);

// Random nonempty subset of F2^n \ {0}, as masks.
std::vector<std::uint64_t> random_cubelike_masks(std::mt19937_64& rng, int n);

}  // namespace cospec
