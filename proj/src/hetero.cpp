#include "cospec/hetero.hpp"

#include <algorithm>
#include <stdexcept>

namespace cospec {

HeteroSpec make_hetero_spec(std::vector<unsigned> exponents) {
  if (exponents.empty())
    throw std::invalid_argument("need at least one exponent");
  std::sort(exponents.begin(), exponents.end());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 3)
      throw std::invalid_argument("exponents must be >= 3, got " +
                                  std::to_string(exponents[i]));
    if (exponents[i] > 62)
      throw std::invalid_argument("exponent " + std::to_string(exponents[i]) +
                                  " exceeds the 64-bit factor bound");
    if (i && exponents[i] == exponents[i - 1])
      throw std::invalid_argument("exponents must be distinct, " +
                                  std::to_string(exponents[i]) + " repeats");
  }
  return HeteroSpec{std::move(exponents)};
}

std::vector<std::uint64_t> block_residues(unsigned m) {
  if (m < 3) throw std::invalid_argument("block exponent must be >= 3");
  if (m > 62) throw std::invalid_argument("block exponent too large");
  const std::uint64_t mod = std::uint64_t{1} << m;
  const std::uint64_t quarter = std::uint64_t{1} << (m - 3);
  std::vector<std::uint64_t> t;
  t.reserve(std::size_t{2} * quarter);
  for (std::uint64_t i = 0; i < quarter; ++i) {
    t.push_back(2 * i + 1);
    t.push_back(mod - (2 * i + 1));
  }
  std::sort(t.begin(), t.end());
  return t;
}

CyclotomicInteger block_character_sum(const CyclotomicField& field, unsigned m,
                                      std::uint64_t a) {
  const std::uint64_t mod = std::uint64_t{1} << m;
  if (field.modulus() != mod)
    throw std::invalid_argument("field modulus must be 2^m");
  if (a >= mod)
    throw std::invalid_argument("character residue out of range");
  std::vector<std::uint64_t> exps;
  for (std::uint64_t t : block_residues(m))
    exps.push_back(static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * t) % mod));
  return root_power_sum(field, exps);
}

CyclotomicInteger block_character_sum(unsigned m, std::uint64_t a) {
  return block_character_sum(CyclotomicField(std::uint64_t{1} << m), m, a);
}

std::uint64_t block_twist(unsigned m) {
  if (m < 3) throw std::invalid_argument("block exponent must be >= 3");
  return 1 + (std::uint64_t{1} << (m - 1));
}

CayleyGraph build_hetero(const HeteroSpec& spec) {
  std::vector<std::uint64_t> orders;
  for (unsigned m : spec.exponents) orders.push_back(std::uint64_t{1} << m);
  AbelianGroup g = make_group(orders);
  std::vector<GroupElement> s;
  for (std::size_t block = 0; block < spec.exponents.size(); ++block)
    for (std::uint64_t t : block_residues(spec.exponents[block])) {
      GroupElement e = g.identity();
      e.coords[block] = t;
      s.push_back(std::move(e));
    }
  return make_cayley_graph(g, std::move(s));
}

Subgroup predicted_sc_subgroup(const HeteroSpec& spec) {
  std::vector<std::uint64_t> orders;
  for (unsigned m : spec.exponents) orders.push_back(std::uint64_t{1} << m);
  return two_torsion(make_group(orders));
}

}  // namespace cospec
