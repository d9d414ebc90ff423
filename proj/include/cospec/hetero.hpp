#pragma once
// The cyclic-block construction: for a set J of distinct exponents j >= 3,
// the group G_J is the direct sum of the Z_{2^j}, and the connection set is
// the disjoint union of one block T_j per factor, embedded in that factor.
//
// Inside Z_{2^m} the block is
//   T_m = { 2i+1 : 0 <= i < 2^(m-3) }  union  { 2^m - (2i+1) : same i },
// an inverse-closed set of 2^(m-2) odd residues.  Its character sums have a
// rigid shape: at even characters 2r they take only the values 2^(m-2),
// -2^(m-2) and 0, and at odd characters they are negated exactly by the
// Galois twist zeta -> zeta^(1 + 2^(m-1)).  These two facts drive the
// spectral decomposition, and make every involution of G_J strongly
// cospectral with 0: the predicted subgroup is the full 2-torsion, of order
// 2^|J|.

#include <cstdint>
#include <vector>

#include "cospec/cyclotomic.hpp"
#include "cospec/spectral.hpp"

namespace cospec {

// Validated parameter set: exponents distinct, each >= 3, kept sorted.
struct HeteroSpec {
  std::vector<unsigned> exponents;
};

HeteroSpec make_hetero_spec(std::vector<unsigned> exponents);

// The residues of T_m inside Z_{2^m}, ascending.  Requires m >= 3.
std::vector<std::uint64_t> block_residues(unsigned m);

// sum over t in T_m of zeta^(a*t) in Z[zeta_{2^m}], for the character a.
CyclotomicInteger block_character_sum(unsigned m, std::uint64_t a);
CyclotomicInteger block_character_sum(const CyclotomicField& field, unsigned m,
                                      std::uint64_t a);

// The Galois exponent 1 + 2^(m-1) that negates every odd-character block sum.
std::uint64_t block_twist(unsigned m);

// The graph Cay(G_J, union of embedded blocks).
CayleyGraph build_hetero(const HeteroSpec& spec);

// The full 2-torsion of G_J, which the construction predicts to be exactly
// the strongly cospectral subgroup.
Subgroup predicted_sc_subgroup(const HeteroSpec& spec);

}  // namespace cospec
