#pragma once
// Quadratic-form geometry over F2 in odd dimension, and the block
// construction built on it.
//
// In V = F2^d with d = 2e+1 the form  q(x) = x_d^2 + sum_{i=1}^e x_i x_{e+i}
// has a nondegenerate bilinearization off the nucleus line spanned by
// p = e_d, and q(p) = 1.  The connection block in V is S' = Q u {p}, where
// Q is the set of nonzero zeros of q (|Q| = 2^(d-1) - 1), so sigma(S') = p
// for d >= 5.  The full construction concatenates blocks V_1 + ... + V_k of
// strictly growing odd dimensions: hyperplane section counts |H n S_i| of a
// later block spread far wider than the earlier blocks combined, so the
// total |H n S| decomposes uniquely into per-block counts and every
// embedded nucleus p_i lands in the strongly cospectral subgroup.
//
// Vectors are bitmasks (F2Vector), bit i = coordinate x_{i+1}; block 1
// occupies the lowest-order bits of the concatenation.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cospec/spectral.hpp"

namespace cospec {

struct F2Vector {
  std::uint64_t bits = 0;
  int dim = 0;

  bool operator==(const F2Vector&) const = default;
  auto operator<=>(const F2Vector&) const = default;
};

// "(1,0,0)" tuple rendering and "0x1" mask rendering.
std::string to_string(const F2Vector& v);
std::string hex_string(const F2Vector& v);

// Odd-dimensional quadratic space; d = 2e+1, e >= 1.
struct QuadraticSpace {
  int d = 3;
  int e = 1;
};

QuadraticSpace make_quadratic_space(int d);

int eval_q(const QuadraticSpace& space, const F2Vector& v);
// Bilinearization b(u, v) = q(u+v) + q(u) + q(v); its radical is the
// nucleus line.
int eval_b(const QuadraticSpace& space, const F2Vector& u, const F2Vector& v);

// Nonzero zeros of q, ascending by mask; |Q| = 2^(d-1) - 1.  Enumerates the
// whole space, so d <= 26.
std::vector<F2Vector> quadric_points(const QuadraticSpace& space);

F2Vector nucleus(const QuadraticSpace& space);  // e_d, the radical direction

// XOR of all members; the set must be nonempty with a common dimension.
F2Vector sigma_of_set(const std::vector<F2Vector>& set);

// Count map value -> frequency of |H_w n S'| over all nonzero functionals w
// on V, with S' = Q u {p}, computed through one fast transform of the S'
// indicator.  Requires d <= 21.  The full-containment count 2^(d-1) arises
// only for hyperplanes of an ambient larger space containing all of V, so
// it never appears in the map; profile_min_gap adjoins it.
std::map<std::uint64_t, std::uint64_t> hyperplane_profile(
    const QuadraticSpace& space);

// Minimum pairwise gap among the profile's values with 2^(d-1) adjoined.
std::uint64_t profile_min_gap(const std::map<std::uint64_t, std::uint64_t>& profile,
                              int d);

// The block's count-separation scale 2^(e-1).
std::uint64_t epsilon(const QuadraticSpace& space);

// Growth condition on block dimensions: for each i >= 2,
// 2^((dims[i]-1)/2 - 1) >= 2^(dims[i-1] + 2).  Dims must be strictly
// increasing odd integers >= 5 (throws std::invalid_argument otherwise).
bool verify_ebound(const std::vector<int>& dims);

// Smallest dimension list for k blocks: n_1 = 5, n_i = 2 n_{i-1} + 7, which
// meets the growth condition with equality at every step.
std::vector<int> min_dims(int k);

// Validated parameter set.  With force = false the growth condition is
// enforced; with force = true failing dims are accepted for exploration and
// ebound_ok records the violation.
struct CubelikeSpec {
  std::vector<int> dims;
  bool ebound_ok = true;
};

CubelikeSpec make_cubelike_spec(std::vector<int> dims, bool force = false);

// The assembled graph data.  Connection masks are materialized only while
// |S| stays small enough to hold (<= 2^24 masks); larger builds still carry
// exact metadata and can be enumerated lazily.
struct CubelikeBuild {
  std::vector<int> dims;
  int n = 0;                      // sum of dims
  std::vector<int> block_offsets;  // bit offset of each block
  std::vector<F2Vector> predicted_generators;  // embedded nuclei p_i, dim n
  std::uint64_t connection_size = 0;           // sum of 2^(dims[i]-1)
  std::vector<std::uint64_t> connection_masks;  // ascending iff materialized
  bool masks_materialized = false;
};

CubelikeBuild build_cubelike(const CubelikeSpec& spec);

// Calls fn(mask) for every connection mask block by block (quadric points
// ascending, then the block's nucleus), without materializing the list.
void for_each_connection_mask(const CubelikeBuild& build,
                              const std::function<void(std::uint64_t)>& fn);

// Indicator vector of length 2^n over the connection set; requires n <= 26.
std::vector<std::int32_t> connection_indicator(const CubelikeBuild& build);

// Materializes the graph with explicit tuple elements; requires n <= 20.
CayleyGraph to_cayley_graph(const CubelikeBuild& build);

// Exhaustive check over all 2^n - 1 hyperplanes that the total section
// count |H n S| determines the per-block counts (|H n S_1|, ..., |H n S_k|).
// Requires n <= 26.
struct DeterminationResult {
  bool holds = true;
  std::uint64_t distinct_totals = 0;
  // Witness on failure: one total realized by two different count tuples.
  std::uint64_t witness_total = 0;
  std::vector<std::uint64_t> witness_a;
  std::vector<std::uint64_t> witness_b;
};

DeterminationResult determination_check(const CubelikeBuild& build);

}  // namespace cospec
