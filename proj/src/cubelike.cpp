#include "cospec/cubelike.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace cospec {

std::string to_string(const F2Vector& v) {
  std::string s = "(";
  for (int i = 0; i < v.dim; ++i) {
    if (i) s += ",";
    s += (v.bits >> i) & 1 ? "1" : "0";
  }
  return s + ")";
}

std::string hex_string(const F2Vector& v) {
  if (v.bits == 0) return "0x0";
  std::string digits;
  for (std::uint64_t b = v.bits; b; b >>= 4) digits += "0123456789abcdef"[b & 15];
  std::reverse(digits.begin(), digits.end());
  return "0x" + digits;
}

QuadraticSpace make_quadratic_space(int d) {
  if (d < 3 || d % 2 == 0)
    throw std::invalid_argument("dimension must be odd and >= 3, got " +
                                std::to_string(d));
  if (d > 63) throw std::invalid_argument("dimension exceeds 63 bits");
  return QuadraticSpace{d, (d - 1) / 2};
}

namespace {

void check_dim(const QuadraticSpace& space, const F2Vector& v) {
  if (v.dim != space.d)
    throw std::invalid_argument("vector dimension " + std::to_string(v.dim) +
                                " does not match space dimension " +
                                std::to_string(space.d));
  if (space.d < 64 && (v.bits >> space.d))
    throw std::invalid_argument("vector has bits beyond its dimension");
}

int eval_q_bits(const QuadraticSpace& space, std::uint64_t bits) {
  const std::uint64_t half = (std::uint64_t{1} << space.e) - 1;
  std::uint64_t products = bits & (bits >> space.e) & half;
  return static_cast<int>(((bits >> (space.d - 1)) ^
                           std::popcount(products)) & 1);
}

}  // namespace

int eval_q(const QuadraticSpace& space, const F2Vector& v) {
  check_dim(space, v);
  return eval_q_bits(space, v.bits);
}

int eval_b(const QuadraticSpace& space, const F2Vector& u, const F2Vector& v) {
  check_dim(space, u);
  check_dim(space, v);
  return eval_q_bits(space, u.bits ^ v.bits) ^ eval_q_bits(space, u.bits) ^
         eval_q_bits(space, v.bits);
}

std::vector<F2Vector> quadric_points(const QuadraticSpace& space) {
  if (space.d > 26)
    throw std::invalid_argument("quadric enumeration capped at dimension 26");
  std::vector<F2Vector> q;
  q.reserve((std::size_t{1} << (space.d - 1)) - 1);
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << space.d); ++v)
    if (eval_q_bits(space, v) == 0) q.push_back(F2Vector{v, space.d});
  return q;
}

F2Vector nucleus(const QuadraticSpace& space) {
  return F2Vector{std::uint64_t{1} << (space.d - 1), space.d};
}

F2Vector sigma_of_set(const std::vector<F2Vector>& set) {
  if (set.empty())
    throw std::invalid_argument("sigma of an empty set has no dimension");
  F2Vector out{0, set.front().dim};
  for (const F2Vector& v : set) {
    if (v.dim != out.dim)
      throw std::invalid_argument("set mixes dimensions " +
                                  std::to_string(out.dim) + " and " +
                                  std::to_string(v.dim));
    out.bits ^= v.bits;
  }
  return out;
}

std::map<std::uint64_t, std::uint64_t> hyperplane_profile(
    const QuadraticSpace& space) {
  if (space.d > 21)
    throw std::invalid_argument("hyperplane profile capped at dimension 21");
  // |H_w n S'| = (|S'| + g(w)) / 2 where g(w) = sum_{s in S'} (-1)^(w.s)
  // is the transform of the S' indicator; one pass gives every hyperplane.
  std::vector<std::int32_t> indicator(std::size_t{1} << space.d, 0);
  for (const F2Vector& v : quadric_points(space)) indicator[v.bits] = 1;
  indicator[nucleus(space).bits] = 1;
  const std::int64_t size = std::int64_t{1} << (space.d - 1);  // |S'|
  wht_inplace(indicator);
  std::map<std::uint64_t, std::uint64_t> profile;
  for (std::size_t w = 1; w < indicator.size(); ++w)
    ++profile[static_cast<std::uint64_t>((size + indicator[w]) / 2)];
  return profile;
}

std::uint64_t profile_min_gap(
    const std::map<std::uint64_t, std::uint64_t>& profile, int d) {
  std::vector<std::uint64_t> values;
  for (const auto& [value, freq] : profile) values.push_back(value);
  values.push_back(std::uint64_t{1} << (d - 1));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.size() < 2)
    throw std::invalid_argument("gap needs at least two distinct values");
  std::uint64_t gap = UINT64_MAX;
  for (std::size_t i = 1; i < values.size(); ++i)
    gap = std::min(gap, values[i] - values[i - 1]);
  return gap;
}

std::uint64_t epsilon(const QuadraticSpace& space) {
  return std::uint64_t{1} << (space.e - 1);
}

bool verify_ebound(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("dimension list is empty");
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 5 || dims[i] % 2 == 0)
      throw std::invalid_argument("block dimensions must be odd and >= 5, got " +
                                  std::to_string(dims[i]));
    if (i && dims[i] <= dims[i - 1])
      throw std::invalid_argument("block dimensions must be strictly increasing");
  }
  for (std::size_t i = 1; i < dims.size(); ++i) {
    // 2^((d_i-1)/2 - 1) >= 2^(d_{i-1} + 2), compared in the exponents.
    int lhs = (dims[i] - 1) / 2 - 1;
    int rhs = dims[i - 1] + 2;
    if (lhs < rhs) return false;
  }
  return true;
}

std::vector<int> min_dims(int k) {
  if (k < 1) throw std::invalid_argument("block count must be >= 1");
  std::vector<int> dims{5};
  for (int i = 1; i < k; ++i) {
    long long next = 2LL * dims.back() + 7;
    if (next > INT32_MAX)
      throw std::invalid_argument("block count " + std::to_string(k) +
                                  " overflows the dimension range");
    dims.push_back(static_cast<int>(next));
  }
  return dims;
}

CubelikeSpec make_cubelike_spec(std::vector<int> dims, bool force) {
  bool ok = verify_ebound(dims);  // also validates the shape
  if (!ok && !force)
    throw std::invalid_argument(
        "block dimensions fail the growth condition; pass force to explore");
  int total = 0;
  for (int d : dims) total += d;
  if (total > 63)
    throw std::invalid_argument("total dimension " + std::to_string(total) +
                                " exceeds 63 bits");
  return CubelikeSpec{std::move(dims), ok};
}

CubelikeBuild build_cubelike(const CubelikeSpec& spec) {
  CubelikeBuild build;
  build.dims = spec.dims;
  int offset = 0;
  for (int d : spec.dims) {
    build.block_offsets.push_back(offset);
    build.connection_size += std::uint64_t{1} << (d - 1);
    offset += d;
  }
  build.n = offset;
  for (std::size_t i = 0; i < spec.dims.size(); ++i)
    build.predicted_generators.push_back(F2Vector{
        std::uint64_t{1} << (build.block_offsets[i] + spec.dims[i] - 1),
        build.n});
  build.masks_materialized = build.connection_size <= (std::uint64_t{1} << 24);
  if (build.masks_materialized) {
    build.connection_masks.reserve(build.connection_size);
    for_each_connection_mask(
        build, [&](std::uint64_t m) { build.connection_masks.push_back(m); });
    std::sort(build.connection_masks.begin(), build.connection_masks.end());
  }
  return build;
}

void for_each_connection_mask(const CubelikeBuild& build,
                              const std::function<void(std::uint64_t)>& fn) {
  for (std::size_t i = 0; i < build.dims.size(); ++i) {
    QuadraticSpace space = make_quadratic_space(build.dims[i]);
    const int offset = build.block_offsets[i];
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << space.d); ++v)
      if (eval_q_bits(space, v) == 0) fn(v << offset);
    fn(nucleus(space).bits << offset);
  }
}

std::vector<std::int32_t> connection_indicator(const CubelikeBuild& build) {
  if (build.n > 26)
    throw std::invalid_argument("indicator capped at total dimension 26");
  std::vector<std::int32_t> indicator(std::size_t{1} << build.n, 0);
  for_each_connection_mask(build,
                           [&](std::uint64_t m) { indicator[m] = 1; });
  return indicator;
}

CayleyGraph to_cayley_graph(const CubelikeBuild& build) {
  if (build.n > 20)
    throw std::invalid_argument(
        "explicit tuple graph capped at total dimension 20");
  AbelianGroup g = make_group(std::vector<std::uint64_t>(build.n, 2));
  std::vector<GroupElement> s;
  s.reserve(build.connection_size);
  for_each_connection_mask(build, [&](std::uint64_t m) {
    GroupElement e = g.identity();
    for (int b = 0; b < build.n; ++b) e.coords[b] = (m >> b) & 1;
    s.push_back(std::move(e));
  });
  return make_cayley_graph(g, std::move(s));
}

DeterminationResult determination_check(const CubelikeBuild& build) {
  if (build.n > 26)
    throw std::invalid_argument("determination check capped at dimension 26");
  const std::size_t k = build.dims.size();
  // Per-block section counts from one small transform per block:
  // |H_w n S_i| = (|S_i| + g_i(w_i)) / 2 for w_i != 0, and |S_i| for w_i = 0.
  std::vector<std::vector<std::uint64_t>> counts(k);
  for (std::size_t i = 0; i < k; ++i) {
    QuadraticSpace space = make_quadratic_space(build.dims[i]);
    std::vector<std::int32_t> ind(std::size_t{1} << space.d, 0);
    for (const F2Vector& v : quadric_points(space)) ind[v.bits] = 1;
    ind[nucleus(space).bits] = 1;
    wht_inplace(ind);
    const std::int64_t size = std::int64_t{1} << (space.d - 1);
    counts[i].resize(ind.size());
    counts[i][0] = static_cast<std::uint64_t>(size);
    for (std::size_t w = 1; w < ind.size(); ++w)
      counts[i][w] = static_cast<std::uint64_t>((size + ind[w]) / 2);
  }
  // Encode each block's count compactly so a tuple fits one word.
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> code(k);
  std::vector<std::vector<std::uint64_t>> decode(k);
  std::vector<std::vector<std::uint8_t>> coded(k);
  for (std::size_t i = 0; i < k; ++i) {
    coded[i].resize(counts[i].size());
    for (std::size_t w = 0; w < counts[i].size(); ++w) {
      auto [it, fresh] = code[i].try_emplace(counts[i][w], decode[i].size());
      if (fresh) decode[i].push_back(counts[i][w]);
      coded[i][w] = static_cast<std::uint8_t>(it->second);
    }
    if (decode[i].size() > 255)
      throw std::logic_error("unexpected count diversity in one block");
  }

  DeterminationResult result;
  std::unordered_map<std::uint64_t, std::uint64_t> seen;  // total -> tuple code
  for (std::uint64_t w = 1; w < (std::uint64_t{1} << build.n); ++w) {
    std::uint64_t total = 0;
    std::uint64_t tuple = 0;
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t wi =
          (w >> build.block_offsets[i]) & ((std::uint64_t{1} << build.dims[i]) - 1);
      total += counts[i][wi];
      tuple = tuple << 8 | coded[i][wi];
    }
    auto [it, fresh] = seen.try_emplace(total, tuple);
    if (!fresh && it->second != tuple) {
      result.holds = false;
      result.witness_total = total;
      for (std::size_t i = k; i-- > 0;) {
        result.witness_a.insert(result.witness_a.begin(),
                                decode[i][(it->second >> (8 * (k - 1 - i))) & 255]);
        result.witness_b.insert(result.witness_b.begin(),
                                decode[i][(tuple >> (8 * (k - 1 - i))) & 255]);
      }
      result.distinct_totals = seen.size();
      return result;
    }
  }
  result.distinct_totals = seen.size();
  return result;
}

}  // namespace cospec
