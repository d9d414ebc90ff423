#include "cospec/spectral.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace cospec {

CayleyGraph make_cayley_graph(const AbelianGroup& g,
                              std::vector<GroupElement> connection_set) {
  if (connection_set.empty())
    throw std::invalid_argument("connection set must be nonempty");
  std::set<GroupElement> set;
  for (const GroupElement& s : connection_set) {
    check_element(g, s);
    if (!set.insert(s).second)
      throw std::invalid_argument("connection set repeats element " +
                                  to_string(s));
  }
  if (set.count(g.identity()))
    throw std::invalid_argument("connection set must not contain 0");
  for (const GroupElement& s : set)
    if (!set.count(negate(g, s)))
      throw std::invalid_argument("connection set is not inverse-closed: -" +
                                  to_string(s) + " is missing");
  CayleyGraph x;
  x.group = g;
  x.connection_set.assign(set.begin(), set.end());
  return x;
}

namespace {

// Eigenvalue computed into a reusable exponent-count buffer (length N,
// zeroed on entry and re-zeroed before returning) to keep the per-character
// sweep allocation-free.
CyclotomicInteger eigenvalue_buffered(const CayleyGraph& x, const Character& a,
                                      const CyclotomicField& field,
                                      std::vector<std::int64_t>& counts,
                                      std::vector<std::uint64_t>& touched) {
  touched.clear();
  for (const GroupElement& s : x.connection_set) {
    std::uint64_t e = pairing_exponent(x.group, a, s);
    if (counts[e]++ == 0) touched.push_back(e);
  }
  CyclotomicInteger v = field.from_exponent_counts(counts);
  for (std::uint64_t e : touched) counts[e] = 0;
  return v;
}

}  // namespace

CyclotomicInteger eigenvalue(const CayleyGraph& x, const Character& a,
                             const CyclotomicField& field) {
  if (field.modulus() != x.group.exponent)
    throw std::invalid_argument("field modulus must equal the group exponent");
  std::vector<std::int64_t> counts(field.modulus(), 0);
  std::vector<std::uint64_t> touched;
  return eigenvalue_buffered(x, a, field, counts, touched);
}

CyclotomicInteger eigenvalue(const CayleyGraph& x, const Character& a) {
  return eigenvalue(x, a, CyclotomicField(x.group.exponent));
}

std::vector<EigenvalueClass> eigenvalue_classes(const CayleyGraph& x,
                                                int threads) {
  const CyclotomicField field(x.group.exponent);
  const std::uint64_t size = x.group.size;
  using ClassMap = std::map<std::vector<BigInt>, std::vector<std::uint64_t>>;

  unsigned worker_count = 1;
  if (threads > 1)
    worker_count = std::min<std::uint64_t>(
        std::min<unsigned>(threads, std::thread::hardware_concurrency()),
        size);
  if (worker_count < 1) worker_count = 1;

  auto sweep = [&](std::uint64_t begin, std::uint64_t end, ClassMap& out) {
    std::vector<std::int64_t> counts(field.modulus(), 0);
    std::vector<std::uint64_t> touched;
    for (std::uint64_t r = begin; r < end; ++r) {
      Character a = character_at(x.group, r);
      CyclotomicInteger v = eigenvalue_buffered(x, a, field, counts, touched);
      out[std::move(v.coeffs)].push_back(r);
    }
  };

  std::vector<ClassMap> partial(worker_count);
  if (worker_count == 1) {
    sweep(0, size, partial[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(worker_count);
    for (unsigned t = 0; t < worker_count; ++t) {
      std::uint64_t begin = size * t / worker_count;
      std::uint64_t end = size * (t + 1) / worker_count;
      pool.emplace_back([&, t, begin, end] {
        try {
          sweep(begin, end, partial[t]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // Merge in worker order: each worker covers an ascending rank range, so
  // concatenation keeps every class's character list in canonical order and
  // the result does not depend on the thread count.
  ClassMap merged = std::move(partial[0]);
  for (unsigned t = 1; t < worker_count; ++t)
    for (auto& [key, ranks] : partial[t]) {
      auto& dst = merged[key];
      dst.insert(dst.end(), ranks.begin(), ranks.end());
    }

  std::vector<EigenvalueClass> classes;
  classes.reserve(merged.size());
  for (auto& [key, ranks] : merged) {
    EigenvalueClass c;
    c.value = CyclotomicInteger{x.group.exponent, key};
    c.characters.reserve(ranks.size());
    for (std::uint64_t r : ranks) c.characters.push_back(character_at(x.group, r));
    c.multiplicity = ranks.size();
    classes.push_back(std::move(c));
  }
  return classes;
}

Subgroup strongly_cospectral_subgroup(
    const AbelianGroup& g, const std::vector<EigenvalueClass>& classes) {
  const std::uint64_t n = g.exponent;
  // Pairing of an involution with any character lands in {0, N/2}, i.e. the
  // character value is +1 or -1.
  auto sign_at = [&](const Character& a, const GroupElement& z) {
    std::uint64_t e = pairing_exponent(g, a, z);
    if (e == 0) return +1;
    if (2 * e == n) return -1;
    throw std::logic_error("pairing with an involution must be a half-turn");
  };

  std::vector<GroupElement> members;
  for (const GroupElement& z : two_torsion(g).elements) {
    bool ok = true;
    for (const EigenvalueClass& c : classes) {
      int s0 = sign_at(c.characters.front(), z);
      for (std::size_t i = 1; i < c.characters.size() && ok; ++i)
        if (sign_at(c.characters[i], z) != s0) ok = false;
      if (!ok) break;
    }
    if (ok) members.push_back(z);
  }
  return subgroup_from_involutions(g, std::move(members));
}

Subgroup strongly_cospectral_subgroup(const CayleyGraph& x, int threads) {
  return strongly_cospectral_subgroup(x.group, eigenvalue_classes(x, threads));
}

// --- Fast path --------------------------------------------------------------

void wht_inplace(std::vector<std::int32_t>& data) {
  const std::size_t size = data.size();
  if (size == 0 || (size & (size - 1)) != 0)
    throw std::invalid_argument("transform length must be a power of two");
  for (std::size_t h = 1; h < size; h <<= 1)
    for (std::size_t block = 0; block < size; block += 2 * h)
      for (std::size_t i = block; i < block + h; ++i) {
        std::int32_t a = data[i];
        std::int32_t b = data[i + h];
        data[i] = a + b;
        data[i + h] = a - b;
      }
}

std::vector<std::int32_t> cubelike_spectrum_wht(
    int n, const std::vector<std::uint64_t>& masks) {
  if (n < 1 || n > 30)
    throw std::invalid_argument("dimension must be between 1 and 30");
  if (masks.size() >= (std::uint64_t{1} << 31))
    throw std::invalid_argument("connection set too large for int32 spectra");
  std::vector<std::int32_t> data(std::size_t{1} << n, 0);
  for (std::uint64_t m : masks) {
    if (m == 0) throw std::invalid_argument("connection mask 0 not allowed");
    if (m >> n)
      throw std::invalid_argument("connection mask exceeds the dimension");
    if (data[m]++)
      throw std::invalid_argument("connection set repeats a mask");
  }
  wht_inplace(data);
  return data;
}

CubelikeSpectralSummary summarize_cubelike_spectrum(
    int n, std::vector<std::int32_t> spectrum) {
  if (spectrum.size() != (std::size_t{1} << n))
    throw std::invalid_argument("spectrum length must be 2^n");
  CubelikeSpectralSummary out;
  out.n = n;
  std::unordered_map<std::int32_t, std::uint64_t> first_seen;
  std::unordered_map<std::int32_t, std::uint64_t> mult;
  f2::Basis diff;
  for (std::uint64_t w = 0; w < spectrum.size(); ++w) {
    std::int32_t v = spectrum[w];
    auto [it, fresh] = first_seen.try_emplace(v, w);
    if (!fresh) diff.insert(w ^ it->second);
    ++mult[v];
  }
  for (auto [v, m] : mult) out.class_multiplicities.emplace_back(v, m);
  std::sort(out.class_multiplicities.begin(), out.class_multiplicities.end());
  out.difference_basis = diff.rows();
  out.sc_generators = f2::orthogonal_complement(diff, n);
  out.sc_order = std::uint64_t{1} << out.sc_generators.size();
  return out;
}

CubelikeSpectralSummary cubelike_analyze(
    int n, const std::vector<std::uint64_t>& masks) {
  return summarize_cubelike_spectrum(n, cubelike_spectrum_wht(n, masks));
}

bool cubelike_sc_contains(const CubelikeSpectralSummary& s, std::uint64_t z) {
  if (s.n < 64 && (z >> s.n))
    throw std::invalid_argument("mask exceeds the dimension");
  f2::Basis b;
  for (std::uint64_t g : s.sc_generators) b.insert(g);
  return b.contains(z);
}

}  // namespace cospec
