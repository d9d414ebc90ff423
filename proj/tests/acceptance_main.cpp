// Acceptance gate: one self-contained check per release criterion, run as
//   cospec_acceptance [N]
// Each check prints exactly one line:
//   [PASS] criterion N: <detail> (<time> s)
//   [FAIL] criterion N: <detail> (<time> s)
// and the process exits 0 only if every executed check passed.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/resource.h>

#include "cospec/cubelike.hpp"
#include "cospec/f2.hpp"
#include "cospec/hetero.hpp"
#include "cospec/oracle.hpp"
#include "cospec/selftest.hpp"
#include "cospec/spectral.hpp"

using namespace cospec;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string render_set(const std::set<std::uint64_t>& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::uint64_t v : s) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  os << "}";
  return os.str();
}

bool same_elements(const Subgroup& a, const Subgroup& b) {
  return a.order == b.order && a.elements == b.elements;
}

// --- 1..3: heterocyclic constructions hit the full two-torsion -------------

Outcome hetero_equals_two_torsion(const std::vector<unsigned>& exponents,
                                  std::uint64_t want_order) {
  CayleyGraph x = build_hetero(make_hetero_spec(exponents));
  Subgroup sc = strongly_cospectral_subgroup(x);
  Subgroup tt = two_torsion(x.group);
  std::ostringstream os;
  os << "|G|=" << x.group.size << ", root index " << x.group.exponent
     << ", subgroup order " << sc.order;
  if (sc.order != want_order)
    return {false, os.str() + ", expected order " + std::to_string(want_order)};
  if (!same_elements(sc, tt)) return {false, os.str() + ", != two-torsion"};
  return {true, os.str() + " = full two-torsion"};
}

Outcome criterion1() {
  Outcome o = hetero_equals_two_torsion({3}, 2);
  if (!o.pass) return o;
  // Pin the exact elements in Z8.
  CayleyGraph x = build_hetero(make_hetero_spec({3}));
  Subgroup sc = strongly_cospectral_subgroup(x);
  if (sc.elements[0].coords != std::vector<std::uint64_t>{0} ||
      sc.elements[1].coords != std::vector<std::uint64_t>{4})
    return {false, "elements differ from {(0), (4)}"};
  return {true, "subgroup {(0), (4)}" + o.detail.substr(o.detail.find(" ="))};
}

Outcome criterion2() { return hetero_equals_two_torsion({3, 4}, 4); }

Outcome criterion3() {
  CayleyGraph x = build_hetero(make_hetero_spec({3, 4, 5}));
  if (x.group.exponent != 32)
    return {false, "root index is " + std::to_string(x.group.exponent) +
                       ", expected 32"};
  return hetero_equals_two_torsion({3, 4, 5}, 8);
}

// --- 4: even character sums, exhaustively --------------------------------

Outcome criterion4() {
  std::uint64_t checked = 0;
  for (unsigned m = 3; m <= 6; ++m) {
    std::uint64_t mod = std::uint64_t{1} << m;
    BigInt peak = BigInt(1) << (m - 2);
    for (std::uint64_t a = 0; a < mod; a += 2) {
      CyclotomicInteger v = block_character_sum(m, a);
      if (!is_rational_integer(v))
        return {false, "m=" + std::to_string(m) + " a=" + std::to_string(a) +
                           ": sum is irrational"};
      BigInt expect = a == 0 ? peak : (a == mod / 2 ? -peak : BigInt(0));
      if (rational_value(v) != expect)
        return {false, "m=" + std::to_string(m) + " a=" + std::to_string(a) +
                           ": got " + to_string(v)};
      ++checked;
    }
  }
  return {true, "all " + std::to_string(checked) +
                    " even character sums hit {2^(m-2), -2^(m-2), 0} exactly"};
}

// --- 5: the twist negates every odd character sum ------------------------

Outcome criterion5() {
  std::uint64_t checked = 0;
  for (unsigned m = 3; m <= 6; ++m) {
    std::uint64_t mod = std::uint64_t{1} << m;
    for (std::uint64_t a = 1; a < mod; a += 2) {
      CyclotomicInteger v = block_character_sum(m, a);
      if (!cyc_equals(galois_apply(block_twist(m), v), cyc_neg(v)))
        return {false, "m=" + std::to_string(m) + " a=" + std::to_string(a) +
                           ": twist does not negate " + to_string(v)};
      ++checked;
    }
  }
  return {true, "substitution z -> z^(1+2^(m-1)) negates all " +
                    std::to_string(checked) + " odd sums, m in 3..6"};
}

// --- 6: quadric point sums ------------------------------------------------

Outcome criterion6() {
  QuadraticSpace s3 = make_quadratic_space(3);
  if (sigma_of_set(quadric_points(s3)).bits != 0b100)
    return {false, "d=3: quadric sum is not (0,0,1)"};
  for (int d : {5, 7, 9, 11, 13}) {
    QuadraticSpace s = make_quadratic_space(d);
    std::vector<F2Vector> q = quadric_points(s);
    if (sigma_of_set(q).bits != 0)
      return {false, "d=" + std::to_string(d) + ": quadric sum is nonzero"};
    q.push_back(nucleus(s));
    if (sigma_of_set(q).bits != nucleus(s).bits)
      return {false,
              "d=" + std::to_string(d) + ": augmented sum misses the nucleus"};
  }
  return {true, "sum over quadric = (0,0,1) at d=3, = 0 for d in {5,...,13}; "
                "augmented set sums to the nucleus"};
}

// --- 7: hyperplane section profile ---------------------------------------

Outcome criterion7() {
  // Assert the traditional reference counts as given: value set
  // {2^(d-2)-1, 2^(d-2)-1 +/- 2^(e-1)} with minimum gap 2^(e-1) once the
  // full count 2^(d-1) is adjoined.
  for (int d : {5, 7, 9}) {
    QuadraticSpace s = make_quadratic_space(d);
    std::map<std::uint64_t, std::uint64_t> profile = hyperplane_profile(s);
    std::uint64_t mid = std::uint64_t{1} << (d - 2);
    std::uint64_t eps = epsilon(s);
    std::set<std::uint64_t> expected = {mid - 1, mid - 1 - eps, mid - 1 + eps};
    std::set<std::uint64_t> observed;
    for (const auto& [count, freq] : profile) observed.insert(count);
    std::uint64_t gap = profile_min_gap(profile, d);
    if (observed != expected || gap != eps) {
      std::ostringstream os;
      os << "d=" << d << ": observed counts " << render_set(observed)
         << " with gap " << gap << ", expected counts " << render_set(expected)
         << " with gap " << eps
         << " (hyperplanes through the nucleus meet the augmented set in "
            "2^(d-2) points, one more than the reference count)";
      return {false, os.str()};
    }
  }
  return {true, "section counts and gaps match the reference values, d in {5,7,9}"};
}

// --- 8: single-block graph ------------------------------------------------

Outcome criterion8() {
  CubelikeBuild b = build_cubelike(make_cubelike_spec({5}));
  CubelikeSpectralSummary s = cubelike_analyze(b.n, b.connection_masks);
  std::uint64_t p1 = b.predicted_generators[0].bits;
  if (!cubelike_sc_contains(s, 0) || !cubelike_sc_contains(s, p1))
    return {false, "subgroup misses the nucleus 0x10"};
  std::vector<F2Vector> set;
  for (std::uint64_t m : b.connection_masks) set.push_back({m, b.n});
  std::uint64_t sigma = sigma_of_set(set).bits;
  if (!cubelike_sc_contains(s, sigma))
    return {false, "sigma(S) escapes the subgroup"};
  std::ostringstream os;
  os << "|G|=32, subgroup order " << s.sc_order
     << " contains {0, p} and sigma(S)=0x" << std::hex << sigma;
  return {true, os.str()};
}

// --- 9: two-block graph at |G| = 2^22 -------------------------------------

Outcome criterion9() {
  CubelikeBuild b = build_cubelike(make_cubelike_spec({5, 17}));
  std::vector<std::int32_t> indicator = connection_indicator(b);
  wht_inplace(indicator);
  CubelikeSpectralSummary s =
      summarize_cubelike_spectrum(b.n, std::move(indicator));
  std::uint64_t p1 = b.predicted_generators[0].bits;
  std::uint64_t p2 = b.predicted_generators[1].bits;
  if (f2::rank_of({p1, p2}) != 2)
    return {false, "embedded nuclei are dependent"};
  if (!cubelike_sc_contains(s, p1) || !cubelike_sc_contains(s, p2) ||
      !cubelike_sc_contains(s, p1 ^ p2))
    return {false, "subgroup does not contain the span of the nuclei"};
  if (s.sc_order < 4) return {false, "subgroup order below 4"};
  DeterminationResult det = determination_check(b);
  if (!det.holds) {
    std::ostringstream os;
    os << "total " << det.witness_total
       << " splits two ways across blocks; determination fails";
    return {false, os.str()};
  }
  struct rusage usage;
  getrusage(RUSAGE_SELF, &usage);
  double peak_mb = static_cast<double>(usage.ru_maxrss) / 1024.0;
  std::ostringstream os;
  os << "|G|=2^22, subgroup order " << s.sc_order
     << " >= <p1,p2> of order 4; eigenvalue determines per-block counts ("
     << det.distinct_totals << " totals); peak memory " << peak_mb << " MB";
  if (peak_mb >= 256.0) return {false, os.str() + " >= 256 MB"};
  return {true, os.str()};
}

// --- 10: numeric oracles reproduce the exact subgroup ----------------------

Outcome criterion10() {
  std::vector<std::pair<std::string, CayleyGraph>> corpus;
  AbelianGroup z2 = make_group({2});
  corpus.emplace_back("K2", make_cayley_graph(z2, {GroupElement{{1}}}));
  AbelianGroup z4 = make_group({4});
  corpus.emplace_back(
      "C4", make_cayley_graph(z4, {GroupElement{{1}}, GroupElement{{3}}}));
  corpus.emplace_back("cyclic-block {3}", build_hetero(make_hetero_spec({3})));
  corpus.emplace_back("cyclic-block {3,4}",
                      build_hetero(make_hetero_spec({3, 4})));
  corpus.emplace_back("quadric-block [5]",
                      to_cayley_graph(build_cubelike(make_cubelike_spec({5}))));

  std::mt19937_64 rng(kDefaultSeed);
  for (int i = 0; i < 50; ++i)
    corpus.emplace_back("random #" + std::to_string(i),
                        random_cayley_graph(rng, 200));

  double worst = 0.0;
  for (const auto& [name, x] : corpus) {
    std::vector<EigenvalueClass> classes = eigenvalue_classes(x);
    Subgroup exact = strongly_cospectral_subgroup(x.group, classes);
    OracleComparison cmp = compare_with_oracles(x, classes, exact);
    if (!cmp.character_path_agrees || !cmp.dense_path_ran ||
        !cmp.dense_path_agrees)
      return {false, name + " (|G|=" + std::to_string(x.group.size) +
                         "): " + cmp.detail};
    if (cmp.max_eigenvalue_deviation > 1e-6)
      return {false, name + ": eigenvalue deviation " +
                         std::to_string(cmp.max_eigenvalue_deviation)};
    worst = std::max(worst, cmp.max_eigenvalue_deviation);
  }
  std::ostringstream os;
  os << corpus.size() << " graphs (seed " << kDefaultSeed
     << "): both oracle routes match the exact subgroup; worst eigenvalue "
        "deviation "
     << worst;
  return {true, os.str()};
}

// --- 11: randomized property battery --------------------------------------

Outcome criterion11() {
  std::vector<SelftestResult> results = run_selftest(kDefaultSeed);
  for (const SelftestResult& r : results)
    if (!r.pass) return {false, r.name + ": " + r.detail};
  return {true, std::to_string(results.size()) +
                    " properties hold (seed " + std::to_string(kDefaultSeed) +
                    ")"};
}

struct Criterion {
  int id;
  double time_limit_s;  // 0 = no limit
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, 0.1, criterion1},  {2, 1.0, criterion2},  {3, 30.0, criterion3},
    {4, 0.0, criterion4},  {5, 0.0, criterion5},  {6, 0.0, criterion6},
    {7, 0.0, criterion7},  {8, 0.1, criterion8},  {9, 60.0, criterion9},
    {10, 0.0, criterion10}, {11, 0.0, criterion11},
};

bool run_criterion(const Criterion& c) {
  auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = c.run();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (outcome.pass && c.time_limit_s > 0 && seconds >= c.time_limit_s) {
    outcome.pass = false;
    outcome.detail += "; over the " + std::to_string(c.time_limit_s) +
                      " s budget";
  }
  std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id
            << ": " << outcome.detail << " (" << seconds << " s)\n";
  return outcome.pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 2) {
    std::cerr << "usage: cospec_acceptance [criterion 1..11]\n";
    return 1;
  }
  bool all_pass = true;
  if (argc == 2) {
    int id = std::atoi(argv[1]);
    if (id < 1 || id > 11) {
      std::cerr << "usage: cospec_acceptance [criterion 1..11]\n";
      return 1;
    }
    all_pass = run_criterion(kCriteria[id - 1]);
  } else {
    for (const Criterion& c : kCriteria) all_pass = run_criterion(c) && all_pass;
  }
  return all_pass ? 0 : 1;
}
