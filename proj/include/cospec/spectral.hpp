#pragma once
// Exact spectra of abelian Cayley graphs and their strongly cospectral
// subgroups.
//
// For an abelian group G with inverse-closed connection set S, every
// character chi_a is an eigenvector of the adjacency matrix and the
// eigenvalue is the exact root-of-unity sum  sum_{s in S} zeta_N^<a, s>
// with N the group exponent.  Characters are grouped into eigenvalue
// classes by exact coefficient equality; two vertices 0 and z are strongly
// cospectral iff within every class the pairing sign <a, z> is constant
// (and then z is an involution), so the strongly cospectral vertices form
// a subgroup of the 2-torsion, computed here by direct check.
//
// Groups with every factor of order 2 ("cubelike" graphs) get a fast path:
// the spectrum is a Walsh-Hadamard transform of the connection-set
// indicator, and the strongly cospectral subgroup is the GF(2) orthogonal
// complement of the differences within eigenvalue classes.

#include <cstdint>
#include <functional>
#include <vector>

#include "cospec/cyclotomic.hpp"
#include "cospec/f2.hpp"
#include "cospec/group.hpp"

namespace cospec {

struct CayleyGraph {
  AbelianGroup group;
  std::vector<GroupElement> connection_set;  // canonical order
};

// Checks the set is nonempty, duplicate-free, identity-free and closed
// under negation (so the graph is undirected and loopless); returns the
// graph with the set sorted canonically.  Throws std::invalid_argument.
CayleyGraph make_cayley_graph(const AbelianGroup& g,
                              std::vector<GroupElement> connection_set);

// Exact eigenvalue of the character chi_a.
CyclotomicInteger eigenvalue(const CayleyGraph& x, const Character& a,
                             const CyclotomicField& field);
CyclotomicInteger eigenvalue(const CayleyGraph& x, const Character& a);

struct EigenvalueClass {
  CyclotomicInteger value;
  std::vector<Character> characters;  // canonical order
  std::uint64_t multiplicity = 0;     // == characters.size()
};

// All eigenvalue classes, sorted by the canonical key (lexicographic on the
// exact coefficient vector).  `threads` > 1 partitions the character sweep;
// the result is identical for any thread count.
std::vector<EigenvalueClass> eigenvalue_classes(const CayleyGraph& x,
                                                int threads = 1);

// The subgroup of vertices strongly cospectral with 0.
Subgroup strongly_cospectral_subgroup(const AbelianGroup& g,
                                      const std::vector<EigenvalueClass>& classes);
Subgroup strongly_cospectral_subgroup(const CayleyGraph& x, int threads = 1);

// --- Fast path for elementary abelian 2-groups -----------------------------

// Spectrum of Cay(F2^n, masks) for all 2^n characters at once: the entry at
// index w is sum_{s} (-1)^parity_dot(w, s).  In-place butterfly transform,
// O(n * 2^n) int32 operations.  Requires 1 <= n <= 30 and |masks| < 2^31.
std::vector<std::int32_t> cubelike_spectrum_wht(
    int n, const std::vector<std::uint64_t>& masks);

// Same transform fed by a caller-built indicator vector of length 2^n
// (entry 1 for each connection mask); avoids materializing the mask list.
void wht_inplace(std::vector<std::int32_t>& data);

struct CubelikeSpectralSummary {
  int n = 0;
  // value -> multiplicity, ascending by value.
  std::vector<std::pair<std::int32_t, std::uint64_t>> class_multiplicities;
  // Basis of the span of differences w ^ w' between characters sharing an
  // eigenvalue; the strongly cospectral subgroup is its orthogonal
  // complement (for +/-1 spectra, sign agreement on a class is membership
  // in the class's common coset, which this span encodes exactly).
  std::vector<std::uint64_t> difference_basis;
  std::vector<std::uint64_t> sc_generators;  // basis, ascending
  std::uint64_t sc_order = 1;
};

// Summarizes an ALREADY-TRANSFORMED spectrum (spectrum[w] = eigenvalue of
// character w); pass an indicator through wht_inplace or use
// cubelike_analyze, which does both steps.
CubelikeSpectralSummary summarize_cubelike_spectrum(
    int n, std::vector<std::int32_t> spectrum);

// Builds the indicator from masks, transforms it, and summarizes.
CubelikeSpectralSummary cubelike_analyze(
    int n, const std::vector<std::uint64_t>& masks);

bool cubelike_sc_contains(const CubelikeSpectralSummary& s, std::uint64_t z);

}  // namespace cospec
