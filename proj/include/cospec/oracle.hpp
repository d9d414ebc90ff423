#pragma once
// Definition-level numeric verification of strong cospectrality, independent
// of the exact spectral path.
//
// Two routes of differing independence.  The character-projector route
// shares the character machinery but tests the raw definition: for each
// eigenvalue class C it forms u_r(x) = sum_{a in C} chi_a(x) and
// v_r(x) = sum_{a in C} chi_a(x - z) in complex doubles (these are |G| times
// the projector columns E_r e_0 and E_r e_z) and demands u_r = +/- v_r
// entrywise.  The dense-eigensolver route shares nothing: it decomposes the
// adjacency matrix numerically, clusters eigenvalues, and compares projector
// columns; it also cross-checks the numeric spectrum against the exact one.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "cospec/spectral.hpp"

namespace cospec {

struct DenseSymMatrix {
  std::size_t order = 0;
  std::vector<double> entries;  // row-major, order x order, symmetric

  double& at(std::size_t r, std::size_t c) { return entries[r * order + c]; }
  const double& at(std::size_t r, std::size_t c) const {
    return entries[r * order + c];
  }
};

// Adjacency of the Cayley graph in canonical vertex order: A[i][j] = 1 iff
// vertex_j - vertex_i lies in the connection set.  Requires |G| <= 4096.
DenseSymMatrix adjacency_matrix(const CayleyGraph& x);

// One numeric eigenvalue cluster: representative value, multiplicity, and an
// orthonormal basis of the eigenspace (column-major, order x multiplicity).
struct EigenCluster {
  double value = 0.0;
  std::size_t multiplicity = 0;
  std::vector<double> basis;
};

// Full numeric eigendecomposition with eigenvalues clustered at gap
// threshold 1e-6 * (1 + max|lambda|), ascending by value.  Verifies the
// reconstruction ||A - V Lambda V^T||_max < reconstruction_tol * ||A||_max
// and throws std::runtime_error if the solver's output fails it.
// Requires order <= 512.
std::vector<EigenCluster> dense_eigendecomposition(
    const DenseSymMatrix& a, double reconstruction_tol = 1e-8);

// Per-class projector data for one candidate vertex z.
struct ClassProjection {
  double eigenvalue_estimate = 0.0;
  std::vector<std::complex<double>> on_zero;  // u_r = |G| * E_r e_0
  std::vector<std::complex<double>> on_z;     // v_r = |G| * E_r e_z
};

struct ProjectorBundle {
  std::vector<ClassProjection> classes;
};

// Requires z to be an involution (chi(z) = +/-1 for every character).
ProjectorBundle make_projector_bundle(const CayleyGraph& x,
                                      const std::vector<EigenvalueClass>& classes,
                                      const GroupElement& z);

// True iff u_r = +v_r or u_r = -v_r entrywise within tol * |G| for every
// class, the sign resolved from the first entry of magnitude > tol.
// Requires |G| <= 65536 and z an involution.
bool projector_check(const CayleyGraph& x, const GroupElement& z,
                     double tol = 1e-8);
bool projector_check(const CayleyGraph& x,
                     const std::vector<EigenvalueClass>& classes,
                     const GroupElement& z, double tol = 1e-8);

enum class OraclePath { CharacterProjector, DenseEigensolver };

// All vertices strongly cospectral with 0, by definition sweep.  The
// character-projector path sweeps the involutions (|G| <= 65536); the
// dense path sweeps every vertex (|G| <= 512).  Throws std::runtime_error
// if the result is not a subgroup.
std::vector<GroupElement> brute_force_sc_set(const CayleyGraph& x,
                                             OraclePath path,
                                             double tol = 1e-8);

struct OracleComparison {
  bool character_path_agrees = false;
  bool dense_path_ran = false;
  bool dense_path_agrees = false;
  double max_eigenvalue_deviation = 0.0;  // numeric vs exact spectrum
  std::string detail;                     // reason on disagreement or skip
};

// Runs both routes against the exact subgroup and exact classes.  The dense
// route is skipped (with detail) when |G| > 512; a cluster-multiplicity
// mismatch against the exact classes throws with a diagnostic.
OracleComparison compare_with_oracles(const CayleyGraph& x,
                                      const std::vector<EigenvalueClass>& classes,
                                      const Subgroup& exact_sc,
                                      double tol = 1e-8);

}  // namespace cospec
