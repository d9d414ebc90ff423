#include "cospec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

namespace cospec {

DenseSymMatrix adjacency_matrix(const CayleyGraph& x) {
  if (x.group.size > 4096)
    throw std::invalid_argument("adjacency matrix capped at 4096 vertices");
  const std::size_t n = x.group.size;
  DenseSymMatrix a;
  a.order = n;
  a.entries.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    GroupElement vi = element_at(x.group, i);
    for (const GroupElement& s : x.connection_set) {
      std::size_t j = element_rank(x.group, add(x.group, vi, s));
      a.at(i, j) = 1.0;
    }
  }
  return a;
}

std::vector<EigenCluster> dense_eigendecomposition(const DenseSymMatrix& a,
                                                   double reconstruction_tol) {
  if (a.order > 512)
    throw std::invalid_argument("dense eigensolver capped at order 512");
  if (a.entries.size() != a.order * a.order)
    throw std::invalid_argument("matrix storage does not match its order");
  const auto n = static_cast<Eigen::Index>(a.order);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = a.entries[static_cast<std::size_t>(r) * a.order +
                          static_cast<std::size_t>(c)];
  if (!m.isApprox(m.transpose(), 0.0))
    throw std::invalid_argument("matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("dense eigensolver failed to converge");
  const Eigen::VectorXd& values = solver.eigenvalues();
  const Eigen::MatrixXd& vectors = solver.eigenvectors();

  double reconstruction_error =
      (m - vectors * values.asDiagonal() * vectors.transpose())
          .cwiseAbs()
          .maxCoeff();
  double scale = m.cwiseAbs().maxCoeff();
  if (reconstruction_error > reconstruction_tol * (scale > 0 ? scale : 1.0))
    throw std::runtime_error(
        "eigendecomposition reconstruction error " +
        std::to_string(reconstruction_error) + " exceeds tolerance");

  const double cluster_gap =
      1e-6 * (1.0 + std::max(std::abs(values(0)), std::abs(values(n - 1))));
  std::vector<EigenCluster> clusters;
  for (Eigen::Index i = 0; i < n;) {
    Eigen::Index j = i;
    while (j + 1 < n && values(j + 1) - values(j) < cluster_gap) ++j;
    EigenCluster c;
    c.multiplicity = static_cast<std::size_t>(j - i + 1);
    double sum = 0.0;
    for (Eigen::Index t = i; t <= j; ++t) sum += values(t);
    c.value = sum / static_cast<double>(c.multiplicity);
    c.basis.reserve(a.order * c.multiplicity);
    for (Eigen::Index t = i; t <= j; ++t)
      for (Eigen::Index r = 0; r < n; ++r) c.basis.push_back(vectors(r, t));
    clusters.push_back(std::move(c));
    i = j + 1;
  }
  return clusters;
}

namespace {

// chi_a(x) for all characters and vertices, via one table of the exponent's
// roots of unity; entries index as [character_rank * |G| + vertex_rank].
struct CharacterTable {
  std::size_t size;
  std::vector<std::complex<double>> values;

  CharacterTable(const CayleyGraph& x) : size(x.group.size) {
    const std::uint64_t n = x.group.exponent;
    std::vector<std::complex<double>> zeta(n);
    for (std::uint64_t e = 0; e < n; ++e) {
      double angle = 2.0 * std::numbers::pi * static_cast<double>(e) /
                     static_cast<double>(n);
      zeta[e] = {std::cos(angle), std::sin(angle)};
    }
    values.resize(size * size);
    for (std::uint64_t a = 0; a < size; ++a) {
      Character chi = character_at(x.group, a);
      for (std::uint64_t v = 0; v < size; ++v)
        values[a * size + v] =
            zeta[pairing_exponent(x.group, chi, element_at(x.group, v))];
    }
  }

  const std::complex<double>* row(std::uint64_t character_rank) const {
    return values.data() + character_rank * size;
  }
};

// Sign of chi_a at an involution z: +1 or -1.
int involution_sign(const AbelianGroup& g, const Character& a,
                    const GroupElement& z) {
  std::uint64_t e = pairing_exponent(g, a, z);
  if (e == 0) return +1;
  if (2 * e == g.exponent) return -1;
  throw std::invalid_argument("vertex " + to_string(z) +
                              " is not an involution");
}

ProjectorBundle bundle_from_table(const CayleyGraph& x,
                                  const std::vector<EigenvalueClass>& classes,
                                  const CharacterTable& table,
                                  const GroupElement& z) {
  if (!is_involution(x.group, z))
    throw std::invalid_argument("vertex " + to_string(z) +
                                " is not an involution");
  const std::size_t size = x.group.size;
  ProjectorBundle bundle;
  bundle.classes.reserve(classes.size());
  for (const EigenvalueClass& c : classes) {
    ClassProjection proj;
    std::complex<double> value = to_complex(c.value);
    proj.eigenvalue_estimate = value.real();
    proj.on_zero.assign(size, 0.0);
    proj.on_z.assign(size, 0.0);
    for (const Character& a : c.characters) {
      const std::complex<double>* row = table.row(character_rank(x.group, a));
      // chi_a(x - z) = chi_a(x) * conj(chi_a(z)) = chi_a(x) * (+/-1).
      double sign = involution_sign(x.group, a, z);
      for (std::size_t v = 0; v < size; ++v) {
        proj.on_zero[v] += row[v];
        proj.on_z[v] += sign * row[v];
      }
    }
    bundle.classes.push_back(std::move(proj));
  }
  return bundle;
}

bool projection_matches(const ClassProjection& proj, double tol,
                        std::size_t size) {
  const double compare_tol = tol * static_cast<double>(size);
  double sign = 0.0;
  for (std::size_t v = 0; v < size; ++v) {
    if (sign == 0.0) {
      if (std::abs(proj.on_zero[v]) > tol) {
        // Resolve the sign from the first decisive entry.
        double plus = std::abs(proj.on_zero[v] - proj.on_z[v]);
        double minus = std::abs(proj.on_zero[v] + proj.on_z[v]);
        sign = plus <= minus ? 1.0 : -1.0;
      } else if (std::abs(proj.on_z[v]) > compare_tol) {
        return false;  // u is ~0 here but v is not
      } else {
        continue;
      }
    }
    if (std::abs(proj.on_zero[v] - sign * proj.on_z[v]) > compare_tol)
      return false;
  }
  return true;  // both vectors ~0, or all entries conformed
}

}  // namespace

ProjectorBundle make_projector_bundle(const CayleyGraph& x,
                                      const std::vector<EigenvalueClass>& classes,
                                      const GroupElement& z) {
  if (x.group.size > 65536)
    throw std::invalid_argument("projector route capped at 65536 vertices");
  return bundle_from_table(x, classes, CharacterTable(x), z);
}

bool projector_check(const CayleyGraph& x,
                     const std::vector<EigenvalueClass>& classes,
                     const GroupElement& z, double tol) {
  if (x.group.size > 65536)
    throw std::invalid_argument("projector route capped at 65536 vertices");
  CharacterTable table(x);
  ProjectorBundle bundle = bundle_from_table(x, classes, table, z);
  for (const ClassProjection& proj : bundle.classes)
    if (!projection_matches(proj, tol, x.group.size)) return false;
  return true;
}

bool projector_check(const CayleyGraph& x, const GroupElement& z, double tol) {
  return projector_check(x, eigenvalue_classes(x), z, tol);
}

namespace {

std::vector<GroupElement> sweep_character_path(const CayleyGraph& x,
                                               double tol) {
  if (x.group.size > 65536)
    throw std::invalid_argument("projector route capped at 65536 vertices");
  std::vector<EigenvalueClass> classes = eigenvalue_classes(x);
  CharacterTable table(x);
  std::vector<GroupElement> members;
  for (const GroupElement& z : two_torsion(x.group).elements) {
    ProjectorBundle bundle = bundle_from_table(x, classes, table, z);
    bool ok = true;
    for (const ClassProjection& proj : bundle.classes)
      if (!projection_matches(proj, tol, x.group.size)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(z);
  }
  return members;
}

std::vector<GroupElement> sweep_dense_path(const CayleyGraph& x, double tol) {
  if (x.group.size > 512)
    throw std::invalid_argument("dense route capped at 512 vertices");
  const std::size_t n = x.group.size;
  std::vector<EigenCluster> clusters =
      dense_eigendecomposition(adjacency_matrix(x));
  // Projector columns P e_z = V (V^T e_z) = V * (row z of V)^T.
  auto projector_column = [&](const EigenCluster& c, std::size_t z) {
    std::vector<double> col(n, 0.0);
    for (std::size_t t = 0; t < c.multiplicity; ++t) {
      double w = c.basis[t * n + z];
      for (std::size_t r = 0; r < n; ++r) col[r] += w * c.basis[t * n + r];
    }
    return col;
  };
  std::vector<std::vector<double>> on_zero;
  on_zero.reserve(clusters.size());
  for (const EigenCluster& c : clusters)
    on_zero.push_back(projector_column(c, 0));

  // Anchor index per cluster: the largest-magnitude entry of P e_0 fixes the
  // sign of the comparison most reliably.
  std::vector<std::size_t> anchor(clusters.size(), 0);
  for (std::size_t r = 0; r < clusters.size(); ++r)
    for (std::size_t v = 1; v < n; ++v)
      if (std::abs(on_zero[r][v]) > std::abs(on_zero[r][anchor[r]]))
        anchor[r] = v;

  const double compare_tol = tol * static_cast<double>(n);
  std::vector<GroupElement> members;
  for (std::size_t z = 0; z < n; ++z) {
    bool ok = true;
    for (std::size_t r = 0; r < clusters.size() && ok; ++r) {
      std::vector<double> on_z = projector_column(clusters[r], z);
      const double u = on_zero[r][anchor[r]];
      const double w = on_z[anchor[r]];
      double sign;
      if (std::abs(u) <= tol) {
        sign = 1.0;  // P e_0 is numerically zero; require P e_z to match.
      } else {
        sign = std::abs(u - w) <= std::abs(u + w) ? 1.0 : -1.0;
      }
      for (std::size_t v = 0; v < n; ++v)
        if (std::abs(on_zero[r][v] - sign * on_z[v]) > compare_tol) {
          ok = false;
          break;
        }
    }
    if (ok) members.push_back(element_at(x.group, z));
  }
  return members;
}

}  // namespace

std::vector<GroupElement> brute_force_sc_set(const CayleyGraph& x,
                                             OraclePath path, double tol) {
  std::vector<GroupElement> members = path == OraclePath::CharacterProjector
                                          ? sweep_character_path(x, tol)
                                          : sweep_dense_path(x, tol);
  // The definition forces a subgroup; anything else is an oracle failure.
  std::set<GroupElement> set(members.begin(), members.end());
  if (!set.count(x.group.identity()))
    throw std::runtime_error("oracle result misses the identity");
  for (const GroupElement& a : members)
    for (const GroupElement& b : members)
      if (!set.count(add(x.group, a, b)))
        throw std::runtime_error("oracle result is not closed: " +
                                 to_string(a) + " + " + to_string(b) +
                                 " is missing");
  return members;
}

OracleComparison compare_with_oracles(const CayleyGraph& x,
                                      const std::vector<EigenvalueClass>& classes,
                                      const Subgroup& exact_sc,
                                      double tol) {
  OracleComparison result;
  std::vector<GroupElement> chr =
      brute_force_sc_set(x, OraclePath::CharacterProjector, tol);
  result.character_path_agrees = chr == exact_sc.elements;
  if (!result.character_path_agrees)
    result.detail = "character-projector route found " +
                    std::to_string(chr.size()) + " vertices, exact " +
                    std::to_string(exact_sc.elements.size());

  if (x.group.size > 512) {
    result.detail += result.detail.empty() ? "" : "; ";
    result.detail += "dense route skipped: more than 512 vertices";
    return result;
  }
  result.dense_path_ran = true;
  std::vector<GroupElement> dns =
      brute_force_sc_set(x, OraclePath::DenseEigensolver, tol);
  result.dense_path_agrees = dns == exact_sc.elements;
  if (!result.dense_path_agrees) {
    result.detail += result.detail.empty() ? "" : "; ";
    result.detail += "dense route found " + std::to_string(dns.size()) +
                     " vertices, exact " +
                     std::to_string(exact_sc.elements.size());
  }

  // Cross-check the numeric spectrum against the exact classes.
  std::vector<EigenCluster> clusters =
      dense_eigendecomposition(adjacency_matrix(x));
  std::vector<std::pair<double, std::uint64_t>> exact;
  for (const EigenvalueClass& c : classes) {
    std::complex<double> value = to_complex(c.value);
    if (std::abs(value.imag()) > 1e-9)
      throw std::runtime_error("exact eigenvalue has nonreal evaluation");
    exact.emplace_back(value.real(), c.multiplicity);
  }
  std::sort(exact.begin(), exact.end());
  if (exact.size() != clusters.size()) {
    std::ostringstream os;
    os << "cluster count " << clusters.size() << " does not match the "
       << exact.size() << " exact classes";
    throw std::runtime_error(os.str());
  }
  for (std::size_t i = 0; i < exact.size(); ++i) {
    if (clusters[i].multiplicity != exact[i].second) {
      std::ostringstream os;
      os << "multiplicity mismatch near eigenvalue " << exact[i].first
         << ": numeric " << clusters[i].multiplicity << ", exact "
         << exact[i].second;
      throw std::runtime_error(os.str());
    }
    result.max_eigenvalue_deviation =
        std::max(result.max_eigenvalue_deviation,
                 std::abs(clusters[i].value - exact[i].first));
  }
  return result;
}

}  // namespace cospec
