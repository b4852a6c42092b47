#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dopt/errors.hpp"

namespace dopt {

/// Undirected weighted edge between agents `i` and `j` (1-based ids).
struct Edge {
  int i = 0;
  int j = 0;
  double weight = 1.0;
};

/// Communication topology of the agent network. Immutable after
/// construction, safe to share read-only across concurrent workers.
///
/// Agent ids are 1-based everywhere in the public API, matching the
/// scenario config convention.
class Graph {
 public:
  static Graph build(int agent_count, const std::vector<Edge>& edges);

  int agent_count() const { return static_cast<int>(adjacency_.rows()); }
  const Eigen::MatrixXd& adjacency() const { return adjacency_; }

  /// L = D - A. Symmetric positive semidefinite, rows sum to zero.
  Eigen::MatrixXd laplacian() const;

  /// Ids of the agents adjacent to `agent`, ascending.
  const std::vector<int>& neighbors(int agent) const;

  /// Laplacian spectrum, ascending. Smallest is 0 (within roundoff).
  Eigen::VectorXd laplacian_eigenvalues() const;

  /// Connected iff the second-smallest Laplacian eigenvalue is positive.
  bool connected() const;

 private:
  Graph() = default;
  Eigen::MatrixXd adjacency_;
  std::vector<std::vector<int>> neighbors_;
};

/// Spectral margin used when validating kappa and declaring connectivity.
inline constexpr double kSpectralTol = 1e-9;

/// G = I - L/kappa, the per-round consensus mixing map.
Eigen::MatrixXd mixing_matrix(const Graph& g, double kappa);

/// G - Y with Y = (1/N) 1 1', i.e. the mixing map restricted to the
/// disagreement subspace.
Eigen::MatrixXd deflated_mixing_matrix(const Graph& g, double kappa);

/// max over nonzero Laplacian eigenvalues of |1 - lambda/kappa|; the
/// contraction factor of the disagreement dynamics.
double mixing_factor(const Graph& g, double kappa);

/// Throws GraphDisconnected or KappaTooSmall(rho) unless
/// mixing_factor(g, kappa) < 1 - kSpectralTol on a connected graph.
void validate_kappa(const Graph& g, double kappa);

}  // namespace dopt
