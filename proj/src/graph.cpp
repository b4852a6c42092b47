#include "dopt/graph.hpp"

#include <algorithm>
#include <cmath>

namespace dopt {

Graph Graph::build(int agent_count, const std::vector<Edge>& edges) {
  if (agent_count < 1) {
    throw Error(Errc::validation_error, "agent_count must be positive");
  }
  Graph g;
  g.adjacency_ = Eigen::MatrixXd::Zero(agent_count, agent_count);
  for (const Edge& e : edges) {
    if (e.i < 1 || e.i > agent_count || e.j < 1 || e.j > agent_count) {
      throw Error(Errc::index_out_of_range,
                  "edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                      ") out of range for N=" + std::to_string(agent_count));
    }
    if (e.i == e.j) {
      throw Error(Errc::self_loop, "self-loop at agent " + std::to_string(e.i));
    }
    if (!(e.weight > 0.0)) {
      throw Error(Errc::validation_error, "edge weight must be positive");
    }
    const int a = e.i - 1;
    const int b = e.j - 1;
    if (g.adjacency_(a, b) != 0.0) {
      throw Error(Errc::duplicate_edge, "duplicate edge (" + std::to_string(e.i) +
                                            "," + std::to_string(e.j) + ")");
    }
    g.adjacency_(a, b) = e.weight;
    g.adjacency_(b, a) = e.weight;
  }
  g.neighbors_.resize(agent_count);
  for (int a = 0; a < agent_count; ++a) {
    for (int b = 0; b < agent_count; ++b) {
      if (g.adjacency_(a, b) > 0.0) g.neighbors_[a].push_back(b + 1);
    }
  }
  return g;
}

Eigen::MatrixXd Graph::laplacian() const {
  Eigen::MatrixXd lap = -adjacency_;
  lap.diagonal() = adjacency_.rowwise().sum();
  return lap;
}

const std::vector<int>& Graph::neighbors(int agent) const {
  if (agent < 1 || agent > agent_count()) {
    throw Error(Errc::index_out_of_range,
                "agent id " + std::to_string(agent) + " out of range");
  }
  return neighbors_[agent - 1];
}

Eigen::VectorXd Graph::laplacian_eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(laplacian(),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

bool Graph::connected() const {
  if (agent_count() == 1) return true;
  return laplacian_eigenvalues()(1) > kSpectralTol;
}

Eigen::MatrixXd mixing_matrix(const Graph& g, double kappa) {
  if (!(kappa > 0.0)) {
    throw Error(Errc::non_positive_kappa, "kappa must be positive");
  }
  const int n = g.agent_count();
  return Eigen::MatrixXd::Identity(n, n) - g.laplacian() / kappa;
}

Eigen::MatrixXd deflated_mixing_matrix(const Graph& g, double kappa) {
  const int n = g.agent_count();
  return mixing_matrix(g, kappa) -
         Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
}

double mixing_factor(const Graph& g, double kappa) {
  if (!(kappa > 0.0)) {
    throw Error(Errc::non_positive_kappa, "kappa must be positive");
  }
  const Eigen::VectorXd lambda = g.laplacian_eigenvalues();
  double rho = 0.0;
  for (int i = 1; i < lambda.size(); ++i) {
    rho = std::max(rho, std::abs(1.0 - lambda(i) / kappa));
  }
  return rho;
}

void validate_kappa(const Graph& g, double kappa) {
  if (!g.connected()) {
    throw Error(Errc::graph_disconnected, "graph is not connected");
  }
  const double rho = mixing_factor(g, kappa);
  if (!(rho < 1.0 - kSpectralTol)) {
    throw Error(Errc::kappa_too_small,
                "kappa=" + std::to_string(kappa) +
                    " gives mixing factor rho=" + std::to_string(rho));
  }
}

}  // namespace dopt
