#include "dopt/dynamics.hpp"

#include <cmath>
#include <random>

namespace dopt {

namespace {

void check_agent_index(int agent, int agent_count) {
  if (agent < 1 || agent > agent_count) {
    throw Error(Errc::index_out_of_range,
                "agent id " + std::to_string(agent) + " out of range for N=" +
                    std::to_string(agent_count));
  }
}

// Uniform double in [0,1) from the raw generator; avoids distribution
// implementation differences.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

AgentModel unicycle_model(const Eigen::Vector3d& x0) {
  AgentModel m;
  m.state_dim = 3;
  m.control_dim = 2;
  m.x0 = x0;
  m.drift = [](const Eigen::VectorXd&) { return Eigen::VectorXd::Zero(3); };
  m.input_map = [](const Eigen::VectorXd& x) {
    Eigen::MatrixXd g(3, 2);
    g << std::cos(x(2)), 0.0, std::sin(x(2)), 0.0, 0.0, 1.0;
    return g;
  };
  return m;
}

AgentModel linear_model(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                        const Eigen::VectorXd& x0) {
  if (A.rows() != A.cols() || B.rows() != A.rows() || x0.size() != A.rows()) {
    throw Error(Errc::dimension_mismatch, "linear model dimensions disagree");
  }
  AgentModel m;
  m.state_dim = static_cast<int>(A.rows());
  m.control_dim = static_cast<int>(B.cols());
  m.x0 = x0;
  m.drift = [A](const Eigen::VectorXd& x) -> Eigen::VectorXd { return A * x; };
  m.input_map = [B](const Eigen::VectorXd&) { return B; };
  return m;
}

TimeGrid::TimeGrid(double horizon, int node_count)
    : horizon_(horizon), node_count_(node_count) {
  if (!(horizon > 0.0)) {
    throw Error(Errc::validation_error, "horizon must be positive");
  }
  if (node_count < 2) {
    throw Error(Errc::validation_error, "time grid needs at least two nodes");
  }
}

Box default_state_box(const std::vector<AgentModel>& models, double inflate) {
  if (models.empty()) {
    throw Error(Errc::empty_bounds, "no models to derive a state box from");
  }
  const int n = models.front().state_dim;
  Eigen::VectorXd lo = models.front().x0;
  Eigen::VectorXd hi = models.front().x0;
  for (const AgentModel& m : models) {
    if (m.state_dim != n) {
      throw Error(Errc::dimension_mismatch, "agents have differing state dims");
    }
    lo = lo.cwiseMin(m.x0);
    hi = hi.cwiseMax(m.x0);
  }
  Eigen::VectorXd center = 0.5 * (lo + hi);
  Eigen::VectorXd half = 0.5 * (hi - lo) * inflate;
  for (int c = 0; c < n; ++c) {
    if (half(c) < 1e-6) half(c) = 0.5;  // pad flat components
  }
  return Box{center - half, center + half};
}

Box replicate_box(const Box& per_agent, int agent_count) {
  const int n = static_cast<int>(per_agent.lo.size());
  Box out;
  out.lo.resize(n * agent_count);
  out.hi.resize(n * agent_count);
  for (int i = 0; i < agent_count; ++i) {
    out.lo.segment(i * n, n) = per_agent.lo;
    out.hi.segment(i * n, n) = per_agent.hi;
  }
  return out;
}

Eigen::VectorXd lift_drift(int agent, int agent_count, const Eigen::VectorXd& v) {
  check_agent_index(agent, agent_count);
  const int n = static_cast<int>(v.size());
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n * agent_count);
  out.segment((agent - 1) * n, n) = agent_count * v;
  return out;
}

Eigen::MatrixXd lift_input(int agent, int agent_count, const Eigen::MatrixXd& gi) {
  check_agent_index(agent, agent_count);
  const int n = static_cast<int>(gi.rows());
  const int m = static_cast<int>(gi.cols());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n * agent_count, m * agent_count);
  out.block((agent - 1) * n, (agent - 1) * m, n, m) = agent_count * gi;
  return out;
}

Eigen::VectorXd lift_initial(int agent, int agent_count, const Eigen::VectorXd& x0) {
  return lift_drift(agent, agent_count, x0);
}

GridField rollout(const std::vector<AgentModel>& models, const Controller& u,
                  const TimeGrid& grid) {
  const int N = static_cast<int>(models.size());
  const int n = models.front().state_dim;
  for (const AgentModel& m : models) {
    if (m.state_dim != n) {
      throw Error(Errc::dimension_mismatch, "agents have differing state dims");
    }
  }
  Eigen::VectorXd x(n * N);
  for (int i = 0; i < N; ++i) x.segment(i * n, n) = models[i].x0;

  auto deriv = [&](double t, const Eigen::VectorXd& state) {
    const Eigen::VectorXd ctrl = u(t, state);
    Eigen::VectorXd dx(n * N);
    int mofs = 0;
    for (int i = 0; i < N; ++i) {
      const auto xi = state.segment(i * n, n);
      const int mi = models[i].control_dim;
      dx.segment(i * n, n) =
          models[i].drift(xi) + models[i].input_map(xi) * ctrl.segment(mofs, mi);
      mofs += mi;
    }
    return dx;
  };

  GridField states;
  states.reserve(grid.node_count());
  states.push_back(x);
  const double dt = grid.dt();
  for (int step = 0; step < grid.node_count() - 1; ++step) {
    const double t = grid.node(step);
    const Eigen::VectorXd k1 = deriv(t, x);
    const Eigen::VectorXd k2 = deriv(t + 0.5 * dt, x + 0.5 * dt * k1);
    const Eigen::VectorXd k3 = deriv(t + 0.5 * dt, x + 0.5 * dt * k2);
    const Eigen::VectorXd k4 = deriv(t + dt, x + dt * k3);
    x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!x.allFinite()) {
      throw Error(Errc::non_finite_state,
                  "state not finite at t=" + std::to_string(grid.node(step + 1)));
    }
    states.push_back(x);
  }
  return states;
}

GridField cumulative_trapezoid(const GridField& integrand, const TimeGrid& grid) {
  if (static_cast<int>(integrand.size()) != grid.node_count()) {
    throw Error(Errc::dimension_mismatch, "field length differs from grid");
  }
  GridField out(integrand.size());
  out[0] = Eigen::VectorXd::Zero(integrand[0].size());
  const double dt = grid.dt();
  for (std::size_t k = 1; k < integrand.size(); ++k) {
    out[k] = out[k - 1] + 0.5 * dt * (integrand[k - 1] + integrand[k]);
  }
  return out;
}

double input_map_smoothness(const AgentModel& model, const Box& box, int samples,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = model.state_dim;
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd x(n);
    for (int c = 0; c < n; ++c) {
      x(c) = box.lo(c) + unit_uniform(rng) * (box.hi(c) - box.lo(c));
    }
    for (int c = 0; c < n; ++c) {
      const double h = 1e-6 * std::max(1.0, std::abs(x(c)));
      Eigen::VectorXd xp = x, xm = x;
      xp(c) += h;
      xm(c) -= h;
      const Eigen::MatrixXd d = (model.input_map(xp) - model.input_map(xm)) / (2 * h);
      if (!d.allFinite()) {
        throw Error(Errc::non_finite_state, "input map probe not finite");
      }
      worst = std::max(worst, d.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace dopt
