#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "dopt/errors.hpp"

namespace dopt {

/// Control-affine agent dynamics  x_i' = drift(x_i) + input_map(x_i) u_i.
/// Values are immutable in practice: build once, share by const reference.
struct AgentModel {
  int state_dim = 0;
  int control_dim = 0;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> drift;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> input_map;
  Eigen::VectorXd x0;
};

/// Unicycle: state (r_x, r_y, theta), control (v, omega), zero drift.
AgentModel unicycle_model(const Eigen::Vector3d& x0);

/// Linear agent x' = A x + B u.
AgentModel linear_model(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                        const Eigen::VectorXd& x0);

/// Uniform time grid over [0, horizon] shared by the ODE and PDE solvers.
class TimeGrid {
 public:
  TimeGrid(double horizon, int node_count);
  double horizon() const { return horizon_; }
  int node_count() const { return node_count_; }
  double dt() const { return horizon_ / (node_count_ - 1); }
  double node(int n) const { return n * dt(); }

 private:
  double horizon_;
  int node_count_;
};

/// A vector-valued signal sampled on the time grid (one entry per node).
using GridField = std::vector<Eigen::VectorXd>;

/// Axis-aligned box, used for center sampling and smoothness probes.
struct Box {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;
};

/// Componentwise hull of the models' initial states, inflated about its
/// center by `inflate` (1.5 = +50%). Degenerate components get a unit pad.
Box default_state_box(const std::vector<AgentModel>& models, double inflate = 1.5);

/// Product of N copies of a per-agent box, for the augmented state space.
Box replicate_box(const Box& per_agent, int agent_count);

// Block lifting operators of the augmented system. Block `agent` (1-based)
// carries N times the per-agent quantity so that averaging the N lifts
// reconstructs the stacked object exactly.
Eigen::VectorXd lift_drift(int agent, int agent_count, const Eigen::VectorXd& v);
Eigen::MatrixXd lift_input(int agent, int agent_count, const Eigen::MatrixXd& gi);
Eigen::VectorXd lift_initial(int agent, int agent_count, const Eigen::VectorXd& x0);

using Controller =
    std::function<Eigen::VectorXd(double t, const Eigen::VectorXd& x)>;

/// Classical RK4 integration of all agents on the grid under a global
/// controller; returns the stacked states at every node. Throws
/// NonFiniteState if any component stops being finite.
GridField rollout(const std::vector<AgentModel>& models, const Controller& u,
                  const TimeGrid& grid);

/// Cumulative trapezoid of a grid field; entry 0 is zero.
GridField cumulative_trapezoid(const GridField& integrand, const TimeGrid& grid);

/// Max norm of a central finite-difference Jacobian of the input map over
/// `samples` points drawn from the box. A smoothness diagnostic; throws
/// NonFiniteState if any probe is non-finite.
double input_map_smoothness(const AgentModel& model, const Box& box,
                            int samples, std::uint64_t seed);

}  // namespace dopt
