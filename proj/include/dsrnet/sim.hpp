#pragma once

#include <Eigen/Core>
#include <vector>

#include "dsrnet/graph.hpp"

namespace dsr {

/// Step change of the source state: 0 before `active_from_step`, `magnitude`
/// at and after it.
struct StepInput {
  double magnitude = 0.0;
  int active_from_step = 1;

  [[nodiscard]] double at(int step) const {
    return step >= active_from_step ? magnitude : 0.0;
  }
};

enum class DynamicsKind { FirstOrder, Dsr, SecondOrder, ContinuousApprox };

/// Time-indexed state history. Row k of `states` is I(k) (row 0 the initial
/// state), t_k = k*delta_t. `source` holds I_s(k). States stay finite unless
/// the run is flagged divergent, in which case the history stops at the last
/// finite row.
struct Trajectory {
  double delta_t = 0.0;
  Eigen::MatrixXd states;   // (steps+1) x n
  Eigen::VectorXd source;   // steps+1
  DynamicsKind kind = DynamicsKind::FirstOrder;
  bool divergent = false;

  [[nodiscard]] int steps() const { return static_cast<int>(states.rows()) - 1; }
  [[nodiscard]] int agents() const { return static_cast<int>(states.cols()); }
  [[nodiscard]] double time_at(int step) const { return step * delta_t; }
};

/// Network-wide settling measurement. When converged,
/// settling_time = max over agents of per_agent_last_exit.
struct SettlingReport {
  double settling_time = 0.0;  // seconds; meaningful only when converged
  double band_fraction = 0.02;
  std::vector<double> per_agent_last_exit;  // seconds
  bool converged = false;
};

/// I(k+1) = I(k) - gamma*K*I(k) + gamma*B*I_s(k). Aborts with the divergent
/// flag when any |state| exceeds 1e12. delta_t only labels the time axis.
[[nodiscard]] Trajectory simulate_first_order(const PinnedSystem& sys,
                                              double gamma, StepInput input,
                                              int steps,
                                              const Eigen::VectorXd& initial,
                                              double delta_t = 1.0);

/// First-order recursion plus the delayed self-reinforcement term
/// beta*[I(k) - I(k-1)], with I(-1) := I(0). Bitwise-identical to
/// simulate_first_order when beta = 0.
[[nodiscard]] Trajectory simulate_dsr(const PinnedSystem& sys, double gamma,
                                      double beta, StepInput input, int steps,
                                      const Eigen::VectorXd& initial,
                                      double delta_t = 1.0);

/// Second-order discrete dynamics over stacked [I; Idot] with update time
/// tilde_delta_t; the mass/damping scaling comes from the DSR continuous
/// approximation (gamma_t, beta, delta_t). Initial state is zero.
[[nodiscard]] Trajectory simulate_second_order(const PinnedSystem& sys,
                                               double gamma_t, double beta,
                                               double delta_t,
                                               double tilde_delta_t,
                                               StepInput input, int steps);

/// Classical fixed-step 4th-order integration of
/// Idot = -gamma_t*K*I + gamma_t*B*I_s(t), I(0) = 0, I_s(t) = magnitude for
/// t > 0, sampled on the h grid.
[[nodiscard]] Trajectory simulate_continuous(const PinnedSystem& sys,
                                             double gamma_t, StepInput input,
                                             double t_end, double h);

/// Smallest sampled time from which every agent stays within
/// +-band_fraction*|final_value - initial| of final_value. The band is
/// relative to the largest initial offset; a zero-amplitude step settles at
/// t = 0. Trajectories whose trailing 10% of samples leave the band (or that
/// diverged) come back with converged = false.
[[nodiscard]] SettlingReport settling_time(const Trajectory& traj,
                                           double final_value,
                                           double band_fraction = 0.02);

}  // namespace dsr
