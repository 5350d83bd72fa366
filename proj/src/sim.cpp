#include "dsrnet/sim.hpp"

#include <cmath>
#include <stdexcept>

namespace dsr {

namespace {

constexpr double kDivergenceLimit = 1e12;

[[nodiscard]] bool blown_up(const Eigen::VectorXd& state) {
  return !state.allFinite() || state.cwiseAbs().maxCoeff() > kDivergenceLimit;
}

// Shared first-order/DSR stepping; beta = 0 follows the identical arithmetic
// path, which keeps the reduction bitwise-exact.
Trajectory run_recursion(const PinnedSystem& sys, double gamma, double beta,
                         StepInput input, int steps,
                         const Eigen::VectorXd& initial, DynamicsKind kind) {
  const int n = sys.size();
  if (steps < 0) throw std::invalid_argument("simulate: steps must be >= 0");
  if (initial.size() != n)
    throw std::invalid_argument("simulate: initial state size mismatch");

  Trajectory traj;
  traj.kind = kind;
  traj.states.resize(steps + 1, n);
  traj.source.resize(steps + 1);
  traj.states.row(0) = initial.transpose();
  traj.source(0) = input.at(0);

  Eigen::VectorXd current = initial;
  Eigen::VectorXd previous = initial;  // I(-1) := I(0)
  int rows = 1;
  for (int k = 0; k < steps; ++k) {
    const double source = input.at(k);
    Eigen::VectorXd next =
        current - gamma * (sys.K * current) + (gamma * source) * sys.B;
    if (beta != 0.0) next += beta * (current - previous);
    if (blown_up(next)) {
      traj.divergent = true;
      if (next.allFinite()) {
        traj.states.row(rows) = next.transpose();
        traj.source(rows) = input.at(k + 1);
        ++rows;
      }
      break;
    }
    traj.states.row(rows) = next.transpose();
    traj.source(rows) = input.at(k + 1);
    ++rows;
    previous = std::move(current);
    current = std::move(next);
  }
  traj.states.conservativeResize(rows, n);
  traj.source.conservativeResize(rows);
  return traj;
}

}  // namespace

Trajectory simulate_first_order(const PinnedSystem& sys, double gamma,
                                StepInput input, int steps,
                                const Eigen::VectorXd& initial, double delta_t) {
  Trajectory traj = run_recursion(sys, gamma, 0.0, input, steps, initial,
                                  DynamicsKind::FirstOrder);
  traj.delta_t = delta_t;
  return traj;
}

Trajectory simulate_dsr(const PinnedSystem& sys, double gamma, double beta,
                        StepInput input, int steps,
                        const Eigen::VectorXd& initial, double delta_t) {
  Trajectory traj =
      run_recursion(sys, gamma, beta, input, steps, initial, DynamicsKind::Dsr);
  traj.delta_t = delta_t;
  return traj;
}

Trajectory simulate_second_order(const PinnedSystem& sys, double gamma_t,
                                 double beta, double delta_t,
                                 double tilde_delta_t, StepInput input,
                                 int steps) {
  const int n = sys.size();
  if (steps < 0) throw std::invalid_argument("simulate: steps must be >= 0");
  if (!(beta > 0.0))
    throw std::invalid_argument("simulate_second_order: beta must be > 0");

  const double stiffness = gamma_t * tilde_delta_t / (beta * delta_t);
  const double damping = 1.0 - (1.0 - beta) * tilde_delta_t / (beta * delta_t);
  Eigen::MatrixXd map = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  map.topLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  map.topRightCorner(n, n) = tilde_delta_t * Eigen::MatrixXd::Identity(n, n);
  map.bottomLeftCorner(n, n) = -stiffness * sys.K;
  map.bottomRightCorner(n, n) = damping * Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd forcing = Eigen::VectorXd::Zero(2 * n);
  forcing.tail(n) = (gamma_t / (beta * delta_t)) * sys.B;

  Trajectory traj;
  traj.kind = DynamicsKind::SecondOrder;
  traj.delta_t = tilde_delta_t;
  traj.states.resize(steps + 1, n);
  traj.source.resize(steps + 1);
  traj.states.row(0).setZero();
  traj.source(0) = input.at(0);

  Eigen::VectorXd z = Eigen::VectorXd::Zero(2 * n);
  int rows = 1;
  for (int k = 0; k < steps; ++k) {
    z = map * z + (tilde_delta_t * input.at(k)) * forcing;
    if (blown_up(z)) {
      traj.divergent = true;
      if (z.allFinite()) {
        traj.states.row(rows) = z.head(n).transpose();
        traj.source(rows) = input.at(k + 1);
        ++rows;
      }
      break;
    }
    traj.states.row(rows) = z.head(n).transpose();
    traj.source(rows) = input.at(k + 1);
    ++rows;
  }
  traj.states.conservativeResize(rows, n);
  traj.source.conservativeResize(rows);
  return traj;
}

Trajectory simulate_continuous(const PinnedSystem& sys, double gamma_t,
                               StepInput input, double t_end, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("simulate_continuous: h must be > 0");
  if (!(t_end >= 0.0))
    throw std::invalid_argument("simulate_continuous: t_end must be >= 0");
  const int n = sys.size();
  const int steps = static_cast<int>(std::llround(t_end / h));

  const auto source_at = [&input](double t) {
    return t > 0.0 ? input.magnitude : 0.0;
  };
  const auto rate = [&](double t, const Eigen::VectorXd& state) {
    return (-gamma_t * (sys.K * state) + (gamma_t * source_at(t)) * sys.B)
        .eval();
  };

  Trajectory traj;
  traj.kind = DynamicsKind::ContinuousApprox;
  traj.delta_t = h;
  traj.states.resize(steps + 1, n);
  traj.source.resize(steps + 1);
  traj.states.row(0).setZero();
  traj.source(0) = source_at(0.0);

  Eigen::VectorXd state = Eigen::VectorXd::Zero(n);
  for (int k = 0; k < steps; ++k) {
    const double t = k * h;
    const Eigen::VectorXd k1 = rate(t, state);
    const Eigen::VectorXd k2 = rate(t + 0.5 * h, state + (0.5 * h) * k1);
    const Eigen::VectorXd k3 = rate(t + 0.5 * h, state + (0.5 * h) * k2);
    const Eigen::VectorXd k4 = rate(t + h, state + h * k3);
    state += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    traj.states.row(k + 1) = state.transpose();
    traj.source(k + 1) = source_at((k + 1) * h);
  }
  return traj;
}

SettlingReport settling_time(const Trajectory& traj, double final_value,
                             double band_fraction) {
  if (!(band_fraction > 0.0))
    throw std::invalid_argument("settling_time: band_fraction must be > 0");

  SettlingReport report;
  report.band_fraction = band_fraction;
  const int rows = static_cast<int>(traj.states.rows());
  const int n = traj.agents();

  const double amplitude =
      (traj.states.row(0).array() - final_value).abs().maxCoeff();
  if (amplitude == 0.0 &&
      (traj.states.array() - final_value).abs().maxCoeff() == 0.0) {
    report.converged = true;
    report.settling_time = 0.0;
    report.per_agent_last_exit.assign(n, 0.0);
    return report;
  }
  const double band = band_fraction * amplitude;

  report.per_agent_last_exit.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    int last_out = -1;
    for (int k = 0; k < rows; ++k)
      if (std::abs(traj.states(k, i) - final_value) > band) last_out = k;
    report.per_agent_last_exit[static_cast<std::size_t>(i)] =
        last_out < 0 ? 0.0 : traj.time_at(last_out + 1);
  }

  // converged: the trailing 10% of samples stay inside the band
  const int tail_start = rows - std::max(1, rows / 10);
  bool tail_ok = !traj.divergent;
  for (int k = tail_start; k < rows && tail_ok; ++k)
    for (int i = 0; i < n; ++i)
      if (std::abs(traj.states(k, i) - final_value) > band) {
        tail_ok = false;
        break;
      }
  report.converged = tail_ok;
  if (tail_ok) {
    double ts = 0.0;
    for (const double v : report.per_agent_last_exit) ts = std::max(ts, v);
    report.settling_time = ts;
  } else {
    report.settling_time = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

}  // namespace dsr
