#pragma once

#include <Eigen/Core>

#include "dsrnet/sim.hpp"

namespace dsr {

/// Planar positions of n agents over time, advanced at unit speed along the
/// heading trajectory: per-step displacement magnitude is exactly delta_t.
struct FormationTrace {
  Eigen::MatrixXd xs;  // (steps+1) x n
  Eigen::MatrixXd ys;  // (steps+1) x n
  double delta_t = 0.0;
  Eigen::MatrixX2d initial;  // n x 2

  [[nodiscard]] int steps() const { return static_cast<int>(xs.rows()) - 1; }
  [[nodiscard]] int agents() const { return static_cast<int>(xs.cols()); }
};

/// Agent i at angle 2*pi*(i-1)/n on the circle of the given radius, centered
/// at the origin.
[[nodiscard]] Eigen::MatrixX2d init_circle(int n, double radius);

/// x_i(k+1) = x_i(k) + delta_t*cos(I_i(k)), y_i(k+1) = y_i(k) + delta_t*sin(I_i(k)).
[[nodiscard]] FormationTrace propagate(const Trajectory& headings,
                                       const Eigen::MatrixX2d& initial);

/// Root-mean-square residual of the positions at `at_step` against the
/// best-fit rigid motion (rotation + translation, no scaling) of the initial
/// formation. Invariant to global rigid motion of the trace.
[[nodiscard]] double distortion(const FormationTrace& trace, int at_step);

}  // namespace dsr
