#include "dsrnet/formation.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace dsr {

Eigen::MatrixX2d init_circle(int n, double radius) {
  if (n < 1) throw std::invalid_argument("init_circle: need at least one agent");
  Eigen::MatrixX2d positions(n, 2);
  for (int i = 0; i < n; ++i) {
    const double angle = 2.0 * M_PI * i / n;
    positions(i, 0) = radius * std::cos(angle);
    positions(i, 1) = radius * std::sin(angle);
  }
  return positions;
}

FormationTrace propagate(const Trajectory& headings,
                         const Eigen::MatrixX2d& initial) {
  const int n = headings.agents();
  if (initial.rows() != n)
    throw std::invalid_argument("propagate: initial positions size mismatch");
  if (!headings.states.allFinite())
    throw std::invalid_argument("propagate: headings must be finite");

  const int steps = headings.steps();
  const double dt = headings.delta_t;
  FormationTrace trace;
  trace.delta_t = dt;
  trace.initial = initial;
  trace.xs.resize(steps + 1, n);
  trace.ys.resize(steps + 1, n);
  trace.xs.row(0) = initial.col(0).transpose();
  trace.ys.row(0) = initial.col(1).transpose();
  for (int k = 0; k < steps; ++k) {
    for (int i = 0; i < n; ++i) {
      const double heading = headings.states(k, i);
      trace.xs(k + 1, i) = trace.xs(k, i) + dt * std::cos(heading);
      trace.ys(k + 1, i) = trace.ys(k, i) + dt * std::sin(heading);
    }
  }
  return trace;
}

double distortion(const FormationTrace& trace, int at_step) {
  if (at_step < 0 || at_step > trace.steps())
    throw std::invalid_argument("distortion: step out of range");
  const int n = trace.agents();

  Eigen::MatrixX2d current(n, 2);
  current.col(0) = trace.xs.row(at_step).transpose();
  current.col(1) = trace.ys.row(at_step).transpose();

  // best-fit proper rigid motion of the initial formation onto the current one
  const Eigen::RowVector2d c0 = trace.initial.colwise().mean();
  const Eigen::RowVector2d c1 = current.colwise().mean();
  const Eigen::MatrixX2d a0 = trace.initial.rowwise() - c0;
  const Eigen::MatrixX2d a1 = current.rowwise() - c1;

  const Eigen::Matrix2d cross = a0.transpose() * a1;
  const Eigen::JacobiSVD<Eigen::Matrix2d> svd(
      cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix2d rotation = svd.matrixV() * svd.matrixU().transpose();
  if (rotation.determinant() < 0.0) {
    Eigen::Matrix2d flip = Eigen::Matrix2d::Identity();
    flip(1, 1) = -1.0;
    rotation = svd.matrixV() * flip * svd.matrixU().transpose();
  }

  const Eigen::MatrixX2d fitted = a0 * rotation.transpose();
  return std::sqrt((a1 - fitted).rowwise().squaredNorm().mean());
}

}  // namespace dsr
