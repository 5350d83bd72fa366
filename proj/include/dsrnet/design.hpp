#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dsrnet/stability.hpp"

namespace dsr {

/// Gain grid vs spectral radius, with the minimizing gain. Ties break toward
/// the smaller gain.
struct SweepResult {
  std::vector<double> grid;   // strictly increasing
  std::vector<double> radii;
  double argmin = 0.0;
  double min_radius = 0.0;
};

/// A selected operating point: gamma = gamma_t * delta_t.
struct DesignPoint {
  double gamma = 0.0;
  double delta_t = 0.0;
  double gamma_t = 0.0;
  std::optional<double> beta;
  double predicted_settling = 0.0;  // seconds
};

/// lo, lo+step, ... up to hi (inclusive within a half-step tolerance).
[[nodiscard]] std::vector<double> uniform_grid(double lo, double hi, double step);

/// 2048 uniform points on (0, gamma_bar).
[[nodiscard]] std::vector<double> default_gamma_grid(const Spectrum& k_spectrum);

/// Step-1e-4 grid on (beta_lower + 1e-4, 1 - 1e-4).
[[nodiscard]] std::vector<double> default_beta_grid(const DsrGainRange& range);

/// Spectral radius of P = I - gamma*K at every grid point. The radii come
/// from the eigenvalue shift law lambda_P = 1 - gamma*lambda_K, so the
/// spectrum of K is decomposed once.
[[nodiscard]] SweepResult sweep_gamma(const PinnedSystem& sys,
                                      std::span<const double> grid);

/// Spectral radius of the DSR map at every grid point. Real-spectrum systems
/// use the per-mode quadratic roots; otherwise each point is a dense 2n x 2n
/// eigendecomposition.
[[nodiscard]] SweepResult sweep_beta(const PinnedSystem& sys, double gamma,
                                     std::span<const double> grid);

/// Critical-damping DSR gain for the mode lambda:
/// beta* = (1 + 2*gamma*lambda) - sqrt((1 + 2*gamma*lambda)^2 - 1), in (0,1).
[[nodiscard]] double beta_critical(double lambda, double gamma);

/// First-order settling estimate 4/(gamma_t*lambda) seconds for the slowest
/// mode lambda.
[[nodiscard]] double predict_settling_no_dsr(double lambda1, double gamma_t);

/// Critically-damped DSR settling estimate 6*sqrt(beta*delta_t/(gamma_t*lambda)).
[[nodiscard]] double predict_settling_dsr(double beta_star, double delta_t,
                                          double gamma_t, double lambda1);

struct Damping {
  double omega = 0.0;  // rad/s
  double zeta = 0.0;
};

/// Second-order-approximation natural frequency and damping of mode lambda:
/// omega = sqrt(gamma_t*lambda/(beta*delta_t)), 2*zeta*omega = (1-beta)/(beta*delta_t).
[[nodiscard]] Damping damping_of(double lambda, double gamma_t, double delta_t,
                                 double beta);

}  // namespace dsr
