#include "dsrnet/design.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsr {

namespace {

void require_grid(std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("sweep: empty gain grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::invalid_argument("sweep: grid must be strictly increasing");
}

SweepResult finish(std::vector<double> grid, std::vector<double> radii) {
  SweepResult result;
  result.grid = std::move(grid);
  result.radii = std::move(radii);
  std::size_t best = 0;
  for (std::size_t i = 1; i < result.radii.size(); ++i)
    if (result.radii[i] < result.radii[best]) best = i;  // ties: smaller gain
  result.argmin = result.grid[best];
  result.min_radius = result.radii[best];
  return result;
}

}  // namespace

std::vector<double> uniform_grid(double lo, double hi, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("uniform_grid: step must be > 0");
  if (!(hi >= lo)) throw std::invalid_argument("uniform_grid: hi must be >= lo");
  std::vector<double> grid;
  const double limit = hi + 0.5 * step;
  for (int k = 0;; ++k) {
    const double v = lo + k * step;
    if (v > limit) break;
    grid.push_back(v);
  }
  return grid;
}

std::vector<double> default_gamma_grid(const Spectrum& k_spectrum) {
  const double upper = gamma_bound_real(k_spectrum).upper;
  const double step = upper / 2049.0;
  return uniform_grid(step, upper - step, step);
}

std::vector<double> default_beta_grid(const DsrGainRange& range) {
  return uniform_grid(range.beta_lower + 1e-4, 1.0 - 1e-4, 1e-4);
}

SweepResult sweep_gamma(const PinnedSystem& sys, std::span<const double> grid) {
  require_grid(grid);
  const Spectrum spectrum = eigenvalues(sys.K);
  std::vector<double> radii;
  radii.reserve(grid.size());
  for (const double gamma : grid) {
    double radius = 0.0;
    for (const auto& lambda : spectrum.values)
      radius = std::max(radius, std::abs(1.0 - gamma * lambda));
    radii.push_back(radius);
  }
  return finish({grid.begin(), grid.end()}, std::move(radii));
}

SweepResult sweep_beta(const PinnedSystem& sys, double gamma,
                       std::span<const double> grid) {
  require_grid(grid);
  const Spectrum spectrum = eigenvalues(sys.K);
  std::vector<double> radii;
  radii.reserve(grid.size());
  if (spectrum.is_real) {
    const auto lambdas = spectrum.sorted_real();
    for (const double beta : grid) {
      double radius = 0.0;
      for (const double lambda : lambdas) {
        const auto [r1, r2] = dsr_quadratic_roots(lambda, gamma, beta);
        radius = std::max({radius, std::abs(r1), std::abs(r2)});
      }
      radii.push_back(radius);
    }
  } else {
    for (const double beta : grid)
      radii.push_back(spectral_radius(eigenvalues(dsr_perron(sys, gamma, beta))));
  }
  return finish({grid.begin(), grid.end()}, std::move(radii));
}

double beta_critical(double lambda, double gamma) {
  if (!(lambda > 0.0) || !(gamma > 0.0))
    throw std::invalid_argument("beta_critical: lambda and gamma must be > 0");
  const double a = 1.0 + 2.0 * gamma * lambda;
  return a - std::sqrt(a * a - 1.0);
}

double predict_settling_no_dsr(double lambda1, double gamma_t) {
  if (!(lambda1 > 0.0) || !(gamma_t > 0.0))
    throw std::invalid_argument("predict_settling_no_dsr: arguments must be > 0");
  return 4.0 / (gamma_t * lambda1);
}

double predict_settling_dsr(double beta_star, double delta_t, double gamma_t,
                            double lambda1) {
  if (!(beta_star > 0.0) || !(beta_star < 1.0))
    throw std::invalid_argument("predict_settling_dsr: beta_star must be in (0,1)");
  if (!(delta_t > 0.0) || !(gamma_t > 0.0) || !(lambda1 > 0.0))
    throw std::invalid_argument("predict_settling_dsr: arguments must be > 0");
  return 6.0 * std::sqrt(beta_star * delta_t / (gamma_t * lambda1));
}

Damping damping_of(double lambda, double gamma_t, double delta_t, double beta) {
  if (!(beta > 0.0) || !(beta < 1.0))
    throw std::invalid_argument("damping_of: beta must be in (0,1)");
  if (!(lambda > 0.0) || !(gamma_t > 0.0) || !(delta_t > 0.0))
    throw std::invalid_argument("damping_of: arguments must be > 0");
  Damping d;
  d.omega = std::sqrt(gamma_t * lambda / (beta * delta_t));
  d.zeta = (1.0 - beta) / (beta * delta_t) / (2.0 * d.omega);
  return d;
}

}  // namespace dsr
