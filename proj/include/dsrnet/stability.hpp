#pragma once

#include <Eigen/Core>
#include <complex>
#include <optional>
#include <utility>

#include "dsrnet/graph.hpp"
#include "dsrnet/spectral.hpp"

namespace dsr {

/// Open interval (lower, upper) of stabilizing update gains.
struct GainBound {
  double lower = 0.0;
  double upper = 0.0;
  enum class Kind { GeneralComplex, RealSpectrum } kind = Kind::GeneralComplex;
  /// Rank (ascending magnitude) of the eigenvalue attaining the bound;
  /// ties break toward the smallest rank.
  int binding_index = 0;
};

/// Open interval of stabilizing DSR gains for real-spectrum pinned Laplacians:
/// -(1 - gamma*lambda_max/2) < beta < 1.
struct DsrGainRange {
  double beta_lower = 0.0;
  double beta_upper = 1.0;
};

struct StabilityReport {
  double gamma = 0.0;
  std::optional<double> beta;
  double spectral_radius = 0.0;
  bool stable = false;    // strict: radius < 1
  bool marginal = false;  // |radius - 1| <= 1e-9
  Spectrum eigenvalues;
};

/// One-step update map P = I - gamma*K.
[[nodiscard]] Eigen::MatrixXd perron(const PinnedSystem& sys, double gamma);

/// 2n x 2n one-step map of the DSR recursion over stacked [I(k-1); I(k)]:
/// [[0, I], [-beta*I, beta*I + P]].
[[nodiscard]] Eigen::MatrixXd dsr_perron(const PinnedSystem& sys, double gamma,
                                         double beta);

/// Stability bound for general (possibly complex) spectra:
/// upper = min_i 2*cos(phi_i)/m_i. Throws NumericalError if any eigenvalue
/// has a nonpositive real part (source connectivity violated).
[[nodiscard]] GainBound gamma_bound_general(const Spectrum& spectrum);

/// Stability bound for real positive spectra: upper = 2/lambda_max.
/// Throws NumericalError for non-real spectra (use the general bound).
[[nodiscard]] GainBound gamma_bound_real(const Spectrum& spectrum);

/// Stable DSR gain interval for a real-spectrum pinned Laplacian. Requires
/// 0 < gamma < 2/lambda_max (the derivation assumes a stable base update);
/// throws NumericalError otherwise.
[[nodiscard]] DsrGainRange dsr_beta_range_real(const Spectrum& spectrum,
                                               double gamma);

/// Roots of z^2 + (gamma*lambda - beta - 1) z + beta, the per-mode factor of
/// the DSR characteristic polynomial for a real eigenvalue lambda.
[[nodiscard]] std::pair<std::complex<double>, std::complex<double>>
dsr_quadratic_roots(double lambda, double gamma, double beta);

/// Jury-test necessary condition on the constant coefficient: false iff
/// |beta| >= 1 (stability is then impossible; sufficiency is decided by the
/// spectral radius).
[[nodiscard]] bool jury_necessary(double beta);

/// Builds P (or the DSR map when beta is given), computes its spectrum and
/// verdict. Stability is strict radius < 1; near-unit radii are flagged
/// marginal.
[[nodiscard]] StabilityReport assess(const PinnedSystem& sys, double gamma,
                                     std::optional<double> beta = {});

}  // namespace dsr
