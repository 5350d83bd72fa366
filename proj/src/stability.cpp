#include "dsrnet/stability.hpp"

#include <cmath>
#include <sstream>

namespace dsr {

namespace {

constexpr double kMarginalWidth = 1e-9;

}  // namespace

Eigen::MatrixXd perron(const PinnedSystem& sys, double gamma) {
  const int n = sys.size();
  return Eigen::MatrixXd::Identity(n, n) - gamma * sys.K;
}

Eigen::MatrixXd dsr_perron(const PinnedSystem& sys, double gamma, double beta) {
  const int n = sys.size();
  Eigen::MatrixXd phat = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  phat.topRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  phat.bottomLeftCorner(n, n) = -beta * Eigen::MatrixXd::Identity(n, n);
  phat.bottomRightCorner(n, n) =
      beta * Eigen::MatrixXd::Identity(n, n) + perron(sys, gamma);
  return phat;
}

GainBound gamma_bound_general(const Spectrum& spectrum) {
  GainBound bound;
  bound.kind = GainBound::Kind::GeneralComplex;
  bound.upper = std::numeric_limits<double>::infinity();
  for (int rank = 0; rank < spectrum.size(); ++rank) {
    const int i = spectrum.ordered_by_magnitude[rank];
    const double m = spectrum.magnitudes[i];
    const double re = spectrum.values[i].real();
    if (re <= 0.0) {
      std::ostringstream os;
      os << "Assumption 1 violated: eigenvalue " << spectrum.values[i]
         << " has nonpositive real part";
      throw NumericalError(os.str());
    }
    const double candidate = 2.0 * std::cos(spectrum.phases[i]) / m;
    if (candidate < bound.upper) {
      bound.upper = candidate;
      bound.binding_index = rank;
    }
  }
  return bound;
}

GainBound gamma_bound_real(const Spectrum& spectrum) {
  if (!spectrum.is_real)
    throw NumericalError(
        "gamma_bound_real: spectrum is not real; use gamma_bound_general");
  const auto ev = spectrum.sorted_real();
  if (ev.front() <= 0.0) {
    std::ostringstream os;
    os << "Assumption 1 violated: eigenvalue " << ev.front()
       << " is not positive";
    throw NumericalError(os.str());
  }
  GainBound bound;
  bound.kind = GainBound::Kind::RealSpectrum;
  bound.upper = 2.0 / ev.back();
  bound.binding_index = spectrum.size() - 1;
  return bound;
}

DsrGainRange dsr_beta_range_real(const Spectrum& spectrum, double gamma) {
  const GainBound base = gamma_bound_real(spectrum);
  if (!(gamma > 0.0) || !(gamma < base.upper)) {
    std::ostringstream os;
    os << "dsr_beta_range_real: gamma = " << gamma
       << " outside the base stability interval (0, " << base.upper << ")";
    throw NumericalError(os.str());
  }
  const double lambda_max = spectrum.sorted_real().back();
  return {.beta_lower = -(1.0 - 0.5 * gamma * lambda_max), .beta_upper = 1.0};
}

std::pair<std::complex<double>, std::complex<double>>
dsr_quadratic_roots(double lambda, double gamma, double beta) {
  // z^2 + b z + c with b = gamma*lambda - beta - 1, c = beta
  const double b = gamma * lambda - beta - 1.0;
  const double c = beta;
  const double disc = b * b - 4.0 * c;
  if (disc >= 0.0) {
    const double root = std::sqrt(disc);
    const double q = -0.5 * (b + std::copysign(root, b));
    if (q == 0.0) return {{0.0, 0.0}, {0.0, 0.0}};
    return {{q, 0.0}, {c / q, 0.0}};
  }
  const double re = -0.5 * b;
  const double im = 0.5 * std::sqrt(-disc);
  return {{re, im}, {re, -im}};
}

bool jury_necessary(double beta) { return std::abs(beta) < 1.0; }

StabilityReport assess(const PinnedSystem& sys, double gamma,
                       std::optional<double> beta) {
  StabilityReport report;
  report.gamma = gamma;
  report.beta = beta;
  const Eigen::MatrixXd map =
      beta ? dsr_perron(sys, gamma, *beta) : perron(sys, gamma);
  report.eigenvalues = eigenvalues(map);
  report.spectral_radius = spectral_radius(report.eigenvalues);
  report.stable = report.spectral_radius < 1.0;
  report.marginal = std::abs(report.spectral_radius - 1.0) <= kMarginalWidth;
  return report;
}

}  // namespace dsr
