#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "dsrnet/errors.hpp"

namespace dsr {

/// Eigenvalues of a real square matrix with magnitude/phase bookkeeping.
/// `values` keeps solver order; `ordered_by_magnitude` is the permutation
/// sorting them by ascending magnitude (ties by real part, then imaginary).
/// Complex values of real matrices come in exact conjugate pairs.
struct Spectrum {
  std::vector<std::complex<double>> values;
  std::vector<double> magnitudes;        // |values[i]|
  std::vector<double> phases;            // arg(values[i]) in (-pi, pi]
  std::vector<int> ordered_by_magnitude;
  bool is_real = false;                  // all |imag| within the default tol

  [[nodiscard]] int size() const { return static_cast<int>(values.size()); }
  /// rank-th eigenvalue in ascending magnitude order, rank in [0, n).
  [[nodiscard]] std::complex<double> by_rank(int rank) const;
  [[nodiscard]] double min_magnitude() const;
  [[nodiscard]] double max_magnitude() const;
  /// Real parts sorted ascending. Meaningful when is_real holds.
  [[nodiscard]] std::vector<double> sorted_real() const;
};

/// All eigenvalues of a dense real square matrix.
///
/// Symmetric inputs (max |a_ij - a_ji| < 1e-12) take a cyclic Jacobi path
/// that guarantees real output; everything else is balanced, reduced to
/// Hessenberg form by Householder reflections, and iterated with Francis
/// double-shift QR. Shift schedule is fixed, so results are reproducible
/// bit-for-bit on one platform. Throws NumericalError with the residual
/// subdiagonal if the iteration cap is exceeded.
[[nodiscard]] Spectrum eigenvalues(const Eigen::MatrixXd& matrix);

/// Largest eigenvalue magnitude.
[[nodiscard]] double spectral_radius(const Spectrum& spectrum);

/// True iff every |Im lambda_i| <= tol * max(1, |lambda_i|).
[[nodiscard]] bool is_real_spectrum(const Spectrum& spectrum, double tol = 1e-9);

}  // namespace dsr
