#include "dsrnet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace dsr {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr int kIterationCapFactor = 100;  // cap: 100*n sweeps
constexpr int kQrItersPerEigenvalue = 30;

[[nodiscard]] bool detect_symmetric(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(a(i, j) - a(j, i)) >= kSymmetryTol) return false;
  return true;
}

// Cyclic Jacobi; returns the eigenvalues of a symmetric matrix, ascending.
std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a, int max_sweeps) {
  const int n = static_cast<int>(a.rows());
  const double scale = std::max(1.0, a.norm());
  // rounding plateau of the off-diagonal norm grows with n
  const double tol = 20.0 * n * std::numeric_limits<double>::epsilon() * scale;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    off = std::sqrt(2.0 * off);
    if (off <= tol) {
      std::vector<double> ev(a.diagonal().data(), a.diagonal().data() + n);
      std::sort(ev.begin(), ev.end());
      return ev;
    }

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double h = a(q, q) - a(p, p);
        double t;
        if (std::abs(h) + 100.0 * std::abs(apq) == std::abs(h)) {
          t = apq / h;
        } else {
          const double theta = 0.5 * h / apq;
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = arp - s * (arq + tau * arp);
          a(r, q) = arq + s * (arp - tau * arq);
          a(p, r) = a(r, p);
          a(q, r) = a(r, q);
        }
      }
    }
  }
  throw NumericalError("Jacobi eigensolver did not converge within the sweep cap");
}

// Eigenvalue-preserving diagonal scaling by powers of two.
void balance_in_place(Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  const double radix = 2.0;
  const double sqrdx = radix * radix;
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < n; ++i) {
      double r = 0.0;
      double c = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

// Householder reduction to upper Hessenberg form.
void hessenberg_in_place(Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  for (int k = 0; k + 2 < n; ++k) {
    const int m = n - k - 1;  // length of the column tail below the diagonal
    const double scale = a.col(k).tail(m).cwiseAbs().maxCoeff();
    if (scale == 0.0) continue;
    Eigen::VectorXd v = a.col(k).tail(m) / scale;
    const double alpha = -std::copysign(v.norm(), v(0) >= 0.0 ? 1.0 : -1.0);
    v(0) -= alpha;
    const double vnorm = v.norm();
    if (vnorm == 0.0) continue;
    v /= vnorm;

    a.bottomRightCorner(m, n - k).noalias() -=
        2.0 * v * (v.transpose() * a.bottomRightCorner(m, n - k));
    a.rightCols(m).noalias() -= 2.0 * (a.rightCols(m) * v) * v.transpose();

    a.col(k).tail(m).setZero();
    a(k + 1, k) = alpha * scale;
  }
}

// Francis double-shift QR on an upper Hessenberg matrix, eigenvalues only.
std::vector<std::complex<double>> francis_qr(Eigen::MatrixXd a) {
  const int n = static_cast<int>(a.rows());
  const double eps = std::numeric_limits<double>::epsilon();
  const int total_cap = kIterationCapFactor * n;

  double anorm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));

  std::vector<std::complex<double>> out(n);
  int nn = n - 1;
  int total_its = 0;
  double t = 0.0;
  while (nn >= 0) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l >= 1; --l) {
        double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(a(l, l - 1)) <= eps * s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      double x = a(nn, nn);
      if (l == nn) {  // one real eigenvalue isolated
        out[nn--] = {x + t, 0.0};
      } else {
        double y = a(nn - 1, nn - 1);
        double w = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {  // a 2x2 block isolated
          double p = 0.5 * (y - x);
          const double q = p * p + w;
          double z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {  // real pair
            z = p + std::copysign(z, p);
            out[nn - 1] = out[nn] = {x + z, 0.0};
            if (z != 0.0) out[nn] = {x - w / z, 0.0};
          } else {  // conjugate pair
            out[nn] = {x + p, z};
            out[nn - 1] = {x + p, -z};
          }
          nn -= 2;
        } else {
          if (its == kQrItersPerEigenvalue || total_its >= total_cap) {
            std::ostringstream msg;
            msg << "QR iteration did not converge after " << total_its
                << " steps; residual subdiagonal |h(" << nn << "," << nn - 1
                << ")| = " << std::abs(a(nn, nn - 1));
            throw NumericalError(msg.str());
          }
          if (its == 10 || its == 20) {  // exceptional shift
            t += x;
            for (int i = 0; i <= nn; ++i) a(i, i) -= x;
            const double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          ++total_its;

          int m;
          double p = 0.0;
          double q = 0.0;
          double r = 0.0;
          for (m = nn - 2; m >= l; --m) {
            const double z = a(m, m);
            const double rr = x - z;
            const double ss = y - z;
            p = (rr * ss - w) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - rr - ss;
            r = a(m + 2, m + 1);
            const double sc = std::abs(p) + std::abs(q) + std::abs(r);
            if (sc != 0.0) {
              p /= sc;
              q /= sc;
              r /= sc;
            }
            if (m == l) break;
            const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v = std::abs(p) * (std::abs(a(m - 1, m - 1)) +
                                            std::abs(z) + std::abs(a(m + 1, m + 1)));
            if (u + v == v) break;  // two consecutive small subdiagonals
          }
          for (int i = m + 2; i <= nn; ++i) {
            a(i, i - 2) = 0.0;
            if (i != m + 2) a(i, i - 3) = 0.0;
          }
          for (int k = m; k <= nn - 1; ++k) {  // double QR step
            if (k != m) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = (k != nn - 1) ? a(k + 2, k - 1) : 0.0;
              x = std::abs(p) + std::abs(q) + std::abs(r);
              if (x != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            const double s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0.0) continue;
            if (k == m) {
              if (l != m) a(k, k - 1) = -a(k, k - 1);
            } else {
              a(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            y = q / s;
            const double z = r / s;
            q /= p;
            r /= p;
            for (int j = k; j <= nn; ++j) {  // row modification
              double pp = a(k, j) + q * a(k + 1, j);
              if (k != nn - 1) {
                pp += r * a(k + 2, j);
                a(k + 2, j) -= pp * z;
              }
              a(k + 1, j) -= pp * y;
              a(k, j) -= pp * x;
            }
            const int mmin = std::min(nn, k + 3);
            for (int i = l; i <= mmin; ++i) {  // column modification
              double pp = x * a(i, k) + y * a(i, k + 1);
              if (k != nn - 1) {
                pp += z * a(i, k + 2);
                a(i, k + 2) -= pp * r;
              }
              a(i, k + 1) -= pp * q;
              a(i, k) -= pp;
            }
          }
        }
      }
    } while (l < nn - 1);
  }
  return out;
}

// Detected conjugate pairs get exactly mirrored imaginary parts.
void normalize_conjugate_pairs(std::vector<std::complex<double>>& values) {
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const auto& a = values[i];
    const auto& b = values[i + 1];
    if (a.imag() == 0.0 || b.imag() == 0.0) continue;
    if (std::signbit(a.imag()) == std::signbit(b.imag())) continue;
    if (a.real() == b.real() && std::abs(a.imag() + b.imag()) <
                                    1e-12 * std::max(1.0, std::abs(a.imag()))) {
      const double im = 0.5 * (std::abs(a.imag()) + std::abs(b.imag()));
      values[i] = {a.real(), std::copysign(im, a.imag())};
      values[i + 1] = {b.real(), std::copysign(im, b.imag())};
      ++i;
    }
  }
}

[[nodiscard]] bool values_all_real(const std::vector<std::complex<double>>& v,
                                   double tol) {
  return std::all_of(v.begin(), v.end(), [tol](const std::complex<double>& z) {
    return std::abs(z.imag()) <= tol * std::max(1.0, std::abs(z));
  });
}

Spectrum assemble(std::vector<std::complex<double>> values) {
  Spectrum s;
  s.values = std::move(values);
  const int n = static_cast<int>(s.values.size());
  s.magnitudes.resize(n);
  s.phases.resize(n);
  for (int i = 0; i < n; ++i) {
    s.magnitudes[i] = std::abs(s.values[i]);
    double phi = std::atan2(s.values[i].imag(), s.values[i].real());
    if (phi == -M_PI) phi = M_PI;  // keep phases in (-pi, pi]
    s.phases[i] = phi;
  }
  s.ordered_by_magnitude.resize(n);
  std::iota(s.ordered_by_magnitude.begin(), s.ordered_by_magnitude.end(), 0);
  std::stable_sort(s.ordered_by_magnitude.begin(), s.ordered_by_magnitude.end(),
                   [&s](int i, int j) {
                     if (s.magnitudes[i] != s.magnitudes[j])
                       return s.magnitudes[i] < s.magnitudes[j];
                     if (s.values[i].real() != s.values[j].real())
                       return s.values[i].real() < s.values[j].real();
                     return s.values[i].imag() < s.values[j].imag();
                   });
  s.is_real = values_all_real(s.values, 1e-9);
  return s;
}

}  // namespace

std::complex<double> Spectrum::by_rank(int rank) const {
  return values[static_cast<std::size_t>(ordered_by_magnitude[rank])];
}

double Spectrum::min_magnitude() const {
  return magnitudes[static_cast<std::size_t>(ordered_by_magnitude.front())];
}

double Spectrum::max_magnitude() const {
  return magnitudes[static_cast<std::size_t>(ordered_by_magnitude.back())];
}

std::vector<double> Spectrum::sorted_real() const {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& z : values) out.push_back(z.real());
  std::sort(out.begin(), out.end());
  return out;
}

Spectrum eigenvalues(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() == 0 || matrix.rows() != matrix.cols())
    throw std::invalid_argument("eigenvalues: matrix must be square and nonempty");
  if (!matrix.allFinite())
    throw std::invalid_argument("eigenvalues: matrix entries must be finite");

  const int n = static_cast<int>(matrix.rows());
  if (n == 1) return assemble({{matrix(0, 0), 0.0}});

  if (detect_symmetric(matrix)) {
    const auto ev = jacobi_eigenvalues(matrix, kIterationCapFactor * n);
    std::vector<std::complex<double>> values(ev.size());
    std::transform(ev.begin(), ev.end(), values.begin(),
                   [](double v) { return std::complex<double>{v, 0.0}; });
    return assemble(std::move(values));
  }

  Eigen::MatrixXd work = matrix;
  balance_in_place(work);
  hessenberg_in_place(work);
  auto values = francis_qr(std::move(work));
  normalize_conjugate_pairs(values);
  return assemble(std::move(values));
}

double spectral_radius(const Spectrum& spectrum) {
  if (spectrum.values.empty())
    throw std::invalid_argument("spectral_radius: empty spectrum");
  return spectrum.max_magnitude();
}

bool is_real_spectrum(const Spectrum& spectrum, double tol) {
  return values_all_real(spectrum.values, tol);
}

}  // namespace dsr
