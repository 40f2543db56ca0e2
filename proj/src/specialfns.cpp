#include "symres/specialfns.hpp"

#include <array>
#include <cmath>

#include "symres/errors.hpp"

namespace symres {

namespace {

// Lanczos rational approximation, g = 7 with 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log sqrt(2 pi)

// Valid for Re z >= 0.5.
CScalar log_gamma_core(CScalar z) {
  const CScalar zm = z - 1.0;
  CScalar acc = kLanczos[0];
  for (int k = 1; k < 9; ++k) {
    acc += kLanczos[k] / (zm + static_cast<double>(k));
  }
  const CScalar t = zm + 7.5;
  return (zm + 0.5) * std::log(t) - t + kLogSqrt2Pi + std::log(acc);
}

// Valid for Im z >= 0.
CScalar log_gamma_upper(CScalar z) {
  if (z.real() >= 0.5) return log_gamma_core(z);
  // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
  return std::log(M_PI) - log_sin_pi(z) - log_gamma_core(1.0 - z);
}

}  // namespace

double gamma_pole_distance(CScalar z) {
  double n = std::round(z.real());
  if (n > 0.0) n = 0.0;
  return std::abs(z - CScalar(n, 0.0));
}

CScalar sin_pi(CScalar z) {
  const double n = std::round(z.real());
  const CScalar r = z - n;
  const CScalar s = std::sin(M_PI * r);
  const bool n_odd = std::fmod(std::fabs(n), 2.0) >= 0.5;
  return n_odd ? -s : s;
}

CScalar log_sin_pi(CScalar z) {
  if (std::abs(z.imag()) < 1.0) return std::log(sin_pi(z));
  const CScalar ipz = CScalar(0.0, M_PI) * z;
  if (z.imag() > 0.0) {
    // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2 i); the exponential
    // under the log is tiny, never huge.
    return -ipz + std::log((std::exp(2.0 * ipz) - 1.0) / CScalar(0.0, 2.0));
  }
  return ipz + std::log((1.0 - std::exp(-2.0 * ipz)) / CScalar(0.0, 2.0));
}

CScalar log_gamma(CScalar z) {
  if (gamma_pole_distance(z) < 1e-12) {
    raise(ErrorCode::AtPole, "log_gamma at a nonpositive integer");
  }
  if (z.imag() < 0.0) return std::conj(log_gamma_upper(std::conj(z)));
  return log_gamma_upper(z);
}

namespace {

// 1/Gamma(k + 3/2) for the Maclaurin region.
std::array<double, 48> make_inv_gamma_table() {
  std::array<double, 48> c{};
  c[0] = 2.0 / std::sqrt(M_PI);  // 1/Gamma(3/2)
  for (int k = 1; k < 48; ++k) c[k] = c[k - 1] / (k + 0.5);
  return c;
}

// Valid for Im z >= 0.
CScalar faddeeva_upper(CScalar z) {
  const double az = std::abs(z);
  if (az <= 2.0) {
    // w(z) = e^{-z^2} + i z sum_k (-z^2)^k / Gamma(k + 3/2).
    static const std::array<double, 48> inv_gamma = make_inv_gamma_table();
    const CScalar q = -z * z;
    CScalar power = 1.0;
    CScalar sum = 0.0;
    for (int k = 0; k < 48; ++k) {
      const CScalar term = power * inv_gamma[k];
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
      power *= q;
    }
    return std::exp(-z * z) + CScalar(0.0, 1.0) * z * sum;
  }
  if (az <= 10.5) {
    // Trapezoid sampling of the defining integral plus the residue-lattice
    // correction; the lattice is shifted to midpoints when z sits too close
    // to a plain node.
    const double y = z.imag();
    const double h = (y <= 5.8) ? 0.5 : 2.9 / y;
    const double ratio = z.real() / h;
    const bool midpoint = std::abs(ratio - std::round(ratio)) < 0.25;
    const double offset = midpoint ? 0.5 : 0.0;
    const int kmax = static_cast<int>(std::floor(7.2 / h)) + 1;
    CScalar s = 0.0;
    for (int k = -kmax; k <= kmax; ++k) {
      const double t = (k + offset) * h;
      if (std::abs(t) > 7.2) continue;
      s += std::exp(-t * t) / (z - t);
    }
    CScalar w = CScalar(0.0, h / M_PI) * s;
    const CScalar qq = std::exp(CScalar(0.0, -2.0 * M_PI / h) * z);
    w += midpoint ? 2.0 * std::exp(-z * z) / (1.0 + qq)
                  : 2.0 * std::exp(-z * z) / (1.0 - qq);
    return w;
  }
  // Laplace continued fraction.
  CScalar f = 0.0;
  for (int n = 16; n >= 1; --n) f = (0.5 * n) / (z - f);
  return CScalar(0.0, 1.0 / std::sqrt(M_PI)) / (z - f);
}

}  // namespace

CScalar faddeeva(CScalar z) {
  if (z.imag() < 0.0) return 2.0 * std::exp(-z * z) - faddeeva_upper(-z);
  return faddeeva_upper(z);
}

}  // namespace symres
