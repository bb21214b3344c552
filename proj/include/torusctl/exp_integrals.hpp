#pragma once

#include <complex>

namespace torusctl {

/// Closed form of int_0^t e^{z tau} dtau = (e^{zt} - 1)/z, with a second-order
/// Taylor branch below |z| = 1e-12 to avoid cancellation at the resonance z = 0.
inline std::complex<double> exp_integral(std::complex<double> z, double t) {
  if (std::abs(z) < 1e-12) {
    const std::complex<double> zt = z * t;
    return t * (1.0 + zt / 2.0 + zt * zt / 6.0);
  }
  return (std::exp(z * t) - 1.0) / z;
}

/// int_0^t e^{i mu tau} dtau.
inline std::complex<double> osc_integral(double mu, double t) {
  return exp_integral(std::complex<double>(0.0, mu), t);
}

}  // namespace torusctl
