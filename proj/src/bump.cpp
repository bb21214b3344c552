#include "torusctl/bump.hpp"

#include <cmath>
#include <stdexcept>

namespace torusctl {

Complex BumpFunction::fourier(int k) const {
  if (k < -k_max_ || k > k_max_)
    throw std::out_of_range("BumpFunction::fourier: coefficient outside cached range");
  return fourier_[static_cast<size_t>(k + k_max_)];
}

double BumpFunction::series_value(double x) const {
  // Real part of sum_k g_hat(k) e^{ikx}; pair +-k to stay real by construction.
  double value = fourier_[static_cast<size_t>(k_max_)].real();
  for (int k = 1; k <= k_max_; ++k) {
    const Complex c = fourier_[static_cast<size_t>(k + k_max_)];
    value += 2.0 * (c.real() * std::cos(k * x) - c.imag() * std::sin(k * x));
  }
  return value;
}

double BumpFunction::quadrature_integral() const {
  double sum = 0.0;
  for (const double v : profile_) sum += v;
  return sum * kTwoPi / static_cast<double>(profile_.size());
}

BumpFunction make_bump(double a, double b, int grid_size, int k_max) {
  if (!(0.0 < a && a < b && b < kTwoPi))
    throw std::invalid_argument("make_bump: need 0 < a < b < 2pi");
  if (k_max < 0) throw std::invalid_argument("make_bump: k_max must be >= 0");
  if (grid_size < std::max(4 * k_max, 8))
    throw std::invalid_argument("make_bump: grid_size must be >= 4 * k_max");

  BumpFunction g;
  g.a_ = a;
  g.b_ = b;
  g.k_max_ = k_max;
  g.profile_.assign(static_cast<size_t>(grid_size), 0.0);

  for (int i = 0; i < grid_size; ++i) {
    const double x = kTwoPi * i / grid_size;
    const double z = (2.0 * x - a - b) / (b - a);
    if (std::abs(z) < 1.0) g.profile_[static_cast<size_t>(i)] = std::exp(-1.0 / (1.0 - z * z));
  }

  // Normalize so the rectangle-rule integral equals 1 exactly; the quadrature
  // is spectrally accurate for this smooth periodic profile.
  double raw = 0.0;
  for (const double v : g.profile_) raw += v;
  raw *= kTwoPi / grid_size;
  if (raw <= 0.0) throw std::invalid_argument("make_bump: profile vanished (interval too thin for the grid)");
  for (double& v : g.profile_) v /= raw;

  g.fourier_.assign(static_cast<size_t>(2 * k_max + 1), Complex(0.0, 0.0));
  for (int k = -k_max; k <= k_max; ++k) {
    Complex sum(0.0, 0.0);
    for (int i = 0; i < grid_size; ++i) {
      const double phase = -k * (kTwoPi * i / grid_size);
      sum += g.profile_[static_cast<size_t>(i)] * Complex(std::cos(phase), std::sin(phase));
    }
    g.fourier_[static_cast<size_t>(k + k_max)] = sum / static_cast<double>(grid_size);
  }
  return g;
}

}  // namespace torusctl
