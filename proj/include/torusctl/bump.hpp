#pragma once

#include <complex>
#include <vector>

#include "torusctl/spectral_field.hpp"

namespace torusctl {

/// Smooth non-negative profile supported in an interval of the circle,
/// normalized to unit integral, with its Fourier coefficients cached up to
/// |k| <= k_max. The profile samples hold the exact bump (hard zeros outside
/// the support); the Fourier data is what the control operator consumes.
class BumpFunction {
 public:
  double support_a() const { return a_; }
  double support_b() const { return b_; }
  int grid_size() const { return static_cast<int>(profile_.size()); }
  int k_max() const { return k_max_; }

  const std::vector<double>& profile() const { return profile_; }

  /// g_hat(k) for |k| <= k_max; throws std::out_of_range beyond the cache.
  Complex fourier(int k) const;

  /// Value of the degree-k_max Fourier series at x. This band-limited
  /// surrogate is what physical-space multiplication uses, so the grid and
  /// matrix paths of the control operator share identical data.
  double series_value(double x) const;

  /// Rectangle-rule integral over the profile grid (1 by construction).
  double quadrature_integral() const;

  friend BumpFunction make_bump(double a, double b, int grid_size, int k_max);

 private:
  double a_ = 0.0;
  double b_ = 0.0;
  int k_max_ = 0;
  std::vector<double> profile_;          // samples at x_i = 2pi i / grid_size
  std::vector<Complex> fourier_;         // g_hat(-k_max .. k_max)
};

/// Builds the canonical mollifier exp(-1/(1-z^2)), z = (2x-a-b)/(b-a),
/// normalized so the grid quadrature integral is exactly 1 (hence
/// g_hat(0) = 1/(2pi) and |g_hat(k)| <= 1/(2pi) up to rounding).
/// Requires 0 < a < b < 2pi and grid_size >= 4 * k_max.
BumpFunction make_bump(double a, double b, int grid_size, int k_max);

}  // namespace torusctl
