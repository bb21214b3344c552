#pragma once

#include <Eigen/Dense>

#include "torusctl/bump.hpp"
#include "torusctl/spectral_field.hpp"

namespace torusctl {

/// Matrix element of G_n at complex exponentials: 1/(2pi) if j = k != 0,
/// zero whenever j != k or either index vanishes. n in {1, 2} selects the
/// variable and does not change the value.
double m_coefficient(int n, int j, int k);

/// G_1: scale by 1/(2pi) and remove the x-mean (zero every k1 = 0 mode).
SpectralField apply_g1(const SpectralField& u);
/// G_2: mirrored in the second variable.
SpectralField apply_g2(const SpectralField& u);

/// Two-strip control operator G(phi) = g2(y) G1(phi) + g1(x) G2(phi),
/// self-adjoint on L^2 and mean-annihilating. Holds the dense matrix of
/// (G psi_j, psi_k) over the lattice box, assembled from the closed form
///   entry(k, j) = g2_hat(k2-j2) m1(j1,k1) + g1_hat(k1-j1) m2(j2,k2).
class ControlOperator {
 public:
  /// Requires g1.k_max == g2.k_max >= 2 * radius (the matrix consumes
  /// g_hat up to index 2N).
  ControlOperator(BumpFunction g1, BumpFunction g2, int radius);

  int radius() const { return radius_; }
  const BumpFunction& g1() const { return g1_; }
  const BumpFunction& g2() const { return g2_; }

  /// Closed-form entry (G psi_j, psi_k); both modes must lie in the box.
  Complex matrix_entry(ModeIndex j, ModeIndex k) const;

  /// Dense matrix, row index k, column index j, lexicographic flat order.
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  /// G u through the matrix.
  SpectralField apply(const SpectralField& u) const;

  /// G u through physical space: synthesize on a grid of size
  /// 2 (k_max + N) + 1, multiply by the band-limited bump series, transform
  /// back, truncate to the box. Agrees with apply() up to rounding.
  SpectralField apply_grid(const SpectralField& u) const;

  /// Matrix conjugated into H^s coordinates w_k = (1+|k|)^s u_hat(k).
  Eigen::MatrixXcd weighted_matrix(double s) const;

  /// Operator norm on H^s (largest singular value of the weighted matrix).
  double operator_norm(double s) const;

 private:
  BumpFunction g1_;
  BumpFunction g2_;
  int radius_;
  Eigen::MatrixXcd matrix_;
};

/// Convenience builder: bumps on omega1 = (a1,b1), omega2 = (a2,b2) with the
/// synthesis cache k_max = kmax_margin * N + 4 and a quadrature grid of
/// max(4 k_max, bump_grid) points.
ControlOperator make_control_operator(double a1, double b1, double a2, double b2, int radius,
                                      int kmax_margin = 4, int bump_grid = 0);

}  // namespace torusctl
