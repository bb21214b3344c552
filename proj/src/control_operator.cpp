#include "torusctl/control_operator.hpp"

#include <cmath>
#include <stdexcept>

namespace torusctl {

double m_coefficient(int n, int j, int k) {
  if (n != 1 && n != 2) throw std::invalid_argument("m_coefficient: n must be 1 or 2");
  return (j == k && j != 0) ? 1.0 / kTwoPi : 0.0;
}

SpectralField apply_g1(const SpectralField& u) {
  SpectralField out(u.radius(), u.sobolev_index());
  for (const ModeIndex k : box_modes(u.radius()))
    out.set(k, k.k1 == 0 ? Complex(0.0, 0.0) : u.at(k) / kTwoPi);
  return out;
}

SpectralField apply_g2(const SpectralField& u) {
  SpectralField out(u.radius(), u.sobolev_index());
  for (const ModeIndex k : box_modes(u.radius()))
    out.set(k, k.k2 == 0 ? Complex(0.0, 0.0) : u.at(k) / kTwoPi);
  return out;
}

ControlOperator::ControlOperator(BumpFunction g1, BumpFunction g2, int radius)
    : g1_(std::move(g1)), g2_(std::move(g2)), radius_(radius) {
  if (radius < 1) throw std::invalid_argument("ControlOperator: radius must be >= 1");
  if (g1_.k_max() < 2 * radius || g2_.k_max() < 2 * radius)
    throw std::invalid_argument("ControlOperator: bump Fourier cache must reach 2 * radius");

  const auto modes = box_modes(radius);
  const int n = static_cast<int>(modes.size());
  matrix_.resize(n, n);
  for (int col = 0; col < n; ++col) {
    const ModeIndex j = modes[static_cast<size_t>(col)];
    for (int row = 0; row < n; ++row) {
      const ModeIndex k = modes[static_cast<size_t>(row)];
      Complex entry(0.0, 0.0);
      if (j.k1 == k.k1 && k.k1 != 0) entry += g2_.fourier(k.k2 - j.k2) / kTwoPi;
      if (j.k2 == k.k2 && k.k2 != 0) entry += g1_.fourier(k.k1 - j.k1) / kTwoPi;
      matrix_(row, col) = entry;
    }
  }
}

Complex ControlOperator::matrix_entry(ModeIndex j, ModeIndex k) const {
  return g2_.fourier(k.k2 - j.k2) * m_coefficient(1, j.k1, k.k1) +
         g1_.fourier(k.k1 - j.k1) * m_coefficient(2, j.k2, k.k2);
}

SpectralField ControlOperator::apply(const SpectralField& u) const {
  if (u.radius() != radius_)
    throw std::invalid_argument("ControlOperator::apply: radius mismatch");
  SpectralField out(radius_, u.sobolev_index());
  out.data() = matrix_ * u.data();
  return out;
}

SpectralField ControlOperator::apply_grid(const SpectralField& u) const {
  if (u.radius() != radius_)
    throw std::invalid_argument("ControlOperator::apply_grid: radius mismatch");
  const int n_grid = 2 * (std::max(g1_.k_max(), g2_.k_max()) + radius_) + 1;

  // term 1: g2(y) * G1(u)
  GridSamples grid = to_grid(apply_g1(u), n_grid, n_grid);
  for (int jdx = 0; jdx < n_grid; ++jdx) {
    const double y = kTwoPi * jdx / n_grid;
    grid.values.col(jdx) *= g2_.series_value(y);
  }
  SpectralField out = from_grid(grid, radius_);

  // term 2: g1(x) * G2(u)
  grid = to_grid(apply_g2(u), n_grid, n_grid);
  for (int idx = 0; idx < n_grid; ++idx) {
    const double x = kTwoPi * idx / n_grid;
    grid.values.row(idx) *= g1_.series_value(x);
  }
  out.data() += from_grid(grid, radius_).data();
  out.set_sobolev_index(u.sobolev_index());
  return out;
}

Eigen::MatrixXcd ControlOperator::weighted_matrix(double s) const {
  const auto modes = box_modes(radius_);
  const int n = static_cast<int>(modes.size());
  Eigen::VectorXd w(n);
  for (int i = 0; i < n; ++i) w[i] = std::pow(1.0 + modes[static_cast<size_t>(i)].abs(), s);
  return w.asDiagonal() * matrix_ * w.cwiseInverse().asDiagonal();
}

double ControlOperator::operator_norm(double s) const {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(weighted_matrix(s));
  return svd.singularValues()[0];
}

ControlOperator make_control_operator(double a1, double b1, double a2, double b2, int radius,
                                      int kmax_margin, int bump_grid) {
  if (kmax_margin < 2)
    throw std::invalid_argument("make_control_operator: kmax_margin must be >= 2");
  const int k_max = kmax_margin * radius + 4;
  const int grid = std::max(4 * k_max, bump_grid);
  return ControlOperator(make_bump(a1, b1, grid, k_max), make_bump(a2, b2, grid, k_max), radius);
}

}  // namespace torusctl
