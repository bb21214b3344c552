#include "torusctl/spectral_field.hpp"

#include <cmath>
#include <stdexcept>

namespace torusctl {

double ModeIndex::abs() const {
  return std::sqrt(static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2);
}

std::vector<ModeIndex> box_modes(int radius) {
  std::vector<ModeIndex> modes;
  modes.reserve((2 * radius + 1) * (2 * radius + 1));
  for (int k1 = -radius; k1 <= radius; ++k1)
    for (int k2 = -radius; k2 <= radius; ++k2) modes.push_back({k1, k2});
  return modes;
}

SpectralField::SpectralField(int radius, double sobolev_index)
    : radius_(radius), sobolev_index_(sobolev_index) {
  if (radius < 0) throw std::invalid_argument("SpectralField: radius must be >= 0");
  coeffs_ = Eigen::VectorXcd::Zero(box_size());
}

Complex SpectralField::at(ModeIndex k) const {
  if (!in_box(k)) throw std::out_of_range("SpectralField::at: mode outside lattice box");
  return coeffs_[flat(k)];
}

void SpectralField::set(ModeIndex k, Complex value) {
  if (!in_box(k)) throw std::out_of_range("SpectralField::set: mode outside lattice box");
  coeffs_[flat(k)] = value;
}

double SpectralField::hermitian_symmetry_error() const {
  const double scale = coeffs_.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (int k1 = -radius_; k1 <= radius_; ++k1)
    for (int k2 = -radius_; k2 <= radius_; ++k2) {
      const Complex a = coeffs_[flat({k1, k2})];
      const Complex b = coeffs_[flat({-k1, -k2})];
      worst = std::max(worst, std::abs(a - std::conj(b)));
    }
  return worst / scale;
}

bool SpectralField::is_real_valued(double tol) const { return hermitian_symmetry_error() <= tol; }

double sobolev_norm(const SpectralField& u, double s) {
  double sum = 0.0;
  const int n = u.box_size();
  for (int i = 0; i < n; ++i) {
    const double w = std::pow(1.0 + u.mode_at(i).abs(), 2.0 * s);
    sum += w * std::norm(u.data()[i]);
  }
  return kTwoPi * std::sqrt(sum);
}

Complex l2_inner(const SpectralField& u, const SpectralField& v) {
  if (u.radius() != v.radius())
    throw std::invalid_argument("l2_inner: fields have different lattice radii");
  // Eigen's dot conjugates its first argument, so v.dot(u) = sum u conj(v).
  return kTwoPi * kTwoPi * v.data().dot(u.data());
}

namespace {

// n_points x (2N+1) synthesis matrix E(i, a) = e^{i k x_i}, k = a - N.
Eigen::MatrixXcd synthesis_matrix(int n_points, int radius) {
  Eigen::MatrixXcd e(n_points, 2 * radius + 1);
  for (int i = 0; i < n_points; ++i) {
    const double x = kTwoPi * i / n_points;
    for (int a = 0; a <= 2 * radius; ++a) {
      const double phase = (a - radius) * x;
      e(i, a) = Complex(std::cos(phase), std::sin(phase));
    }
  }
  return e;
}

Eigen::MatrixXcd coeff_matrix(const SpectralField& u) {
  const int side = u.side();
  Eigen::MatrixXcd c(side, side);
  for (int a = 0; a < side; ++a)
    for (int b = 0; b < side; ++b) c(a, b) = u.data()[a * side + b];
  return c;
}

}  // namespace

GridSamples to_grid(const SpectralField& u, int n_x, int n_y) {
  if (n_x < 2 * u.radius() + 1 || n_y < 2 * u.radius() + 1)
    throw std::invalid_argument("to_grid: grid undersampled for this lattice radius");
  const Eigen::MatrixXcd ex = synthesis_matrix(n_x, u.radius());
  const Eigen::MatrixXcd ey = synthesis_matrix(n_y, u.radius());
  GridSamples g;
  g.n_x = n_x;
  g.n_y = n_y;
  g.values = ex * coeff_matrix(u) * ey.transpose();
  return g;
}

SpectralField from_grid(const GridSamples& g, int radius) {
  if (g.n_x < 2 * radius + 1 || g.n_y < 2 * radius + 1)
    throw std::invalid_argument("from_grid: grid undersampled for requested radius");
  const Eigen::MatrixXcd ex = synthesis_matrix(g.n_x, radius);
  const Eigen::MatrixXcd ey = synthesis_matrix(g.n_y, radius);
  const Eigen::MatrixXcd c =
      (ex.adjoint() * g.values * ey.conjugate()) / (static_cast<double>(g.n_x) * g.n_y);
  SpectralField u(radius);
  const int side = 2 * radius + 1;
  for (int a = 0; a < side; ++a)
    for (int b = 0; b < side; ++b) u.data()[a * side + b] = c(a, b);
  return u;
}

}  // namespace torusctl
