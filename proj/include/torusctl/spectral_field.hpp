#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace torusctl {

using Complex = std::complex<double>;

constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Integer Fourier mode k = (k1, k2) on the lattice Z^2.
struct ModeIndex {
  int k1 = 0;
  int k2 = 0;

  friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
  friend auto operator<=>(const ModeIndex&, const ModeIndex&) = default;

  ModeIndex operator-() const { return {-k1, -k2}; }

  /// Euclidean norm |k| = sqrt(k1^2 + k2^2).
  double abs() const;
};

/// All modes of the square box {|k1| <= N, |k2| <= N} in lexicographic order.
std::vector<ModeIndex> box_modes(int radius);

/// Truncated Fourier representation of a 2pi-periodic distribution on T^2.
///
/// Stores the coefficients u_hat(k) of e^{i k.x} densely over the square
/// lattice box of the given radius, in lexicographic order (k1 outer, k2
/// inner). Values are immutable by convention once a field leaves its
/// constructing routine; all free functions below are pure.
class SpectralField {
 public:
  explicit SpectralField(int radius, double sobolev_index = 0.0);

  int radius() const { return radius_; }
  int side() const { return 2 * radius_ + 1; }
  int box_size() const { return side() * side(); }

  double sobolev_index() const { return sobolev_index_; }
  void set_sobolev_index(double s) { sobolev_index_ = s; }

  bool in_box(ModeIndex k) const {
    return k.k1 >= -radius_ && k.k1 <= radius_ && k.k2 >= -radius_ && k.k2 <= radius_;
  }

  /// Flat storage position of mode k; k must lie in the box.
  int flat(ModeIndex k) const { return (k.k1 + radius_) * side() + (k.k2 + radius_); }
  ModeIndex mode_at(int flat_index) const {
    return {flat_index / side() - radius_, flat_index % side() - radius_};
  }

  Complex at(ModeIndex k) const;
  void set(ModeIndex k, Complex value);

  const Eigen::VectorXcd& data() const { return coeffs_; }
  Eigen::VectorXcd& data() { return coeffs_; }

  /// Largest violation of u_hat(-k) = conj(u_hat(k)), relative to the
  /// largest coefficient magnitude. Zero field reports 0.
  double hermitian_symmetry_error() const;

  /// True when the field represents a real-valued function to the given
  /// relative tolerance.
  bool is_real_valued(double tol = 1e-12) const;

 private:
  int radius_;
  double sobolev_index_;
  Eigen::VectorXcd coeffs_;
};

/// Samples of a function on the uniform grid (2pi i/n_x, 2pi j/n_y).
struct GridSamples {
  int n_x = 0;
  int n_y = 0;
  Eigen::MatrixXcd values;  // values(i, j) = u(x_i, y_j)
};

/// H^s norm: sqrt( (2pi)^2 sum_k (1+|k|)^{2s} |u_hat(k)|^2 ).
double sobolev_norm(const SpectralField& u, double s);

/// L^2 inner product via Parseval: (2pi)^2 sum_k u_hat(k) conj(v_hat(k)).
/// Throws std::invalid_argument on radius mismatch.
Complex l2_inner(const SpectralField& u, const SpectralField& v);

/// Synthesize point values on a uniform grid. Requires n_x, n_y >= 2N+1 so
/// the inverse transform is exact for band-limited data.
GridSamples to_grid(const SpectralField& u, int n_x, int n_y);

/// Recover coefficients up to the given radius by uniform-grid quadrature
/// (exact for band-limited trigonometric polynomials on a large enough grid).
SpectralField from_grid(const GridSamples& g, int radius);

}  // namespace torusctl
