#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "torusctl/spectral_field.hpp"

namespace torusctl {

/// Eigenvalue parity pattern assumed by the synthesis branch.
///   H2: lambda even in k1, odd in k2 (pairs (+-k1, k2) share a 2x2 system).
///   H3: lambda odd in k1, even in k2 (pairs (k1, +-k2)).
enum class Symmetry { H2, H3, None };

std::string_view symmetry_name(Symmetry s);

/// Fourier multiplier symbol b(k) of the dispersive operator, together with
/// its growth metadata: |b(k)| <= growth_c * |k|^{order_r - 1} for |k| >= threshold_n0.
struct DispersionSymbol {
  std::string name;
  std::function<double(ModeIndex)> b;
  double order_r = 1.0;
  double growth_c = 1.0;
  double threshold_n0 = 0.0;
  Symmetry declared_symmetry = Symmetry::None;
};

/// Evolution eigenvalue lambda_k = k1 * b(k).
double eigenvalue(const DispersionSymbol& sym, ModeIndex k);

/// Built-in models, parsed from their CLI/config spelling:
///   "zk"             b(k) = k1^2 + k2^2          (r=3, H3)
///   "bo2d"           b(k) = k2 sgn(k1)           (r=2, H2)
///   "bozk"           b(k) = |k1| + k2^2          (r=3, H3)
///   "dgbozk:<alpha>" b(k) = |k1|^alpha + k2^2    (r=max(alpha+1,3), H3), alpha > 0
/// Throws std::invalid_argument for unknown names or alpha <= 0.
DispersionSymbol builtin_symbol(std::string_view spec);

/// Analytic gap value gamma' = 1 registered for the built-in models.
std::optional<double> builtin_analytic_gamma_prime(std::string_view model_name);

struct GrowthReport {
  bool holds = false;
  double worst_ratio = 0.0;
  ModeIndex worst_mode;
};

/// Evaluates |b(k)| / |k|^{r-1} over the radius-N box, excluding |k| < max(N0, 1).
GrowthReport symbol_growth_check(const DispersionSymbol& sym, int radius);

/// Dense table of lambda_k over a lattice box.
class EigenvalueTable {
 public:
  EigenvalueTable(const DispersionSymbol& sym, int radius);

  int radius() const { return radius_; }
  Symmetry symmetry() const { return symmetry_; }
  const std::string& symbol_name() const { return symbol_name_; }

  double lambda(ModeIndex k) const;
  const Eigen::VectorXd& data() const { return lambda_; }

 private:
  int radius_;
  Symmetry symmetry_;
  std::string symbol_name_;
  Eigen::VectorXd lambda_;  // lexicographic over the box
};

/// Free flow U(t): coefficient-wise multiplication by e^{i lambda_k t}.
/// Unitary in every H^s; U(-t) inverts U(t).
SpectralField propagate_free(const SpectralField& u0, const EigenvalueTable& table, double t);

}  // namespace torusctl
