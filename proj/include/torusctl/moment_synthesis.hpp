#pragma once

#include <Eigen/Dense>
#include <vector>

#include "torusctl/control_operator.hpp"
#include "torusctl/errors.hpp"
#include "torusctl/spectral_analysis.hpp"
#include "torusctl/symbols.hpp"

namespace torusctl {

/// Gram matrix of the exponentials e^{-i lambda_m t} in L^2([0,T]):
/// entry (m,n) = int_0^T e^{i(lambda_n - lambda_m) t} dt, closed form.
/// Throws std::invalid_argument on duplicate eigenvalues or T <= 0.
Eigen::MatrixXcd gram_matrix(const std::vector<double>& lambdas, double T);

/// Biorthogonal family {q_m} dual to the exponentials e^{-i lambda_m t} on
/// [0,T]: q_m(t) = sum_n C(m,n) e^{-i lambda_n t} with C = gram^{-1}.
/// Every lattice mode is routed to the q of its eigenvalue class.
class DualBasis {
 public:
  double horizon() const { return horizon_; }
  const std::vector<double>& lambdas() const { return lambdas_; }
  int size() const { return static_cast<int>(lambdas_.size()); }

  const Eigen::MatrixXcd& gram() const { return gram_; }
  const Eigen::MatrixXcd& dual_coeffs() const { return dual_coeffs_; }

  double condition_number() const { return condition_number_; }
  double biorthogonality_residual() const { return biorth_residual_; }

  /// Index of lambda among the basis eigenvalues (tolerance of
  /// lambda_equal); -1 when absent.
  int index_of(double lambda) const;

  /// q_m(t).
  Complex evaluate(int m, double t) const;

  /// int_0^T |q_m(t)|^2 dt = real((gram^{-1})(m,m)), closed form.
  double dual_l2_sq(int m) const;

  friend DualBasis dual_basis(const std::vector<double>& lambdas, double T, double cond_limit);

 private:
  double horizon_ = 0.0;
  std::vector<double> lambdas_;  // sorted ascending, pairwise distinct
  Eigen::MatrixXcd gram_;
  Eigen::MatrixXcd dual_coeffs_;
  double condition_number_ = 0.0;
  double biorth_residual_ = 0.0;
};

/// Builds the dual basis by Hermitian factorization of the Gram matrix.
/// Throws ConditioningError when cond(gram) exceeds cond_limit (the Ingham
/// regime T > 2pi/gamma' is what keeps this well conditioned).
DualBasis dual_basis(const std::vector<double>& lambdas, double T, double cond_limit = 1e12);

/// Same, over all distinct eigenvalues of a multiplicity report.
DualBasis dual_basis(const MultiplicityReport& report, double T, double cond_limit = 1e12);

/// Synthesized control h(x,y,t) = sum_j h_j conj(q_j(t)) psi_j(x,y):
/// per-mode coefficients attached to the dual functions of their eigenvalue
/// classes. Exactly integrable in time (finite combination of exponentials).
class ControlSignal {
 public:
  ControlSignal(SpectralField coefficients, const EigenvalueTable& table, DualBasis basis);

  int radius() const { return coefficients_.radius(); }
  const SpectralField& coefficients() const { return coefficients_; }
  const DualBasis& basis() const { return basis_; }
  double sobolev_index() const { return coefficients_.sobolev_index(); }

  /// Dual-basis index of mode j's eigenvalue class.
  int class_index(int flat_mode) const { return class_of_mode_[static_cast<size_t>(flat_mode)]; }

  /// The spectral field h(.,.,t).
  SpectralField evaluate(double t) const;

 private:
  SpectralField coefficients_;
  DualBasis basis_;
  std::vector<int> class_of_mode_;
};

/// Moment-method coefficients h_j for steering 0 -> u1 in time T.
/// Axis modes use h = (2pi)^3 u1_hat e^{-i lambda T}; interior modes pair up
/// under the declared symmetry and solve the paper's 2x2 systems with
/// M = [[1/pi, g_hat(2k)], [g_hat(-2k), 1/pi]] (g1 under H2, g2 under H3).
/// Requires u1_hat(0,0) = 0 and a verified H2/H3 symmetry.
SpectralField control_coefficients(const SpectralField& u1, const EigenvalueTable& table,
                                   Symmetry symmetry, const ControlOperator& op, double T);

/// Wraps coefficients and basis into an evaluable signal; throws when some
/// lattice eigenvalue is missing from the basis.
ControlSignal assemble_control(const SpectralField& coefficients, const EigenvalueTable& table,
                               DualBasis basis);

/// One-call pipeline: classes -> dual basis -> coefficients -> signal.
ControlSignal synthesize_control(const SpectralField& u1, const EigenvalueTable& table,
                                 Symmetry symmetry, const ControlOperator& op, double T,
                                 double cond_limit = 1e12);

/// Spectral amplitudes of the forcing G h over the basis exponentials:
/// (G h)(t)_hat(k) = sum_n B(k,n) e^{+i lambda_n t}. Rows follow op's box
/// (which may be larger than the signal's for spillover studies).
Eigen::MatrixXcd forcing_amplitudes(const ControlSignal& h, const ControlOperator& op);

/// Residuals of the moment equations: for every lattice mode k,
///   int_0^T (G h(t), e^{-i lambda_k (T-t)} psi_k)_{L^2} dt - 2pi u1_hat(k),
/// evaluated with closed-form exponential integrals.
SpectralField verify_moment_equations(const ControlSignal& h, const EigenvalueTable& table,
                                      const ControlOperator& op, double T,
                                      const SpectralField& u1);

/// Time snapshots of a forced solution.
struct Trajectory {
  std::vector<double> times;
  std::vector<SpectralField> states;
  std::vector<double> norms;  // H^s at the trajectory's sobolev index
  double sobolev_index = 0.0;
};

/// Exact mild solution of u' = i lambda u + (G h) per mode: free flow plus
/// closed-form Duhamel integrals of the basis exponentials (resonances
/// handled by the series branch of exp_integral). No time-stepping error.
/// Pass h = nullptr for free flow. op/table may use a radius >= h's radius.
Trajectory duhamel_solve(const SpectralField& u0, const ControlSignal* h,
                         const ControlOperator& op, const EigenvalueTable& table,
                         const std::vector<double>& times);

/// Steering target after absorbing the initial state: u1 - U(T) u0.
/// Requires matching mean modes; the result has zero mean.
SpectralField reduce_target(const SpectralField& u0, const SpectralField& u1,
                            const EigenvalueTable& table, double T);

/// ||h||_{L^2([0,T]; H^s)} via the modewise closed form
/// sum_j (1+|j|)^{2s} |h_j|^2 int_0^T |q_j|^2 dt.
double control_l2hs_norm(const ControlSignal& h, double s);

/// Measured ratio ||h|| / (||u0||_{H^s} + ||u1||_{H^s}); the paper's nu is
/// an uncomputed upper bound for this. Throws on zero denominator.
double control_norm_ratio(const ControlSignal& h, const SpectralField& u0,
                          const SpectralField& u1, double s);

}  // namespace torusctl
