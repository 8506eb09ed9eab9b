#pragma once

#include <complex>

#include <Eigen/Dense>

namespace pointint {

using Complex = std::complex<double>;

/// 2x2 complex matrix mapping two-component wave data (value, scaled
/// derivative) or a Dirac spinor from the left of a region to its right.
using TransferMatrix = Eigen::Matrix2cd;
using Spinor = Eigen::Vector2cd;

inline constexpr double kConstructionTol = 1e-12;
inline constexpr double kConservationTol = 1e-10;
inline constexpr double kDecomposeTol = 1e-8;

/// Wraps an angle into (-pi, pi].
double wrap_phase(double theta);

/// Point-interaction boundary condition V = e^{i theta} [[alpha, beta],
/// [gamma, delta]] with the real part in SL(2,R).
///
/// Instances can only be obtained through make(), which rejects parameter
/// sets whose determinant differs from one and normalizes theta.
class ConnectionParams {
 public:
  /// Throws InvalidParameter if |alpha*delta - beta*gamma - 1| exceeds
  /// tol * max(1, |alpha*delta|, |beta*gamma|) or any value is non-finite.
  static ConnectionParams make(double alpha, double beta, double gamma,
                               double delta, double theta = 0.0,
                               double tol = kConstructionTol);

  static ConnectionParams identity() { return make(1, 0, 0, 1, 0); }

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  double delta() const { return delta_; }
  double theta() const { return theta_; }

  double det() const { return alpha_ * delta_ - beta_ * gamma_; }

  /// Same connection matrix with the sign convention used by decompose():
  /// first nonzero entry of U (row-major) positive, theta shifted by pi
  /// when U is negated.
  ConnectionParams canonical() const;

  /// Same U with the phase replaced by theta (wrapped).
  ConnectionParams with_phase(double theta) const;

 private:
  ConnectionParams(double a, double b, double g, double d, double t)
      : alpha_(a), beta_(b), gamma_(g), delta_(d), theta_(t) {}

  double alpha_, beta_, gamma_, delta_, theta_;
};

/// Right movers u+, left movers u-, and their duals v+- with
/// v+-^dagger u+- = 1, v-+^dagger u+- = 0.
struct ModePair {
  Spinor u_plus;
  Spinor u_minus;
  Spinor v_plus;
  Spinor v_minus;

  bool is_biorthogonal(double tol = kConstructionTol) const;
};

struct ScatteringResult {
  Complex t_amp;
  Complex r_amp;
  double t_prob;
  double r_prob;
};

TransferMatrix as_matrix(const ConnectionParams& p);

/// Inverse of as_matrix. Picks the phase from the largest-modulus entry,
/// then applies the canonical sign rule. Throws NotConnectionForm when no
/// phase makes all entries real to within tol (relative to the largest
/// entry) or when the recovered determinant is off by more than tol.
ConnectionParams decompose(const TransferMatrix& m, double tol = kDecomposeTol);

/// max_ij |(M^dagger sigma2 M - sigma2)_ij| <= tol.
bool conserves_current(const TransferMatrix& m, double tol);
double current_violation(const TransferMatrix& m);

TransferMatrix delta_connection(double strength);
TransferMatrix epsilon_connection(double strength);

/// Complex-strength delta factor; only needed for the gauge jumps at the
/// edges of a vector-potential region.
TransferMatrix delta_connection(Complex strength);

/// Explicit 2x2 adjugate over determinant. Throws InvalidParameter on a
/// zero determinant.
TransferMatrix inverse(const TransferMatrix& m);

/// Amplitudes for a wave incident from the left:
///   T = 1 / (v+^dag M^-1 u+),  R = (v-^dag M^-1 u+) / (v+^dag M^-1 u+).
/// A vanishing projection on a current-conserving M is reported as perfect
/// reflection; otherwise SingularProjection is thrown.
ScatteringResult scatter(const TransferMatrix& m, const ModePair& modes);

/// Chebyshev (max componentwise modulus) distance.
double max_abs_diff(const TransferMatrix& a, const TransferMatrix& b);

}  // namespace pointint
