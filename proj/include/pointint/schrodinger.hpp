#pragma once

#include "pointint/connection.hpp"

namespace pointint::schrodinger {

/// Homogeneous region for the Schrodinger equation with minimal coupling.
/// Wave data are (phi, phi' / 2m).
class NonRelMedium {
 public:
  /// Throws InvalidParameter unless mass > 0 and wave_number > 0.
  NonRelMedium(double mass, double wave_number, double vector_potential = 0.0);

  double mass() const { return mass_; }
  double wave_number() const { return wave_number_; }
  double vector_potential() const { return vector_potential_; }

  /// E = k^2 / 2m.
  double energy() const { return wave_number_ * wave_number_ / (2.0 * mass_); }

 private:
  double mass_;
  double wave_number_;
  double vector_potential_;
};

/// Three delta functions at -a, 0, +a with a vector potential A between the
/// outer two.
struct DeltaTriple {
  double v_plus = 0.0;   // at x = +a
  double v_zero = 0.0;   // at x = 0
  double v_minus = 0.0;  // at x = -a
  double half_spacing = 0.0;
  double vector_potential = 0.0;
};

/// exp(H x) for the constant-A Hamiltonian:
///   e^{iAx} [cos(kx) I + sin(kx)/k [[-iA, 2m], [(A^2 - k^2)/2m, iA]]].
/// At A = 0 this is the free propagator (real, unimodular). With A != 0 the
/// result does not conserve Psi^dag sigma2 Psi on its own; the gauge jumps in
/// three_delta_transfer restore it.
TransferMatrix propagator(double x, const NonRelMedium& med);

/// u+- = (1, +-ik/2m)/sqrt2, v+- = (1, +-i2m/k)/sqrt2.
/// Throws ModesRequireFreeSpace when med.vector_potential() != 0.
ModePair mode_vectors(const NonRelMedium& med);

/// Raw five-factor product
///   V_delta(v+ - iA/2m) G(a) V_delta(v0) G(a) V_delta(v- + iA/2m).
/// Throws InvalidParameter if a <= 0 or med.vector_potential() != cfg's A.
TransferMatrix three_delta_transfer(const DeltaTriple& cfg, const NonRelMedium& med);

/// Same matrix from the entry-wise closed form e^{2iAa} U_S.
TransferMatrix closed_form_transfer(const DeltaTriple& cfg, const NonRelMedium& med);

/// Real part U_S of closed_form_transfer (the factor multiplying e^{2iAa}).
Eigen::Matrix2d closed_form_real_part(const DeltaTriple& cfg, const NonRelMedium& med);

/// Strengths that make the three-delta model approach `target` as a -> 0.
/// Uses the beta != 0 scheme unless beta is exactly zero; A = theta / 2a.
/// Throws SingularRenormalization for beta == 0 with alpha + delta == -2,
/// InvalidParameter for a <= 0 or mass <= 0.
DeltaTriple renormalized_strengths(const ConnectionParams& target, double a, double mass);

/// Closed-form |T|^2 = 4 / (alpha^2 + delta^2 + 2 + beta^2 k^2/4m^2 + gamma^2 4m^2/k^2).
double transmission(const ConnectionParams& p, const NonRelMedium& med);

}  // namespace pointint::schrodinger
