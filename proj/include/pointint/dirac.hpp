#pragma once

#include "pointint/connection.hpp"

namespace pointint::dirac {

/// Homogeneous region for the one-dimensional Dirac equation with scalar
/// potential S, vector potential V (time component) and A (spatial).
class DiracMedium {
 public:
  /// Throws InvalidParameter unless mass > 0 and energy^2 > mass^2.
  DiracMedium(double mass, double energy, double scalar = 0.0, double vector = 0.0,
              double vector_potential = 0.0);

  double mass() const { return mass_; }
  double energy() const { return energy_; }
  double scalar() const { return scalar_; }
  double vector() const { return vector_; }
  double vector_potential() const { return vector_potential_; }

  /// m + E + S - V
  double k_plus() const { return mass_ + energy_ + scalar_ - vector_; }
  /// E - m - S - V
  double k_minus() const { return energy_ - mass_ - scalar_ - vector_; }
  /// sqrt(|k_plus * k_minus|)
  double k_tilde() const;

 private:
  double mass_, energy_, scalar_, vector_, vector_potential_;
};

/// Integrated strengths of a barrier of half width a in the zero-range limit:
/// s = 2aS, v = 2aV, theta = 2aA.
struct BarrierParams {
  double s = 0.0;
  double v = 0.0;
  double theta = 0.0;

  double p_plus() const { return s - v; }
  double p_minus() const { return -s - v; }
};

/// exp(H_D x). Trigonometric branch for k+ k- > 0, hyperbolic for k+ k- < 0,
/// and the linear limit e^{iAx} [[1, k+ x], [-k- x, 1]] when k+ k- == 0.
TransferMatrix propagator(double x, const DiracMedium& med);

/// Free modes u+- = (1, +-i k-/k)/sqrt2, v+- = (1, +-i k+/k)/sqrt2 with
/// k+- = E +- m. Throws DegenerateModes when E - m < 1e-300.
ModePair free_mode_vectors(double energy, double mass);

/// lim_{a->0} of the barrier transfer matrix at fixed (s, v, theta).
TransferMatrix barrier_limit(const BarrierParams& b);

/// propagator(2a) in the medium S = s/2a, V = v/2a, A = theta/2a.
/// Throws InvalidParameter unless a > 0 and energy > mass > 0.
TransferMatrix finite_barrier_transfer(const BarrierParams& b, double a, double energy,
                                       double mass);

/// 4 / (alpha^2 + delta^2 + 2 + beta^2 (E-m)/(E+m) + gamma^2 (E+m)/(E-m)).
/// Throws InvalidParameter unless energy > mass > 0.
double transmission(const ConnectionParams& p, double energy, double mass);

enum class BarrierKind { kDelta, kEpsilon, kTrig, kHyperbolic };

struct BarrierClass {
  BarrierKind kind;
  double strength = 0.0;  // meaningful for kDelta and kEpsilon only
};

/// s == v -> delta(2s), s == -v -> epsilon(2s) (exact comparisons),
/// otherwise trig (s^2 < v^2) or hyperbolic (s^2 > v^2).
/// The delta/epsilon identification holds only at theta == 0; a degenerate
/// barrier (s^2 == v^2) with theta != 0 throws InvalidParameter.
BarrierClass classify(const BarrierParams& b);

}  // namespace pointint::dirac
