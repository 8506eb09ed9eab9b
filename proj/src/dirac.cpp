#include "pointint/dirac.hpp"

#include <algorithm>
#include <cmath>

#include "pointint/errors.hpp"

namespace pointint::dirac {

namespace {

// e^{i phase} [[1, 0], [0, 1]] cos/cosh + off-diagonal (plus/root, -minus/root)
// sin/sinh, evaluated at argument root * t. Covers both open branches and the
// degenerate product == 0 case.
TransferMatrix rotation_like(double plus, double minus, double t, double phase) {
  const double product = plus * minus;
  const double root = std::sqrt(std::abs(product));
  double diag = 1.0;
  double upper = plus * t;
  double lower = -minus * t;
  if (product > 0.0) {
    diag = std::cos(root * t);
    const double s = std::sin(root * t) / root;
    upper = plus * s;
    lower = -minus * s;
  } else if (product < 0.0) {
    diag = std::cosh(root * t);
    const double s = std::sinh(root * t) / root;
    upper = plus * s;
    lower = -minus * s;
  }
  TransferMatrix g;
  g << diag, upper, lower, diag;
  return std::polar(1.0, phase) * g;
}

void require_scattering_energy(double energy, double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw InvalidParameter("mass must be positive");
  }
  if (!(energy > mass) || !std::isfinite(energy)) {
    throw InvalidParameter("energy must exceed the mass");
  }
}

}  // namespace

DiracMedium::DiracMedium(double mass, double energy, double scalar, double vector,
                         double vector_potential)
    : mass_(mass),
      energy_(energy),
      scalar_(scalar),
      vector_(vector),
      vector_potential_(vector_potential) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw InvalidParameter("mass must be positive");
  }
  if (!(energy * energy - mass * mass > 0.0) || !std::isfinite(energy)) {
    throw InvalidParameter("energy must satisfy E^2 > m^2");
  }
  if (!std::isfinite(scalar) || !std::isfinite(vector) || !std::isfinite(vector_potential)) {
    throw InvalidParameter("potentials must be finite");
  }
}

double DiracMedium::k_tilde() const { return std::sqrt(std::abs(k_plus() * k_minus())); }

TransferMatrix propagator(double x, const DiracMedium& med) {
  return rotation_like(med.k_plus(), med.k_minus(), x, med.vector_potential() * x);
}

ModePair free_mode_vectors(double energy, double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass) || !std::isfinite(energy)) {
    throw InvalidParameter("mass must be positive and energy finite");
  }
  if (!(energy - mass >= 1e-300)) {
    throw DegenerateModes("no propagating Dirac modes for E <= m");
  }
  const double k_plus = energy + mass;
  const double k_minus = energy - mass;
  const double k = std::sqrt(k_plus * k_minus);
  const double norm = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  ModePair modes;
  modes.u_plus << norm, norm * i * (k_minus / k);
  modes.u_minus << norm, -norm * i * (k_minus / k);
  modes.v_plus << norm, norm * i * (k_plus / k);
  modes.v_minus << norm, -norm * i * (k_plus / k);
  return modes;
}

TransferMatrix barrier_limit(const BarrierParams& b) {
  return rotation_like(b.p_plus(), b.p_minus(), 1.0, b.theta);
}

TransferMatrix finite_barrier_transfer(const BarrierParams& b, double a, double energy,
                                       double mass) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw InvalidParameter("half width a must be positive");
  }
  require_scattering_energy(energy, mass);
  const double width = 2.0 * a;
  const DiracMedium med(mass, energy, b.s / width, b.v / width, b.theta / width);
  return propagator(width, med);
}

double transmission(const ConnectionParams& p, double energy, double mass) {
  require_scattering_energy(energy, mass);
  const double ratio = (energy - mass) / (energy + mass);
  const double bracket = p.alpha() * p.alpha() + p.delta() * p.delta() + 2.0 +
                         p.beta() * p.beta() * ratio + p.gamma() * p.gamma() / ratio;
  return std::min(1.0, 4.0 / bracket);
}

BarrierClass classify(const BarrierParams& b) {
  const bool degenerate = b.s == b.v || b.s == -b.v;
  if (degenerate && b.theta != 0.0) {
    throw InvalidParameter("delta/epsilon identification requires theta = 0");
  }
  if (b.s == b.v) return {BarrierKind::kDelta, 2.0 * b.s};
  if (b.s == -b.v) return {BarrierKind::kEpsilon, 2.0 * b.s};
  if (b.s * b.s < b.v * b.v) return {BarrierKind::kTrig, 0.0};
  return {BarrierKind::kHyperbolic, 0.0};
}

}  // namespace pointint::dirac
