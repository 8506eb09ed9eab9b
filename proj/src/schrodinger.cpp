#include "pointint/schrodinger.hpp"

#include <algorithm>
#include <cmath>

#include "pointint/errors.hpp"

namespace pointint::schrodinger {

namespace {

void require_spacing(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw InvalidParameter("half spacing a must be positive");
  }
}

void require_matching_gauge(const DeltaTriple& cfg, const NonRelMedium& med) {
  require_spacing(cfg.half_spacing);
  if (cfg.vector_potential != med.vector_potential()) {
    throw InvalidParameter(
        "medium vector potential must equal the delta triple's vector potential");
  }
}

}  // namespace

NonRelMedium::NonRelMedium(double mass, double wave_number, double vector_potential)
    : mass_(mass), wave_number_(wave_number), vector_potential_(vector_potential) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw InvalidParameter("mass must be positive");
  }
  if (!(wave_number > 0.0) || !std::isfinite(wave_number)) {
    throw InvalidParameter("wave number must be positive");
  }
  if (!std::isfinite(vector_potential)) {
    throw InvalidParameter("vector potential must be finite");
  }
}

TransferMatrix propagator(double x, const NonRelMedium& med) {
  const double m = med.mass();
  const double k = med.wave_number();
  const double A = med.vector_potential();
  const double c = std::cos(k * x);
  const double s = std::sin(k * x) / k;

  TransferMatrix g;
  g << Complex(c, -A * s), 2.0 * m * s,
       (A * A - k * k) / (2.0 * m) * s, Complex(c, A * s);
  return std::polar(1.0, A * x) * g;
}

ModePair mode_vectors(const NonRelMedium& med) {
  if (med.vector_potential() != 0.0) {
    throw ModesRequireFreeSpace("mode vectors are defined only for A = 0");
  }
  const double ratio = med.wave_number() / (2.0 * med.mass());
  const double norm = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  ModePair modes;
  modes.u_plus << norm, norm * i * ratio;
  modes.u_minus << norm, -norm * i * ratio;
  modes.v_plus << norm, norm * i / ratio;
  modes.v_minus << norm, -norm * i / ratio;
  return modes;
}

TransferMatrix three_delta_transfer(const DeltaTriple& cfg, const NonRelMedium& med) {
  require_matching_gauge(cfg, med);
  const Complex gauge(0.0, cfg.vector_potential / (2.0 * med.mass()));
  const TransferMatrix g = propagator(cfg.half_spacing, med);
  return delta_connection(cfg.v_plus - gauge) * g * delta_connection(cfg.v_zero) * g *
         delta_connection(cfg.v_minus + gauge);
}

Eigen::Matrix2d closed_form_real_part(const DeltaTriple& cfg, const NonRelMedium& med) {
  require_matching_gauge(cfg, med);
  const double m = med.mass();
  const double k = med.wave_number();
  const double a = cfg.half_spacing;
  const double vp = cfg.v_plus;
  const double v0 = cfg.v_zero;
  const double vm = cfg.v_minus;

  const double cos2 = std::cos(2.0 * k * a);
  const double sin2 = std::sin(2.0 * k * a);
  const double cos1 = std::cos(k * a);
  const double sin1 = std::sin(k * a);
  const double msk = m * sin2 / k;

  const double u12 = 2.0 * m * sin2 / k + 4.0 * m * m * sin1 * sin1 / (k * k) * v0;
  const double u11 = cos2 + msk * v0 + u12 * vm;
  const double u22 = cos2 + msk * v0 + u12 * vp;
  const double u21 = cos1 * cos1 * (vp + v0 + vm) - sin1 * sin1 * (vp + vm) +
                     msk * (-k * k / (2.0 * m * m) + v0 * (vp + vm)) + u12 * vp * vm;

  Eigen::Matrix2d u;
  u << u11, u12, u21, u22;
  return u;
}

TransferMatrix closed_form_transfer(const DeltaTriple& cfg, const NonRelMedium& med) {
  const TransferMatrix u = closed_form_real_part(cfg, med).cast<Complex>();
  return std::polar(1.0, 2.0 * cfg.vector_potential * cfg.half_spacing) * u;
}

DeltaTriple renormalized_strengths(const ConnectionParams& target, double a, double mass) {
  require_spacing(a);
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw InvalidParameter("mass must be positive");
  }
  const double alpha = target.alpha();
  const double beta = target.beta();
  const double gamma = target.gamma();
  const double delta = target.delta();

  DeltaTriple cfg;
  cfg.half_spacing = a;
  cfg.vector_potential = target.theta() / (2.0 * a);

  if (beta != 0.0) {
    const double edge = -1.0 / (2.0 * mass * a);
    cfg.v_plus = edge + (delta + 1.0) / beta;
    cfg.v_zero = beta / (4.0 * mass * mass * a * a);
    cfg.v_minus = edge + (alpha + 1.0) / beta;
  } else {
    const double trace = alpha + delta + 2.0;
    if (trace == 0.0) {
      throw SingularRenormalization(
          "beta = 0 with alpha + delta = -2: the three-delta strengths are undefined");
    }
    cfg.v_plus = (delta - 1.0) / (4.0 * mass * a);
    cfg.v_zero = 4.0 * gamma / trace;
    cfg.v_minus = (alpha - 1.0) / (4.0 * mass * a);
  }
  return cfg;
}

double transmission(const ConnectionParams& p, const NonRelMedium& med) {
  const double ratio = med.wave_number() / (2.0 * med.mass());
  const double bracket = p.alpha() * p.alpha() + p.delta() * p.delta() + 2.0 +
                         p.beta() * p.beta() * ratio * ratio +
                         p.gamma() * p.gamma() / (ratio * ratio);
  return std::min(1.0, 4.0 / bracket);
}

}  // namespace pointint::schrodinger
