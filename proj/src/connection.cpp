#include "pointint/connection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pointint/errors.hpp"

namespace pointint {

namespace {

const TransferMatrix& sigma2() {
  static const TransferMatrix s = [] {
    TransferMatrix m;
    m << 0.0, Complex(0, -1), Complex(0, 1), 0.0;
    return m;
  }();
  return s;
}

// Row-major index of the first entry with |x| > tol, or -1.
int first_nonzero(const double (&u)[4], double tol) {
  for (int i = 0; i < 4; ++i) {
    if (std::abs(u[i]) > tol) return i;
  }
  return -1;
}

}  // namespace

double wrap_phase(double theta) {
  constexpr double pi = std::numbers::pi;
  double t = std::remainder(theta, 2.0 * pi);  // [-pi, pi]
  if (t <= -pi) t += 2.0 * pi;
  return t;
}

ConnectionParams ConnectionParams::make(double alpha, double beta, double gamma,
                                        double delta, double theta, double tol) {
  for (double x : {alpha, beta, gamma, delta, theta}) {
    if (!std::isfinite(x)) {
      throw InvalidParameter("connection parameters must be finite");
    }
  }
  const double ad = alpha * delta;
  const double bg = beta * gamma;
  const double scale = std::max({1.0, std::abs(ad), std::abs(bg)});
  if (std::abs(ad - bg - 1.0) > tol * scale) {
    throw InvalidParameter("alpha*delta - beta*gamma = " + std::to_string(ad - bg) +
                           ", expected 1");
  }
  return ConnectionParams(alpha, beta, gamma, delta, wrap_phase(theta));
}

ConnectionParams ConnectionParams::canonical() const {
  const double u[4] = {alpha_, beta_, gamma_, delta_};
  const double largest = std::max({std::abs(alpha_), std::abs(beta_),
                                   std::abs(gamma_), std::abs(delta_)});
  const int lead = first_nonzero(u, kDecomposeTol * largest);
  if (lead >= 0 && u[lead] < 0) {
    return ConnectionParams(-alpha_, -beta_, -gamma_, -delta_,
                            wrap_phase(theta_ + std::numbers::pi));
  }
  return *this;
}

ConnectionParams ConnectionParams::with_phase(double theta) const {
  return ConnectionParams(alpha_, beta_, gamma_, delta_, wrap_phase(theta));
}

bool ModePair::is_biorthogonal(double tol) const {
  const auto near = [tol](Complex z, double target) {
    return std::abs(z - target) <= tol;
  };
  return near(v_plus.dot(u_plus), 1.0) && near(v_minus.dot(u_minus), 1.0) &&
         near(v_minus.dot(u_plus), 0.0) && near(v_plus.dot(u_minus), 0.0);
}

TransferMatrix as_matrix(const ConnectionParams& p) {
  TransferMatrix u;
  u << p.alpha(), p.beta(), p.gamma(), p.delta();
  return std::polar(1.0, p.theta()) * u;
}

ConnectionParams decompose(const TransferMatrix& m, double tol) {
  Eigen::Index r = 0, c = 0;
  const double largest = m.cwiseAbs().maxCoeff(&r, &c);
  if (!(largest > 0.0) || !std::isfinite(largest)) {
    throw NotConnectionForm("zero or non-finite matrix has no connection form");
  }

  // Phase of the dominant entry, folded into (-pi/2, pi/2].
  double phase = std::arg(m(r, c));
  if (phase > std::numbers::pi / 2) phase -= std::numbers::pi;
  if (phase <= -std::numbers::pi / 2) phase += std::numbers::pi;

  const TransferMatrix rotated = std::polar(1.0, -phase) * m;
  if (rotated.imag().cwiseAbs().maxCoeff() > tol * std::max(1.0, largest)) {
    throw NotConnectionForm("no common phase makes all entries real");
  }
  const Eigen::Matrix2d u = rotated.real();
  const double det = u.determinant();
  if (std::abs(det - 1.0) > tol * std::max(1.0, largest * largest)) {
    throw NotConnectionForm("det U = " + std::to_string(det) + ", expected 1");
  }
  return ConnectionParams::make(u(0, 0), u(0, 1), u(1, 0), u(1, 1), phase, tol)
      .canonical();
}

double current_violation(const TransferMatrix& m) {
  return (m.adjoint() * sigma2() * m - sigma2()).cwiseAbs().maxCoeff();
}

bool conserves_current(const TransferMatrix& m, double tol) {
  return current_violation(m) <= tol;
}

TransferMatrix delta_connection(double strength) {
  return delta_connection(Complex(strength, 0.0));
}

TransferMatrix delta_connection(Complex strength) {
  TransferMatrix m;
  m << 1.0, 0.0, strength, 1.0;
  return m;
}

TransferMatrix epsilon_connection(double strength) {
  TransferMatrix m;
  m << 1.0, strength, 0.0, 1.0;
  return m;
}

TransferMatrix inverse(const TransferMatrix& m) {
  const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (det == Complex(0.0, 0.0)) {
    throw InvalidParameter("transfer matrix is singular");
  }
  TransferMatrix adj;
  adj << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return adj / det;
}

ScatteringResult scatter(const TransferMatrix& m, const ModePair& modes) {
  const Spinor back = inverse(m) * modes.u_plus;
  const Complex forward = modes.v_plus.dot(back);   // conjugates v+
  const Complex reflected = modes.v_minus.dot(back);

  if (std::abs(forward) < 1e-14) {
    if (!conserves_current(m, kDecomposeTol)) {
      throw SingularProjection("v+^dagger M^-1 u+ vanishes for a matrix that "
                               "does not conserve current");
    }
    const double mod = std::abs(reflected);
    const Complex r = mod > 0.0 ? reflected / mod : Complex(-1.0, 0.0);
    return {Complex(0.0, 0.0), r, 0.0, 1.0};
  }

  const Complex t = 1.0 / forward;
  const Complex r = reflected / forward;
  return {t, r, std::norm(t), std::norm(r)};
}

double max_abs_diff(const TransferMatrix& a, const TransferMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace pointint
