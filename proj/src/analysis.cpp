#include "pointint/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "pointint/errors.hpp"
#include "pointint/schrodinger.hpp"

namespace pointint::analysis {

namespace {

std::vector<double> sorted_positive(std::span<const double> xs, bool descending,
                                    const char* what) {
  std::vector<double> out(xs.begin(), xs.end());
  for (double x : out) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw InvalidParameter(std::string(what) + " values must be positive");
    }
  }
  if (descending) {
    std::sort(out.begin(), out.end(), std::greater<>());
  } else {
    std::sort(out.begin(), out.end());
  }
  return out;
}

}  // namespace

std::vector<SweepRow> nonrel_convergence(const ConnectionParams& target, double mass,
                                         double wave_number, std::span<const double> a_list) {
  const TransferMatrix exact = as_matrix(target);
  std::vector<SweepRow> rows;
  for (double a : sorted_positive(a_list, true, "spacing")) {
    const schrodinger::DeltaTriple cfg = schrodinger::renormalized_strengths(target, a, mass);
    const schrodinger::NonRelMedium med(mass, wave_number, cfg.vector_potential);
    rows.push_back({a, max_abs_diff(schrodinger::three_delta_transfer(cfg, med), exact), "err"});
  }
  return rows;
}

std::vector<SweepRow> dirac_convergence(const dirac::BarrierParams& b, double energy,
                                        double mass, std::span<const double> a_list) {
  const TransferMatrix limit = dirac::barrier_limit(b);
  std::vector<SweepRow> rows;
  for (double a : sorted_positive(a_list, true, "half width")) {
    const TransferMatrix finite = dirac::finite_barrier_transfer(b, a, energy, mass);
    rows.push_back({a, max_abs_diff(finite, limit), "err"});
  }
  return rows;
}

std::vector<SweepRow> correspondence_table(const ConnectionParams& p, double mass,
                                           std::span<const double> kinetic_list) {
  std::vector<SweepRow> rows;
  for (double eps : sorted_positive(kinetic_list, false, "kinetic energy")) {
    const double t_s =
        schrodinger::transmission(p, schrodinger::NonRelMedium(mass, std::sqrt(2.0 * mass * eps)));
    const double t_d = dirac::transmission(p, mass + eps, mass);
    rows.push_back({eps, t_s, "T2_schrodinger"});
    rows.push_back({eps, t_d, "T2_dirac"});
    rows.push_back({eps, std::abs(t_d - t_s), "diff"});
  }
  return rows;
}

Asymptote high_energy_asymptote(const ConnectionParams& p) {
  const double base = p.alpha() * p.alpha() + p.delta() * p.delta() + 2.0;
  const double nonrel = p.beta() == 0.0 ? 4.0 / base : 0.0;
  const double dirac = 4.0 / (base + p.beta() * p.beta() + p.gamma() * p.gamma());
  return {std::min(1.0, nonrel), std::min(1.0, dirac)};
}

double log_log_slope(std::span<const SweepRow> rows) {
  if (rows.size() < 2) {
    throw InvalidParameter("slope needs at least two rows");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const SweepRow& r : rows) {
    if (!(r.x > 0.0) || !(r.value > 0.0)) {
      throw InvalidParameter("log-log slope needs positive x and value");
    }
    const double lx = std::log(r.x);
    const double ly = std::log(r.value);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(rows.size());
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) {
    throw InvalidParameter("log-log slope needs at least two distinct x values");
  }
  return (n * sxy - sx * sy) / denom;
}

}  // namespace pointint::analysis
