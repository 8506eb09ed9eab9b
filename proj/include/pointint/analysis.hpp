#pragma once

#include <span>
#include <string>
#include <vector>

#include "pointint/connection.hpp"
#include "pointint/dirac.hpp"

namespace pointint::analysis {

struct SweepRow {
  double x;      // sweep variable: a, k, E or kinetic energy
  double value;  // error norm, probability or difference
  std::string label;
};

/// Chebyshev distance between the renormalized three-delta model at spacing a
/// and the target connection, one row per a (label "err"), sorted by
/// descending a. Propagates SingularRenormalization.
std::vector<SweepRow> nonrel_convergence(const ConnectionParams& target, double mass,
                                         double wave_number, std::span<const double> a_list);

/// Chebyshev distance between the finite barrier of half width a and its
/// zero-range limit, sorted by descending a.
std::vector<SweepRow> dirac_convergence(const dirac::BarrierParams& b, double energy,
                                        double mass, std::span<const double> a_list);

/// For each kinetic energy eps (ascending): rows labelled "T2_schrodinger"
/// (k = sqrt(2 m eps)), "T2_dirac" (E = m + eps) and "diff" (absolute
/// difference), in that order.
std::vector<SweepRow> correspondence_table(const ConnectionParams& p, double mass,
                                           std::span<const double> kinetic_list);

struct Asymptote {
  double nonrel_limit;
  double dirac_limit;
};

/// Limits of the two transmission probabilities as k -> inf and E -> inf.
/// Non-relativistic: 4/(alpha^2 + delta^2 + 2) when beta == 0, else 0.
/// Dirac: 4/(alpha^2 + delta^2 + 2 + beta^2 + gamma^2).
Asymptote high_energy_asymptote(const ConnectionParams& p);

/// Least-squares slope of log(value) against log(x).
double log_log_slope(std::span<const SweepRow> rows);

}  // namespace pointint::analysis
