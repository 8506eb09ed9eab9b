#include "pointint/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <CLI11.hpp>

#include "pointint/analysis.hpp"
#include "pointint/connection.hpp"
#include "pointint/dirac.hpp"
#include "pointint/errors.hpp"
#include "pointint/schrodinger.hpp"

namespace pointint::cli {

namespace {

double param(const RunConfig& cfg, const std::string& name) {
  const auto it = cfg.params.find(name);
  if (it == cfg.params.end()) {
    throw InvalidParameter("missing parameter --" + name);
  }
  if (!std::isfinite(it->second)) {
    throw InvalidParameter("parameter --" + name + " must be finite");
  }
  return it->second;
}

double positive_mass(const RunConfig& cfg) {
  const double m = param(cfg, "mass");
  if (!(m > 0.0)) throw InvalidParameter("--mass must be positive");
  return m;
}

ConnectionParams connection_from(const RunConfig& cfg) {
  return ConnectionParams::make(param(cfg, "alpha"), param(cfg, "beta"), param(cfg, "gamma"),
                                param(cfg, "delta"), param(cfg, "theta"), kCliDetTol);
}

dirac::BarrierParams barrier_from(const RunConfig& cfg) {
  return {param(cfg, "s"), param(cfg, "v"), param(cfg, "theta")};
}

std::vector<double> sweep_values(const RunConfig& cfg) {
  if (!cfg.sweep) throw InvalidParameter("sweep range required");
  return cfg.sweep->values();
}

bool is_dirac(const RunConfig& cfg) {
  if (cfg.framework == "dirac") return true;
  if (cfg.framework == "schrodinger") return false;
  throw InvalidParameter("--framework must be schrodinger or dirac");
}

std::string csv_row(std::initializer_list<double> values) {
  std::string line;
  for (double v : values) {
    if (!line.empty()) line += ',';
    line += format_number(v);
  }
  line += '\n';
  return line;
}

std::string matrix_csv(const TransferMatrix& m) {
  return "re11,im11,re12,im12,re21,im21,re22,im22\n" +
         csv_row({m(0, 0).real(), m(0, 0).imag(), m(0, 1).real(), m(0, 1).imag(),
                  m(1, 0).real(), m(1, 0).imag(), m(1, 1).real(), m(1, 1).imag()});
}

}  // namespace

std::vector<double> Sweep::values() const {
  if (count < 2) throw InvalidParameter("sweep count must be at least 2");
  if (!std::isfinite(start) || !std::isfinite(stop)) {
    throw InvalidParameter("sweep endpoints must be finite");
  }
  if (spacing == Spacing::kLog && !(start > 0.0 && stop > 0.0)) {
    throw InvalidParameter("log spacing requires positive endpoints");
  }
  std::vector<double> out(static_cast<std::size_t>(count));
  const double last = count - 1;
  for (int i = 0; i < count; ++i) {
    const double f = i / last;
    if (spacing == Spacing::kLinear) {
      out[i] = start + (stop - start) * f;
    } else {
      out[i] = std::exp(std::log(start) + (std::log(stop) - std::log(start)) * f);
    }
  }
  out.front() = start;
  out.back() = stop;
  return out;
}

std::string format_number(double x) {
  char buf[64];
  if (x == 0.0) x = 0.0;  // no "-0" in output
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string cmd_transmission(const RunConfig& cfg) {
  const ConnectionParams p = connection_from(cfg);
  const double m = positive_mass(cfg);
  const bool relativistic = is_dirac(cfg);
  std::string csv = "x,T2,R2\n";
  for (double x : sweep_values(cfg)) {
    const double t2 = relativistic ? dirac::transmission(p, x, m)
                                   : schrodinger::transmission(p, schrodinger::NonRelMedium(m, x));
    csv += csv_row({x, t2, 1.0 - t2});
  }
  return csv;
}

std::string cmd_converge(const RunConfig& cfg, std::ostream& warnings) {
  const double m = positive_mass(cfg);
  const std::vector<double> a_list = sweep_values(cfg);
  std::vector<analysis::SweepRow> rows;
  if (is_dirac(cfg)) {
    rows = analysis::dirac_convergence(barrier_from(cfg), param(cfg, "energy"), m, a_list);
  } else {
    const ConnectionParams p = connection_from(cfg);
    if (p.beta() != 0.0 && std::abs(p.beta()) < 1e-6) {
      warnings << "warning: 0 < |beta| < 1e-6; the beta != 0 renormalization loses "
                  "precision at small a\n";
    }
    rows = analysis::nonrel_convergence(p, m, param(cfg, "wave-number"), a_list);
  }
  std::string csv = "a,err\n";
  for (const auto& row : rows) csv += csv_row({row.x, row.value});
  return csv;
}

std::string cmd_compare(const RunConfig& cfg) {
  const ConnectionParams p = connection_from(cfg);
  const double m = positive_mass(cfg);
  const auto rows = analysis::correspondence_table(p, m, sweep_values(cfg));
  std::string csv = "kinetic,T2_schrodinger,T2_dirac,diff\n";
  for (std::size_t i = 0; i + 2 < rows.size(); i += 3) {
    csv += csv_row({rows[i].x, rows[i].value, rows[i + 1].value, rows[i + 2].value});
  }
  return csv;
}

std::string cmd_classify(const RunConfig& cfg) {
  const dirac::BarrierClass c = dirac::classify(barrier_from(cfg));
  switch (c.kind) {
    case dirac::BarrierKind::kDelta:
      return "delta strength=" + format_number(c.strength) + "\n";
    case dirac::BarrierKind::kEpsilon:
      return "epsilon strength=" + format_number(c.strength) + "\n";
    case dirac::BarrierKind::kTrig:
      return "trig\n";
    case dirac::BarrierKind::kHyperbolic:
      return "hyperbolic\n";
  }
  return {};
}

std::string cmd_propagate(const RunConfig& cfg) {
  const std::string& kind = cfg.matrix;
  if (kind == "connection") {
    return matrix_csv(as_matrix(connection_from(cfg)));
  }
  if (kind == "schrodinger") {
    const schrodinger::NonRelMedium med(positive_mass(cfg), param(cfg, "wave-number"),
                                        param(cfg, "vector-potential"));
    return matrix_csv(schrodinger::propagator(param(cfg, "x"), med));
  }
  if (kind == "three-delta") {
    const double m = positive_mass(cfg);
    const auto triple =
        schrodinger::renormalized_strengths(connection_from(cfg), param(cfg, "half-spacing"), m);
    const schrodinger::NonRelMedium med(m, param(cfg, "wave-number"), triple.vector_potential);
    return matrix_csv(schrodinger::three_delta_transfer(triple, med));
  }
  if (kind == "dirac") {
    const dirac::DiracMedium med(positive_mass(cfg), param(cfg, "energy"), param(cfg, "scalar"),
                                 param(cfg, "vector"), param(cfg, "vector-potential"));
    return matrix_csv(dirac::propagator(param(cfg, "x"), med));
  }
  if (kind == "barrier-limit") {
    return matrix_csv(dirac::barrier_limit(barrier_from(cfg)));
  }
  if (kind == "finite-barrier") {
    return matrix_csv(dirac::finite_barrier_transfer(barrier_from(cfg), param(cfg, "half-spacing"),
                                                     param(cfg, "energy"), positive_mass(cfg)));
  }
  throw InvalidParameter("unknown --matrix kind: " + kind);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transfer matrices and scattering for one-dimensional point interactions",
               "pointint"};
  app.require_subcommand(1);

  RunConfig cfg;
  // Keyed by subcommand name; std::map keeps references stable for CLI11.
  std::map<std::string, Sweep> sweeps;
  std::map<std::string, std::string> spacings;

  const auto real = [&cfg](CLI::App* sub, const std::string& name, double fallback,
                           const std::string& help) {
    cfg.params[name] = fallback;
    sub->add_option("--" + name, cfg.params[name], help)->capture_default_str();
  };
  const auto connection_flags = [&](CLI::App* sub) {
    real(sub, "alpha", 1.0, "U_11");
    real(sub, "beta", 0.0, "U_12");
    real(sub, "gamma", 0.0, "U_21");
    real(sub, "delta", 1.0, "U_22");
    real(sub, "theta", 0.0, "phase (radians)");
  };
  // converge and propagate share --theta between the connection phase and the
  // barrier's integrated A.
  const auto barrier_flags = [&](CLI::App* sub, bool with_theta) {
    real(sub, "s", 0.0, "integrated scalar strength 2aS");
    real(sub, "v", 0.0, "integrated vector strength 2aV");
    if (with_theta) real(sub, "theta", 0.0, "integrated spatial vector potential 2aA");
  };
  const auto sweep_flags = [&](CLI::App* sub, bool required, Sweep fallback) {
    Sweep& sweep = sweeps[sub->get_name()] = fallback;
    std::string& spacing = spacings[sub->get_name()] =
        fallback.spacing == Spacing::kLog ? "log" : "linear";
    auto* start = sub->add_option("--start", sweep.start, "first sweep value");
    auto* stop = sub->add_option("--stop", sweep.stop, "last sweep value");
    sub->add_option("--count", sweep.count, "number of sweep points")->capture_default_str();
    sub->add_option("--spacing", spacing, "linear or log")
        ->check(CLI::IsMember({"linear", "log"}))
        ->capture_default_str();
    if (required) {
      start->required();
      stop->required();
    }
  };
  const auto framework_flag = [&](CLI::App* sub) {
    sub->add_option("--framework", cfg.framework, "schrodinger or dirac")
        ->check(CLI::IsMember({"schrodinger", "dirac"}))
        ->capture_default_str();
  };
  const auto output_flag = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "write to this path instead of standard output");
  };

  auto* transmission = app.add_subcommand("transmission", "|T|^2 and |R|^2 over k or E");
  connection_flags(transmission);
  real(transmission, "mass", 1.0, "particle mass");
  framework_flag(transmission);
  sweep_flags(transmission, true, {0.0, 0.0, 2, Spacing::kLinear});
  output_flag(transmission);

  auto* converge = app.add_subcommand("converge", "error of the finite-range model against its limit");
  connection_flags(converge);
  barrier_flags(converge, false);
  real(converge, "mass", 1.0, "particle mass");
  real(converge, "wave-number", 1.0, "k (schrodinger)");
  real(converge, "energy", 2.0, "E (dirac)");
  framework_flag(converge);
  sweep_flags(converge, false, {1e-2, 1e-5, 4, Spacing::kLog});
  output_flag(converge);

  auto* compare = app.add_subcommand("compare", "Schrodinger vs Dirac transmission over kinetic energy");
  connection_flags(compare);
  real(compare, "mass", 1.0, "particle mass");
  sweep_flags(compare, true, {0.0, 0.0, 2, Spacing::kLog});
  output_flag(compare);

  auto* classify = app.add_subcommand("classify", "classify a zero-range Dirac barrier");
  barrier_flags(classify, true);
  output_flag(classify);

  auto* propagate = app.add_subcommand("propagate", "dump one transfer matrix (re/im, row-major)");
  propagate
      ->add_option("--matrix", cfg.matrix,
                   "connection, schrodinger, three-delta, dirac, barrier-limit, finite-barrier")
      ->check(CLI::IsMember(
          {"connection", "schrodinger", "three-delta", "dirac", "barrier-limit", "finite-barrier"}))
      ->capture_default_str();
  connection_flags(propagate);
  barrier_flags(propagate, false);
  real(propagate, "mass", 1.0, "particle mass");
  real(propagate, "x", 1.0, "propagation length");
  real(propagate, "wave-number", 1.0, "k (schrodinger)");
  real(propagate, "energy", 2.0, "E (dirac)");
  real(propagate, "scalar", 0.0, "scalar potential S");
  real(propagate, "vector", 0.0, "vector potential V");
  real(propagate, "vector-potential", 0.0, "spatial vector potential A");
  real(propagate, "half-spacing", 0.01, "half width a");
  output_flag(propagate);

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  if (const auto it = sweeps.find(cfg.command); it != sweeps.end()) {
    Sweep sweep = it->second;
    sweep.spacing = spacings[cfg.command] == "log" ? Spacing::kLog : Spacing::kLinear;
    cfg.sweep = sweep;
  }

  std::string text;
  try {
    if (cfg.command == "transmission") {
      text = cmd_transmission(cfg);
    } else if (cfg.command == "converge") {
      text = cmd_converge(cfg, err);
    } else if (cfg.command == "compare") {
      text = cmd_compare(cfg);
    } else if (cfg.command == "classify") {
      text = cmd_classify(cfg);
    } else {
      text = cmd_propagate(cfg);
    }
  } catch (const SingularRenormalization& e) {
    err << "error: " << e.what() << " (beta = 0 requires alpha + delta != -2)\n";
    return kExitSingular;
  } catch (const DegenerateModes& e) {
    err << "error: " << e.what() << '\n';
    return kExitSingular;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  if (cfg.output.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write " << cfg.output << '\n';
    return 1;
  }
  return kExitOk;
}

}  // namespace pointint::cli
