#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pointint::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitSingular = 3;

/// Connection determinant slack accepted on the command line.
inline constexpr double kCliDetTol = 1e-9;

enum class Spacing { kLinear, kLog };

/// Sweep over [start, stop] with `count` points; both endpoints are emitted
/// exactly.
struct Sweep {
  double start = 0.0;
  double stop = 0.0;
  int count = 2;
  Spacing spacing = Spacing::kLinear;

  /// Throws InvalidParameter if count < 2 or a log sweep has a non-positive
  /// endpoint.
  std::vector<double> values() const;
};

struct RunConfig {
  std::string command;
  std::string framework = "schrodinger";
  std::string matrix = "connection";  // propagate only
  std::map<std::string, double> params;
  std::optional<Sweep> sweep;
  std::string output;  // empty: standard output
};

/// Seventeen significant digits, enough to round-trip a double.
std::string format_number(double x);

std::string cmd_transmission(const RunConfig& cfg);
std::string cmd_converge(const RunConfig& cfg, std::ostream& warnings);
std::string cmd_compare(const RunConfig& cfg);
std::string cmd_classify(const RunConfig& cfg);
std::string cmd_propagate(const RunConfig& cfg);

/// Full command-line entry point. args[0] is the program name.
/// Returns 0 on success, 2 on parameter validation errors, 3 on domain
/// singularities; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pointint::cli
