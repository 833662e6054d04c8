#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "dzeta/errors.hpp"
#include "dzeta/settings.hpp"

namespace dzeta {

enum class Command { Eval, Zeta2Sq, Gamma2, MeanSquare, ApproxCheck, MbVerify, SupScan };
enum class Format { Text, Csv, Json };

std::string_view to_string(Command c);
std::string_view to_string(Format f);
Command parse_command(std::string_view name);
Format parse_format(std::string_view name);

/// Malformed configuration text or command-line value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Everything one CLI invocation needs. Fields not used by the selected
/// command are carried along unchanged.
struct RunConfig {
  Command command = Command::Eval;
  Complex s0{2.0, 0.0};
  Complex s{2.0, 0.0};
  Complex w{3.0, 0.0};          // zeta2sq second argument
  double sigma = 1.5;           // mean-square, sup-scan, approx-check (truncated)
  double T = 200.0;
  long n_max = 131072;          // gamma2 limit route
  double x = 100.0;             // approx-check split mode, mb-verify
  double C = 6.283185307179586;
  std::string mode = "split";   // approx-check: split | truncated
  double grid_min = 100.0;      // approx-check grid
  double grid_max = 10000.0;
  int grid_points = 9;
  std::string evaluator = "zeta2";  // mean-square: zeta2 | riemann
  double window = 10.0;         // sup-scan
  double step = 0.1;
  std::string output_path;      // empty: standard output
  Format format = Format::Text;
  EvalSettings settings;

  bool operator==(const RunConfig&) const;
};

/// key=value lines using the field names above; doubles with 17 significant
/// digits and complex values as "re,im", so parse_config(to_text(c)) == c.
std::string to_text(const RunConfig& config);

/// Parses key=value lines on top of the defaults. Blank lines and lines
/// starting with '#' are ignored. Throws ConfigError on unknown keys or
/// malformed values.
RunConfig parse_config(std::string_view text);

/// Applies one key=value assignment.
void set_field(RunConfig& config, std::string_view key, std::string_view value);

/// "re,im" (or a bare real) to a complex value.
Complex parse_complex(std::string_view text);

/// Runs the command, writing results to `out` (or config.output_path) and the
/// one-line summary to `log`. Returns the exit status: 0 success, 2 domain
/// or singular rejection, 3 convergence failure, 1 other errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& log);

}  // namespace dzeta
