#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dzeta/run_config.hpp"

namespace {

// Flag name (without dashes) and the config key it sets.
struct FieldOption {
  const char* flag;
  const char* key;
  const char* help;
};

const std::vector<FieldOption> kOptions = {
    {"s0", "s0", "first argument as re,im"},
    {"s", "s", "second argument as re,im"},
    {"w", "w", "second argument of zeta2sq as re,im"},
    {"sigma", "sigma", "real part of s on the vertical segment"},
    {"T", "T", "upper end of the t-range"},
    {"n-max", "n_max", "largest N for the gamma2 limit route"},
    {"x", "x", "split point x (approx-check split mode, mb-verify)"},
    {"C", "C", "constant C > 1 with |t| <= 2 pi x / C"},
    {"mode", "mode", "approx-check mode: split | truncated"},
    {"grid-min", "grid_min", "smallest x or t of the approx-check grid"},
    {"grid-max", "grid_max", "largest x or t of the approx-check grid"},
    {"grid-points", "grid_points", "number of approx-check grid points"},
    {"evaluator", "evaluator", "mean-square integrand: zeta2 | riemann"},
    {"window", "window", "sup-scan window width"},
    {"step", "step", "sup-scan sampling step"},
    {"output", "output_path", "write results to this file"},
    {"format", "format", "text | csv | json"},
    {"m-cutoff", "m_cutoff", "minimum direct m-terms"},
    {"n-cutoff", "n_cutoff", "default split N / x"},
    {"k-cutoff", "k_cutoff", "minimum direct k-terms"},
    {"contour-half-height", "contour_half_height", "contour extent beyond the band"},
    {"tol", "tol", "target absolute error"},
    {"singular-radius", "singular_radius", "exclusion radius around the singular locus"},
    {"s0-one-radius", "s0_one_radius", "disk around s0 = 1 using the digamma form"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler double zeta function: evaluation and experiments"};
  app.require_subcommand(1);
  std::string config_path;
  std::string threads;
  std::map<std::string, std::string> values;

  const char* commands[][2] = {
      {"eval", "evaluate zeta_2(s0, s) on the region it is continued to"},
      {"zeta2sq", "mean-square coefficient sum_k |H_{k-1}(s0)|^2 k^{-w}"},
      {"gamma2", "double Euler constant by three routes"},
      {"mean-square", "integrate |zeta_2(s0, sigma+it)|^2 over [2, T]"},
      {"approx-check", "errors of the truncated approximants on a grid"},
      {"mb-verify", "Mellin-Barnes route against itself and Euler-Maclaurin"},
      {"sup-scan", "window maxima of |zeta_2| along a vertical segment"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& cmd : commands) {
    CLI::App* sub = app.add_subcommand(cmd[0], cmd[1]);
    sub->add_option("--config", config_path, "key=value configuration file");
    sub->add_option("--threads", threads, "worker threads (0: all cores)")
        ->envname("DZETA_THREADS");
    for (const auto& o : kOptions) {
      sub->add_option(std::string("--") + o.flag, values[o.key], o.help);
    }
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    dzeta::RunConfig config;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw dzeta::ConfigError("cannot read " + config_path);
      std::stringstream text;
      text << in.rdbuf();
      config = dzeta::parse_config(text.str());
    }
    for (CLI::App* sub : subs) {
      if (!sub->parsed()) continue;
      config.command = dzeta::parse_command(sub->get_name());
      for (const auto& o : kOptions) {
        if (sub->get_option(std::string("--") + o.flag)->count() > 0) {
          dzeta::set_field(config, o.key, values[o.key]);
        }
      }
      if (!threads.empty()) dzeta::set_field(config, "threads", threads);
    }
    return dzeta::run(config, std::cout, std::cerr);
  } catch (const dzeta::ConfigError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  }
}
