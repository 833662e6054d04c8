#include "dzeta/run_config.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace dzeta {
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(Complex z) { return fmt(z.real()) + "," + fmt(z.imag()); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view text, std::string_view key) {
  const std::string s(trim(text));
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("bad number for " + std::string(key) + ": '" + s + "'");
}

long parse_long(std::string_view text, std::string_view key) {
  const std::string_view s = trim(text);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("bad integer for " + std::string(key) + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Eval: return "eval";
    case Command::Zeta2Sq: return "zeta2sq";
    case Command::Gamma2: return "gamma2";
    case Command::MeanSquare: return "mean-square";
    case Command::ApproxCheck: return "approx-check";
    case Command::MbVerify: return "mb-verify";
    case Command::SupScan: return "sup-scan";
  }
  return "?";
}

std::string_view to_string(Format f) {
  switch (f) {
    case Format::Text: return "text";
    case Format::Csv: return "csv";
    case Format::Json: return "json";
  }
  return "?";
}

Command parse_command(std::string_view name) {
  for (Command c : {Command::Eval, Command::Zeta2Sq, Command::Gamma2, Command::MeanSquare,
                    Command::ApproxCheck, Command::MbVerify, Command::SupScan}) {
    if (to_string(c) == name) return c;
  }
  throw ConfigError("unknown command '" + std::string(name) + "'");
}

Format parse_format(std::string_view name) {
  for (Format f : {Format::Text, Format::Csv, Format::Json}) {
    if (to_string(f) == name) return f;
  }
  throw ConfigError("unknown format '" + std::string(name) + "'");
}

Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) return {parse_double(s, "complex"), 0.0};
  return {parse_double(s.substr(0, comma), "complex"),
          parse_double(s.substr(comma + 1), "complex")};
}

bool RunConfig::operator==(const RunConfig& o) const {
  const auto& a = settings;
  const auto& b = o.settings;
  return command == o.command && s0 == o.s0 && s == o.s && w == o.w && sigma == o.sigma &&
         T == o.T && n_max == o.n_max && x == o.x && C == o.C && mode == o.mode &&
         grid_min == o.grid_min && grid_max == o.grid_max && grid_points == o.grid_points &&
         evaluator == o.evaluator && window == o.window && step == o.step &&
         output_path == o.output_path && format == o.format && a.m_cutoff == b.m_cutoff &&
         a.n_cutoff == b.n_cutoff && a.k_cutoff == b.k_cutoff &&
         a.contour_half_height == b.contour_half_height && a.tol == b.tol &&
         a.singular_radius == b.singular_radius && a.s0_one_radius == b.s0_one_radius &&
         a.threads == b.threads;
}

std::string to_text(const RunConfig& c) {
  std::ostringstream o;
  o << "command=" << to_string(c.command) << '\n'
    << "s0=" << fmt(c.s0) << '\n'
    << "s=" << fmt(c.s) << '\n'
    << "w=" << fmt(c.w) << '\n'
    << "sigma=" << fmt(c.sigma) << '\n'
    << "T=" << fmt(c.T) << '\n'
    << "n_max=" << c.n_max << '\n'
    << "x=" << fmt(c.x) << '\n'
    << "C=" << fmt(c.C) << '\n'
    << "mode=" << c.mode << '\n'
    << "grid_min=" << fmt(c.grid_min) << '\n'
    << "grid_max=" << fmt(c.grid_max) << '\n'
    << "grid_points=" << c.grid_points << '\n'
    << "evaluator=" << c.evaluator << '\n'
    << "window=" << fmt(c.window) << '\n'
    << "step=" << fmt(c.step) << '\n'
    << "output_path=" << c.output_path << '\n'
    << "format=" << to_string(c.format) << '\n'
    << "m_cutoff=" << c.settings.m_cutoff << '\n'
    << "n_cutoff=" << c.settings.n_cutoff << '\n'
    << "k_cutoff=" << c.settings.k_cutoff << '\n'
    << "contour_half_height=" << fmt(c.settings.contour_half_height) << '\n'
    << "tol=" << fmt(c.settings.tol) << '\n'
    << "singular_radius=" << fmt(c.settings.singular_radius) << '\n'
    << "s0_one_radius=" << fmt(c.settings.s0_one_radius) << '\n'
    << "threads=" << c.settings.threads << '\n';
  return o.str();
}

void set_field(RunConfig& c, std::string_view key, std::string_view value) {
  const std::string_view v = trim(value);
  if (key == "command") c.command = parse_command(v);
  else if (key == "s0") c.s0 = parse_complex(v);
  else if (key == "s") c.s = parse_complex(v);
  else if (key == "w") c.w = parse_complex(v);
  else if (key == "sigma") c.sigma = parse_double(v, key);
  else if (key == "T") c.T = parse_double(v, key);
  else if (key == "n_max") c.n_max = parse_long(v, key);
  else if (key == "x") c.x = parse_double(v, key);
  else if (key == "C") c.C = parse_double(v, key);
  else if (key == "mode") {
    if (v != "split" && v != "truncated") throw ConfigError("mode must be split or truncated");
    c.mode = std::string(v);
  } else if (key == "grid_min") c.grid_min = parse_double(v, key);
  else if (key == "grid_max") c.grid_max = parse_double(v, key);
  else if (key == "grid_points") c.grid_points = int(parse_long(v, key));
  else if (key == "evaluator") {
    if (v != "zeta2" && v != "riemann") throw ConfigError("evaluator must be zeta2 or riemann");
    c.evaluator = std::string(v);
  } else if (key == "window") c.window = parse_double(v, key);
  else if (key == "step") c.step = parse_double(v, key);
  else if (key == "output_path") c.output_path = std::string(v);
  else if (key == "format") c.format = parse_format(v);
  else if (key == "m_cutoff") c.settings.m_cutoff = int(parse_long(v, key));
  else if (key == "n_cutoff") c.settings.n_cutoff = int(parse_long(v, key));
  else if (key == "k_cutoff") c.settings.k_cutoff = int(parse_long(v, key));
  else if (key == "contour_half_height") c.settings.contour_half_height = parse_double(v, key);
  else if (key == "tol") c.settings.tol = parse_double(v, key);
  else if (key == "singular_radius") c.settings.singular_radius = parse_double(v, key);
  else if (key == "s0_one_radius") c.settings.s0_one_radius = parse_double(v, key);
  else if (key == "threads") {
    const long t = parse_long(v, key);
    if (t < 0) throw ConfigError("threads must be >= 0");
    c.settings.threads = unsigned(t);
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
}

RunConfig parse_config(std::string_view text) {
  RunConfig c;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
    }
    set_field(c, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return c;
}

}  // namespace dzeta
