#include "scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace metric_ripple::cli {
namespace {

using Setter = std::function<void(Scenario&, std::string_view)>;
using Getter = std::function<std::string(const Scenario&)>;

struct Field {
  std::string_view key;
  std::string_view help;
  Setter set;
  Getter get;
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad(std::string_view key, std::string_view value, std::string_view expected) {
  throw ScenarioError(std::string(key), std::string(key) + ": expected " + std::string(expected) +
                                            ", got '" + std::string(value) + "'");
}

double to_double(std::string_view key, std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) bad(key, text, "a number");
  return v;
}

std::uint64_t to_unsigned(std::string_view key, std::string_view text) {
  text = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    bad(key, text, "a non-negative integer");
  return v;
}

bool to_bool(std::string_view key, std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  bad(key, text, "true or false");
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::array<double, 3> to_vec3(std::string_view key, std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) bad(key, text, "three comma-separated numbers");
  return {to_double(key, parts[0]), to_double(key, parts[1]), to_double(key, parts[2])};
}

Range to_range(std::string_view key, std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) bad(key, text, "MIN:MAX:N");
  return {to_double(key, parts[0]), to_double(key, parts[1]),
          static_cast<std::size_t>(to_unsigned(key, parts[2]))};
}

// Shortest text that parses back to the same double.
std::string num(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Field real(std::string_view key, std::string_view help, double Scenario::*member) {
  return {key, help, [key, member](Scenario& s, std::string_view v) { s.*member = to_double(key, v); },
          [member](const Scenario& s) { return num(s.*member); }};
}

Field count(std::string_view key, std::string_view help, std::size_t Scenario::*member) {
  return {key, help,
          [key, member](Scenario& s, std::string_view v) {
            s.*member = static_cast<std::size_t>(to_unsigned(key, v));
          },
          [member](const Scenario& s) { return std::to_string(s.*member); }};
}

Field flag(std::string_view key, std::string_view help, bool Scenario::*member) {
  return {key, help, [key, member](Scenario& s, std::string_view v) { s.*member = to_bool(key, v); },
          [member](const Scenario& s) { return std::string(s.*member ? "true" : "false"); }};
}

Field text(std::string_view key, std::string_view help, std::string Scenario::*member) {
  return {key, help, [member](Scenario& s, std::string_view v) { s.*member = std::string(trim(v)); },
          [member](const Scenario& s) { return s.*member; }};
}

Field vec3(std::string_view key, std::string_view help, std::array<double, 3> Scenario::*member) {
  return {key, help, [key, member](Scenario& s, std::string_view v) { s.*member = to_vec3(key, v); },
          [member](const Scenario& s) {
            const auto& a = s.*member;
            return num(a[0]) + "," + num(a[1]) + "," + num(a[2]);
          }};
}

Field range(std::string_view key, std::string_view help, Range Scenario::*member) {
  return {key, help, [key, member](Scenario& s, std::string_view v) { s.*member = to_range(key, v); },
          [member](const Scenario& s) {
            const Range& r = s.*member;
            return num(r.min) + ":" + num(r.max) + ":" + std::to_string(r.n);
          }};
}

Field amp(std::string_view key, std::size_t slot) {
  return {key, "packet amplitude component",
          [key, slot](Scenario& s, std::string_view v) { s.amplitude[slot] = to_double(key, v); },
          [slot](const Scenario& s) { return num(s.amplitude[slot]); }};
}

const std::vector<Field>& registry() {
  static const std::vector<Field> fields{
      real("d", "slit separation [m]", &Scenario::d),
      real("D", "slit-to-screen distance [m]", &Scenario::D),
      real("lambda", "carrier wavelength [m]", &Scenario::lambda),
      amp("a11", 0), amp("a12", 1), amp("a13", 2), amp("a22", 3), amp("a23", 4), amp("a33", 5),
      real("sigma", "packet width parameter [m], inf disables the envelope", &Scenario::sigma),
      real("omega", "angular frequency [rad/s]", &Scenario::omega),
      real("z_prime", "packet centre [m]", &Scenario::z_prime),
      real("a2", "fringe map amplitude A^2 [m]", &Scenario::a2),
      real("x0", "fringe map start [m]", &Scenario::x0),
      count("iterations", "fringe map iterations written to CSV", &Scenario::iterations),
      real("tol", "fixed point step tolerance [m]", &Scenario::tol),
      count("max_iter", "fixed point iteration cap", &Scenario::max_iter),
      flag("literal_table_d", "use d = 0.5e-11 m as printed in the table", &Scenario::literal_table_d),
      flag("exact_pi", "use exact pi instead of the table's 3.14", &Scenario::exact_pi),
      range("profile", "screen range MIN:MAX:N [m]", &Scenario::profile),
      real("y0", "transverse test-mass coordinate [m]", &Scenario::y0),
      vec3("position", "geodesic start x,y,z [m]", &Scenario::position),
      vec3("velocity", "geodesic start velocity [m/s]", &Scenario::velocity),
      real("dt", "integrator step [s]", &Scenario::dt),
      real("t_end", "integration time [s]", &Scenario::t_end),
      text("sampling", "field sampling: initial or comoving", &Scenario::sampling),
      real("a", "transfer prefactor", &Scenario::a),
      real("m", "particle mass [kg]", &Scenario::m),
      real("dt_interaction", "interaction time [s]", &Scenario::dt_interaction),
      real("v", "pulse speed [m/s]", &Scenario::v),
      real("t", "pulse evaluation time [s]", &Scenario::t),
      range("pulse_profile", "pulse range MIN:MAX:N [m]", &Scenario::pulse_profile),
      text("convention", "kernel prefactor: standard or paper", &Scenario::convention),
      real("epsilon", "quadrature regulariser", &Scenario::epsilon),
      count("oracle_cases", "random cases for the kernel oracle", &Scenario::oracle_cases),
      {"seed", "random seed for oracles",
       [](Scenario& s, std::string_view v) { s.seed = to_unsigned("seed", v); },
       [](const Scenario& s) { return std::to_string(s.seed); }},
      text("out", "output directory", &Scenario::out),
  };
  return fields;
}

const Field* find(std::string_view key) {
  for (const Field& f : registry())
    if (f.key == key) return &f;
  return nullptr;
}

void require(bool ok, std::string_view field, const std::string& reason) {
  if (!ok) throw ScenarioError(std::string(field), std::string(field) + ": " + reason);
}

void positive(double v, std::string_view field) {
  require(std::isfinite(v) && v > 0, field, "must be positive and finite, got " + num(v));
}

void finite(double v, std::string_view field) {
  require(std::isfinite(v), field, "must be finite, got " + num(v));
}

void check_range(const Range& r, std::string_view field) {
  finite(r.min, field);
  finite(r.max, field);
  require(r.min < r.max, field, "MIN must be below MAX");
  require(r.n >= 2, field, "N must be at least 2");
}

void check_packet(const Scenario& s) {
  positive(s.lambda, "lambda");
  static constexpr std::array<std::string_view, 6> names{"a11", "a12", "a13", "a22", "a23", "a33"};
  for (std::size_t i = 0; i < names.size(); ++i) finite(s.amplitude[i], names[i]);
  require(s.sigma > 0 && !std::isnan(s.sigma), "sigma", "must be positive (inf allowed)");
  require(std::isfinite(s.omega) && s.omega >= 0, "omega", "must be non-negative");
  finite(s.z_prime, "z_prime");
}

}  // namespace

std::vector<FieldInfo> field_infos() {
  std::vector<FieldInfo> out;
  for (const Field& f : registry()) out.push_back({f.key, f.help});
  return out;
}

void apply(Scenario& s, std::string_view key, std::string_view value) {
  const Field* f = find(key);
  if (f == nullptr) throw ScenarioError(std::string(key), "unknown key '" + std::string(key) + "'");
  f->set(s, value);
}

std::string get(const Scenario& s, std::string_view key) {
  const Field* f = find(key);
  if (f == nullptr) throw ScenarioError(std::string(key), "unknown key '" + std::string(key) + "'");
  return f->get(s);
}

Scenario parse_config(std::string_view text, Scenario base, std::string_view origin) {
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = std::string(origin) + ":" + std::to_string(line_no) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ScenarioError("", where + "expected 'key = value', got '" + std::string(line) + "'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "mode") {
      base.mode = std::string(value);
      continue;
    }
    try {
      apply(base, key, value);
    } catch (const ScenarioError& e) {
      throw ScenarioError(e.field(), where + e.what());
    }
  }
  return base;
}

Scenario load_scenario(const std::string& path, Scenario base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("config", "cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), std::move(base), path);
}

void validate(const Scenario& s, std::string_view mode) {
  if (mode == "table1" || mode == "cobweb" || mode == "check") {
    require(std::isfinite(s.a2) && s.a2 >= 0, "a2", "must be non-negative");
    positive(s.lambda, "lambda");
    positive(s.d, "d");
    positive(s.D, "D");
    finite(s.x0, "x0");
    positive(s.tol, "tol");
    require(s.max_iter >= 1, "max_iter", "must be at least 1");
    require(s.iterations >= 1, "iterations", "must be at least 1");
  }
  if (mode == "two-slit" || mode == "check") {
    positive(s.d, "d");
    positive(s.D, "D");
    check_packet(s);
    check_range(s.profile, "profile");
    finite(s.y0, "y0");
  }
  if (mode == "geodesic") {
    check_packet(s);
    for (double c : s.position) finite(c, "position");
    for (double c : s.velocity) finite(c, "velocity");
    positive(s.dt, "dt");
    require(std::isfinite(s.t_end) && s.t_end >= 0, "t_end", "must be non-negative");
    const double steps = s.t_end / s.dt;
    require(std::abs(steps - std::round(steps)) <= 1e-9 * std::max(1.0, steps), "dt",
            "must divide t_end into a whole number of steps");
    require(s.sampling == "initial" || s.sampling == "comoving", "sampling",
            "must be 'initial' or 'comoving'");
  }
  if (mode == "pulse" || mode == "check") {
    positive(s.lambda, "lambda");
    finite(s.a, "a");
    positive(s.m, "m");
    positive(s.dt_interaction, "dt_interaction");
    finite(s.v, "v");
    finite(s.t, "t");
    require(std::isfinite(s.omega) && s.omega >= 0, "omega", "must be non-negative");
    check_range(s.pulse_profile, "pulse_profile");
    require(s.convention == "standard" || s.convention == "paper", "convention",
            "must be 'standard' or 'paper'");
    positive(s.epsilon, "epsilon");
    require(s.oracle_cases >= 1, "oracle_cases", "must be at least 1");
  }
  require(!s.out.empty(), "out", "must not be empty");
}

std::string describe(const Scenario& s) {
  std::string text;
  for (const Field& f : registry()) {
    text += std::string(f.key) + " = " + f.get(s);
    text += "  # " + std::string(f.help) + "\n";
  }
  return text;
}

}  // namespace metric_ripple::cli
