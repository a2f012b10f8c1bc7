#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace metric_ripple::cli {

/// Parse or validation failure. `field` is empty for syntax errors.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string field, const std::string& message)
      : std::runtime_error(message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct Range {
  double min = 0.0;
  double max = 0.0;
  std::size_t n = 0;
};

/// Every input of every subcommand. Defaults reproduce the data table setup.
struct Scenario {
  std::string mode;

  // Two-slit geometry.
  double d = 0.5e-6;       // slit separation [m]
  double D = 0.35;         // slit-to-screen distance [m]
  double lambda = 5e-11;   // carrier wavelength [m]

  // Packet amplitude A_jk (row-major upper triangle) and shape.
  std::array<double, 6> amplitude{0.0, 2.449489742783178e-3, 0.0, 0.0, 0.0, 0.0};
  double sigma = 1e-5;
  double omega = 6283.185307179586;  // 2 pi x 1 kHz
  double z_prime = 0.0;

  // Fringe map.
  double a2 = 6e-6;
  double x0 = 5.41e-6;
  std::size_t iterations = 14;
  double tol = 1e-12;
  std::size_t max_iter = 10000;
  bool literal_table_d = false;
  bool exact_pi = false;

  // Screen profile.
  Range profile{-2e-5, 2e-5, 401};
  double y0 = 2.449489742783178e-3;

  // Geodesic.
  std::array<double, 3> position{0.0, 6e-6, 0.0};
  std::array<double, 3> velocity{0.0, 0.0, 0.0};
  double dt = 1e-6;
  double t_end = 1e-3;
  std::string sampling = "initial";

  // Pulse.
  double a = 1.0;
  double m = 9.1093837015e-31;
  double dt_interaction = 1e-18;
  double v = 0.0;
  double t = 0.0;
  Range pulse_profile{-5e-11, 5e-11, 201};
  std::string convention = "standard";
  double epsilon = 1e-12;
  std::size_t oracle_cases = 200;
  std::uint64_t seed = 20240611;

  std::string out = "metric-ripple-out";
};

struct FieldInfo {
  std::string_view key;
  std::string_view help;
};

/// All recognised keys in display order.
std::vector<FieldInfo> field_infos();

/// Sets one field from its text form. Throws ScenarioError naming the key.
void apply(Scenario& s, std::string_view key, std::string_view value);

/// Text form of a field, round-trippable through apply().
std::string get(const Scenario& s, std::string_view key);

/// Parses key = value lines ('#' starts a comment) on top of `base`.
Scenario parse_config(std::string_view text, Scenario base = {},
                      std::string_view origin = "config");

/// Reads and parses a file; errors carry the path and line number.
Scenario load_scenario(const std::string& path, Scenario base = {});

/// Checks the fields used by `mode`. Throws ScenarioError naming the field.
void validate(const Scenario& s, std::string_view mode);

/// "key = value" for every field.
std::string describe(const Scenario& s);

}  // namespace metric_ripple::cli
