#pragma once

#include "qf/table.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qf {

enum class Operation { Distance, FinslerNorm, FinslerSweep, Intrinsic, Length, Checks };

Operation parse_operation(const std::string& name);
std::string to_string(Operation op);

struct RunConfig {
  std::string scenario;
  Operation op = Operation::Checks;
  std::optional<int> steps;
  double a = 1.0;
  double b = 1.0;
  int grid_n = 0;
  double cap_radius = 0.4;
  double slope = 0.0;
  int dim = 0;
  std::optional<double> ladder_t0;
  std::optional<double> ladder_ratio;
  std::optional<int> ladder_depth;
  std::vector<double> from;
  std::vector<double> to;
  std::vector<double> v;
  std::string out;
  Format format = Format::Csv;
  std::uint64_t seed = 1;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitTolerance = 1;
inline constexpr int kExitConfig = 2;

struct RunResult {
  Table table;
  bool passed = true;
};

// Builds the scenario and executes the operation. Throws ConfigError for
// inputs that do not fit the scenario.
RunResult execute(const RunConfig& config);

// Full front end: parses argv (flags, optional key=value config file), runs,
// writes the table and returns the exit status.
int run_cli(int argc, char** argv);

}  // namespace qf
