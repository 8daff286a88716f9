#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spnt/zeros.hpp"

namespace spnt::cli {

enum class Command { Delta, Metrics, Goldbach, Zeros, Pintz, Turan };
enum class Format { Csv, Json };

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitTolerance = 4;

/// Environment variable naming the default zero table.
inline constexpr const char* kZerosEnv = "SMOOTHED_PNT_ZEROS";

struct GeometricGrid {
  double start = 10.0;
  double stop = 1e6;
  int points = 25;

  std::vector<double> values() const;
};

/// "start:stop:points"; a bare number is a one-point grid.
GeometricGrid parse_grid(const std::string& text);

struct RunConfig {
  Command command = Command::Metrics;
  GeometricGrid x_grid;
  std::uint64_t table_limit = 0;  // 0: derived from the grid
  std::string zero_source;        // path or "builtin"; empty: environment, then builtin
  double tol = 1e-10;
  std::string output;             // empty: standard output
  Format format = Format::Csv;
  std::uint64_t seed = 1;
  ExplicitConstant constant = ExplicitConstant::Derived;
  int grid = 64;                  // S and D sample intervals per part
  int k = 2;
  double T = 100.0;
  double mu = 5.298317366548036;  // log 200
  double width = 1.0;             // Gaussian k for pintz
  int count = 1000;               // turan instances

  /// Throws spnt::RangeError on a violated invariant.
  void validate() const;
};

/// Parse argv into a config. Returns nullopt after printing help.
/// Throws spnt::ParseError on malformed arguments.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Zero set for cfg.zero_source, falling back to the environment variable
/// and then the bundled table.
ZeroSet resolve_zeros(const RunConfig& cfg);

int cmd_delta(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_metrics(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_goldbach(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_zeros(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_pintz(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_turan(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatch on cfg.command, mapping library errors onto exit codes.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// parse_args + run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spnt::cli
