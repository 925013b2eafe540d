#pragma once

// Command-line front end. Exit codes: 0 success, 2 invalid input,
// 3 solver non-convergence, 4 internal consistency failure.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hardy/grid.hpp"

namespace hardy {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNoConvergence = 3;
inline constexpr int kExitConsistency = 4;

enum class OutputFormat { Json, Csv };

struct RunConfig {
  std::string command;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<int> degree;
  std::size_t grid = kDefaultGridSize;
  /// Unset means the owning module's default (1e-10 and 500 for the
  /// approximant solver, 1e-8 and 5000 for the dual ascent).
  std::optional<double> tol;
  std::optional<int> max_iter;
  std::string input;
  std::string zeros;
  std::string family;
  std::vector<double> radii{0.5, 0.9, 0.99};
  OutputFormat format = OutputFormat::Json;
  std::string out;
  std::uint64_t seed = 0;
};

/// Runs one command, writing the report to config.out (or `out` when empty)
/// and a one-line reason to `err` on failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it. The grid defaults to
/// HARDY_OPA_GRID when that variable is set and --grid is absent.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hardy
