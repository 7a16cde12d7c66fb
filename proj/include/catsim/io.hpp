// Output plumbing: CSV with round-trip-exact doubles, lo:hi:count grids, and
// the JSON run manifest that makes every emitted file reproducible.
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace catsim::io {

// 17 significant digits: enough to round-trip any double through text.
std::string format_double(double v);

// Inclusive-endpoint grid "lo:hi:count".
struct Grid {
  double lo = 0.0;
  double hi = 1.0;
  int count = 1;
};

Grid parse_grid(const std::string& text);  // throws std::invalid_argument
std::vector<double> grid_points(const Grid& grid);

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

// Reproducibility record for a run: replaying the stored command line
// regenerates every listed output byte-for-byte.
struct RunManifest {
  std::string command_line;
  double p = 0.0;
  long sites = 0;
  long steps = 0;
  std::uint64_t seed = 0;
  std::string generator;
  std::string version;
  std::optional<std::vector<long>> catastrophe_times;
  std::optional<long> last_catastrophe;  // realized, seed-dependent
  std::optional<long> age;               // t + 1 - T_{N(t)} at the horizon
  std::optional<long> elapsed_since_last_catastrophe;  // t - T_{N(t)}
  std::vector<std::string> outputs;
};

// Stable key order, two-space indent, trailing newline.
std::string manifest_to_json(const RunManifest& manifest);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace catsim::io
