#include "catsim/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace catsim::io {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Grid parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? 0 : first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw std::invalid_argument("grid must look like lo:hi:count, got '" +
                                text + "'");
  }
  Grid grid;
  std::size_t used = 0;
  try {
    grid.lo = std::stod(text.substr(0, first), &used);
    grid.hi = std::stod(text.substr(first + 1, second - first - 1), &used);
    grid.count = std::stoi(text.substr(second + 1), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("grid must look like lo:hi:count, got '" +
                                text + "'");
  }
  if (grid.count < 1) throw std::invalid_argument("grid count must be >= 1");
  if (grid.count == 1 && grid.lo != grid.hi) {
    throw std::invalid_argument("a 1-point grid needs lo == hi");
  }
  if (grid.lo > grid.hi) throw std::invalid_argument("grid needs lo <= hi");
  return grid;
}

std::vector<double> grid_points(const Grid& grid) {
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(grid.count));
  if (grid.count == 1) {
    pts.push_back(grid.lo);
    return pts;
  }
  const double step = (grid.hi - grid.lo) / (grid.count - 1);
  for (int i = 0; i < grid.count; ++i) {
    pts.push_back(i == grid.count - 1 ? grid.hi : grid.lo + i * step);
  }
  return pts;
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i > 0) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
}

std::string manifest_to_json(const RunManifest& manifest) {
  nlohmann::ordered_json j;
  j["command"] = manifest.command_line;
  j["params"] = {{"p", manifest.p},
                 {"sites", manifest.sites},
                 {"steps", manifest.steps},
                 {"seed", manifest.seed}};
  j["generator"] = manifest.generator;
  j["version"] = manifest.version;
  if (manifest.catastrophe_times) {
    j["catastrophe_times"] = *manifest.catastrophe_times;
  }
  if (manifest.last_catastrophe) {
    j["last_catastrophe"] = *manifest.last_catastrophe;
  }
  if (manifest.age) j["age"] = *manifest.age;
  if (manifest.elapsed_since_last_catastrophe) {
    j["elapsed_since_last_catastrophe"] =
        *manifest.elapsed_since_last_catastrophe;
  }
  j["outputs"] = manifest.outputs;
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

}  // namespace catsim::io
