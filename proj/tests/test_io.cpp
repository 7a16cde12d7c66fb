#include "catsim/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <stdexcept>

#include "doctest.h"

#include "catsim/env.hpp"

namespace io = catsim::io;

TEST_CASE("format_double round-trips doubles exactly") {
  const catsim::env::EnvStream stream(41, 0.5);
  catsim::env::DrawStream draws(stream, 0);
  for (int i = 0; i < 5000; ++i) {
    const double v = draws.next_uniform();
    CHECK(std::stod(io::format_double(v)) == v);
  }
  CHECK(std::stod(io::format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(io::format_double(0.5) == "0.5");
}

TEST_CASE("grid parsing") {
  const auto grid = io::parse_grid("0.001:0.999:999");
  const auto pts = io::grid_points(grid);
  REQUIRE(pts.size() == 999);
  CHECK(pts.front() == doctest::Approx(0.001));
  CHECK(pts.back() == 0.999);
  CHECK(pts[499] == doctest::Approx(0.5));

  const auto two = io::grid_points(io::parse_grid("0:1:2"));
  CHECK(two == std::vector<double>{0.0, 1.0});

  const auto one = io::grid_points(io::parse_grid("0.3:0.3:1"));
  CHECK(one == std::vector<double>{0.3});

  CHECK_THROWS_AS(io::parse_grid("0.1:0.9"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_grid("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_grid("0.1:0.9:0"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_grid("0.9:0.1:5"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_grid("0.1:0.9:1"), std::invalid_argument);
}

TEST_CASE("CSV output has one header row and exact floats") {
  std::ostringstream os;
  io::write_csv(os, {"u", "phi"}, {{0.5, 1.0 / 11.0}, {0.25, 0.125}});
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "u,phi");
  std::getline(is, line);
  const auto comma = line.find(',');
  CHECK(std::stod(line.substr(0, comma)) == 0.5);
  CHECK(std::stod(line.substr(comma + 1)) == 1.0 / 11.0);
  std::getline(is, line);
  CHECK(line == "0.25,0.125");
  CHECK_FALSE(std::getline(is, line));
}

TEST_CASE("manifest JSON is deterministic and complete") {
  io::RunManifest m;
  m.command_line = "catsim simulate --model maxrand";
  m.p = 0.9;
  m.sites = 10000;
  m.steps = 1000;
  m.seed = 42;
  m.generator = "philox4x32-10";
  m.version = "0.1.0";
  m.catastrophe_times = std::vector<long>{2, 17, 996};
  m.last_catastrophe = 996;
  m.age = 5;
  m.elapsed_since_last_catastrophe = 4;
  m.outputs = {"run_hist.csv", "run_field.csv"};

  const std::string a = io::manifest_to_json(m);
  const std::string b = io::manifest_to_json(m);
  CHECK(a == b);
  CHECK(a.find("\"command\"") != std::string::npos);
  CHECK(a.find("996") != std::string::npos);
  CHECK(a.find("philox4x32-10") != std::string::npos);
  CHECK(a.find("run_field.csv") != std::string::npos);
  // key order is fixed: command before params before generator
  CHECK(a.find("\"command\"") < a.find("\"params\""));
  CHECK(a.find("\"params\"") < a.find("\"generator\""));

  io::RunManifest bare;
  bare.command_line = "catsim figure fig2";
  const std::string c = io::manifest_to_json(bare);
  CHECK(c.find("catastrophe_times") == std::string::npos);
  CHECK(c.find("age") == std::string::npos);
}

TEST_CASE("write_text_file writes exactly the given bytes") {
  const auto path = std::filesystem::temp_directory_path() / "catsim_io_test.txt";
  const std::string content = "u,phi\n0.5,0.33333333333333331\n";
  io::write_text_file(path.string(), content);
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == content);
  std::filesystem::remove(path);
}
