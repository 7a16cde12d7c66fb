// Plot-ready data behind the CLI figure commands.
#pragma once

#include <cstdint>
#include <vector>

#include "catsim/env.hpp"
#include "catsim/field.hpp"
#include "catsim/io.hpp"
#include "catsim/stats.hpp"

namespace catsim::figures {

struct Fig1Data {
  field::FitnessField final_field;
  stats::Histogram hist;          // 50 bins on [0,1]
  env::RenewalTrace trace;
  long last_catastrophe = 0;      // T_{N(steps)}, 0 when none
  long age = 0;                   // steps + 1 - T_{N(steps)}
  long elapsed = 0;               // steps - T_{N(steps)}
};

// Fitness-frequency histogram of a single (max,rand) run from an iid-uniform
// start. The defaults follow the reference run: 10^4 sites, 10^3 steps,
// p = 0.9.
Fig1Data fig1(double p, long sites, long steps, std::uint64_t seed);

struct Fig2Row {
  double u = 0.0;
  double phi_t = 0.0;
  double phi_inf = 0.0;
};

// Time-t and limiting CDFs side by side on a grid (t = 4, p = 0.9 for the
// reference figure).
std::vector<Fig2Row> fig2(double p, long t, const io::Grid& grid);

}  // namespace catsim::figures
