#include "catsim/figures.hpp"

#include "catsim/analytic.hpp"

namespace catsim::figures {

Fig1Data fig1(double p, long sites, long steps, std::uint64_t seed) {
  const env::EnvStream stream(seed, p);
  Fig1Data data;
  data.final_field = field::init_field(field::InitialConfig::iid_uniform(),
                                       sites, stream);
  for (long t = 1; t <= steps; ++t) {
    data.final_field = field::step_maxrand_field(data.final_field, stream);
  }
  data.hist = stats::histogram(data.final_field.values, 0.0, 1.0, 50);
  data.trace = env::build_trace(stream, steps);
  data.last_catastrophe = data.trace.last_catastrophe_at_or_before(steps);
  data.age = data.trace.age(steps);
  data.elapsed = steps - data.last_catastrophe;
  return data;
}

std::vector<Fig2Row> fig2(double p, long t, const io::Grid& grid) {
  std::vector<Fig2Row> rows;
  for (const double u : io::grid_points(grid)) {
    rows.push_back({u, analytic::phi_t(u, p, t), analytic::phi(u, p)});
  }
  return rows;
}

}  // namespace catsim::figures
