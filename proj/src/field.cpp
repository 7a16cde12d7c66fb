#include "catsim/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace catsim::field {

namespace {

void check_unit_open(double v, const char* what) {
  if (!(v > 0.0 && v < 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in (0,1)");
  }
}

}  // namespace

InitialConfig InitialConfig::iid_uniform() { return {}; }

InitialConfig InitialConfig::constant_value(double c) {
  check_unit_open(c, "constant fitness");
  InitialConfig cfg;
  cfg.kind = Kind::Constant;
  cfg.constant = c;
  return cfg;
}

InitialConfig InitialConfig::explicit_values(std::vector<double> v) {
  for (const double x : v) check_unit_open(x, "explicit fitness");
  InitialConfig cfg;
  cfg.kind = Kind::Explicit;
  cfg.values = std::move(v);
  return cfg;
}

FitnessField init_field(const InitialConfig& cfg, long n,
                        const env::EnvStream& stream) {
  if (n < 1) throw std::invalid_argument("init_field: n must be >= 1");
  FitnessField field;
  field.t = 0;
  switch (cfg.kind) {
    case InitialConfig::Kind::IidUniform:
      field.values.resize(static_cast<std::size_t>(n));
      for (long i = 0; i < n; ++i) {
        field.values[static_cast<std::size_t>(i)] = stream.init_uniform_at(i + 1);
      }
      break;
    case InitialConfig::Kind::Constant:
      check_unit_open(cfg.constant, "constant fitness");
      field.values.assign(static_cast<std::size_t>(n), cfg.constant);
      break;
    case InitialConfig::Kind::Explicit:
      if (static_cast<long>(cfg.values.size()) != n) {
        throw std::invalid_argument("init_field: explicit vector length != n");
      }
      for (const double x : cfg.values) check_unit_open(x, "explicit fitness");
      field.values = cfg.values;
      break;
  }
  return field;
}

namespace {

enum class CatastropheRule { Replace, Min };

FitnessField step_field(const FitnessField& field, const env::EnvStream& stream,
                        CatastropheRule rule) {
  const long t_next = field.t + 1;
  const int b = stream.bernoulli_at(t_next);
  FitnessField out;
  out.t = t_next;
  out.values.resize(field.values.size());
  const long n = static_cast<long>(field.values.size());
  for (long i = 0; i < n; ++i) {
    const double fresh = stream.uniform_at(t_next, i + 1);
    const double old = field.values[static_cast<std::size_t>(i)];
    double next;
    if (b == 1) {
      next = std::max(old, fresh);
    } else {
      next = rule == CatastropheRule::Replace ? fresh : std::min(old, fresh);
    }
    out.values[static_cast<std::size_t>(i)] = next;
  }
  return out;
}

}  // namespace

FitnessField step_maxrand_field(const FitnessField& field,
                                const env::EnvStream& stream) {
  return step_field(field, stream, CatastropheRule::Replace);
}

FitnessField step_maxmin_field(const FitnessField& field,
                               const env::EnvStream& stream) {
  return step_field(field, stream, CatastropheRule::Min);
}

FitnessField bak_sneppen_step(const FitnessField& field,
                              const env::EnvStream& stream) {
  const long n = static_cast<long>(field.values.size());
  if (n < 3) throw std::invalid_argument("bak_sneppen_step: ring needs n >= 3");
  const long t_next = field.t + 1;
  long weakest = 0;
  for (long i = 1; i < n; ++i) {
    if (field.values[static_cast<std::size_t>(i)] <
        field.values[static_cast<std::size_t>(weakest)]) {
      weakest = i;
    }
  }
  FitnessField out;
  out.t = t_next;
  out.values = field.values;
  for (const long offset : {-1L, 0L, 1L}) {
    const long idx = ((weakest + offset) % n + n) % n;
    out.values[static_cast<std::size_t>(idx)] = stream.uniform_at(t_next, idx + 1);
  }
  return out;
}

CoupleResult couple_run(const InitialConfig& cfg_a, const InitialConfig& cfg_b,
                        long n, long t_max, const env::EnvStream& stream) {
  if (t_max < 0) throw std::invalid_argument("couple_run: t_max must be >= 0");
  CoupleResult result;
  result.run_a.reserve(static_cast<std::size_t>(t_max) + 1);
  result.run_b.reserve(static_cast<std::size_t>(t_max) + 1);
  result.run_a.push_back(init_field(cfg_a, n, stream));
  result.run_b.push_back(init_field(cfg_b, n, stream));
  for (long t = 1; t <= t_max; ++t) {
    result.run_a.push_back(step_maxrand_field(result.run_a.back(), stream));
    result.run_b.push_back(step_maxrand_field(result.run_b.back(), stream));
  }
  for (long t = 0; t <= t_max; ++t) {
    if (result.run_a[static_cast<std::size_t>(t)].values ==
        result.run_b[static_cast<std::size_t>(t)].values) {
      result.first_agreement_time = t;
      break;
    }
  }
  return result;
}

}  // namespace catsim::field
