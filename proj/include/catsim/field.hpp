// Site-field simulators: the (max,rand) main dynamics, the (max,min)
// variant, the two-process coupling, and a minimal Bak-Sneppen ring for
// qualitative comparison.
#pragma once

#include <vector>

#include "catsim/env.hpp"

namespace catsim::field {

struct FitnessField {
  std::vector<double> values;  // site n stored at values[n-1], all in (0,1)
  long t = 0;
};

struct InitialConfig {
  enum class Kind { IidUniform, Constant, Explicit };

  Kind kind = Kind::IidUniform;
  double constant = 0.5;
  std::vector<double> values;

  static InitialConfig iid_uniform();
  static InitialConfig constant_value(double c);           // c in (0,1)
  static InitialConfig explicit_values(std::vector<double> v);
};

// Field at t = 0. The iid start draws from the stream's dedicated t = 0
// sub-stream. Throws std::invalid_argument on an explicit vector whose
// length differs from n or whose entries leave (0,1).
FitnessField init_field(const InitialConfig& cfg, long n,
                        const env::EnvStream& stream);

// One (max,rand) step: every site takes max(old, U_{t+1}(site)) on a normal
// step, and is replaced by U_{t+1}(site) on a catastrophe. All sites share
// the same B_{t+1}.
FitnessField step_maxrand_field(const FitnessField& field,
                                const env::EnvStream& stream);

// One (max,min) step: the catastrophe branch takes min(old, U_{t+1}(site)).
FitnessField step_maxmin_field(const FitnessField& field,
                               const env::EnvStream& stream);

// One Bak-Sneppen step on a ring: the minimum-fitness site (lowest index on
// ties) and its two neighbours get fresh uniforms. Requires n >= 3.
FitnessField bak_sneppen_step(const FitnessField& field,
                              const env::EnvStream& stream);

struct CoupleResult {
  std::vector<FitnessField> run_a;  // length t_max + 1
  std::vector<FitnessField> run_b;
  long first_agreement_time = -1;   // -1 when never equal within the horizon
};

// Runs two (max,rand) fields on the identical B and U values. The fields
// coincide exactly from the first catastrophe onwards.
CoupleResult couple_run(const InitialConfig& cfg_a, const InitialConfig& cfg_b,
                        long n, long t_max, const env::EnvStream& stream);

}  // namespace catsim::field
