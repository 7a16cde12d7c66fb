// catsim: simulate the catastrophe fitness models, evaluate their closed
// forms, run verification suites, and emit plot-ready figure data. Every
// seeded command is byte-for-byte reproducible from its manifest.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "catsim/analytic.hpp"
#include "catsim/chain.hpp"
#include "catsim/env.hpp"
#include "catsim/field.hpp"
#include "catsim/figures.hpp"
#include "catsim/io.hpp"
#include "catsim/rng.hpp"
#include "catsim/stats.hpp"
#include "catsim/verify.hpp"
#include "catsim/version.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::string join_args(int argc, char** argv) {
  std::string cmd;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) cmd += ' ';
    cmd += argv[i];
  }
  return cmd;
}

catsim::analytic::Horizon parse_horizon(const std::string& text) {
  if (text == "inf") return catsim::analytic::Horizon::infinite();
  std::size_t used = 0;
  long t = 0;
  try {
    t = std::stol(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("--t must be a nonnegative integer or 'inf'");
  }
  if (used != text.size() || t < 0) {
    throw std::invalid_argument("--t must be a nonnegative integer or 'inf'");
  }
  return catsim::analytic::Horizon::finite(t);
}

catsim::field::InitialConfig parse_init(const std::string& text) {
  using catsim::field::InitialConfig;
  if (text == "iid") return InitialConfig::iid_uniform();
  if (text.rfind("constant:", 0) == 0) {
    return InitialConfig::constant_value(std::stod(text.substr(9)));
  }
  if (text.rfind("explicit:", 0) == 0) {
    std::vector<double> values;
    std::stringstream ss(text.substr(9));
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(std::stod(item));
    return InitialConfig::explicit_values(std::move(values));
  }
  throw std::invalid_argument(
      "--init must be iid, constant:<c>, or explicit:<v1,v2,...>");
}

// Relative output paths may be redirected wholesale with CATSIM_OUT_DIR.
std::string resolve_out(const std::string& path) {
  const char* dir = std::getenv("CATSIM_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  const std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / p).string();
}

// Writes to --out when given (with a paired manifest), stdout otherwise.
void emit(const std::optional<std::string>& out_path, const std::string& text,
          const std::string& command_line, double p) {
  if (!out_path) {
    std::cout << text;
    return;
  }
  const std::string path = resolve_out(*out_path);
  catsim::io::write_text_file(path, text);
  catsim::io::RunManifest manifest;
  manifest.command_line = command_line;
  manifest.p = p;
  manifest.generator = catsim::rng::kGeneratorName;
  manifest.version = catsim::kVersion;
  manifest.outputs = {path};
  catsim::io::write_text_file(path + ".manifest.json",
                              catsim::io::manifest_to_json(manifest));
}

std::string csv_string(const std::vector<std::string>& header,
                       const std::vector<std::vector<double>>& rows) {
  std::ostringstream os;
  catsim::io::write_csv(os, header, rows);
  return os.str();
}

int report(const catsim::verify::SuiteResult& result) {
  for (const auto& check : result.checks) {
    std::printf("[%s] %s: measured=%s bound=%s\n",
                check.pass ? "PASS" : "FAIL", check.name.c_str(),
                catsim::io::format_double(check.measured).c_str(),
                catsim::io::format_double(check.bound).c_str());
  }
  std::printf("suite %s: %s\n", result.suite.c_str(),
              result.passed() ? "PASS" : "FAIL");
  return result.passed() ? kExitPass : kExitVerifyFail;
}

struct SimulateOptions {
  std::string model = "maxrand";
  double p = 0.9;
  long sites = 10000;
  long steps = 1000;
  std::uint64_t seed = 42;
  std::string init = "iid";
  std::string out_prefix = "run";
};

int run_simulate(const SimulateOptions& opt, const std::string& command_line) {
  using namespace catsim;
  const env::EnvStream stream(opt.seed, opt.p);
  auto f = field::init_field(parse_init(opt.init), opt.sites, stream);
  const bool uses_bernoulli = opt.model != "baksneppen";
  for (long t = 1; t <= opt.steps; ++t) {
    if (opt.model == "maxrand") {
      f = field::step_maxrand_field(f, stream);
    } else if (opt.model == "maxmin") {
      f = field::step_maxmin_field(f, stream);
    } else {
      f = field::bak_sneppen_step(f, stream);
    }
  }

  const auto hist = stats::histogram(f.values, 0.0, 1.0, 50);
  std::vector<std::vector<double>> hist_rows;
  const double width = (hist.hi - hist.lo) / static_cast<double>(hist.bins.size());
  for (std::size_t i = 0; i < hist.bins.size(); ++i) {
    hist_rows.push_back({hist.lo + static_cast<double>(i) * width,
                         hist.lo + static_cast<double>(i + 1) * width,
                         static_cast<double>(hist.bins[i])});
  }
  std::vector<std::vector<double>> field_rows;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    field_rows.push_back({static_cast<double>(i + 1), f.values[i]});
  }

  const std::string hist_path = resolve_out(opt.out_prefix + "_hist.csv");
  const std::string field_path = resolve_out(opt.out_prefix + "_field.csv");
  const std::string manifest_path = resolve_out(opt.out_prefix + "_manifest.json");
  io::write_text_file(hist_path,
                      csv_string({"bin_lo", "bin_hi", "count"}, hist_rows));
  io::write_text_file(field_path, csv_string({"site", "value"}, field_rows));

  io::RunManifest manifest;
  manifest.command_line = command_line;
  manifest.p = opt.p;
  manifest.sites = opt.sites;
  manifest.steps = opt.steps;
  manifest.seed = opt.seed;
  manifest.generator = rng::kGeneratorName;
  manifest.version = kVersion;
  if (uses_bernoulli) {
    const auto trace = env::build_trace(stream, opt.steps);
    manifest.catastrophe_times = trace.times;
    manifest.last_catastrophe = trace.last_catastrophe_at_or_before(opt.steps);
    manifest.age = trace.age(opt.steps);
    manifest.elapsed_since_last_catastrophe =
        opt.steps - trace.last_catastrophe_at_or_before(opt.steps);
  }
  manifest.outputs = {hist_path, field_path};
  io::write_text_file(manifest_path, io::manifest_to_json(manifest));
  std::printf("wrote %s, %s, %s\n", hist_path.c_str(), field_path.c_str(),
              manifest_path.c_str());
  return kExitPass;
}

int run_figure(const std::string& which, double p, long sites, long steps,
               long t, std::uint64_t seed, const std::string& grid_text,
               const std::string& out_prefix, const std::string& command_line) {
  using namespace catsim;
  if (which == "fig1") {
    const auto data = figures::fig1(p, sites, steps, seed);
    std::vector<std::vector<double>> rows;
    const double width = (data.hist.hi - data.hist.lo) /
                         static_cast<double>(data.hist.bins.size());
    const double baseline = static_cast<double>(data.hist.total) /
                            static_cast<double>(data.hist.bins.size());
    for (std::size_t i = 0; i < data.hist.bins.size(); ++i) {
      rows.push_back({data.hist.lo + static_cast<double>(i) * width,
                      data.hist.lo + static_cast<double>(i + 1) * width,
                      static_cast<double>(data.hist.bins[i]), baseline});
    }
    const std::string hist_path = resolve_out(out_prefix + "_fig1_hist.csv");
    io::write_text_file(
        hist_path,
        csv_string({"bin_lo", "bin_hi", "count", "uniform_baseline"}, rows));

    io::RunManifest manifest;
    manifest.command_line = command_line;
    manifest.p = p;
    manifest.sites = sites;
    manifest.steps = steps;
    manifest.seed = seed;
    manifest.generator = rng::kGeneratorName;
    manifest.version = kVersion;
    manifest.catastrophe_times = data.trace.times;
    manifest.last_catastrophe = data.last_catastrophe;
    manifest.age = data.age;
    manifest.elapsed_since_last_catastrophe = data.elapsed;
    manifest.outputs = {hist_path};
    const std::string manifest_path = resolve_out(out_prefix + "_fig1_manifest.json");
    io::write_text_file(manifest_path, io::manifest_to_json(manifest));
    std::printf("wrote %s, %s\n", hist_path.c_str(), manifest_path.c_str());
    return kExitPass;
  }

  const auto grid = io::parse_grid(grid_text);
  const auto rows = figures::fig2(p, t, grid);
  std::vector<std::vector<double>> csv_rows;
  for (const auto& row : rows) csv_rows.push_back({row.u, row.phi_t, row.phi_inf});
  char phi_col[32];
  std::snprintf(phi_col, sizeof(phi_col), "phi_%ld", t);
  const std::string csv_path = resolve_out(out_prefix + "_fig2.csv");
  io::write_text_file(csv_path, csv_string({"u", phi_col, "phi_inf"}, csv_rows));

  io::RunManifest manifest;
  manifest.command_line = command_line;
  manifest.p = p;
  manifest.sites = 0;
  manifest.steps = t;
  manifest.seed = 0;
  manifest.generator = rng::kGeneratorName;
  manifest.version = kVersion;
  manifest.outputs = {csv_path};
  const std::string manifest_path = resolve_out(out_prefix + "_fig2_manifest.json");
  io::write_text_file(manifest_path, io::manifest_to_json(manifest));
  std::printf("wrote %s, %s\n", csv_path.c_str(), manifest_path.c_str());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace catsim;
  const std::string command_line = join_args(argc, argv);

  CLI::App app{"catastrophe fitness model toolkit"};
  app.require_subcommand(1);

  // ---- analytic ----
  auto* analytic_cmd = app.add_subcommand("analytic", "evaluate closed forms");
  analytic_cmd->require_subcommand(1);

  double a_p = 0.9, a_u = 0.5, a_u1 = 0.5, a_u2 = 0.7, a_s = 0.5, a_tol = 1e-12;
  std::string a_t = "inf";
  std::optional<std::string> a_u_grid, a_x_grid, a_out;

  auto* phi_cmd = analytic_cmd->add_subcommand("phi", "time-t or limiting CDF");
  phi_cmd->add_option("--p", a_p, "normal-step probability")->required();
  phi_cmd->add_option("--t", a_t, "horizon: nonnegative integer or 'inf'");
  phi_cmd->add_option("--u", a_u, "single evaluation point");
  phi_cmd->add_option("--u-grid", a_u_grid, "grid lo:hi:count");
  phi_cmd->add_option("--out", a_out, "output CSV path (default stdout)");

  auto* cov_cmd = analytic_cmd->add_subcommand("cov", "stationary indicator covariance");
  cov_cmd->add_option("--p", a_p)->required();
  cov_cmd->add_option("--u1", a_u1)->required();
  cov_cmd->add_option("--u2", a_u2)->required();
  cov_cmd->add_option("--out", a_out);

  auto* stair_cmd = analytic_cmd->add_subcommand("staircase", "stationary CDF of u^G");
  stair_cmd->add_option("--p", a_p)->required();
  stair_cmd->add_option("--u", a_u, "level u")->required();
  stair_cmd->add_option("--x-grid", a_x_grid, "evaluation grid lo:hi:count")->required();
  stair_cmd->add_option("--out", a_out);

  auto* pgf_cmd = analytic_cmd->add_subcommand("pgf", "E(s^Theta) for the stationary chain");
  pgf_cmd->add_option("--p", a_p)->required();
  pgf_cmd->add_option("--u", a_u)->required();
  pgf_cmd->add_option("--s", a_s)->required();
  pgf_cmd->add_option("--tol", a_tol, "series truncation tolerance");
  pgf_cmd->add_option("--out", a_out);

  // ---- simulate ----
  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "run a site-field simulation");
  sim_cmd->add_option("--model", sim.model, "maxrand, maxmin, or baksneppen")
      ->check(CLI::IsMember({"maxrand", "maxmin", "baksneppen"}));
  sim_cmd->add_option("--p", sim.p, "normal-step probability");
  sim_cmd->add_option("--sites", sim.sites, "site count")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--steps", sim.steps, "number of steps")
      ->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--seed", sim.seed, "reproducibility key");
  sim_cmd->add_option("--init", sim.init, "iid, constant:<c>, or explicit:<v1,...>");
  sim_cmd->add_option("--out-prefix", sim.out_prefix, "output file prefix");

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->require_subcommand(1);

  struct {
    double p = 0.7;
    long t = 50, reps = 100000;
    std::uint64_t seed = 42;
  } vp1;
  auto* s_prop1 = verify_cmd->add_subcommand("prop1", "age distribution vs closed form");
  s_prop1->add_option("--p", vp1.p);
  s_prop1->add_option("--t", vp1.t);
  s_prop1->add_option("--reps", vp1.reps);
  s_prop1->add_option("--seed", vp1.seed);

  struct {
    double p = 0.9;
    long t = 20, reps = 10000;
    std::uint64_t seed = 42;
  } vt1;
  auto* s_thm1 = verify_cmd->add_subcommand("thm1", "time-t marginal and joint CDFs");
  s_thm1->add_option("--p", vt1.p);
  s_thm1->add_option("--t", vt1.t);
  s_thm1->add_option("--reps", vt1.reps);
  s_thm1->add_option("--seed", vt1.seed);

  struct {
    double p = 0.9;
    long reps = 10000, t_max = 40, sites = 10;
    std::uint64_t seed = 42;
  } vt2;
  auto* s_thm2 = verify_cmd->add_subcommand("thm2", "coupling and convergence");
  s_thm2->add_option("--p", vt2.p);
  s_thm2->add_option("--reps", vt2.reps);
  s_thm2->add_option("--t-max", vt2.t_max);
  s_thm2->add_option("--sites", vt2.sites);
  s_thm2->add_option("--seed", vt2.seed);

  double vst_p = 0.9;
  auto* s_stat = verify_cmd->add_subcommand("stationarity", "phi fixed-point identity");
  s_stat->add_option("--p", vst_p);

  struct {
    double p = 0.9, u = 0.5;
    long steps = 1000, seeds = 100;
    std::uint64_t seed = 42;
  } vce;
  auto* s_chain = verify_cmd->add_subcommand("chain-eq", "iteration vs closed form");
  s_chain->add_option("--p", vce.p);
  s_chain->add_option("--u", vce.u);
  s_chain->add_option("--steps", vce.steps);
  s_chain->add_option("--seeds", vce.seeds);
  s_chain->add_option("--seed", vce.seed);

  double vpg_tol = 1e-12;
  auto* s_pgf = verify_cmd->add_subcommand("pgf", "PGF stationarity residual");
  s_pgf->add_option("--tol", vpg_tol);

  struct {
    double u = 0.5, p = 0.5, tol = 1e-12;
    long samples = 10000, t = 500;
    std::uint64_t seed = 42;
  } vmm;
  auto* s_maxmin = verify_cmd->add_subcommand("maxmin-limit", "(max,min) limit law");
  s_maxmin->add_option("--u", vmm.u);
  s_maxmin->add_option("--p", vmm.p);
  s_maxmin->add_option("--samples", vmm.samples);
  s_maxmin->add_option("--t", vmm.t);
  s_maxmin->add_option("--tol", vmm.tol);
  s_maxmin->add_option("--seed", vmm.seed);

  struct {
    double u1 = 0.5, u2 = 0.7, p = 0.5;
    long reps = 100000;
    std::uint64_t seed = 42;
  } vcv;
  auto* s_cov = verify_cmd->add_subcommand("cov", "stationary covariance Monte Carlo");
  s_cov->add_option("--u1", vcv.u1);
  s_cov->add_option("--u2", vcv.u2);
  s_cov->add_option("--p", vcv.p);
  s_cov->add_option("--reps", vcv.reps);
  s_cov->add_option("--seed", vcv.seed);

  // ---- figure ----
  auto* figure_cmd = app.add_subcommand("figure", "emit plot-ready figure data");
  figure_cmd->require_subcommand(1);

  struct {
    double p = 0.9;
    long sites = 10000, steps = 1000;
    std::uint64_t seed = 42;
    std::string prefix = "figure";
  } f1;
  auto* s_fig1 = figure_cmd->add_subcommand("fig1", "fitness histogram after a long run");
  s_fig1->add_option("--p", f1.p);
  s_fig1->add_option("--sites", f1.sites);
  s_fig1->add_option("--steps", f1.steps);
  s_fig1->add_option("--seed", f1.seed);
  s_fig1->add_option("--out-prefix", f1.prefix);

  struct {
    double p = 0.9;
    long t = 4;
    std::string grid = "0.001:0.999:999";
    std::string prefix = "figure";
  } f2;
  auto* s_fig2 = figure_cmd->add_subcommand("fig2", "phi_t and phi side by side");
  s_fig2->add_option("--p", f2.p);
  s_fig2->add_option("--t", f2.t);
  s_fig2->add_option("--grid", f2.grid);
  s_fig2->add_option("--out-prefix", f2.prefix);

  try {
    app.parse(argc, argv);

    if (phi_cmd->parsed()) {
      const auto horizon = parse_horizon(a_t);
      auto value = [&](double u) {
        return horizon.is_infinite() ? analytic::phi(u, a_p)
                                     : analytic::phi_t(u, a_p, horizon.t());
      };
      if (a_u_grid) {
        std::vector<std::vector<double>> rows;
        for (const double u : io::grid_points(io::parse_grid(*a_u_grid))) {
          rows.push_back({u, value(u)});
        }
        emit(a_out, csv_string({"u", "phi"}, rows), command_line, a_p);
      } else {
        emit(a_out, io::format_double(value(a_u)) + "\n", command_line, a_p);
      }
      return kExitPass;
    }
    if (cov_cmd->parsed()) {
      emit(a_out, io::format_double(analytic::indicator_cov(a_u1, a_u2, a_p)) + "\n", command_line, a_p);
      return kExitPass;
    }
    if (stair_cmd->parsed()) {
      std::vector<std::vector<double>> rows;
      for (const double x : io::grid_points(io::parse_grid(*a_x_grid))) {
        rows.push_back({x, analytic::stationary_theta_cdf(x, a_u, a_p)});
      }
      emit(a_out, csv_string({"x", "F"}, rows), command_line, a_p);
      return kExitPass;
    }
    if (pgf_cmd->parsed()) {
      emit(a_out, io::format_double(analytic::theta_pgf(a_s, a_u, a_p, a_tol)) + "\n", command_line, a_p);
      return kExitPass;
    }

    if (sim_cmd->parsed()) return run_simulate(sim, command_line);

    if (s_prop1->parsed()) {
      return report(verify::prop1(vp1.p, vp1.t, vp1.reps, vp1.seed));
    }
    if (s_thm1->parsed()) {
      return report(verify::thm1(vt1.p, vt1.t, vt1.reps, vt1.seed));
    }
    if (s_thm2->parsed()) {
      return report(verify::thm2(vt2.p, vt2.reps, vt2.t_max, vt2.sites, vt2.seed));
    }
    if (s_stat->parsed()) return report(verify::stationarity(vst_p));
    if (s_chain->parsed()) {
      return report(verify::chain_eq(vce.p, vce.u, vce.steps, vce.seeds, vce.seed));
    }
    if (s_pgf->parsed()) return report(verify::pgf(vpg_tol));
    if (s_maxmin->parsed()) {
      return report(verify::maxmin_limit(vmm.u, vmm.p, vmm.samples, vmm.t,
                                         vmm.tol, vmm.seed));
    }
    if (s_cov->parsed()) {
      return report(verify::cov_mc(vcv.u1, vcv.u2, vcv.p, vcv.reps, vcv.seed));
    }

    if (s_fig1->parsed()) {
      return run_figure("fig1", f1.p, f1.sites, f1.steps, 0, f1.seed, "",
                        f1.prefix, command_line);
    }
    if (s_fig2->parsed()) {
      return run_figure("fig2", f2.p, 0, 0, f2.t, 0, f2.grid, f2.prefix,
                        command_line);
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
