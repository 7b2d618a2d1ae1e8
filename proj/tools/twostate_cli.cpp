// twostate: figure data as CSV and the invariant suite.
//
//   twostate fig-classical   [--theta-steps N] [--out FILE]
//   twostate fig-channel     [--theta RAD] [--unknown] [--alpha-steps N] [--out FILE]
//   twostate fig-telecloning [--theta-steps N] [--out FILE]
//   twostate verify          [--samples N] [--seed S] [--out FILE]
//
// Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "twostate/csv.hpp"
#include "twostate/ensemble.hpp"
#include "twostate/figures.hpp"
#include "twostate/rng.hpp"
#include "twostate/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;

struct RunConfig {
  std::size_t theta_steps = 181;
  std::size_t alpha_steps = 101;
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 42;
  std::string output_path;  // empty: stdout
  double theta = twostate::kPi / 4;
  bool unknown = false;
  double tamper = 0.0;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void validate(const RunConfig& c) {
  if (c.theta_steps < 2) throw ConfigError("--theta-steps must be >= 2");
  if (c.alpha_steps < 2) throw ConfigError("--alpha-steps must be >= 2");
  if (c.samples < 100) throw ConfigError("--samples must be >= 100");
  if (!(c.theta >= 0.0 && c.theta <= twostate::kHalfPi)) throw ConfigError("--theta must lie in [0, pi/2]");
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw ConfigError("cannot open output file: " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw ConfigError("failed writing output");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<std::string> metadata(const std::string& command, const RunConfig& c) {
  return {"command: " + command,
          std::string("version: ") + twostate::kVersion,
          "theta_steps: " + std::to_string(c.theta_steps),
          "alpha_steps: " + std::to_string(c.alpha_steps),
          "samples: " + std::to_string(c.samples),
          "seed: " + std::to_string(c.seed),
          "rng: " + std::string(twostate::kRngDescription)};
}

int emit(const std::string& command, const RunConfig& c, twostate::CsvTable table) {
  table.metadata = metadata(command, c);
  if (command == "fig-channel") {
    table.metadata.push_back(c.unknown ? "variant: unknown-state" : "theta: " + twostate::format_number(c.theta));
  }
  Output out(c.output_path);
  twostate::write_csv(out.stream(), table);
  out.finish();
  return kExitOk;
}

int run_verify(const RunConfig& c) {
  twostate::VerifyOptions opt;
  opt.theta_steps = c.theta_steps;
  opt.alpha_steps = c.alpha_steps;
  opt.samples = c.samples;
  opt.seed = twostate::RngSeed{c.seed};
  opt.tamper = c.tamper;
  const auto results = twostate::run_verification(opt);

  Output out(c.output_path);
  std::ostream& os = out.stream();
  for (const auto& m : metadata("verify", c)) os << "# " << m << '\n';
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.module << ": " << r.name
       << "  deviation=" << twostate::format_number(r.deviation)
       << " tolerance=" << twostate::format_number(r.tolerance);
    if (!r.detail.empty()) os << "  (" << r.detail << ")";
    os << '\n';
  }
  os << (results.size() - failed) << "/" << results.size() << " checks passed\n";
  out.finish();
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  CLI::App app{"Two-state teleportation: figure data and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--theta-steps", config.theta_steps, "Points on the theta grid [0, pi/2]");
  app.add_option("--alpha-steps", config.alpha_steps, "Points on the alpha^2 grid [0, 1/2]");
  app.add_option("--samples", config.samples, "Monte Carlo samples");
  app.add_option("--seed", config.seed, "64-bit RNG seed");
  app.add_option("--out", config.output_path, "Output file (default stdout)");

  auto* classical = app.add_subcommand("fig-classical", "Classical strategies vs theta");
  auto* channel = app.add_subcommand("fig-channel", "Strategies through a non-maximal channel vs alpha^2");
  channel->add_option("--theta", config.theta, "Ensemble angle in radians (default pi/4)");
  channel->add_flag("--unknown", config.unknown, "Unknown-state variant");
  auto* telecloning = app.add_subcommand("fig-telecloning", "Two-state telecloning vs theta");
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--tamper", config.tamper, "Perturb the optimized classical fidelity (harness self-test)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    validate(config);
    if (*classical) return emit("fig-classical", config, twostate::to_table(twostate::classical_sweep(config.theta_steps)));
    if (*channel) {
      if (config.unknown) {
        return emit("fig-channel", config, twostate::to_table(twostate::unknown_channel_sweep(config.alpha_steps)));
      }
      return emit("fig-channel", config,
                  twostate::to_table(twostate::channel_sweep(config.theta, config.alpha_steps)));
    }
    if (*telecloning) {
      return emit("fig-telecloning", config, twostate::to_table(twostate::telecloning_sweep(config.theta_steps)));
    }
    if (*verify) return run_verify(config);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
