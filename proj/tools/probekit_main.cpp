#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "probekit/attack_sim.hpp"
#include "probekit/report.hpp"
#include "probekit/validation.hpp"

namespace {

using namespace probekit;

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitUsage = 2;

struct ParameterFlags {
  std::optional<double> error_rate;
  std::optional<double> inconclusive_rate;
  std::optional<double> loss_match;

  int provided() const {
    return int(error_rate.has_value()) + int(inconclusive_rate.has_value()) +
           int(loss_match.has_value());
  }
};

void add_parameter_flags(CLI::App* cmd, ParameterFlags& flags) {
  cmd->add_option("--error-rate", flags.error_rate, "probe-induced error rate E in [0, 1/3]");
  cmd->add_option("--inconclusive-rate", flags.inconclusive_rate,
                  "POVM inconclusive rate R? in [0, 1]");
  cmd->add_option("--loss-match", flags.loss_match,
                  "channel loss rate matched by the inconclusive rate, in [0, 1]");
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output path: " + path);
  }
  out << payload;
}

int run_info(const ParameterFlags& flags, const std::string& format) {
  if (flags.provided() != 1) {
    throw CLI::ValidationError(
        "info", "exactly one of --error-rate / --inconclusive-rate / --loss-match is required");
  }
  ReportRow row = flags.error_rate ? make_report_row(ErrorRate(*flags.error_rate))
                  : flags.inconclusive_rate
                      ? make_report_row(InconclusiveRate(*flags.inconclusive_rate))
                      : make_report_row(InconclusiveRate(*flags.loss_match));
  if (format == "json") {
    std::cout << row_to_json(row);
  } else if (format == "csv") {
    std::cout << kCsvHeader << '\n' << csv_row(row) << '\n';
  } else {
    std::cout << row_to_text(row);
  }
  return kExitOk;
}

int run_sweep(const std::string& parameter, double from, double to, int steps,
              const std::string& output) {
  const ParamKind kind =
      parameter == "error-rate" ? ParamKind::ErrorRate : ParamKind::InconclusiveRate;
  std::ostringstream buffer;
  write_sweep_csv(buffer, kind, from, to, steps);
  write_output(output, buffer.str());
  return kExitOk;
}

int run_simulate(const ParameterFlags& flags, uint64_t trials, uint64_t seed,
                 const std::string& measurement, const std::string& relay, double channel_loss,
                 const std::string& format, const std::string& output, int threads,
                 const std::string& kernel) {
  if (flags.provided() != 1) {
    throw CLI::ValidationError(
        "simulate",
        "exactly one of --error-rate / --inconclusive-rate / --loss-match is required");
  }

  ProtocolConfig config = [&] {
    if (flags.loss_match) {
      return loss_matched_config(*flags.loss_match, trials, seed);
    }
    const Measurement m =
        measurement == "projective" ? Measurement::Projective : Measurement::Povm;
    const Relay r = relay == "conclusive-only" ? Relay::ConclusiveOnly : Relay::All;
    if (flags.error_rate) {
      return ProtocolConfig::from_error_rate(ErrorRate(*flags.error_rate), trials, seed, m, r,
                                             channel_loss);
    }
    return ProtocolConfig::from_inconclusive_rate(InconclusiveRate(*flags.inconclusive_rate),
                                                  trials, seed, m, r, channel_loss);
  }();

  RunOptions options;
  options.threads = threads;
  options.kernel = kernel == "scalar" ? KernelChoice::Scalar
                   : kernel == "avx2" ? KernelChoice::Avx2
                                      : KernelChoice::Auto;

  const SimulationSummary summary = run_simulation(config, options);
  write_output(output, format == "json" ? summary_to_json(summary) : summary_to_text(summary));
  return kExitOk;
}

int run_validate(int grid_points, bool inject_perturbation) {
  const std::vector<CheckResult> results =
      run_analytic_checks({grid_points, inject_perturbation});
  for (const CheckResult& check : results) {
    std::printf("%-34s %s  residual=%.3e  tol=%.1e\n", check.name.c_str(),
                check.pass ? "ok  " : "FAIL", check.max_residual, check.tolerance);
  }
  const bool ok = all_pass(results);
  std::printf("%zu/%zu checks passed\n",
              results.size() - static_cast<size_t>(std::count_if(
                                   results.begin(), results.end(),
                                   [](const CheckResult& c) { return !c.pass; })),
              results.size());
  return ok ? kExitOk : kExitValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BB84 entangling-probe attack toolkit"};
  app.require_subcommand(1);

  // info
  auto* info = app.add_subcommand("info", "evaluate one parameter point");
  ParameterFlags info_flags;
  add_parameter_flags(info, info_flags);
  std::string info_format = "text";
  info->add_option("--format", info_format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // sweep
  auto* sweep = app.add_subcommand("sweep", "CSV sweep over a parameter range");
  std::string sweep_parameter;
  sweep->add_option("parameter", sweep_parameter, "error-rate | inconclusive-rate")
      ->required()
      ->check(CLI::IsMember({"error-rate", "inconclusive-rate"}));
  double sweep_from = 0.0, sweep_to = 0.0;
  int sweep_steps = 0;
  std::string sweep_output = "-";
  sweep->add_option("--from", sweep_from, "range start")->required();
  sweep->add_option("--to", sweep_to, "range end")->required();
  sweep->add_option("--steps", sweep_steps, "number of rows (>= 2)")->required();
  sweep->add_option("--output", sweep_output, "output path, or - for stdout");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo attack run");
  ParameterFlags sim_flags;
  add_parameter_flags(simulate, sim_flags);
  uint64_t trials = 1000000;
  uint64_t seed = 0;
  std::string measurement = "povm";
  std::string relay = "all";
  double channel_loss = 0.0;
  std::string sim_format = "text";
  std::string sim_output = "-";
  int threads = 1;
  std::string kernel = "auto";
  simulate->add_option("--trials", trials, "number of transmitted signals");
  simulate->add_option("--seed", seed, "64-bit RNG seed");
  simulate->add_option("--measurement", measurement, "projective | povm")
      ->check(CLI::IsMember({"projective", "povm"}));
  simulate->add_option("--relay", relay, "all | conclusive-only")
      ->check(CLI::IsMember({"all", "conclusive-only"}));
  simulate->add_option("--channel-loss", channel_loss, "photon loss rate in [0, 1]");
  simulate->add_option("--format", sim_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  simulate->add_option("--output", sim_output, "output path, or - for stdout");
  simulate->add_option("--threads", threads, "worker threads (summary is thread-invariant)");
  simulate->add_option("--kernel", kernel, "auto | scalar | avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  // validate
  auto* validate = app.add_subcommand("validate", "run the analytic-invariant suite");
  int grid_points = 1000;
  bool inject_perturbation = false;
  validate->add_option("--grid-points", grid_points, "grid resolution")
      ->check(CLI::PositiveNumber);
  validate->add_flag("--inject-perturbation", inject_perturbation)->group("");  // test hook

  try {
    app.parse(argc, argv);
    if (info->parsed()) {
      return run_info(info_flags, info_format);
    }
    if (sweep->parsed()) {
      return run_sweep(sweep_parameter, sweep_from, sweep_to, sweep_steps, sweep_output);
    }
    if (simulate->parsed()) {
      return run_simulate(sim_flags, trials, seed, measurement, relay, channel_loss,
                          sim_format, sim_output, threads, kernel);
    }
    return run_validate(grid_points, inject_perturbation);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
