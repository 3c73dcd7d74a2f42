// Acceptance suite: one check per release criterion, each pinned to its
// stated tolerance, one PASS/FAIL line per criterion. Exit code is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "probekit/attack_sim.hpp"
#include "probekit/discrimination.hpp"
#include "probekit/information.hpp"
#include "probekit/probe_model.hpp"
#include "probekit/report.hpp"

using namespace probekit;

namespace {

constexpr double kThird = ErrorRate::kMax;
constexpr uint64_t kTrials = 1000000;

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int criterion, const std::string& label, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, label.c_str(),
              detail.c_str());
  if (!pass) {
    ++failures;
  }
}

std::string residual_detail(double residual, double tolerance) {
  char buffer[128];
  std::snprintf(buffer, sizeof(buffer), "max residual %.3e, tolerance %.1e", residual,
                tolerance);
  return buffer;
}

double grid_error(int i, int n) {
  return i == n - 1 ? kThird : kThird * static_cast<double>(i) / static_cast<double>(n - 1);
}

void criterion_1_endpoints() {
  const double renyi_0 = renyi_information_from_error(ErrorRate(0.0)).value;
  const double renyi_max = renyi_information_from_error(ErrorRate(kThird)).value;
  const double q_max = overlap_closed_form(ErrorRate(kThird)).value();
  const double residual =
      std::max({std::abs(renyi_0), std::abs(renyi_max - 1.0), std::abs(q_max)});
  report(1, "closed-form endpoints", residual <= 1e-12, residual_detail(residual, 1e-12));
}

void criterion_2_route_equivalence() {
  const Timer timer;
  double residual = 0.0;
  constexpr int kN = 1000;
  for (int i = 0; i < kN; ++i) {
    const ErrorRate e(grid_error(i, kN));
    residual = std::max(residual, std::abs(overlap_from_vectors(e).value() -
                                           overlap_closed_form(e).value()));
  }
  const ErrorRate quarter(0.25);
  residual = std::max(residual, std::abs(overlap_from_vectors(quarter).value() -
                                         overlap_closed_form(quarter).value()));
  const bool pass = residual <= 1e-12 && timer.seconds() < 1.0;
  report(2, "overlap route equivalence across both sign branches", pass,
         residual_detail(residual, 1e-12) + ", " + std::to_string(timer.seconds()) + " s");
}

void criterion_3_parameterization_duality() {
  double residual = 0.0;
  constexpr int kN = 1000;
  for (int i = 0; i < kN; ++i) {
    const ErrorRate e(grid_error(i, kN));
    const InconclusiveRate rq = inconclusive_from_error(e);
    residual = std::max(residual, std::abs(error_from_inconclusive(rq).value() - e.value()));
    residual = std::max(residual, std::abs(rq.value() - overlap_closed_form(e).value()));

    const double rq_grid = i == kN - 1 ? 1.0 : double(i) / double(kN - 1);
    const InconclusiveRate r(rq_grid);
    const ErrorRate e_of_r = error_from_inconclusive(r);
    residual =
        std::max(residual, std::abs(eta_from_inconclusive(r) - eta_from_error(e_of_r)));
    const ProbeVector a1_rq = state_A1_of_inconclusive(r);
    const ProbeVector a2_rq = state_A2_of_inconclusive(r);
    const ProbeVector a1_e = state_A1(e_of_r);
    const ProbeVector a2_e = state_A2(e_of_r);
    residual = std::max({residual, std::abs(a1_rq.w0 - a1_e.w0), std::abs(a1_rq.w3 - a1_e.w3),
                         std::abs(a2_rq.w0 - a2_e.w0), std::abs(a2_rq.w3 - a2_e.w3)});
  }
  residual = std::max(residual, std::abs(reflection_coefficient(InconclusiveRate(0.0)) - 1.0));
  residual = std::max(residual, std::abs(reflection_coefficient(InconclusiveRate(1.0))));
  report(3, "parameterization duality E <-> R?", residual <= 1e-12,
         residual_detail(residual, 1e-12));
}

void criterion_4_norm_identities() {
  double residual = 0.0;
  double oracle_residual = 0.0;
  constexpr int kN = 1000;
  for (int i = 0; i < kN; ++i) {
    const ErrorRate e(grid_error(i, kN));
    const double ev = e.value();

    // The symbolic-expansion oracle confirms each identity first ...
    oracle_residual = std::max(
        {oracle_residual, std::abs(oracle::alpha_pm_norm_squared(ev) - 16.0 * (1.0 - ev)),
         std::abs(oracle::alpha_error_norm_squared(ev) - 16.0 * ev),
         std::abs(oracle::a1_a2_overlap(ev) - (1.0 - 4.0 * ev))});

    // ... and the implementation must land on the same values.
    residual = std::max({residual,
                         std::abs(alpha_plus(e).norm_squared() - 16.0 * (1.0 - ev)),
                         std::abs(alpha_minus(e).norm_squared() - 16.0 * (1.0 - ev)),
                         std::abs(alpha_error(e).norm_squared() - 16.0 * ev),
                         std::abs(state_A1(e).dot(state_A2(e)) - (1.0 - 4.0 * ev))});
  }
  const double combined = std::max(residual, oracle_residual);
  report(4, "derived norm identities", combined <= 1e-10, residual_detail(combined, 1e-10));
}

void criterion_5_povm_validity() {
  const Timer timer;
  double worst_violation = 0.0;
  double rate_residual = 0.0;
  bool all_valid = true;
  for (int i = 1; i <= 50; ++i) {
    const ErrorRate e(kThird * i / 50.0);
    const PovmSet povm = build_povm(e);
    const PovmValidation validation = validate_povm(povm);
    for (const PovmCheck& check : validation.checks) {
      if (!check.pass) {
        all_valid = false;
        worst_violation = std::max(worst_violation, check.residual);
      }
    }
    const double achieved = outcome_probabilities(alpha_plus(e), povm).inconclusive;
    rate_residual = std::max(rate_residual, std::abs(achieved - oracle::overlap_q(e.value())));
  }
  const bool pass = all_valid && rate_residual <= 1e-10 && timer.seconds() < 1.0;
  report(5, "POVM validity and achieved inconclusive rates", pass,
         residual_detail(std::max(worst_violation, rate_residual), 1e-10) + ", " +
             std::to_string(timer.seconds()) + " s");
}

void criterion_6_monte_carlo_fidelity() {
  const Timer timer;
  bool pass = true;
  double worst_pull = 0.0;
  for (const double e : {0.1, 0.2, 0.25, 0.3}) {
    const SimulationSummary summary = run_simulation(ProtocolConfig::from_error_rate(
        ErrorRate(e), kTrials, 42, Measurement::Povm, Relay::All, 0.0));

    const double sigma_e = oracle::binomial_sigma(e, double(summary.counts.sifted_delivered));
    const double pull_e = std::abs(summary.sifted_error_rate - e) / sigma_e;

    const double q = oracle::overlap_q(e);
    const double sigma_q = oracle::binomial_sigma(q, double(summary.counts.sifted_correct));
    const double pull_q = std::abs(summary.inconclusive_rate_observed - q) / sigma_q;

    worst_pull = std::max({worst_pull, pull_e, pull_q});
    pass = pass && pull_e <= 3.0 && pull_q <= 3.0 && summary.eve_conclusive_accuracy == 1.0;
  }
  const double elapsed = timer.seconds();
  pass = pass && elapsed < 30.0;
  char detail[128];
  std::snprintf(detail, sizeof(detail), "worst pull %.2f sigma, conclusive accuracy exact, %.2f s",
                worst_pull, elapsed);
  report(6, "Monte Carlo fidelity at 10^6 trials", pass, detail);
}

void criterion_7_empirical_renyi() {
  bool pass = true;
  double worst_gap = 0.0;
  for (const double e : {0.1, 0.2, 0.3}) {
    const SimulationSummary summary = run_simulation(ProtocolConfig::from_error_rate(
        ErrorRate(e), kTrials, 42, Measurement::Projective, Relay::All, 0.0));
    const double expected = oracle::renyi_bits(oracle::overlap_q(e));
    const double gap = std::abs(summary.empirical_renyi_bits.value_or(-1.0) - expected);
    worst_gap = std::max(worst_gap, gap);
    pass = pass && gap <= 0.01;
  }
  report(7, "empirical Renyi information converges to log2(2-Q^2)", pass,
         residual_detail(worst_gap, 1e-2));
}

void criterion_8_loss_matching() {
  const SimulationSummary attack = run_simulation(loss_matched_config(0.5, kTrials, 7));
  const SimulationSummary no_probe = run_simulation(ProtocolConfig::from_error_rate(
      ErrorRate(0.0), kTrials, 8, Measurement::Povm, Relay::All, 0.5));

  const double sigma = oracle::binomial_sigma(0.5, double(kTrials));
  const bool accuracy_exact = attack.eve_conclusive_accuracy == 1.0;
  const bool fraction_ok = std::abs(attack.delivered_fraction - 0.5) <= 3.0 * sigma;
  const bool masked = std::abs(attack.delivered_fraction - no_probe.delivered_fraction) <=
                      3.0 * std::sqrt(2.0) * sigma;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "accuracy %.17g, delivered %.5f vs no-probe %.5f, 3 sigma %.5f",
                attack.eve_conclusive_accuracy, attack.delivered_fraction,
                no_probe.delivered_fraction, 3.0 * sigma);
  report(8, "loss-matched conclusive relay masks as channel loss",
         accuracy_exact && fraction_ok && masked, detail);
}

void criterion_9_determinism() {
  const ProtocolConfig config = ProtocolConfig::from_error_rate(
      ErrorRate(0.2), 500000, 314159, Measurement::Povm, Relay::All, 0.0);
  const std::string baseline = summary_to_json(run_simulation(config, {1, KernelChoice::Scalar}));
  bool pass = baseline == summary_to_json(run_simulation(config, {1, KernelChoice::Scalar}));
  for (const int threads : {2, 3, 8}) {
    pass = pass &&
           baseline == summary_to_json(run_simulation(config, {threads, KernelChoice::Scalar}));
  }
  std::string kernels = "scalar";
  if (avx2_kernel_available()) {
    kernels = "scalar+avx2";
    for (const int threads : {1, 3}) {
      pass = pass &&
             baseline == summary_to_json(run_simulation(config, {threads, KernelChoice::Avx2}));
    }
  }
  report(9, "byte-identical summaries across runs, worker counts, kernels", pass,
         "kernels: " + kernels);
}

}  // namespace

int main() {
  criterion_1_endpoints();
  criterion_2_route_equivalence();
  criterion_3_parameterization_duality();
  criterion_4_norm_identities();
  criterion_5_povm_validity();
  criterion_6_monte_carlo_fidelity();
  criterion_7_empirical_renyi();
  criterion_8_loss_matching();
  criterion_9_determinism();
  std::printf("acceptance: %d/9 criteria passed\n", 9 - failures);
  return failures;
}
