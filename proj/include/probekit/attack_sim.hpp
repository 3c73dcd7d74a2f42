#pragma once

#include <cstdint>
#include <optional>

#include "probekit/discrimination.hpp"
#include "probekit/domain.hpp"
#include "probekit/probe_model.hpp"
#include "probekit/trial_kernel.hpp"

namespace probekit {

enum class ParamKind { ErrorRate, InconclusiveRate };

/// Immutable run description. The error rate and the inconclusive rate
/// are stored as a consistent pair (E = (1-R?)/(3-R?)); `specified`
/// remembers which one the caller fixed. A conclusive-only relay
/// requires the POVM measurement.
struct ProtocolConfig {
  ErrorRate error_rate;
  InconclusiveRate inconclusive_rate;
  ParamKind specified = ParamKind::ErrorRate;
  uint64_t trials = 0;
  uint64_t seed = 0;
  Measurement measurement = Measurement::Povm;
  Relay relay = Relay::All;
  double channel_loss = 0.0;

  static ProtocolConfig from_error_rate(ErrorRate e, uint64_t trials, uint64_t seed,
                                        Measurement measurement, Relay relay,
                                        double channel_loss);
  static ProtocolConfig from_inconclusive_rate(InconclusiveRate rq, uint64_t trials,
                                               uint64_t seed, Measurement measurement,
                                               Relay relay, double channel_loss);

  /// The probe's initial state |A2> tuned to the configured
  /// inconclusive rate.
  ProbeVector probe_initial_state() const;
};

/// Attack tuned so the suppression of inconclusive signals masquerades
/// as the channel's photon loss: POVM measurement, conclusive-only
/// relay, R? = loss.
ProtocolConfig loss_matched_config(double loss, uint64_t trials, uint64_t seed);

/// Everything observable about one protocol trial. `sifted` refers to
/// the basis comparison alone; a trial contributes to the sifted key
/// only if it was also delivered.
struct TrialRecord {
  uint64_t index = 0;
  uint8_t alice_bit = 0;
  uint8_t alice_basis = 0;
  uint8_t bob_basis = 0;
  bool sifted = false;
  bool delivered = false;
  int8_t bob_bit = -1;  // -1: photon never reached bob
  bool bob_error = false;
  std::optional<MeasurementOutcome> eve_outcome;  // povm only
  int8_t eve_projective_outcome = -1;             // projective, sifted trials
  int8_t eve_bit = -1;  // post-reconciliation; -1 while unknown
};

TrialRecord run_trial(const ProtocolConfig& config, uint64_t trial_index);

struct SimulationSummary {
  uint64_t sifted_count = 0;  // delivered and basis-matched
  double sifted_error_rate = 0.0;
  double inconclusive_rate_observed = 0.0;  // among sifted correct trials
  double eve_conclusive_accuracy = 0.0;     // conclusive correct trials
  double eve_accuracy_overall = 0.0;        // all delivered sifted trials with a defined eve bit
  double delivered_fraction = 0.0;
  std::optional<double> empirical_renyi_bits;  // projective mode only
  TrialCounts counts;
  ProtocolConfig config;
};

struct RunOptions {
  int threads = 1;
  KernelChoice kernel = KernelChoice::Auto;
};

/// Monte Carlo over config.trials independent trials. Identical configs
/// produce bit-identical summaries for any thread count or kernel: every
/// trial draws from its own (seed, index) substream and aggregation is
/// integer counting.
SimulationSummary run_simulation(const ProtocolConfig& config, const RunOptions& options);
SimulationSummary run_simulation(const ProtocolConfig& config);

KernelParams kernel_params(const ProtocolConfig& config);

}  // namespace probekit
