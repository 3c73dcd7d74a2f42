#include "probekit/attack_sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "probekit/information.hpp"

namespace probekit {

namespace {

constexpr uint64_t kChunkTrials = 1 << 16;

void validate_config(Measurement measurement, Relay relay, double channel_loss) {
  if (relay == Relay::ConclusiveOnly && measurement != Measurement::Povm) {
    throw std::invalid_argument("a conclusive-only relay requires the povm measurement");
  }
  if (!std::isfinite(channel_loss) || channel_loss < 0.0 || channel_loss > 1.0) {
    throw std::domain_error("channel loss must lie in [0, 1]");
  }
}

double safe_ratio(uint64_t numerator, uint64_t denominator) {
  return denominator == 0 ? 0.0 : static_cast<double>(numerator) / static_cast<double>(denominator);
}

// Plug-in posterior-collision estimate over the (outcome x bit) counts:
// 1 + log2(sum_o p(o) sum_s p(s|o)^2). Converges to log2(2 - Q^2).
double plug_in_renyi_bits(const TrialCounts& counts) {
  const uint64_t total = counts.proj_joint[0][0] + counts.proj_joint[0][1] +
                         counts.proj_joint[1][0] + counts.proj_joint[1][1];
  if (total == 0) {
    return 0.0;
  }
  double collision = 0.0;
  for (int o = 0; o < 2; ++o) {
    const uint64_t marginal = counts.proj_joint[o][0] + counts.proj_joint[o][1];
    if (marginal == 0) {
      continue;
    }
    for (int s = 0; s < 2; ++s) {
      const double joint = static_cast<double>(counts.proj_joint[o][s]);
      collision += joint * joint / (static_cast<double>(total) * static_cast<double>(marginal));
    }
  }
  return 1.0 + std::log2(collision);
}

TrialCounts run_counts(const KernelParams& params, uint64_t trials, const RunOptions& options) {
  const KernelFn kernel = select_kernel(options.kernel);
  const int threads = std::max(1, options.threads);

  if (threads == 1 || trials <= kChunkTrials) {
    TrialCounts counts;
    kernel(params, 0, trials, counts);
    return counts;
  }

  std::atomic<uint64_t> cursor{0};
  std::mutex merge_mutex;
  TrialCounts total;
  auto worker = [&] {
    TrialCounts local;
    for (;;) {
      const uint64_t begin = cursor.fetch_add(kChunkTrials, std::memory_order_relaxed);
      if (begin >= trials) {
        break;
      }
      kernel(params, begin, std::min(begin + kChunkTrials, trials), local);
    }
    const std::scoped_lock lock(merge_mutex);
    total += local;
  };

  std::vector<std::jthread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back(worker);
  }
  pool.clear();  // join
  return total;
}

}  // namespace

ProtocolConfig ProtocolConfig::from_error_rate(ErrorRate e, uint64_t trials, uint64_t seed,
                                               Measurement measurement, Relay relay,
                                               double channel_loss) {
  validate_config(measurement, relay, channel_loss);
  return {e,    inconclusive_from_error(e), ParamKind::ErrorRate, trials, seed,
          measurement, relay, channel_loss};
}

ProtocolConfig ProtocolConfig::from_inconclusive_rate(InconclusiveRate rq, uint64_t trials,
                                                      uint64_t seed, Measurement measurement,
                                                      Relay relay, double channel_loss) {
  validate_config(measurement, relay, channel_loss);
  return {error_from_inconclusive(rq), rq, ParamKind::InconclusiveRate, trials, seed,
          measurement, relay, channel_loss};
}

ProbeVector ProtocolConfig::probe_initial_state() const {
  return state_A2_of_inconclusive(inconclusive_rate);
}

ProtocolConfig loss_matched_config(double loss, uint64_t trials, uint64_t seed) {
  return ProtocolConfig::from_inconclusive_rate(InconclusiveRate(loss), trials, seed,
                                                Measurement::Povm, Relay::ConclusiveOnly, loss);
}

KernelParams kernel_params(const ProtocolConfig& config) {
  KernelParams params;
  params.seed = config.seed;
  params.measurement = config.measurement;
  params.relay = config.relay;
  params.error = threshold_for_probability(config.error_rate.value());
  params.inconclusive = threshold_for_probability(config.inconclusive_rate.value());
  params.loss = threshold_for_probability(config.channel_loss);
  const double q = config.inconclusive_rate.value();
  params.identify = threshold_for_probability(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - q * q))));
  return params;
}

TrialRecord run_trial(const ProtocolConfig& config, uint64_t trial_index) {
  const TrialEvents t = classify_trial(kernel_params(config), trial_index);

  TrialRecord record;
  record.index = trial_index;
  record.alice_bit = static_cast<uint8_t>(t.alice_bit);
  record.alice_basis = static_cast<uint8_t>(t.alice_basis);
  record.bob_basis = static_cast<uint8_t>(t.bob_basis);
  record.sifted = t.sifted;
  record.delivered = t.delivered;
  if (t.delivered) {
    record.bob_bit = static_cast<int8_t>(t.sifted ? t.bob_bit_sifted : t.bob_bit_unsifted);
    record.bob_error = t.sifted && t.error_draw;
  }
  if (config.measurement == Measurement::Povm) {
    record.eve_outcome = t.inconclusive ? MeasurementOutcome::Inconclusive
                         : t.eve_bit == 0 ? MeasurementOutcome::ConclusivePlus
                                          : MeasurementOutcome::ConclusiveMinus;
  } else if (t.sifted) {
    record.eve_projective_outcome = static_cast<int8_t>(t.proj_outcome);
  }
  if (t.eve_defined) {
    // Known only once the bases are announced during reconciliation.
    record.eve_bit = static_cast<int8_t>(t.eve_bit);
  }
  return record;
}

SimulationSummary run_simulation(const ProtocolConfig& config, const RunOptions& options) {
  if (config.trials == 0) {
    throw std::invalid_argument("simulation requires at least one trial");
  }

  SimulationSummary summary{.empirical_renyi_bits = std::nullopt,
                            .counts = run_counts(kernel_params(config), config.trials, options),
                            .config = config};

  const TrialCounts& counts = summary.counts;
  summary.sifted_count = counts.sifted_delivered;
  summary.sifted_error_rate = safe_ratio(counts.sifted_error, counts.sifted_delivered);
  summary.inconclusive_rate_observed =
      safe_ratio(counts.sifted_correct_inconclusive, counts.sifted_correct);
  summary.eve_conclusive_accuracy =
      safe_ratio(counts.conclusive_correct_eve_match, counts.conclusive_correct);
  summary.eve_accuracy_overall = safe_ratio(counts.eve_match, counts.eve_defined);
  summary.delivered_fraction = safe_ratio(counts.delivered, config.trials);
  if (config.measurement == Measurement::Projective) {
    summary.empirical_renyi_bits = plug_in_renyi_bits(counts);
  }
  return summary;
}

SimulationSummary run_simulation(const ProtocolConfig& config) {
  return run_simulation(config, RunOptions{});
}

}  // namespace probekit
