#include "probekit/trial_kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace probekit {

EventThreshold threshold_for_probability(double p) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw std::domain_error("event probability must lie in [0, 1]");
  }
  const auto bound = static_cast<uint64_t>(std::llround(p * 4294967296.0));
  if (bound >= (uint64_t{1} << 32)) {
    return {0xFFFFFFFFu, true};
  }
  return {static_cast<uint32_t>(bound), false};
}

TrialCounts& TrialCounts::operator+=(const TrialCounts& other) {
  basis_matched += other.basis_matched;
  delivered += other.delivered;
  sifted_delivered += other.sifted_delivered;
  sifted_error += other.sifted_error;
  sifted_correct += other.sifted_correct;
  sifted_correct_inconclusive += other.sifted_correct_inconclusive;
  conclusive_delivered += other.conclusive_delivered;
  conclusive_correct += other.conclusive_correct;
  conclusive_correct_eve_match += other.conclusive_correct_eve_match;
  eve_defined += other.eve_defined;
  eve_match += other.eve_match;
  for (int o = 0; o < 2; ++o) {
    for (int s = 0; s < 2; ++s) {
      proj_joint[o][s] += other.proj_joint[o][s];
    }
  }
  return *this;
}

TrialEvents classify_trial(const KernelParams& params, uint64_t trial_index) {
  const std::array<uint32_t, 8> w = trial_words(params.seed, trial_index);

  TrialEvents t;
  t.alice_bit = w[kWordAliceBit] >> 31;
  t.alice_basis = w[kWordAliceBasis] >> 31;
  t.bob_basis = w[kWordBobBasis] >> 31;
  t.sifted = t.alice_basis == t.bob_basis;
  t.error_draw = params.error.fires(w[kWordError]);
  t.bob_bit_sifted = t.alice_bit ^ static_cast<uint32_t>(t.error_draw);
  t.bob_bit_unsifted = w[kWordUnsiftedBob] >> 31;

  const uint32_t secondary = w[kWordEveSecondary] >> 31;
  if (params.measurement == Measurement::Povm) {
    t.inconclusive = params.inconclusive.fires(w[kWordEvePrimary]);
    // A conclusive outcome identifies the correlated state, hence the
    // receiver's bit, on correct trials; on receiver-error trials the
    // probe carries no bit correlation and the identity is a fair coin.
    t.eve_bit = t.error_draw ? secondary : t.bob_bit_sifted;
  } else {
    const bool identified = params.identify.fires(w[kWordEvePrimary]);
    t.proj_outcome = t.error_draw ? secondary
                                  : (t.bob_bit_sifted ^ static_cast<uint32_t>(!identified));
    t.eve_bit = t.proj_outcome;
  }

  if (params.relay == Relay::ConclusiveOnly) {
    t.delivered = !t.inconclusive;
  } else {
    t.delivered = !params.loss.fires(w[kWordLoss]);
  }

  t.eve_defined =
      t.sifted && (params.measurement == Measurement::Povm ? !t.inconclusive : true);
  return t;
}

void accumulate_trials_scalar(const KernelParams& params, uint64_t first, uint64_t last,
                              TrialCounts& counts) {
  const bool povm = params.measurement == Measurement::Povm;
  for (uint64_t i = first; i < last; ++i) {
    const TrialEvents t = classify_trial(params, i);
    const bool sifted_delivered = t.sifted && t.delivered;

    counts.basis_matched += t.sifted;
    counts.delivered += t.delivered;
    counts.sifted_delivered += sifted_delivered;
    counts.sifted_error += sifted_delivered && t.error_draw;
    counts.sifted_correct += t.sifted && !t.error_draw;

    if (povm) {
      counts.sifted_correct_inconclusive += t.sifted && !t.error_draw && t.inconclusive;
      const bool conclusive_delivered = sifted_delivered && !t.inconclusive;
      counts.conclusive_delivered += conclusive_delivered;
      counts.conclusive_correct += conclusive_delivered && !t.error_draw;
      counts.conclusive_correct_eve_match +=
          conclusive_delivered && !t.error_draw && t.eve_bit == t.bob_bit_sifted;
    } else if (sifted_delivered && !t.error_draw) {
      ++counts.proj_joint[t.proj_outcome][t.bob_bit_sifted];
    }

    const bool defined_delivered = t.eve_defined && t.delivered;
    counts.eve_defined += defined_delivered;
    counts.eve_match += defined_delivered && t.eve_bit == t.bob_bit_sifted;
  }
}

bool avx2_kernel_compiled() {
#if defined(PROBEKIT_HAVE_AVX2)
  return true;
#else
  return false;
#endif
}

bool avx2_kernel_available() {
#if defined(PROBEKIT_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

KernelFn select_kernel(KernelChoice choice) {
  switch (choice) {
    case KernelChoice::Scalar:
      return &accumulate_trials_scalar;
    case KernelChoice::Avx2:
      if (!avx2_kernel_available()) {
        throw std::runtime_error("the avx2 kernel is not available on this build/CPU");
      }
#if defined(PROBEKIT_HAVE_AVX2)
      return &accumulate_trials_avx2;
#else
      return &accumulate_trials_scalar;  // unreachable
#endif
    case KernelChoice::Auto:
    default:
#if defined(PROBEKIT_HAVE_AVX2)
      if (avx2_kernel_available()) {
        return &accumulate_trials_avx2;
      }
#endif
      return &accumulate_trials_scalar;
  }
}

const char* kernel_name(KernelFn kernel) {
#if defined(PROBEKIT_HAVE_AVX2)
  if (kernel == &accumulate_trials_avx2) {
    return "avx2";
  }
#endif
  return kernel == &accumulate_trials_scalar ? "scalar" : "unknown";
}

}  // namespace probekit
