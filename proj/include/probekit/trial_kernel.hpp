#pragma once

#include <cstdint>

#include "probekit/philox.hpp"

// Branchless per-trial classification shared by the scalar reference
// kernel and the AVX2 variant. Every stochastic event is a threshold
// comparison against one fixed 32-bit word of the trial's Philox block,
// so both kernels see identical draws and produce identical counts.

namespace probekit {

enum class Measurement { Projective, Povm };
enum class Relay { All, ConclusiveOnly };
enum class KernelChoice { Auto, Scalar, Avx2 };

// Word assignment within a trial's eight uniforms.
inline constexpr int kWordAliceBit = 0;
inline constexpr int kWordAliceBasis = 1;
inline constexpr int kWordBobBasis = 2;
inline constexpr int kWordError = 3;
inline constexpr int kWordEvePrimary = 4;    // inconclusive draw / projective success
inline constexpr int kWordEveSecondary = 5;  // outcome on receiver-error trials
inline constexpr int kWordLoss = 6;
inline constexpr int kWordUnsiftedBob = 7;

/// Event fires iff always || u < bound. `always` covers probability 1,
/// which a 32-bit bound cannot express.
struct EventThreshold {
  uint32_t bound = 0;
  bool always = false;

  bool fires(uint32_t u) const { return always || u < bound; }
};

EventThreshold threshold_for_probability(double p);

struct KernelParams {
  uint64_t seed = 0;
  Measurement measurement = Measurement::Povm;
  Relay relay = Relay::All;
  EventThreshold error;         // P(receiver bit flip | sifted)
  EventThreshold inconclusive;  // P(POVM inconclusive) = Q = R?
  EventThreshold loss;          // channel loss, RelayAll only
  EventThreshold identify;      // projective: P(outcome matches the bit | correct)
};

struct TrialCounts {
  uint64_t basis_matched = 0;
  uint64_t delivered = 0;
  uint64_t sifted_delivered = 0;       // basis matched and delivered
  uint64_t sifted_error = 0;           // ... with the receiver bit flipped
  uint64_t sifted_correct = 0;         // basis matched, no flip (pre-delivery)
  uint64_t sifted_correct_inconclusive = 0;
  uint64_t conclusive_delivered = 0;   // povm: sifted, delivered, conclusive
  uint64_t conclusive_correct = 0;     // ... and no flip
  uint64_t conclusive_correct_eve_match = 0;
  uint64_t eve_defined = 0;            // sifted, delivered, eve bit defined
  uint64_t eve_match = 0;              // ... and equal to the receiver bit
  uint64_t proj_joint[2][2] = {};      // projective: outcome x bit, sifted correct delivered

  TrialCounts& operator+=(const TrialCounts& other);
};

/// Fully resolved stochastic events of one trial.
struct TrialEvents {
  uint32_t alice_bit = 0;
  uint32_t alice_basis = 0;
  uint32_t bob_basis = 0;
  bool sifted = false;
  bool error_draw = false;       // latent flip event (meaningful when sifted)
  uint32_t bob_bit_sifted = 0;   // alice_bit xor error_draw
  uint32_t bob_bit_unsifted = 0;
  bool inconclusive = false;     // povm
  bool delivered = false;
  uint32_t proj_outcome = 0;     // projective: 0 = |w0> fired, 1 = |w3>
  uint32_t eve_bit = 0;          // conclusive identity (povm) or outcome (projective)
  bool eve_defined = false;      // sifted and, for povm, conclusive
};

TrialEvents classify_trial(const KernelParams& params, uint64_t trial_index);

using KernelFn = void (*)(const KernelParams&, uint64_t first, uint64_t last, TrialCounts&);

/// Scalar reference kernel: classify_trial over [first, last).
void accumulate_trials_scalar(const KernelParams& params, uint64_t first, uint64_t last,
                              TrialCounts& counts);

bool avx2_kernel_compiled();
bool avx2_kernel_available();  // compiled and supported by this CPU

/// Resolves Auto to the best available kernel. Requesting Avx2 where it
/// is unavailable throws.
KernelFn select_kernel(KernelChoice choice);
const char* kernel_name(KernelFn kernel);

// Defined only when the library is built with AVX2 support; reach it
// through select_kernel, which checks availability first.
void accumulate_trials_avx2(const KernelParams& params, uint64_t first, uint64_t last,
                            TrialCounts& counts);

}  // namespace probekit
