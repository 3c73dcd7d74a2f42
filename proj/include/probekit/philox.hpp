#pragma once

#include <array>
#include <cstdint>

// Philox4x32-10 counter-based generator.
// Salmon, Moraes, Dror, Shaw. "Parallel random numbers: as easy as 1, 2, 3."
// SC 2011. Stateless: output is a pure function of (counter, key), so any
// trial index owns its substream and parallel schedules cannot change the
// result.

namespace probekit {

inline constexpr uint32_t kPhiloxM0 = 0xD2511F53u;
inline constexpr uint32_t kPhiloxM1 = 0xCD9E8D57u;
inline constexpr uint32_t kPhiloxW0 = 0x9E3779B9u;
inline constexpr uint32_t kPhiloxW1 = 0xBB67AE85u;

using PhiloxCounter = std::array<uint32_t, 4>;
using PhiloxKey = std::array<uint32_t, 2>;
using PhiloxBlock = std::array<uint32_t, 4>;

inline PhiloxBlock philox4x32(PhiloxCounter counter, PhiloxKey key) {
  for (int round = 0; round < 10; ++round) {
    const uint64_t product0 = static_cast<uint64_t>(kPhiloxM0) * counter[0];
    const uint64_t product1 = static_cast<uint64_t>(kPhiloxM1) * counter[2];
    const uint32_t hi0 = static_cast<uint32_t>(product0 >> 32);
    const uint32_t lo0 = static_cast<uint32_t>(product0);
    const uint32_t hi1 = static_cast<uint32_t>(product1 >> 32);
    const uint32_t lo1 = static_cast<uint32_t>(product1);
    counter = {hi1 ^ counter[1] ^ key[0], lo1, hi0 ^ counter[3] ^ key[1], lo0};
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
  }
  return counter;
}

inline PhiloxKey philox_key(uint64_t seed) {
  return {static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)};
}

/// The eight uniform words consumed by one protocol trial. Counter word 2
/// selects the block within the trial; word 3 = 0 marks the trial domain
/// (PhiloxStream uses 1 so module-level sampling never collides).
inline std::array<uint32_t, 8> trial_words(uint64_t seed, uint64_t trial_index) {
  const PhiloxKey key = philox_key(seed);
  const uint32_t lo = static_cast<uint32_t>(trial_index);
  const uint32_t hi = static_cast<uint32_t>(trial_index >> 32);
  const PhiloxBlock a = philox4x32({lo, hi, 0u, 0u}, key);
  const PhiloxBlock b = philox4x32({lo, hi, 1u, 0u}, key);
  return {a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]};
}

/// Sequential view of a Philox stream for module-level sampling.
/// Deterministic replay: the same (seed, stream) yields the same sequence.
class PhiloxStream {
 public:
  explicit PhiloxStream(uint64_t seed, uint32_t stream = 0)
      : key_(philox_key(seed)), stream_(stream) {}

  uint32_t next_u32() {
    if (position_ == 4) {
      buffer_ = philox4x32({static_cast<uint32_t>(block_),
                            static_cast<uint32_t>(block_ >> 32), stream_, 1u},
                           key_);
      ++block_;
      position_ = 0;
    }
    return buffer_[position_++];
  }

  /// Uniform double in [0, 1) with 32 bits of resolution.
  double next_double() { return next_u32() * 0x1p-32; }

 private:
  PhiloxKey key_;
  uint32_t stream_;
  uint64_t block_ = 0;
  PhiloxBlock buffer_{};
  int position_ = 4;
};

}  // namespace probekit
