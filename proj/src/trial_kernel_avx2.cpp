#include <immintrin.h>

#include "probekit/trial_kernel.hpp"

// Eight-lane mirror of the scalar reference kernel. Lane k of a batch
// carries trial first+k, fed by the same Philox words the scalar path
// draws, so the two kernels agree count-for-count, not just in
// distribution. Events live in all-ones/all-zero 32-bit lane masks;
// tallies are movemask popcounts.

namespace probekit {

namespace {

inline __m256i mul_hi32(__m256i a, __m256i m) {
  const __m256i even = _mm256_mul_epu32(a, m);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), m);
  return _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0b10101010);
}

inline __m256i mul_lo32(__m256i a, __m256i m) {
  const __m256i even = _mm256_mul_epu32(a, m);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), m);
  return _mm256_blend_epi32(even, _mm256_slli_epi64(odd, 32), 0b10101010);
}

struct VecThreshold {
  __m256i biased_bound;
  __m256i always;
};

VecThreshold vec_threshold(const EventThreshold& t) {
  return {_mm256_set1_epi32(static_cast<int>(t.bound ^ 0x80000000u)),
          _mm256_set1_epi32(t.always ? -1 : 0)};
}

inline __m256i fires8(__m256i u, const VecThreshold& t) {
  const __m256i bias = _mm256_set1_epi32(static_cast<int>(0x80000000u));
  const __m256i lt = _mm256_cmpgt_epi32(t.biased_bound, _mm256_xor_si256(u, bias));
  return _mm256_or_si256(lt, t.always);
}

inline uint64_t popcnt8(__m256i mask) {
  return static_cast<uint64_t>(
      _mm_popcnt_u32(static_cast<uint32_t>(_mm256_movemask_ps(_mm256_castsi256_ps(mask)))));
}

inline __m256i top_bit_mask(__m256i v) { return _mm256_srai_epi32(v, 31); }

inline __m256i not_mask(__m256i v) {
  return _mm256_xor_si256(v, _mm256_set1_epi32(-1));
}

// Lane masks are all-ones or all-zero, so lane equality is ~(a ^ b).
inline __m256i mask_eq(__m256i a, __m256i b) { return not_mask(_mm256_xor_si256(a, b)); }

}  // namespace

void accumulate_trials_avx2(const KernelParams& params, uint64_t first, uint64_t last,
                            TrialCounts& counts) {
  const __m256i m0 = _mm256_set1_epi32(static_cast<int>(kPhiloxM0));
  const __m256i m1 = _mm256_set1_epi32(static_cast<int>(kPhiloxM1));
  const __m256i bump0 = _mm256_set1_epi32(static_cast<int>(kPhiloxW0));
  const __m256i bump1 = _mm256_set1_epi32(static_cast<int>(kPhiloxW1));
  const PhiloxKey key = philox_key(params.seed);
  const __m256i key0_init = _mm256_set1_epi32(static_cast<int>(key[0]));
  const __m256i key1_init = _mm256_set1_epi32(static_cast<int>(key[1]));

  auto philox_block = [&](__m256i c0, __m256i c1, uint32_t block_index, __m256i out[4]) {
    __m256i x0 = c0;
    __m256i x1 = c1;
    __m256i x2 = _mm256_set1_epi32(static_cast<int>(block_index));
    __m256i x3 = _mm256_setzero_si256();
    __m256i k0 = key0_init;
    __m256i k1 = key1_init;
    for (int round = 0; round < 10; ++round) {
      const __m256i hi0 = mul_hi32(x0, m0);
      const __m256i lo0 = mul_lo32(x0, m0);
      const __m256i hi1 = mul_hi32(x2, m1);
      const __m256i lo1 = mul_lo32(x2, m1);
      x0 = _mm256_xor_si256(_mm256_xor_si256(hi1, x1), k0);
      x1 = lo1;
      x2 = _mm256_xor_si256(_mm256_xor_si256(hi0, x3), k1);
      x3 = lo0;
      k0 = _mm256_add_epi32(k0, bump0);
      k1 = _mm256_add_epi32(k1, bump1);
    }
    out[0] = x0;
    out[1] = x1;
    out[2] = x2;
    out[3] = x3;
  };

  const bool povm = params.measurement == Measurement::Povm;
  const bool conclusive_only = params.relay == Relay::ConclusiveOnly;
  const VecThreshold thr_error = vec_threshold(params.error);
  const VecThreshold thr_inconclusive = vec_threshold(params.inconclusive);
  const VecThreshold thr_loss = vec_threshold(params.loss);
  const VecThreshold thr_identify = vec_threshold(params.identify);

  uint64_t n_basis = 0, n_delivered = 0, n_sd = 0, n_sd_err = 0, n_sc = 0, n_sc_inc = 0;
  uint64_t n_cd = 0, n_cc = 0, n_cc_match = 0, n_defined = 0, n_match = 0;
  uint64_t n_joint[2][2] = {};

  uint64_t i = first;
  for (; i + 8 <= last; i += 8) {
    alignas(32) uint32_t lo[8];
    alignas(32) uint32_t hi[8];
    for (int k = 0; k < 8; ++k) {
      const uint64_t trial = i + static_cast<uint64_t>(k);
      lo[k] = static_cast<uint32_t>(trial);
      hi[k] = static_cast<uint32_t>(trial >> 32);
    }
    const __m256i c0 = _mm256_load_si256(reinterpret_cast<const __m256i*>(lo));
    const __m256i c1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(hi));

    __m256i wa[4];
    __m256i wb[4];
    philox_block(c0, c1, 0, wa);
    philox_block(c0, c1, 1, wb);
    // wa = words 0..3, wb = words 4..7, one lane per trial.

    const __m256i alice_bit = top_bit_mask(wa[kWordAliceBit]);
    const __m256i alice_basis = top_bit_mask(wa[kWordAliceBasis]);
    const __m256i bob_basis = top_bit_mask(wa[kWordBobBasis]);
    const __m256i sifted = mask_eq(alice_basis, bob_basis);
    const __m256i err = fires8(wa[kWordError], thr_error);
    const __m256i not_err = not_mask(err);
    const __m256i bob_bit = _mm256_xor_si256(alice_bit, err);
    const __m256i secondary = top_bit_mask(wb[kWordEveSecondary - 4]);

    __m256i inconclusive = _mm256_setzero_si256();
    __m256i eve_bit;
    __m256i proj_outcome = _mm256_setzero_si256();
    if (povm) {
      inconclusive = fires8(wb[kWordEvePrimary - 4], thr_inconclusive);
      eve_bit = _mm256_or_si256(_mm256_and_si256(err, secondary),
                                _mm256_and_si256(not_err, bob_bit));
    } else {
      const __m256i identified = fires8(wb[kWordEvePrimary - 4], thr_identify);
      const __m256i correct_outcome = _mm256_xor_si256(bob_bit, not_mask(identified));
      proj_outcome = _mm256_or_si256(_mm256_and_si256(err, secondary),
                                     _mm256_and_si256(not_err, correct_outcome));
      eve_bit = proj_outcome;
    }

    const __m256i delivered = conclusive_only
                                  ? not_mask(inconclusive)
                                  : not_mask(fires8(wb[kWordLoss - 4], thr_loss));
    const __m256i sd = _mm256_and_si256(sifted, delivered);
    const __m256i match = mask_eq(eve_bit, bob_bit);

    n_basis += popcnt8(sifted);
    n_delivered += popcnt8(delivered);
    n_sd += popcnt8(sd);
    n_sd_err += popcnt8(_mm256_and_si256(sd, err));
    n_sc += popcnt8(_mm256_and_si256(sifted, not_err));

    if (povm) {
      const __m256i conclusive = not_mask(inconclusive);
      const __m256i cd = _mm256_and_si256(sd, conclusive);
      const __m256i cc = _mm256_and_si256(cd, not_err);
      n_sc_inc += popcnt8(_mm256_and_si256(_mm256_and_si256(sifted, not_err), inconclusive));
      n_cd += popcnt8(cd);
      n_cc += popcnt8(cc);
      n_cc_match += popcnt8(_mm256_and_si256(cc, match));
      n_defined += popcnt8(cd);
      n_match += popcnt8(_mm256_and_si256(cd, match));
    } else {
      const __m256i sdc = _mm256_and_si256(sd, not_err);
      const __m256i out1 = proj_outcome;
      const __m256i out0 = not_mask(out1);
      const __m256i bit1 = bob_bit;
      const __m256i bit0 = not_mask(bit1);
      n_joint[0][0] += popcnt8(_mm256_and_si256(sdc, _mm256_and_si256(out0, bit0)));
      n_joint[0][1] += popcnt8(_mm256_and_si256(sdc, _mm256_and_si256(out0, bit1)));
      n_joint[1][0] += popcnt8(_mm256_and_si256(sdc, _mm256_and_si256(out1, bit0)));
      n_joint[1][1] += popcnt8(_mm256_and_si256(sdc, _mm256_and_si256(out1, bit1)));
      n_defined += popcnt8(sd);
      n_match += popcnt8(_mm256_and_si256(sd, match));
    }
  }

  counts.basis_matched += n_basis;
  counts.delivered += n_delivered;
  counts.sifted_delivered += n_sd;
  counts.sifted_error += n_sd_err;
  counts.sifted_correct += n_sc;
  counts.sifted_correct_inconclusive += n_sc_inc;
  counts.conclusive_delivered += n_cd;
  counts.conclusive_correct += n_cc;
  counts.conclusive_correct_eve_match += n_cc_match;
  counts.eve_defined += n_defined;
  counts.eve_match += n_match;
  for (int o = 0; o < 2; ++o) {
    for (int s = 0; s < 2; ++s) {
      counts.proj_joint[o][s] += n_joint[o][s];
    }
  }

  if (i < last) {
    accumulate_trials_scalar(params, i, last, counts);
  }
}

}  // namespace probekit
