#pragma once

#include "probekit/domain.hpp"

namespace probekit {

/// Overlap Q of the correlated probe states. In [0, 1] on the valid
/// error-rate range; construction rejects values outside, allowing only
/// floating-point dust (|excess| <= 1e-12), which is clamped away.
class OverlapQ {
 public:
  explicit OverlapQ(double value) : value_(value) {
    constexpr double kDust = 1e-12;
    if (!std::isfinite(value) || value < -kDust || value > 1.0 + kDust) {
      throw std::domain_error("overlap Q must lie in [0, 1]");
    }
    if (value_ < 0.0) value_ = 0.0;
    if (value_ > 1.0) value_ = 1.0;
  }

  double value() const { return value_; }

 private:
  double value_;
};

/// Renyi (order-2) information gain, in bits.
struct RenyiBits {
  double value = 0.0;
};

/// Q via the normalized inner product of the correlated state vectors.
OverlapQ overlap_from_vectors(ErrorRate e);

/// Q via the closed form (1-3E)/(1-E). Equals overlap_from_vectors on
/// the whole domain; the equality is exactly the sgn(1-4E)|1-4E| = 1-4E
/// branch argument and is enforced by tests rather than re-derived here.
OverlapQ overlap_closed_form(ErrorRate e);

/// I = log2(2 - Q^2).
RenyiBits renyi_information(OverlapQ q);

/// Composition log2(2 - ((1-3E)/(1-E))^2).
RenyiBits renyi_information_from_error(ErrorRate e);

}  // namespace probekit
