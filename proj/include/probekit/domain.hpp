#pragma once

#include <cmath>
#include <stdexcept>

namespace probekit {

/// Three-valued sign. Zero only for an exact zero, no epsilon band.
/// Throws std::domain_error for non-finite input.
int sgn(double x);

/// Probe-induced error rate E. Valid on the closed interval [0, 1/3];
/// construction rejects anything outside instead of clamping.
class ErrorRate {
 public:
  static constexpr double kMax = 1.0 / 3.0;

  explicit ErrorRate(double value) : value_(value) {
    if (!std::isfinite(value) || value < 0.0 || value > kMax) {
      throw std::domain_error("error rate must lie in [0, 1/3]");
    }
  }

  double value() const { return value_; }

 private:
  double value_;
};

/// Inconclusive probability R? of the POVM receiver, valid on [0, 1].
class InconclusiveRate {
 public:
  explicit InconclusiveRate(double value) : value_(value) {
    if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
      throw std::domain_error("inconclusive rate must lie in [0, 1]");
    }
  }

  double value() const { return value_; }

 private:
  double value_;
};

/// Real amplitude vector over the orthonormal probe basis {|w0>, |w3>}.
/// Probe states are kept unnormalized where their norms carry meaning;
/// normalized() produces the unit vector.
struct ProbeVector {
  double w0 = 0.0;
  double w3 = 0.0;

  double dot(const ProbeVector& other) const { return w0 * other.w0 + w3 * other.w3; }
  double norm_squared() const { return w0 * w0 + w3 * w3; }
  double norm() const { return std::sqrt(norm_squared()); }

  ProbeVector normalized() const {
    const double n = norm();
    if (n == 0.0) {
      throw std::domain_error("cannot normalize a zero-norm state");
    }
    return {w0 / n, w3 / n};
  }
};

}  // namespace probekit
