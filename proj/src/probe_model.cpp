#include "probekit/probe_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace probekit {

namespace {

constexpr double kA = std::numbers::sqrt2 + 1.0;  // conclusive-state coefficients
constexpr double kB = std::numbers::sqrt2 - 1.0;

// p = (1+eta)^{1/2}, m = sgn(1-4E) (1-eta)^{1/2}; the building blocks of
// the correlated states. 1-eta is clamped at 0: rounding may push
// 8E(1-2E) a few ulps past 1 near E = 1/4.
struct HalfTerms {
  double p;
  double m;
};

HalfTerms half_terms(ErrorRate e) {
  const double eta = eta_from_error(e);
  const int sign = sgn(1.0 - 4.0 * e.value());
  return {std::sqrt(1.0 + eta), sign * std::sqrt(std::max(0.0, 1.0 - eta))};
}

}  // namespace

int sgn(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("sgn requires a finite argument");
  }
  if (x > 0.0) return 1;
  if (x < 0.0) return -1;
  return 0;
}

double eta_from_error(ErrorRate e) {
  const double radicand = 8.0 * e.value() * (1.0 - 2.0 * e.value());
  return std::sqrt(std::clamp(radicand, 0.0, 1.0));
}

ProbeParams probe_params(ErrorRate e) {
  const double eta = eta_from_error(e);
  const int sign = sgn(1.0 - 4.0 * e.value());
  const double cos_mu = std::sqrt(0.5 * (1.0 + eta));
  const double sin_mu = sign * std::sqrt(std::max(0.0, 0.5 * (1.0 - eta)));
  return {e, eta, sign, cos_mu, sin_mu};
}

ProbeVector state_A1(ErrorRate e) {
  const ProbeParams params = probe_params(e);
  return {params.cos_mu, params.sin_mu};
}

ProbeVector state_A2(ErrorRate e) {
  const ProbeVector a1 = state_A1(e);
  return {a1.w3, a1.w0};
}

ProbeVector alpha_plus(ErrorRate e) {
  const auto [p, m] = half_terms(e);
  return {kA * p + kB * m, kA * m + kB * p};
}

ProbeVector alpha_minus(ErrorRate e) {
  // Component swap of alpha+, by the same arithmetic expressions.
  const ProbeVector plus = alpha_plus(e);
  return {plus.w3, plus.w0};
}

ProbeVector alpha_error(ErrorRate e) {
  const auto [p, m] = half_terms(e);
  return {m - p, p - m};
}

ErrorRate error_from_inconclusive(InconclusiveRate rq) {
  const double value = (1.0 - rq.value()) / (3.0 - rq.value());
  // The quotient is in [0, 1/3] exactly; strip rounding dust so the
  // strict ErrorRate domain check cannot reject a valid R?.
  return ErrorRate(std::clamp(value, 0.0, ErrorRate::kMax));
}

InconclusiveRate inconclusive_from_error(ErrorRate e) {
  const double value = (1.0 - 3.0 * e.value()) / (1.0 - e.value());
  return InconclusiveRate(std::clamp(value, 0.0, 1.0));
}

double reflection_coefficient(InconclusiveRate rq) {
  return (1.0 - rq.value()) / (1.0 + rq.value());
}

double eta_from_inconclusive(InconclusiveRate rq) {
  const double r = rq.value();
  const double radicand = 2.0 * (1.0 - r * r);
  const double eta = 2.0 * std::sqrt(std::max(0.0, radicand)) / (3.0 - r);
  return std::min(eta, 1.0);
}

ProbeVector state_A1_of_inconclusive(InconclusiveRate rq) {
  const double eta = eta_from_inconclusive(rq);
  const int sign = sgn(3.0 * rq.value() - 1.0);
  return {std::sqrt(0.5 * (1.0 + eta)), sign * std::sqrt(std::max(0.0, 0.5 * (1.0 - eta)))};
}

ProbeVector state_A2_of_inconclusive(InconclusiveRate rq) {
  const ProbeVector a1 = state_A1_of_inconclusive(rq);
  return {a1.w3, a1.w0};
}

}  // namespace probekit
