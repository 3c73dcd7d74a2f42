#include "probekit/discrimination.hpp"

#include <algorithm>
#include <cmath>

#include "probekit/information.hpp"
#include "probekit/probe_model.hpp"

namespace probekit {

namespace {

constexpr double kPsdTolerance = 1e-12;
constexpr double kCompletenessTolerance = 1e-12;
constexpr double kUnambiguityTolerance = 1e-12;

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

}  // namespace

PovmSet build_povm(ErrorRate e) {
  if (e.value() == 0.0) {
    // The correlated states coincide; nothing is ever conclusive.
    return {{}, {}, {1.0, 0.0, 1.0}, e};
  }
  const ProbeVector plus = alpha_plus(e).normalized();
  const double c = plus.w0;  // alpha- is the mirror (s, c)
  const double s = plus.w3;
  const double q = 2.0 * c * s;  // <a+|a->
  const double scale = 1.0 / (1.0 + q);
  // Conclusive elements project onto the directions orthogonal to the
  // opposite state: (c, -s) never fires on alpha-, (-s, c) never on
  // alpha+. 1/(1+Q) is the largest scale keeping the remainder positive.
  const PovmElement conclusive_plus{scale * c * c, -scale * c * s, scale * s * s};
  const PovmElement conclusive_minus{scale * s * s, -scale * c * s, scale * c * c};
  const PovmElement inconclusive{1.0 - conclusive_plus.a - conclusive_minus.a,
                                 -(conclusive_plus.b + conclusive_minus.b),
                                 1.0 - conclusive_plus.d - conclusive_minus.d};
  return {conclusive_plus, conclusive_minus, inconclusive, e};
}

OutcomeProbabilities outcome_probabilities(const ProbeVector& state, const PovmSet& povm) {
  const ProbeVector unit = state.normalized();
  return {clamp01(povm.conclusive_plus.born(unit)), clamp01(povm.conclusive_minus.born(unit)),
          clamp01(povm.inconclusive.born(unit))};
}

MeasurementOutcome sample_outcome(const ProbeVector& state, const PovmSet& povm,
                                  PhiloxStream& rng) {
  const OutcomeProbabilities p = outcome_probabilities(state, povm);
  const double u = rng.next_double();
  if (u < p.conclusive_plus) return MeasurementOutcome::ConclusivePlus;
  if (u < p.conclusive_plus + p.conclusive_minus) return MeasurementOutcome::ConclusiveMinus;
  return MeasurementOutcome::Inconclusive;
}

int projective_measure(const ProbeVector& state, PhiloxStream& rng) {
  const ProbeVector unit = state.normalized();
  const double p_w0 = unit.w0 * unit.w0;
  return rng.next_double() < p_w0 ? 0 : 1;
}

bool PovmValidation::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const PovmCheck& check) { return check.pass; });
}

PovmValidation validate_povm(const PovmSet& povm) {
  PovmValidation report;
  auto add = [&report](std::string name, double residual, double tolerance) {
    report.checks.push_back({std::move(name), residual, tolerance, residual <= tolerance});
  };

  // Symmetry is structural in PovmElement; the residual is identically 0.
  add("symmetry", 0.0, 0.0);

  const double min_eigenvalue =
      std::min({povm.conclusive_plus.eigen_min(), povm.conclusive_minus.eigen_min(),
                povm.inconclusive.eigen_min()});
  add("positivity", std::max(0.0, -min_eigenvalue), kPsdTolerance);

  const double sum_a = povm.conclusive_plus.a + povm.conclusive_minus.a + povm.inconclusive.a;
  const double sum_b = povm.conclusive_plus.b + povm.conclusive_minus.b + povm.inconclusive.b;
  const double sum_d = povm.conclusive_plus.d + povm.conclusive_minus.d + povm.inconclusive.d;
  const double completeness =
      std::max({std::abs(sum_a - 1.0), std::abs(sum_b), std::abs(sum_d - 1.0)});
  add("completeness", completeness, kCompletenessTolerance);

  const ProbeVector plus = alpha_plus(povm.design_error_rate).normalized();
  const ProbeVector minus = alpha_minus(povm.design_error_rate).normalized();
  const double unambiguity = std::max(std::abs(povm.conclusive_plus.born(minus)),
                                      std::abs(povm.conclusive_minus.born(plus)));
  add("unambiguity", unambiguity, kUnambiguityTolerance);

  return report;
}

ReflectionResiduals check_reflection_relation(InconclusiveRate rq) {
  const double closed = (1.0 - rq.value()) / (1.0 + rq.value());
  const double closed_residual = std::abs(reflection_coefficient(rq) - closed);

  const ErrorRate e = error_from_inconclusive(rq);
  const PovmSet povm = build_povm(e);
  const ProbeVector plus = alpha_plus(e).normalized();
  const ProbeVector minus = alpha_minus(e).normalized();
  const double achieved =
      0.5 * (povm.inconclusive.born(plus) + povm.inconclusive.born(minus));
  return {closed_residual, std::abs(achieved - rq.value())};
}

}  // namespace probekit
