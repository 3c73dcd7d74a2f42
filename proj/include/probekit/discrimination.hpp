#pragma once

#include <string>
#include <vector>

#include "probekit/domain.hpp"
#include "probekit/philox.hpp"

namespace probekit {

/// Symmetric 2x2 operator [[a, b], [b, d]] over {|w0>, |w3>}. Symmetry is
/// structural: only one off-diagonal entry is stored.
struct PovmElement {
  double a = 0.0;
  double b = 0.0;
  double d = 0.0;

  double trace() const { return a + d; }

  // Closed-form spectrum; no iterative solver at this fixed dimension.
  double eigen_min() const {
    const double mean = 0.5 * (a + d);
    const double radius = std::sqrt(0.25 * (a - d) * (a - d) + b * b);
    return mean - radius;
  }

  /// Born value <s|M|s> for a unit vector s.
  double born(const ProbeVector& unit) const {
    return a * unit.w0 * unit.w0 + 2.0 * b * unit.w0 * unit.w3 + d * unit.w3 * unit.w3;
  }
};

/// Three-outcome unambiguous-discrimination receiver for the correlated
/// probe states at the design error rate. The conclusive elements are
/// scaled projectors onto the vectors orthogonal to the opposite state,
/// scale 1/(1+Q); the inconclusive element is the completeness remainder.
/// E = 0 degenerates to {0, 0, identity}; E = 1/3 to orthogonal
/// projectors with a vanishing inconclusive element.
struct PovmSet {
  PovmElement conclusive_plus;
  PovmElement conclusive_minus;
  PovmElement inconclusive;
  ErrorRate design_error_rate;
};

enum class MeasurementOutcome { ConclusivePlus, ConclusiveMinus, Inconclusive };

struct OutcomeProbabilities {
  double conclusive_plus = 0.0;
  double conclusive_minus = 0.0;
  double inconclusive = 0.0;
};

PovmSet build_povm(ErrorRate e);

/// Born probabilities of the three outcomes for an arbitrary state
/// (normalized internally; zero-norm states are rejected). Values are
/// clamped to [0, 1] to strip sign noise of order 1e-12 and below.
OutcomeProbabilities outcome_probabilities(const ProbeVector& state, const PovmSet& povm);

/// Samples the categorical outcome distribution with one uniform draw.
MeasurementOutcome sample_outcome(const ProbeVector& state, const PovmSet& povm,
                                  PhiloxStream& rng);

/// Projective measurement in {|w0>, |w3>} — the minimum-error basis for
/// the mirror-symmetric pair alpha+/alpha-; returns 0 if the |w0>
/// projector fired, 1 for |w3>.
int projective_measure(const ProbeVector& state, PhiloxStream& rng);

struct PovmCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct PovmValidation {
  std::vector<PovmCheck> checks;
  bool all_pass() const;
};

/// Symmetry, positivity (eigenvalues >= -1e-12), completeness (sum equals
/// the identity within 1e-12 per entry), and unambiguity (cross-conclusive
/// Born values <= 1e-12). Reports residuals; never throws.
PovmValidation validate_povm(const PovmSet& povm);

struct ReflectionResiduals {
  double closed_form = 0.0;
  double achieved_inconclusive = 0.0;
};

/// |R1(R?) - (1-R?)/(1+R?)| and the gap between the inconclusive
/// probability achieved by build_povm at E(R?) and R? itself.
ReflectionResiduals check_reflection_relation(InconclusiveRate rq);

}  // namespace probekit
