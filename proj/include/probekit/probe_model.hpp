#pragma once

#include "probekit/domain.hpp"

namespace probekit {

/// Scalar parameters of the entangling probe at error rate E.
///
/// eta = sqrt(8E(1-2E)), sign_factor = sgn(1-4E), and the probe angle
/// enters only through cos_mu = sqrt((1+eta)/2) and
/// sin_mu = sgn(1-4E) * sqrt((1-eta)/2). At E = 1/4 the sign factor is 0
/// and so is the square root it multiplies; the product is taken
/// literally (0), keeping every quantity continuous across the flip.
struct ProbeParams {
  ErrorRate error_rate;
  double eta;
  int sign_factor;
  double cos_mu;
  double sin_mu;
};

double eta_from_error(ErrorRate e);
ProbeParams probe_params(ErrorRate e);

/// Initial probe states; unit norm.
ProbeVector state_A1(ErrorRate e);
ProbeVector state_A2(ErrorRate e);

/// Correlated probe states conditioned on the receiver reading the bit
/// correctly. Unnormalized; |alpha+|^2 = |alpha-|^2 = 16(1-E). alpha- is
/// the component swap of alpha+.
ProbeVector alpha_plus(ErrorRate e);
ProbeVector alpha_minus(ErrorRate e);

/// Probe state conditioned on a receiver error. Unnormalized;
/// |alpha|^2 = 16E, orthogonal to the (1,1) direction by construction.
ProbeVector alpha_error(ErrorRate e);

/// Dual parameterization in the inconclusive rate: E = (1-R?)/(3-R?) and
/// its inverse R? = (1-3E)/(1-E), which is also the overlap Q.
ErrorRate error_from_inconclusive(InconclusiveRate rq);
InconclusiveRate inconclusive_from_error(ErrorRate e);

/// Reflection coefficient of the POVM receiver, R1 = (1-R?)/(1+R?).
double reflection_coefficient(InconclusiveRate rq);

/// eta re-expressed in the inconclusive rate: 2*sqrt(2(1-R?^2))/(3-R?).
double eta_from_inconclusive(InconclusiveRate rq);

/// Probe states tuned to a set inconclusive rate; the sign factor
/// becomes sgn(3R?-1). Componentwise identical to state_A1/state_A2 at
/// E = error_from_inconclusive(R?).
ProbeVector state_A1_of_inconclusive(InconclusiveRate rq);
ProbeVector state_A2_of_inconclusive(InconclusiveRate rq);

}  // namespace probekit
