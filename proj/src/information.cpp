#include "probekit/information.hpp"

#include <cmath>

#include "probekit/probe_model.hpp"

namespace probekit {

OverlapQ overlap_from_vectors(ErrorRate e) {
  const ProbeVector plus = alpha_plus(e);
  const ProbeVector minus = alpha_minus(e);
  return OverlapQ(plus.dot(minus) / (plus.norm() * minus.norm()));
}

OverlapQ overlap_closed_form(ErrorRate e) {
  return OverlapQ((1.0 - 3.0 * e.value()) / (1.0 - e.value()));
}

RenyiBits renyi_information(OverlapQ q) {
  return {std::log2(2.0 - q.value() * q.value())};
}

RenyiBits renyi_information_from_error(ErrorRate e) {
  return renyi_information(overlap_closed_form(e));
}

}  // namespace probekit
