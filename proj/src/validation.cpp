#include "probekit/validation.hpp"

#include <algorithm>
#include <cmath>

#include "probekit/discrimination.hpp"
#include "probekit/information.hpp"
#include "probekit/probe_model.hpp"

namespace probekit {

namespace {

double error_grid_point(int i, int n) {
  return i == n - 1 ? ErrorRate::kMax
                    : ErrorRate::kMax * static_cast<double>(i) / static_cast<double>(n - 1);
}

double rq_grid_point(int i, int n) {
  return i == n - 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(n - 1);
}

}  // namespace

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

std::vector<CheckResult> run_analytic_checks(const ValidationOptions& options) {
  const int n = std::max(2, options.grid_points);
  std::vector<CheckResult> results;
  auto add = [&results](std::string name, double residual, double tolerance) {
    results.push_back({std::move(name), residual, tolerance, residual <= tolerance});
  };

  double r_norm = 0.0, r_overlap = 0.0, r_alpha_norms = 0.0, r_swap = 0.0, r_direction = 0.0;
  double r_routes = 0.0, r_roundtrip = 0.0, r_duality = 0.0;
  int monotonicity_violations = 0;
  double previous_q = 2.0, previous_renyi = -1.0;

  for (int i = 0; i < n; ++i) {
    const ErrorRate e(error_grid_point(i, n));
    const double ev = e.value();

    const ProbeVector a1 = state_A1(e);
    const ProbeVector a2 = state_A2(e);
    r_norm = std::max({r_norm, std::abs(a1.norm() - 1.0), std::abs(a2.norm() - 1.0)});
    r_overlap = std::max(r_overlap, std::abs(a1.dot(a2) - (1.0 - 4.0 * ev)));

    const ProbeVector plus = alpha_plus(e);
    const ProbeVector minus = alpha_minus(e);
    const ProbeVector err_state = alpha_error(e);
    r_alpha_norms = std::max({r_alpha_norms,
                              std::abs(plus.norm_squared() - 16.0 * (1.0 - ev)),
                              std::abs(minus.norm_squared() - 16.0 * (1.0 - ev)),
                              std::abs(err_state.norm_squared() - 16.0 * ev)});
    r_swap = std::max({r_swap, std::abs(minus.w0 - plus.w3), std::abs(minus.w3 - plus.w0)});
    r_direction = std::max(r_direction, std::abs(err_state.w0 + err_state.w3));

    const double q_vec = overlap_from_vectors(e).value();
    const double q_closed = overlap_closed_form(e).value();
    r_routes = std::max(r_routes, std::abs(q_vec - q_closed));

    const InconclusiveRate rq = inconclusive_from_error(e);
    r_roundtrip = std::max(r_roundtrip, std::abs(error_from_inconclusive(rq).value() - ev));
    r_duality = std::max(r_duality, std::abs(rq.value() - q_closed));

    const double renyi = renyi_information(overlap_closed_form(e)).value;
    if (i > 0 && (q_closed >= previous_q || renyi <= previous_renyi)) {
      ++monotonicity_violations;
    }
    previous_q = q_closed;
    previous_renyi = renyi;
  }

  add("state_normalization", r_norm, 1e-12);
  add("overlap_identity_A1A2", r_overlap, 1e-12);
  add("alpha_norm_identities", r_alpha_norms, 1e-10);
  add("alpha_swap_symmetry", r_swap, 0.0);
  add("alpha_error_direction", r_direction, 0.0);
  add("overlap_route_equivalence", r_routes, 1e-12);
  add("q_renyi_monotonicity", static_cast<double>(monotonicity_violations), 0.0);
  add("parameterization_round_trip", r_roundtrip, 1e-12);
  add("overlap_inconclusive_duality", r_duality, 1e-12);

  // Inconclusive-rate parameterization against the error-rate route.
  double r_eta_rq = 0.0, r_states_rq = 0.0;
  for (int i = 0; i < n; ++i) {
    const InconclusiveRate rq(rq_grid_point(i, n));
    const ErrorRate e = error_from_inconclusive(rq);
    r_eta_rq = std::max(r_eta_rq, std::abs(eta_from_inconclusive(rq) - eta_from_error(e)));
    const ProbeVector a1_rq = state_A1_of_inconclusive(rq);
    const ProbeVector a2_rq = state_A2_of_inconclusive(rq);
    const ProbeVector a1_e = state_A1(e);
    const ProbeVector a2_e = state_A2(e);
    r_states_rq = std::max({r_states_rq, std::abs(a1_rq.w0 - a1_e.w0),
                            std::abs(a1_rq.w3 - a1_e.w3), std::abs(a2_rq.w0 - a2_e.w0),
                            std::abs(a2_rq.w3 - a2_e.w3)});
  }
  add("eta_parameterization_match", r_eta_rq, 1e-12);
  add("tuned_state_match", r_states_rq, 1e-12);

  const double r1_at_0 = reflection_coefficient(InconclusiveRate(0.0));
  const double r1_at_1 = reflection_coefficient(InconclusiveRate(1.0));
  add("reflection_endpoints",
      std::max(std::abs(r1_at_0 - 1.0), std::abs(r1_at_1)), 1e-12);

  const double renyi_at_0 = renyi_information_from_error(ErrorRate(0.0)).value;
  const double renyi_at_max = renyi_information_from_error(ErrorRate(ErrorRate::kMax)).value;
  add("renyi_endpoints",
      std::max(std::abs(renyi_at_0), std::abs(renyi_at_max - 1.0)), 1e-12);

  // POVM validity and achieved rates over (0, 1/3].
  double r_povm = 0.0, r_achieved = 0.0;
  constexpr int kPovmGrid = 50;
  for (int i = 1; i <= kPovmGrid; ++i) {
    const ErrorRate e(ErrorRate::kMax * static_cast<double>(i) / kPovmGrid);
    PovmSet povm = build_povm(e);
    if (options.inject_perturbation) {
      povm.conclusive_plus.a *= 1.1;
      povm.conclusive_plus.b *= 1.1;
      povm.conclusive_plus.d *= 1.1;
    }
    for (const PovmCheck& check : validate_povm(povm).checks) {
      if (!check.pass) {
        r_povm = std::max(r_povm, check.residual);
      }
    }
    const ProbeVector plus = alpha_plus(e).normalized();
    const double achieved = povm.inconclusive.born(plus);
    r_achieved = std::max(r_achieved, std::abs(achieved - inconclusive_from_error(e).value()));
  }
  add("povm_validity", r_povm, 0.0);
  add("povm_achieved_inconclusive_rate", r_achieved, 1e-10);

  // Continuity across the sign flip at E = 1/4: the (1-eta)^(1/2) factor
  // vanishes there, so nearby states stay within O(1e-4) of the E = 1/4
  // values.
  double r_continuity = 0.0;
  const ErrorRate quarter(0.25);
  for (const double offset : {-1e-9, 1e-9}) {
    const ErrorRate nearby(0.25 + offset);
    const ProbeVector pairs[][2] = {{state_A1(nearby), state_A1(quarter)},
                                    {state_A2(nearby), state_A2(quarter)},
                                    {alpha_plus(nearby), alpha_plus(quarter)},
                                    {alpha_minus(nearby), alpha_minus(quarter)},
                                    {alpha_error(nearby), alpha_error(quarter)}};
    for (const auto& pair : pairs) {
      r_continuity = std::max({r_continuity, std::abs(pair[0].w0 - pair[1].w0),
                               std::abs(pair[0].w3 - pair[1].w3)});
    }
  }
  add("continuity_at_quarter", r_continuity, 1e-4);

  return results;
}

}  // namespace probekit
