#include "probekit/report.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "probekit/information.hpp"
#include "probekit/probe_model.hpp"

namespace probekit {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* measurement_name(Measurement m) {
  return m == Measurement::Povm ? "povm" : "projective";
}

const char* relay_name(Relay r) {
  return r == Relay::ConclusiveOnly ? "conclusive-only" : "all";
}

const char* parameter_name(ParamKind kind) {
  return kind == ParamKind::ErrorRate ? "error-rate" : "inconclusive-rate";
}

ordered_json config_to_json(const ProtocolConfig& config) {
  const ProbeVector initial = config.probe_initial_state();
  ordered_json j;
  j["parameter"] = parameter_name(config.specified);
  j["error_rate"] = config.error_rate.value();
  j["inconclusive_rate"] = config.inconclusive_rate.value();
  j["trials"] = config.trials;
  j["seed"] = config.seed;
  j["measurement"] = measurement_name(config.measurement);
  j["relay"] = relay_name(config.relay);
  j["channel_loss"] = config.channel_loss;
  j["probe_initial_state"] = ordered_json{{"w0", initial.w0}, {"w3", initial.w3}};
  return j;
}

}  // namespace

ReportRow make_report_row(ErrorRate e) {
  const ProbeParams params = probe_params(e);
  const OverlapQ q = overlap_closed_form(e);
  const InconclusiveRate rq = inconclusive_from_error(e);
  return {e.value(),       params.eta,  params.sign_factor, q.value(),
          renyi_information(q).value, rq.value(), reflection_coefficient(rq)};
}

ReportRow make_report_row(InconclusiveRate rq) {
  return make_report_row(error_from_inconclusive(rq));
}

std::string format_g12(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string csv_row(const ReportRow& row) {
  std::ostringstream out;
  out << format_g12(row.error_rate) << ',' << format_g12(row.eta) << ',' << row.sign_factor
      << ',' << format_g12(row.overlap_q) << ',' << format_g12(row.renyi_bits) << ','
      << format_g12(row.inconclusive_rate) << ',' << format_g12(row.reflection_r1);
  return out.str();
}

std::string row_to_text(const ReportRow& row) {
  std::ostringstream out;
  out << "E               = " << format_g12(row.error_rate) << '\n'
      << "eta             = " << format_g12(row.eta) << '\n'
      << "sign(1-4E)      = " << row.sign_factor << '\n'
      << "Q               = " << format_g12(row.overlap_q) << '\n'
      << "renyi_bits      = " << format_g12(row.renyi_bits) << '\n'
      << "R_inconclusive  = " << format_g12(row.inconclusive_rate) << '\n'
      << "R1              = " << format_g12(row.reflection_r1) << '\n';
  return out.str();
}

std::string row_to_json(const ReportRow& row) {
  ordered_json j;
  j["E"] = row.error_rate;
  j["eta"] = row.eta;
  j["sign_factor"] = row.sign_factor;
  j["Q"] = row.overlap_q;
  j["renyi_bits"] = row.renyi_bits;
  j["R_inconclusive"] = row.inconclusive_rate;
  j["R1"] = row.reflection_r1;
  return j.dump(2) + "\n";
}

void write_sweep_csv(std::ostream& out, ParamKind parameter, double from, double to,
                     int steps) {
  if (steps < 2) {
    throw std::invalid_argument("a sweep needs at least 2 steps");
  }
  if (!(from <= to)) {
    throw std::invalid_argument("sweep range requires from <= to");
  }
  out << kCsvHeader << '\n';
  const double spacing = (to - from) / static_cast<double>(steps - 1);
  for (int i = 0; i < steps; ++i) {
    const double x = i == steps - 1 ? to : from + spacing * static_cast<double>(i);
    const ReportRow row = parameter == ParamKind::ErrorRate
                              ? make_report_row(ErrorRate(x))
                              : make_report_row(InconclusiveRate(x));
    out << csv_row(row) << '\n';
  }
}

std::string summary_to_json(const SimulationSummary& summary) {
  ordered_json j;
  j["config"] = config_to_json(summary.config);
  j["sifted_count"] = summary.sifted_count;
  j["sifted_error_rate"] = summary.sifted_error_rate;
  j["inconclusive_rate_observed"] = summary.inconclusive_rate_observed;
  j["eve_conclusive_accuracy"] = summary.eve_conclusive_accuracy;
  j["eve_accuracy_overall"] = summary.eve_accuracy_overall;
  j["delivered_fraction"] = summary.delivered_fraction;
  if (summary.empirical_renyi_bits.has_value()) {
    j["empirical_renyi_bits"] = *summary.empirical_renyi_bits;
  } else {
    j["empirical_renyi_bits"] = nullptr;
  }
  const TrialCounts& c = summary.counts;
  j["counts"] = ordered_json{{"trials", summary.config.trials},
                             {"basis_matched", c.basis_matched},
                             {"delivered", c.delivered},
                             {"sifted_delivered", c.sifted_delivered},
                             {"sifted_error", c.sifted_error},
                             {"sifted_correct", c.sifted_correct},
                             {"sifted_correct_inconclusive", c.sifted_correct_inconclusive},
                             {"conclusive_delivered", c.conclusive_delivered},
                             {"conclusive_correct", c.conclusive_correct},
                             {"conclusive_correct_eve_match", c.conclusive_correct_eve_match},
                             {"eve_defined", c.eve_defined},
                             {"eve_match", c.eve_match}};
  return j.dump(2) + "\n";
}

std::string summary_to_text(const SimulationSummary& summary) {
  const ProtocolConfig& config = summary.config;
  std::ostringstream out;
  out << "trials                      = " << config.trials << '\n'
      << "seed                        = " << config.seed << '\n'
      << "measurement                 = " << measurement_name(config.measurement) << '\n'
      << "relay                       = " << relay_name(config.relay) << '\n'
      << "E (configured)              = " << format_g12(config.error_rate.value()) << '\n'
      << "R? (configured)             = " << format_g12(config.inconclusive_rate.value())
      << '\n'
      << "channel_loss                = " << format_g12(config.channel_loss) << '\n'
      << "sifted_count                = " << summary.sifted_count << '\n'
      << "sifted_error_rate           = " << format_g12(summary.sifted_error_rate) << '\n'
      << "inconclusive_rate_observed  = " << format_g12(summary.inconclusive_rate_observed)
      << '\n'
      << "eve_conclusive_accuracy     = " << format_g12(summary.eve_conclusive_accuracy)
      << '\n'
      << "eve_accuracy_overall        = " << format_g12(summary.eve_accuracy_overall) << '\n'
      << "delivered_fraction          = " << format_g12(summary.delivered_fraction) << '\n';
  if (summary.empirical_renyi_bits.has_value()) {
    out << "empirical_renyi_bits        = " << format_g12(*summary.empirical_renyi_bits)
        << '\n';
  } else {
    out << "empirical_renyi_bits        = n/a\n";
  }
  return out.str();
}

}  // namespace probekit
