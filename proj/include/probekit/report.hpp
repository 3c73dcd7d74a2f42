#pragma once

#include <iosfwd>
#include <string>

#include "probekit/attack_sim.hpp"
#include "probekit/domain.hpp"

namespace probekit {

/// One fully evaluated parameter point. Always derived from E; a row
/// requested by inconclusive rate goes through E = (1-R?)/(3-R?) first.
struct ReportRow {
  double error_rate = 0.0;
  double eta = 0.0;
  int sign_factor = 0;
  double overlap_q = 0.0;
  double renyi_bits = 0.0;
  double inconclusive_rate = 0.0;
  double reflection_r1 = 0.0;
};

ReportRow make_report_row(ErrorRate e);
ReportRow make_report_row(InconclusiveRate rq);

/// 12 significant digits ("%.12g").
std::string format_g12(double value);

inline constexpr const char* kCsvHeader = "E,eta,sign_factor,Q,renyi_bits,R_inconclusive,R1";

std::string csv_row(const ReportRow& row);
std::string row_to_text(const ReportRow& row);
std::string row_to_json(const ReportRow& row);

/// Uniform sweep over [from, to] with `steps` >= 2 rows; the last row
/// lands exactly on `to`. CSV with header, LF line endings.
void write_sweep_csv(std::ostream& out, ParamKind parameter, double from, double to,
                     int steps);

std::string summary_to_json(const SimulationSummary& summary);
std::string summary_to_text(const SimulationSummary& summary);

}  // namespace probekit
