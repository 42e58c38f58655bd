#include "graphon/verify/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace graphon {

CheckReport make_check(std::string id, double measured, double expected, double tolerance,
                       CheckKind kind, std::string resolution) {
  CheckReport r;
  r.id = std::move(id);
  r.kind = kind;
  r.measured = measured;
  r.expected = expected;
  r.tolerance = tolerance;
  r.resolution = std::move(resolution);
  bool ok = false;
  switch (kind) {
    case CheckKind::equal: ok = std::abs(measured - expected) <= tolerance; break;
    case CheckKind::at_least: ok = measured >= expected - tolerance; break;
    case CheckKind::at_most: ok = measured <= expected + tolerance; break;
  }
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

CheckReport not_applicable(std::string id, std::string note) {
  CheckReport r;
  r.id = std::move(id);
  r.status = CheckStatus::not_applicable;
  r.measured = std::nan("");
  r.expected = std::nan("");
  r.note = std::move(note);
  return r;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::not_applicable: return "NA";
  }
  return "?";
}

std::string format_check(const CheckReport& r) {
  std::string line = "CHECK " + r.id + " " + status_name(r.status) +
                     " measured=" + format_number(r.measured) +
                     " expected=" + format_number(r.expected) +
                     " tol=" + format_number(r.tolerance);
  if (r.kind == CheckKind::at_least) line += " kind=at_least";
  if (r.kind == CheckKind::at_most) line += " kind=at_most";
  if (!r.resolution.empty()) line += " res=" + r.resolution;
  if (!r.note.empty()) line += " note=\"" + r.note + "\"";
  return line;
}

void sort_reports(std::vector<CheckReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
}

bool any_failed(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.status == CheckStatus::fail; });
}

void print_reports(std::ostream& out, std::vector<CheckReport> reports) {
  sort_reports(reports);
  for (const CheckReport& r : reports) out << format_check(r) << "\n";
}

}  // namespace graphon
