#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphon {

enum class CheckStatus { pass, fail, not_applicable };

// How measured and expected are compared.
enum class CheckKind {
  equal,        // |measured - expected| <= tolerance
  at_least,     // measured >= expected - tolerance
  at_most,      // measured <= expected + tolerance
};

struct CheckReport {
  std::string id;
  CheckStatus status = CheckStatus::fail;
  CheckKind kind = CheckKind::equal;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string resolution;  // free-form metadata, e.g. "n=4096"
  std::string note;
};

CheckReport make_check(std::string id, double measured, double expected, double tolerance,
                       CheckKind kind = CheckKind::equal, std::string resolution = {});
CheckReport not_applicable(std::string id, std::string note);

// %.12g
std::string format_number(double v);
const char* status_name(CheckStatus s);
// CHECK <id> <PASS|FAIL|NA> measured=<v> expected=<v> tol=<v>
std::string format_check(const CheckReport& r);

void sort_reports(std::vector<CheckReport>& reports);
bool any_failed(const std::vector<CheckReport>& reports);
void print_reports(std::ostream& out, std::vector<CheckReport> reports);

}  // namespace graphon
