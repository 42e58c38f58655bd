#include "graphon/interval.hpp"

#include <string>

namespace graphon {

Interval make_interval(double lo, double hi) {
  if (!(0.0 <= lo && lo < hi && hi <= 1.0))
    throw ValidationError("invalid interval [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + ")");
  return Interval{lo, hi};
}

IntervalUnion::IntervalUnion(std::initializer_list<Interval> pieces)
    : IntervalUnion(std::vector<Interval>(pieces)) {}

IntervalUnion::IntervalUnion(std::vector<Interval> pieces) {
  for (const Interval& p : pieces) make_interval(p.lo, p.hi);
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (const Interval& p : pieces) {
    if (!pieces_.empty() && p.lo <= pieces_.back().hi) {
      pieces_.back().hi = std::max(pieces_.back().hi, p.hi);
    } else {
      pieces_.push_back(p);
    }
  }
}

double IntervalUnion::measure() const {
  double total = 0.0;
  for (const Interval& p : pieces_) total += p.length();
  return total;
}

bool IntervalUnion::contains(double x) const {
  return std::any_of(pieces_.begin(), pieces_.end(),
                     [x](const Interval& p) { return p.contains(x); });
}

void check_unit_coordinate(double x) {
  if (!(x >= 0.0 && x < 1.0))
    throw DomainError("coordinate " + std::to_string(x) + " outside [0, 1)");
}

}  // namespace graphon
