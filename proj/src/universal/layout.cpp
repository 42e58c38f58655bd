#include "graphon/universal/layout.hpp"

#include <algorithm>
#include <cmath>

#include "graphon/errors.hpp"
#include "graphon/interval.hpp"

namespace graphon {

std::string_view part_name(Part p) {
  static constexpr std::array<std::string_view, kPartCount> names{"A", "B", "C", "D", "E",
                                                                  "F", "G", "P", "Q", "R"};
  return names[index_of(p)];
}

std::optional<Part> parse_part(std::string_view name) {
  for (Part p : kAllParts)
    if (part_name(p) == name) return p;
  return std::nullopt;
}

PartLayout::PartLayout() : PartLayout(std::vector<Part>(kAllParts.begin(), kAllParts.end())) {}

PartLayout::PartLayout(const std::vector<Part>& order) : order_(order) {
  std::vector<Part> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<Part>(kAllParts.begin(), kAllParts.end()))
    throw ValidationError("part order must list each of the ten parts exactly once");
  Rational at = 0;
  for (Part p : order_) {
    exact_offset_[index_of(p)] = at;
    offset_[index_of(p)] = to_double(at);
    size_[index_of(p)] = to_double(exact_size(p));
    at += exact_size(p);
  }
}

Rational PartLayout::exact_size(Part p) {
  return p == Part::Q ? Rational(5, 14) : Rational(1, 14);
}

Part PartLayout::part_at(double x) const {
  check_unit_coordinate(x);
  for (auto it = order_.rbegin(); it != order_.rend(); ++it)
    if (x >= offset(*it)) return *it;
  return order_.front();
}

double PartLayout::to_global(Part p, double u) const { return offset(p) + size(p) * u; }

double PartLayout::to_local(Part p, double x) const {
  const double u = (x - offset(p)) / size(p);
  return std::clamp(u, 0.0, std::nextafter(1.0, 0.0));
}

}  // namespace graphon
