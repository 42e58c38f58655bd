#include "graphon/universal/iterated.hpp"

#include <algorithm>
#include <cmath>

#include "graphon/errors.hpp"

namespace graphon {

Interval iterated_interval(const std::vector<unsigned>& indices) {
  if (indices.empty() || indices.size() > 4)
    throw ValidationError("iterated intervals take 1 to 4 indices");
  double lo = 0.0;
  double hi = 1.0;
  for (unsigned j : indices) {
    const double len = hi - lo;
    lo = hi - std::ldexp(len, -static_cast<int>(j));
    hi = hi - std::ldexp(len, -static_cast<int>(j) - 1);
  }
  return {lo, hi};
}

ExactInterval iterated_interval_exact(const std::vector<unsigned>& indices) {
  if (indices.empty() || indices.size() > 4)
    throw ValidationError("iterated intervals take 1 to 4 indices");
  Rational lo = 0;
  Rational hi = 1;
  for (unsigned j : indices) {
    const Rational len = hi - lo;
    lo = hi - len * pow2<Rational>(-static_cast<int>(j));
    hi = hi - len * pow2<Rational>(-static_cast<int>(j) - 1);
  }
  return {lo, hi};
}

std::optional<Located> locate(double x, unsigned k, unsigned cap) {
  if (k > 3) throw ValidationError("iterated intervals have at most 4 indices");
  Located loc;
  double lo = 0.0;
  double hi = 1.0;
  for (unsigned level = 0; level <= k; ++level) {
    const double len = hi - lo;
    unsigned j = 0;
    // I_j ends at hi - len 2^{-j-1}.
    while (x >= hi - std::ldexp(len, -static_cast<int>(j) - 1)) {
      if (++j > cap) return std::nullopt;
    }
    const double nlo = hi - std::ldexp(len, -static_cast<int>(j));
    hi = hi - std::ldexp(len, -static_cast<int>(j) - 1);
    lo = nlo;
    loc.j[level] = j;
  }
  loc.count = k + 1;
  loc.lo = lo;
  loc.length = hi - lo;
  loc.rel = std::clamp((x - lo) / loc.length, 0.0, std::nextafter(1.0, 0.0));
  return loc;
}

std::optional<Located> locate0(double x, unsigned cap) { return locate(x, 0, cap); }

namespace {

void collect(unsigned level, unsigned cap, std::vector<unsigned>& prefix,
             std::vector<Interval>& out) {
  for (unsigned j = 0; j <= cap; ++j) {
    prefix.push_back(j);
    if (prefix.size() == level + 1) {
      out.push_back(iterated_interval(prefix));
    } else {
      collect(level, cap, prefix, out);
    }
    prefix.pop_back();
  }
}

std::vector<Interval> capped_intervals(unsigned level, unsigned cap) {
  if (level > 3) throw ValidationError("checker level must be at most 3");
  if (std::pow(cap + 1.0, level + 1.0) > 5e6)
    throw ResourceError("too many iterated intervals for this cap");
  std::vector<Interval> out;
  std::vector<unsigned> prefix;
  collect(level, cap, prefix, out);
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace

double checker_mass(unsigned k, unsigned cap) {
  double sum = 0.0;
  for (const Interval& i : capped_intervals(k, cap)) sum += i.length() * i.length();
  return sum;
}

CheckerGraphon::CheckerGraphon(unsigned level, unsigned cap)
    : level_(level), cap_(cap), intervals_(capped_intervals(level, cap)) {}

double CheckerGraphon::value(double x, double y) const {
  const auto a = locate(x, level_, cap_);
  if (!a) return 0.0;
  return a->lo <= y && y < a->lo + a->length ? 1.0 : 0.0;
}

double CheckerGraphon::row_integral(double x, double y0, double y1, std::size_t) const {
  const auto a = locate(x, level_, cap_);
  if (!a) return 0.0;
  return std::max(0.0, std::min(y1, a->lo + a->length) - std::max(y0, a->lo));
}

double CheckerGraphon::rect_integral(double x0, double x1, double y0, double y1,
                                     std::size_t) const {
  double sum = 0.0;
  for (const Interval& i : intervals_) {
    const double ox = std::min(x1, i.hi) - std::max(x0, i.lo);
    const double oy = std::min(y1, i.hi) - std::max(y0, i.lo);
    if (ox > 0 && oy > 0) sum += ox * oy;
  }
  return sum;
}

double CheckerGraphon::midpoint_error_bound(std::size_t n) const {
  // Only grid cells cut by an interval endpoint can be misjudged; each
  // endpoint meets at most 2n cells of area 1/n^2.
  const double scale = static_cast<double>(n);
  std::size_t misaligned = 0;
  for (const Interval& i : intervals_) {
    for (double b : {i.lo, i.hi})
      if (b * scale != std::floor(b * scale)) ++misaligned;
  }
  return std::min(1.0, 2.0 * static_cast<double>(misaligned) / scale);
}

double CheckerGraphon::truncation_error_bound() const {
  double mass = 0.0;
  for (const Interval& i : intervals_) mass += i.length() * i.length();
  return std::max(0.0, std::pow(1.0 / 3.0, level_ + 1) - mass);
}

std::string CheckerGraphon::name() const {
  return "checker" + std::string(level_ > 0 ? "^" + std::to_string(level_) : "") + ":" +
         std::to_string(cap_);
}

StepGraphon checker_step(unsigned level, unsigned cap) {
  const auto intervals = capped_intervals(level, cap);
  std::vector<double> bounds{0.0};
  std::vector<bool> block;  // cell i is one of the intervals
  for (const Interval& i : intervals) {
    if (i.lo > bounds.back()) {
      bounds.push_back(i.lo);
      block.push_back(false);
    }
    bounds.push_back(i.hi);
    block.push_back(true);
  }
  if (bounds.back() < 1.0) {
    bounds.push_back(1.0);
    block.push_back(false);
  }
  const std::size_t k = block.size();
  if (k > 4096) throw ResourceError("checker step representation needs too many cells");
  Matrix<double> m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    if (block[i]) m(i, i) = 1.0;
  return StepGraphon(IntervalPartition(std::move(bounds)), std::move(m));
}

}  // namespace graphon
