#include "graphon/verify/target.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphon/core_ops.hpp"
#include "graphon/densities.hpp"
#include "graphon/errors.hpp"
#include "graphon/verify/encoding_checks.hpp"

namespace graphon {

namespace {

std::string square_tag(const DyadicIndex& idx) {
  return "(" + std::to_string(idx.d) + "," + std::to_string(idx.s) + "," + std::to_string(idx.t) + ")";
}

std::vector<DyadicIndex> squares_up_to(unsigned d_max) {
  std::vector<DyadicIndex> out;
  for (unsigned d = 0; d <= d_max; ++d)
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << d); ++s)
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << d); ++t) out.push_back({d, s, t});
  return out;
}

template <class T>
T decode_digits(const UniversalGraphon& w0, const DyadicIndex& idx) {
  const std::uint64_t count = tile_digits(w0, idx);
  T sum(0);
  for (std::uint64_t p = 0; p < count; ++p) {
    const auto bit = read_de_bit(w0, {idx.d, idx.s, idx.t, p});
    if (bit && *bit) sum += pow2<T>(-static_cast<int>(p));
  }
  return std::min(sum, T(1));
}

}  // namespace

double GTileView::value(double x, double y) const {
  return w0_.value(w0_.at(Part::G, x), w0_.at(Part::G, y));
}

std::uint64_t tile_digits(const UniversalGraphon& w0, const DyadicIndex& idx) {
  const std::uint64_t by_budget = available_digits(idx, w0.budget());
  if (idx.d > w0.depth() || idx.s > w0.depth() || idx.t > w0.depth()) return 0;
  return std::min<std::uint64_t>(by_budget, w0.depth() + 1);
}

double decode_from_tiles(const UniversalGraphon& w0, const DyadicIndex& idx) {
  return decode_digits<double>(w0, idx);
}

Rational decode_from_tiles_exact(const UniversalGraphon& w0, const DyadicIndex& idx) {
  return decode_digits<Rational>(w0, idx);
}

std::vector<CheckReport> verify_target(const UniversalGraphon& w0, unsigned d_max, std::size_t n) {
  if (d_max > w0.depth()) throw ValidationError("d_max must not exceed the build depth");
  std::vector<CheckReport> out;
  const GTileView tile(w0);
  const std::string res = "n=" + std::to_string(n);

  for (unsigned d = 0; d <= d_max; ++d) {
    const StepGraphon avg = dyadic_average(tile, d, n);
    const double local = std::min(1.0, tile.midpoint_error_bound(n) * std::ldexp(1.0, 2 * static_cast<int>(d)));
    for (const DyadicIndex& idx : squares_up_to(d)) {
      if (idx.d != d) continue;
      const double expected = dyadic_delta(w0.wf(), idx, w0.resolution());
      out.push_back(make_check("target.density" + square_tag(idx),
                               avg.cell(idx.s, idx.t), expected, local + 1e-9, CheckKind::equal, res));
      const std::uint64_t digits = tile_digits(w0, idx);
      if (digits == 0) {
        out.push_back(not_applicable("target.decode" + square_tag(idx), "no digit within the bit budget"));
        continue;
      }
      const double decode_tol = std::ldexp(1.0, 1 - static_cast<int>(digits));
      out.push_back(make_check("target.decode" + square_tag(idx), decode_from_tiles(w0, idx),
                               expected, decode_tol + 1e-12, CheckKind::equal,
                               "digits=" + std::to_string(digits)));
    }
  }

  // |Gamma_4(U) - Gamma_4(V)| <= 4 ||U - V||_1 for graphons.
  const StepGraphon tile_avg = dyadic_average(tile, d_max, n);
  const StepGraphon wf_avg = dyadic_average(w0.wf(), d_max, w0.resolution());
  const double tol = 4.0 * (tile.midpoint_error_bound(n) + w0.wf().midpoint_error_bound(w0.resolution()) *
                                                              (w0.wf().step() ? 0.0 : 1.0)) + 1e-9;
  out.push_back(make_check("target.gamma4", gamma4_density<double>(tile_avg),
                           gamma4_density<double>(wf_avg), tol, CheckKind::equal, res));
  return out;
}

std::vector<CheckReport> verify_target_exact(const UniversalGraphon& w0, unsigned d_max) {
  const ExactStepGraphon* wf = w0.exact_wf();
  if (!wf) throw ValidationError("exact target checks need an exact build");
  if (d_max > w0.depth()) throw ValidationError("d_max must not exceed the build depth");
  const auto& part = wf->partition();

  double decode_mismatch = 0;
  double density_mismatch = 0;
  double worst = 0.0;
  for (const DyadicIndex& idx : squares_up_to(d_max)) {
    const Rational expected = dyadic_delta(*wf, idx);
    const Rational decoded = decode_from_tiles_exact(w0, idx);
    if (decoded != expected) ++decode_mismatch;
    worst = std::max(worst, std::abs(to_double(decoded - expected)));

    // Tile values sampled at the midpoint of each W_F cell inside the square,
    // weighted by the exact overlap areas.
    const Rational len = pow2<Rational>(-static_cast<int>(idx.d));
    const Rational x0 = Rational(idx.s) * len;
    const Rational y0 = Rational(idx.t) * len;
    const Rational x1 = x0 + len;
    const Rational y1 = y0 + len;
    Rational sum = 0;
    for (std::size_t i = 0; i < part.size(); ++i) {
      const Rational ox = std::min(x1, part.hi(i)) - std::max(x0, part.lo(i));
      if (ox <= 0) continue;
      const Rational mx = (std::max(x0, part.lo(i)) + std::min(x1, part.hi(i))) / 2;
      for (std::size_t j = 0; j < part.size(); ++j) {
        const Rational oy = std::min(y1, part.hi(j)) - std::max(y0, part.lo(j));
        if (oy <= 0) continue;
        const Rational my = (std::max(y0, part.lo(j)) + std::min(y1, part.hi(j))) / 2;
        const double v = w0.value(w0.at(Part::G, to_double(mx)), w0.at(Part::G, to_double(my)));
        sum += exact_from_double(v) * ox * oy;
      }
    }
    const Rational density = sum / (len * len);
    if (density != expected) ++density_mismatch;
    worst = std::max(worst, std::abs(to_double(density - expected)));
  }
  const std::string res = "exact";
  return {make_check("target.exact.decode", decode_mismatch, 0.0, 0.0, CheckKind::equal, res),
          make_check("target.exact.density", density_mismatch, 0.0, 0.0, CheckKind::equal, res),
          make_check("target.exact.max_error", worst, 0.0, 0.0, CheckKind::equal, res)};
}

}  // namespace graphon
