#include "graphon/universal/universal_graphon.hpp"

#include <algorithm>
#include <cmath>

#include "graphon/errors.hpp"
#include "graphon/universal/iterated.hpp"
#include "graphon/universal/pairing.hpp"

namespace graphon {

namespace {

std::vector<Part> resolved_order(const UniversalOptions& options) {
  if (options.order.empty()) return {kAllParts.begin(), kAllParts.end()};
  return options.order;
}

double total_deviation(const TileModel& tiles) {
  double sum = 0.0;
  for (Part x : kBalancedParts)
    for (Part y : kBalancedParts) sum += tiles.deviation(x, y);
  // Each ordered tile has area 1/196; the xi tiles Q x X and X x Q add twice
  // |Q|/196 times one fifth of the row deviation.
  return 3.0 / 196.0 * sum;
}

double p2(int e) { return std::ldexp(1.0, e); }

}  // namespace

unsigned linear_cap_for(std::size_t bits) {
  return static_cast<unsigned>(std::min<std::size_t>(bits - 1, 40));
}

void check_universal_budget(const UniversalOptions& options) {
  if (options.depth > 20) throw ResourceError("depth above 20 is not supported");
  if (options.bits < 1) throw ValidationError("bit budget must be at least 1");
  if (options.bits > (std::size_t{1} << 20)) throw ResourceError("bit budget above 2^20 is not supported");
  if (options.resolution < 1) throw ValidationError("resolution must be at least 1");
}

UniversalGraphon::UniversalGraphon(GraphonPtr wf, BitStream bits, const UniversalOptions& options,
                                   std::optional<ExactStepGraphon> exact_wf)
    : options_(options),
      layout_(resolved_order(options)),
      tiles_(std::move(wf), std::move(bits), options.depth, linear_cap_for(options.bits),
             options.resolution),
      exact_wf_(std::move(exact_wf)),
      truncation_(total_deviation(tiles_)) {
  check_universal_budget(options_);
}

double UniversalGraphon::value(double x, double y) const {
  const Part px = layout_.part_at(x);
  const Part py = layout_.part_at(y);
  return tiles_.value(px, py, layout_.to_local(px, x), layout_.to_local(py, y));
}

std::string UniversalGraphon::name() const {
  return "universal(" + wf().name() + ", D=" + std::to_string(options_.depth) +
         ", P=" + std::to_string(options_.bits) + ")";
}

UniversalGraphon build_universal(GraphonPtr wf, const UniversalOptions& options) {
  check_universal_budget(options);
  if (!wf) throw ValidationError("missing W_F");
  BitStream bits = encode_bits(*wf, options.bits, options.resolution);
  return UniversalGraphon(std::move(wf), std::move(bits), options);
}

UniversalGraphon build_universal(const ExactStepGraphon& wf, const UniversalOptions& options) {
  check_universal_budget(options);
  if (!representable_in_double(wf))
    throw ValidationError("exact W_F must have bounds and values representable in double");
  BitStream bits = encode_bits(wf, options.bits);
  return UniversalGraphon(make_step(to_double_graphon(wf)), std::move(bits), options, wf);
}

namespace {

double row_integral_difference(const Graphon& a, const Graphon& b, std::size_t resolution) {
  if (a.step() && b.step()) {
    const auto common = common_refinement(a.step()->partition(), b.step()->partition());
    double sum = 0.0;
    for (std::size_t i = 0; i < common.size(); ++i) {
      const double mid = 0.5 * (common.lo(i) + common.hi(i));
      sum += common.measure(i) * std::abs(degree(*a.step(), mid) - degree(*b.step(), mid));
    }
    return sum;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < resolution; ++i) {
    const double u = (static_cast<double>(i) + 0.5) / static_cast<double>(resolution);
    sum += std::abs(a.row_integral(u, 0.0, 1.0, resolution) - b.row_integral(u, 0.0, 1.0, resolution));
  }
  return sum / static_cast<double>(resolution);
}

}  // namespace

double universal_l1_distance(const UniversalGraphon& a, const UniversalGraphon& b) {
  if (a.depth() != b.depth() || a.budget() != b.budget() ||
      a.layout().order() != b.layout().order())
    throw ValidationError("universal graphons must share depth, bit budget and part order");
  const unsigned D = a.depth();
  const unsigned L = a.linear_cap();
  const BitStream& ra = a.bits();
  const BitStream& rb = b.bits();
  auto diff = [&](std::uint64_t k) {
    return std::abs(static_cast<int>(ra.bit(k)) - static_cast<int>(rb.bit(k)));
  };

  // B x F: the column over I_k carries r_{k+1}. The F rows of xi see the same
  // per-interval difference; the B rows see the signed sum.
  double bf = 0.0;
  double b_row = 0.0;
  for (unsigned k = 0; k <= L; ++k) {
    bf += p2(-static_cast<int>(k) - 1) * diff(k + 1);
    b_row += p2(-static_cast<int>(k) - 1) *
             (static_cast<double>(ra.bit(k + 1)) - static_cast<double>(rb.bit(k + 1)));
  }
  b_row = std::abs(b_row);

  // D x E: block I_{d,s,t,p} x I_{d,s,t}. The E rows of xi see the signed sum
  // over p.
  double de = 0.0;
  double e_row = 0.0;
  for (unsigned d = 0; d <= D; ++d)
    for (unsigned s = 0; s <= D; ++s)
      for (unsigned t = 0; t <= D; ++t) {
        const int sum = static_cast<int>(d + s + t);
        double signed_sum = 0.0;
        for (unsigned p = 0; p <= D; ++p) {
          const std::uint64_t k = phi({d, s, t, p}) + 1;
          const double w = p2(-sum - static_cast<int>(p) - 4);
          de += w * p2(-sum - 3) * diff(k);
          signed_sum += w * (static_cast<double>(ra.bit(k)) - static_cast<double>(rb.bit(k)));
        }
        e_row += p2(-sum - 3) * std::abs(signed_sum);
      }

  double gg = 0.0;
  if (a.wf().step() && b.wf().step()) {
    gg = l1_distance<double>(*a.wf().step(), *b.wf().step());
  } else {
    gg = l1_distance(a.wf(), b.wf(), a.resolution()).value;
  }
  const double g_row = row_integral_difference(a.wf(), b.wf(), a.resolution());

  // Row masses stay below 5, so xi is never clamped and differs by exactly a
  // fifth of the row-mass difference; Q x X and X x Q have area 5/196 each.
  const double xi_rows = bf + b_row + de + e_row + g_row;
  return (gg + 2.0 * (bf + de) + 2.0 * xi_rows) / 196.0;
}

}  // namespace graphon
