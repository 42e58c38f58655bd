#include "graphon/verify/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphon/errors.hpp"
#include "graphon/universal/pairing.hpp"

namespace graphon {

CheckReport typ_pairs_check(const StepFunction& f, double tol) {
  const std::size_t k = f.parts();
  // gram(i, j) = integral over Z of F(x, z) F(x', z) for x in cell i, x' in j.
  Matrix<double> gram(k, k, 0.0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      double s = 0.0;
      for (std::size_t z = 0; z < k; ++z) s += f.cell(i, z) * f.cell(j, z) * f.measure(z);
      gram(i, j) = s;
    }
  const std::string id = "lemma.typical_pairs";
  const double c = gram(0, 1 < k ? 1 : 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (std::abs(gram(i, j) - c) > tol)
        return not_applicable(id, "row inner products are not almost everywhere constant");

  // Conclusion: squared norms equal C and rows coincide, via
  // ||F_i - F_j||^2 = g_ii + g_jj - 2 g_ij.
  double worst = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    worst = std::max(worst, std::abs(gram(i, i) - c));
    for (std::size_t j = 0; j < k; ++j)
      worst = std::max(worst, std::abs(gram(i, i) + gram(j, j) - 2.0 * gram(i, j)));
  }
  CheckReport r = make_check(id, worst, 0.0, tol);
  r.note = "C=" + format_number(c);
  return r;
}

bool agreed_position(std::uint64_t position, unsigned k) {
  const Tuple4 t = phi_inv(position - 1);
  if (!DyadicIndex{static_cast<unsigned>(std::min<std::uint64_t>(t.a, 64)), t.b, t.c}.valid())
    return true;
  return t.a <= k && t.d <= k;
}

double semicontinuity_bound(unsigned k, const UniversalOptions& options) {
  const unsigned D = options.depth;
  const unsigned L = linear_cap_for(options.bits);
  const std::size_t P = options.bits;
  // B x F: r_j spans a column of width 2^{-j}.
  double bf = 0.0;
  for (std::uint64_t j = 1; j <= std::min<std::uint64_t>(P, L + 1); ++j)
    if (!agreed_position(j, k)) bf += std::ldexp(1.0, -static_cast<int>(j));
  // D x E: block I_{d,s,t,p} x I_{d,s,t}.
  double de = 0.0;
  for (unsigned d = 0; d <= D; ++d)
    for (unsigned s = 0; s <= D; ++s)
      for (unsigned t = 0; t <= D; ++t)
        for (unsigned p = 0; p <= D; ++p) {
          const std::uint64_t j = phi({d, s, t, p}) + 1;
          if (j > P || agreed_position(j, k)) continue;
          const int sum = static_cast<int>(d + s + t);
          de += std::ldexp(1.0, -sum - static_cast<int>(p) - 4) * std::ldexp(1.0, -sum - 3);
        }
  // G x G and the G rows of xi each differ by less than 2^{-k}; the B, D, E
  // and F rows of xi by at most the B x F and D x E terms.
  return 3.0 / 196.0 * (std::ldexp(1.0, -static_cast<int>(k)) + 2.0 * bf + 2.0 * de);
}

namespace {

bool constant_on_dyadic_squares(const Graphon& w, unsigned k) {
  const StepGraphon* s = w.step();
  if (!s) return false;
  const double scale = std::ldexp(1.0, static_cast<int>(k));
  for (double b : s->partition().bounds())
    if (b * scale != std::floor(b * scale)) return false;
  return true;
}

}  // namespace

CheckReport verify_semicontinuity(const GraphonPtr& a, const GraphonPtr& b, unsigned k,
                                  const UniversalOptions& options) {
  const std::string id = "semicontinuity.k" + std::to_string(k);
  if (!a || !b) throw ValidationError("missing input graphon");
  if (!constant_on_dyadic_squares(*a, k) || !constant_on_dyadic_squares(*b, k))
    return not_applicable(id, "inputs are not constant on dyadic squares of depth k");
  for (unsigned d = 0; d <= k; ++d)
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << d); ++s)
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << d); ++t) {
        const double da = dyadic_delta(*a, {d, s, t}, options.resolution);
        const double db = dyadic_delta(*b, {d, s, t}, options.resolution);
        for (unsigned p = 0; p <= k; ++p)
          if (binary_digit(da, p) != binary_digit(db, p))
            return not_applicable(id, "dyadic densities do not agree to k bits");
      }
  const UniversalGraphon wa = build_universal(a, options);
  const UniversalGraphon wb = build_universal(b, options);
  for (std::uint64_t j = 1; j <= options.bits; ++j)
    if (agreed_position(j, k) && wa.bits().bit(j) != wb.bits().bit(j))
      return not_applicable(id, "encoded bits differ at an agreed position");
  return make_check(id, universal_l1_distance(wa, wb), semicontinuity_bound(k, options), 1e-12,
                    CheckKind::at_most);
}

}  // namespace graphon
