// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "graphon/core_ops.hpp"
#include "graphon/cutnorm.hpp"
#include "graphon/decorated.hpp"
#include "graphon/densities.hpp"
#include "graphon/traces.hpp"
#include "graphon/universal/descriptor.hpp"
#include "graphon/universal/iterated.hpp"
#include "graphon/universal/pairing.hpp"
#include "graphon/universal/universal_graphon.hpp"
#include "graphon/verify/lemmas.hpp"
#include "graphon/verify/structure.hpp"
#include "graphon/verify/target.hpp"
#include "support/generators.hpp"

namespace graphon {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome phi_bijection() {
  std::size_t bad = 0;
  for (std::uint64_t n = 0; n < 100000; ++n) bad += phi(phi_inv(n)) != n;
  std::uint64_t n = 0;
  for (std::uint64_t s = 0; n < 100000; ++s)
    for (std::uint64_t a = 0; a <= s; ++a)
      for (std::uint64_t b = 0; a + b <= s; ++b)
        for (std::uint64_t c = 0; a + b + c <= s; ++c, ++n) bad += phi({a, b, c, s - a - b - c}) != n;
  const bool values = phi({0, 0, 0, 1}) == 1 && phi({0, 1, 0, 0}) == 3;
  return {bad == 0 && values, "mismatches=" + std::to_string(bad) + " phi(0,0,0,1)=" +
                                  std::to_string(phi({0, 0, 0, 1})) +
                                  " phi(0,1,0,0)=" + std::to_string(phi({0, 1, 0, 0}))};
}

Outcome decorated_semantics() {
  const ExactStepGraphon two_part(ExactIntervalPartition::uniform(2),
                             {{Rational(1, 2), Rational(1, 3)}, {Rational(1, 3), Rational(1)}});
  DecoratedGraph g(4);
  g.add_root(0);
  g.add_root(1);
  g.set_part(2, 1);
  g.set_part(3, 1);
  for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}) g.set_state(u, v, EdgeState::edge);
  g.set_state(1, 2, EdgeState::non_edge);
  const Rational exact = decorated_density(g, ExactPartitionedStepGraphon::by_degree(two_part), {0.1, 0.3});
  const double approx =
      decorated_density(g, PartitionedStepGraphon::by_degree(to_double_graphon(two_part)), {0.1, 0.3});
  bool ok = exact == Rational(2, 81) && std::abs(approx - 2.0 / 81.0) <= 1e-12;

  DecoratedGraph cherry(3);
  cherry.add_root(0);
  cherry.set_state(0, 1, EdgeState::edge);
  cherry.set_state(0, 2, EdgeState::edge);
  cherry.set_state(1, 2, EdgeState::non_edge);
  for (const Rational p : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)}) {
    const auto w = ExactPartitionedStepGraphon::by_degree(ExactStepGraphon::constant(p));
    ok = ok && decorated_density(cherry, w, {0.5}) == p * p * (1 - p);
  }
  return {ok, "two_part=" + to_string(exact) + " double_err=" + fmt("%.3g", std::abs(approx - 2.0 / 81.0)) +
                  " tol=1e-12"};
}

Outcome gamma4_identity() {
  std::mt19937_64 rng(301);
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const StepGraphon w = testing::random_step_graphon(rng, testing::pick(rng, 1, 6));
    const double rhs = induced_density(cycle_graph(4), w) / 3.0 +
                       induced_density(k4_minus(), w) / 3.0 + induced_density(complete_graph(4), w);
    worst = std::max(worst, std::abs(gamma4_density(w) - rhs));
  }
  return {worst <= 1e-9, "max_err=" + fmt("%.3g", worst) + " tol=1e-9 graphons=100"};
}

Outcome gamma4_cut_bounds() {
  std::mt19937_64 rng(302);
  double worst_low = -1.0, worst_high = -1.0;
  bool exact = true;
  for (int rep = 0; rep < 100; ++rep) {
    const StepFunction f = testing::random_step_function(rng, testing::pick(rng, 1, 10));
    const CutNormResult c = cut_norm(f);
    exact = exact && c.exact;
    const double g = gamma4_density(f);
    worst_low = std::max(worst_low, std::pow(c.value, 4) - g);
    worst_high = std::max(worst_high, g - 4.0 * c.value);
  }
  return {exact && worst_low <= 1e-9 && worst_high <= 1e-9,
          "max(cut^4-g)=" + fmt("%.3g", worst_low) + " max(g-4cut)=" + fmt("%.3g", worst_high) +
              " tol=1e-9 exact=" + (exact ? "yes" : "no")};
}

Outcome trace_lemmas() {
  std::mt19937_64 rng(303);
  double worst = -1e300;
  for (int rep = 0; rep < 1000; ++rep) {
    const std::size_t k = testing::pick(rng, 1, 8);
    const Matrix<double> m = testing::random_matrix(rng, k, k);
    const double t = trace_c4(m);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        worst = std::max(worst, trace_c4(row_pair_average(m, i, j)) - t);
    BlockGrouping g;
    for (auto* side : {&g.rows, &g.cols}) {
      const std::size_t groups = testing::pick(rng, 1, k);
      side->assign(groups, {});
      for (std::size_t i = 0; i < k; ++i) (*side)[i < groups ? i : testing::pick(rng, 0, groups - 1)].push_back(i);
    }
    worst = std::max(worst, trace_c4(block_average(m, g)) - t);
  }
  return {worst <= 1e-9, "max_increase=" + fmt("%.3g", worst) + " tol=1e-9 matrices=1000"};
}

Outcome gamma4_gap() {
  std::mt19937_64 rng(304);
  std::size_t triggered = 0;
  double worst = -1e300;
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t k = testing::pick(rng, 1, 4);
    const std::size_t K = k * testing::pick(rng, 1, 16 / k);
    Matrix<double> m(K, K);
    for (std::size_t i = 0; i < K; ++i)
      for (std::size_t j = i; j < K; ++j) m(i, j) = m(j, i) = testing::uniform01(rng);
    const StepGraphon w(IntervalPartition::uniform(K), m);
    const StepGraphon w0 = block_average_graphon(w, IntervalPartition::uniform(k));
    const Gamma4GapResult r = gamma4_gap_check(w, w0, 0.05);
    if (!r.triggered) continue;
    ++triggered;
    worst = std::max(worst, r.bound - r.gap);
  }
  return {triggered > 0 && worst <= 1e-9,
          "triggered=" + std::to_string(triggered) + "/200 max(eps^4/8-gap)=" + fmt("%.3g", worst) +
              " tol=1e-9"};
}

bool refines(const IntervalPartition& fine, const IntervalPartition& base) {
  for (double b : base.bounds()) {
    bool found = false;
    for (double c : fine.bounds()) found = found || c == b;
    if (!found) return false;
  }
  return true;
}

Outcome weak_regularity() {
  bool ok = true;
  std::string detail;
  for (unsigned level : {0u, 1u})
    for (unsigned base_depth : {0u, 2u})
      for (double eps : {0.5, 0.25}) {
        const StepGraphon w = dyadic_average(CheckerGraphon(level, 20), 10, 4096);
        const IntervalPartition base = IntervalPartition::dyadic(base_depth);
        const RegularityReport r = weak_regular_partition(w, eps, base);
        // Independent certificate: exact cut norm, else the L1 norm as an upper bound.
        const StepGraphon avg = block_average_graphon(w, r.partition);
        const StepFunction diff = difference<double>(w, dyadic_average(StepEvaluator(avg), 10, 4096));
        const CutNormResult c = cut_norm(diff);
        const double cut = c.exact ? c.value : l1_distance<double>(w, dyadic_average(StepEvaluator(avg), 10, 4096));
        const bool good = r.certified && refines(r.partition, base) && cut <= eps;
        ok = ok && good;
        detail += fmt(" c%.0f", level) + fmt("b%.0f", base_depth) + fmt("e%.2f:", eps) +
                  fmt("cut=%.4f", cut) + "/parts=" + std::to_string(r.partition.size());
      }
  return {ok, detail.substr(1)};
}

Outcome construction_structure() {
  bool ok = true;
  double worst = 0.0;
  std::size_t checks = 0;
  for (const char* spec : {"zero", "one", "const:1/2", "half"}) {
    UniversalOptions opt;
    opt.depth = 8;
    opt.bits = 64;
    const UniversalGraphon w0 = build_universal(resolve_wf(spec), opt);
    for (const CheckReport& r : verify_structure(w0, 4096)) {
      ++checks;
      ok = ok && r.status == CheckStatus::pass && r.tolerance <= 0.02;
      if (r.kind == CheckKind::equal) worst = std::max(worst, std::abs(r.measured - r.expected));
    }
  }
  return {ok, "builds=4 checks=" + std::to_string(checks) + " max_dev=" + fmt("%.3g", worst) +
                  " tol=0.02"};
}

Outcome checker_mass_check() {
  const double analytic = checker_mass(0, 20);
  UniversalOptions opt;
  opt.depth = 20;
  opt.bits = 64;
  const UniversalGraphon w0 = build_universal(make_half(), opt);
  const CheckReport r = verify_checker_mass(w0, 2048);
  const double analytic_err = std::abs(analytic - 1.0 / 3.0);
  const double numeric_err = std::abs(r.measured - 1.0 / 3.0);
  return {analytic_err <= 1e-9 && numeric_err <= 1e-3,
          "analytic_err=" + fmt("%.3g", analytic_err) + " tol=1e-9 grid_err=" +
              fmt("%.3g", numeric_err) + " tol=1e-3"};
}

Outcome encoding_round_trip() {
  std::mt19937_64 rng(310);
  const ExactStepGraphon wf = testing::random_sixteenths(rng);
  UniversalOptions opt;
  opt.depth = 8;
  opt.bits = 2048;
  const UniversalGraphon w0 = build_universal(wf, opt);
  std::size_t squares = 0, wrong = 0;
  for (unsigned d = 0; d <= 2; ++d)
    for (std::uint64_t s = 0; s < (1u << d); ++s)
      for (std::uint64_t t = 0; t < (1u << d); ++t, ++squares)
        wrong += decode_from_tiles_exact(w0, {d, s, t}) != dyadic_delta(wf, {d, s, t});
  std::size_t failed = 0;
  const auto reports = verify_target_exact(w0, 2);
  for (const CheckReport& r : reports) failed += r.status != CheckStatus::pass;
  return {wrong == 0 && failed == 0 && !reports.empty(),
          "squares=" + std::to_string(squares) + " decode_errors=" + std::to_string(wrong) +
              " exact_checks=" + std::to_string(reports.size()) + " failed=" + std::to_string(failed) +
              " tol=0"};
}

Outcome semicontinuity() {
  UniversalOptions opt;
  opt.depth = 8;
  opt.bits = 4096;
  const double p = 1.0 / 3.0;
  bool ok = true;
  double previous = INFINITY;
  std::string detail;
  for (unsigned k : {2u, 4u, 6u}) {
    const double q = std::floor(std::ldexp(p, static_cast<int>(k))) / std::ldexp(1.0, static_cast<int>(k));
    const CheckReport r = verify_semicontinuity(make_constant(p), make_constant(q), k, opt);
    ok = ok && r.status == CheckStatus::pass && std::isfinite(r.measured) &&
         r.measured <= r.expected && r.measured <= previous + 1e-9;
    previous = r.measured;
    detail += " k=" + std::to_string(k) + ":dist=" + fmt("%.4g", r.measured) + "/eps=" + fmt("%.4g", r.expected);
  }
  return {ok, detail.substr(1)};
}

Outcome typical_pairs() {
  Matrix<double> rows(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) rows(i, j) = 0.25 * (j + 1);
  const CheckReport good = typ_pairs_check(StepFunction(IntervalPartition::uniform(3), rows), 1e-12);
  Matrix<double> swap(2, 2, 0.0);
  swap(0, 0) = swap(1, 1) = 1.0;
  const CheckReport bad = typ_pairs_check(StepFunction(IntervalPartition::uniform(2), swap), 1e-12);
  return {good.status == CheckStatus::pass && bad.status == CheckStatus::not_applicable,
          std::string("constant_rows=") + status_name(good.status) +
              " violated_hypothesis=" + status_name(bad.status)};
}

}  // namespace
}  // namespace graphon

int main() {
  using namespace graphon;
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"phi_bijection", 1, phi_bijection},
      {"decorated_semantics", 1, decorated_semantics},
      {"gamma4_identity", 10, gamma4_identity},
      {"gamma4_cut_bounds", 60, gamma4_cut_bounds},
      {"trace_monotonicity", 10, trace_lemmas},
      {"gamma4_gap", 120, gamma4_gap},
      {"weak_regularity", 60, weak_regularity},
      {"construction_structure", 480, construction_structure},
      {"checker_mass", 10, checker_mass_check},
      {"encoding_round_trip", 30, encoding_round_trip},
      {"semicontinuity", 120, semicontinuity},
      {"typical_pairs", 1, typical_pairs},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.pass && secs < c.limit_seconds;
    failures += !pass;
    std::printf("ACCEPT %2d %-22s %s %s runtime=%.3fs limit=%.0fs\n", index, c.name,
                pass ? "PASS" : "FAIL", o.detail.c_str(), secs, c.limit_seconds);
  }
  std::printf("ACCEPT summary %d/%d passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
