#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "graphon/universal/descriptor.hpp"
#include "graphon/universal/iterated.hpp"
#include "graphon/universal/pairing.hpp"
#include "graphon/verify/encoding_checks.hpp"
#include "graphon/verify/lemmas.hpp"
#include "graphon/verify/report.hpp"
#include "graphon/verify/structure.hpp"
#include "graphon/verify/target.hpp"
#include "support/generators.hpp"

namespace graphon {
namespace {

UniversalOptions small_options(unsigned depth = 8, std::size_t bits = 64) {
  UniversalOptions opt;
  opt.depth = depth;
  opt.bits = bits;
  return opt;
}

const CheckReport* find(const std::vector<CheckReport>& rs, const std::string& id) {
  for (const CheckReport& r : rs)
    if (r.id == id) return &r;
  return nullptr;
}

TEST(Report, StatusFollowsKind) {
  EXPECT_EQ(make_check("a", 1.0, 1.05, 0.1).status, CheckStatus::pass);
  EXPECT_EQ(make_check("a", 1.0, 1.2, 0.1).status, CheckStatus::fail);
  EXPECT_EQ(make_check("a", 5.0, 1.0, 0.0, CheckKind::at_least).status, CheckStatus::pass);
  EXPECT_EQ(make_check("a", 0.5, 1.0, 0.1, CheckKind::at_least).status, CheckStatus::fail);
  EXPECT_EQ(make_check("a", 0.5, 1.0, 0.0, CheckKind::at_most).status, CheckStatus::pass);
  EXPECT_EQ(make_check("a", std::nan(""), 1.0, 1.0).status, CheckStatus::fail);
}

TEST(Report, Formatting) {
  const CheckReport r = make_check("degree.A", 0.5, 0.25, 1e-9, CheckKind::equal, "n=64");
  EXPECT_EQ(format_check(r), "CHECK degree.A FAIL measured=0.5 expected=0.25 tol=1e-09 res=n=64");
  const CheckReport lo = make_check("x", 1.0, 0.5, 0.0, CheckKind::at_least);
  EXPECT_EQ(format_check(lo), "CHECK x PASS measured=1 expected=0.5 tol=0 kind=at_least");
  const CheckReport na = not_applicable("y", "no digits");
  EXPECT_EQ(na.status, CheckStatus::not_applicable);
  EXPECT_EQ(format_check(na), "CHECK y NA measured=nan expected=nan tol=0 note=\"no digits\"");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
}

TEST(Report, SortedAndFailureDetection) {
  std::vector<CheckReport> rs{make_check("b", 0, 0, 0), not_applicable("c", ""),
                              make_check("a", 0, 0, 0)};
  EXPECT_FALSE(any_failed(rs));
  std::ostringstream out;
  print_reports(out, rs);
  EXPECT_EQ(out.str().substr(0, 8), "CHECK a ");
  rs.push_back(make_check("d", 1, 0, 0));
  EXPECT_TRUE(any_failed(rs));
}

TEST(TypicalPairs, RowsIndependentOfX) {
  Matrix<double> m(3, 3);
  const double f[3] = {0.2, 0.9, 0.5};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = f[j];
  const IntervalPartition p({0.0, 0.25, 0.5, 1.0});
  const CheckReport r = typ_pairs_check(StepFunction(p, m), 1e-12);
  EXPECT_EQ(r.status, CheckStatus::pass);
  EXPECT_EQ(r.note, "C=" + format_number(0.25 * 0.04 + 0.25 * 0.81 + 0.5 * 0.25));
}

TEST(TypicalPairs, Constant) {
  const StepFunction c(IntervalPartition::uniform(4), Matrix<double>(4, 4, 0.6));
  const CheckReport r = typ_pairs_check(c, 1e-12);
  EXPECT_EQ(r.status, CheckStatus::pass);
  EXPECT_EQ(r.note, "C=" + format_number(0.36));
}

TEST(TypicalPairs, DistinctRowsAreNotApplicable) {
  Matrix<double> m(2, 2, 0.0);
  m(0, 0) = m(1, 1) = 1.0;
  const CheckReport r = typ_pairs_check(StepFunction(IntervalPartition::uniform(2), m), 1e-12);
  EXPECT_EQ(r.status, CheckStatus::not_applicable);
}

TEST(TypicalPairs, NeverFailsOnRandomInput) {
  // The lemma holds, so the check is either NA or PASS.
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t k = testing::pick(rng, 1, 4);
    Matrix<double> m(k, k);
    const bool flat = rep % 2 == 0;
    for (std::size_t j = 0; j < k; ++j) {
      const double v = std::round(testing::uniform01(rng) * 4) / 4;
      for (std::size_t i = 0; i < k; ++i) m(i, j) = flat ? v : std::round(testing::uniform01(rng) * 4) / 4;
    }
    const CheckReport r = typ_pairs_check(StepFunction(testing::random_partition(rng, k), m), 1e-9);
    EXPECT_NE(r.status, CheckStatus::fail);
    if (flat) EXPECT_EQ(r.status, CheckStatus::pass);
  }
}

TEST(Semicontinuity, IdenticalInputs) {
  const GraphonPtr a = make_constant(0.3);
  const CheckReport r = verify_semicontinuity(a, a, 3, small_options(6, 512));
  EXPECT_EQ(r.status, CheckStatus::pass);
  EXPECT_EQ(r.measured, 0.0);
}

TEST(Semicontinuity, AgreedPositions) {
  // Every invalid square is agreed, whatever k is.
  EXPECT_TRUE(agreed_position(bit_position({0, 1, 0}, 30), 0));
  EXPECT_TRUE(agreed_position(bit_position({1, 1, 0}, 1), 1));
  EXPECT_FALSE(agreed_position(bit_position({1, 1, 0}, 2), 1));
  EXPECT_FALSE(agreed_position(bit_position({2, 1, 0}, 0), 1));
}

TEST(Semicontinuity, ConstantsSharingLeadingDigits) {
  const UniversalOptions opt = small_options(6, 1024);
  const GraphonPtr p = make_constant(1.0 / 3.0);
  double previous = std::numeric_limits<double>::infinity();
  for (unsigned k : {2u, 4u, 6u}) {
    const double q = std::floor(std::ldexp(1.0 / 3.0, static_cast<int>(k))) / std::ldexp(1.0, static_cast<int>(k));
    const CheckReport r = verify_semicontinuity(p, make_constant(q), k, opt);
    ASSERT_EQ(r.status, CheckStatus::pass) << format_check(r);
    EXPECT_LE(r.measured, semicontinuity_bound(k, opt) + 1e-12);
    EXPECT_LE(r.measured, previous + 1e-9);
    previous = r.measured;
  }
  EXPECT_LT(semicontinuity_bound(6, opt), semicontinuity_bound(2, opt));
}

TEST(Semicontinuity, DisagreeingInputsAreNotApplicable) {
  const CheckReport r =
      verify_semicontinuity(make_constant(0.25), make_constant(0.75), 2, small_options(6, 512));
  EXPECT_EQ(r.status, CheckStatus::not_applicable);
  const CheckReport h =
      verify_semicontinuity(make_half(), make_half(), 2, small_options(6, 512));
  EXPECT_EQ(h.status, CheckStatus::not_applicable);
}

TEST(Encoding, SpecificIdentities) {
  const UniversalGraphon w0 = build_universal(make_constant(0.5), small_options());
  const auto bit = read_de_bit(w0, {0, 0, 0, 1});
  ASSERT_TRUE(bit);
  EXPECT_EQ(*bit, 1u);
  EXPECT_EQ(expected_bit(w0, 2), 1u);
  EXPECT_NEAR(measured_tau(w0, {0, 0, 0, 0}), 0.5, 1e-12);
  EXPECT_NEAR(measured_tau(w0, {0, 1, 0, 0}), std::ldexp(1.0, -4), 1e-12);
  const auto strip = cf_strip(w0, 1, 1, 0);
  ASSERT_TRUE(strip);
  EXPECT_EQ(*strip, 2u);
  // B x F column k carries r_k at every B coordinate.
  const PartLayout& l = w0.layout();
  const Interval i1 = iterated_interval({1});
  for (double u : {0.1, 0.5, 0.9})
    EXPECT_EQ(w0.value(l.to_global(Part::B, u), l.to_global(Part::F, 0.5 * (i1.lo + i1.hi))), 1.0);
}

class StandardInputs : public ::testing::TestWithParam<std::string> {};

TEST_P(StandardInputs, FullReportPasses) {
  const UniversalGraphon w0 = build_universal(resolve_wf(GetParam()), small_options(8, 64));
  std::vector<CheckReport> rs = verify_structure(w0, 4096);
  for (auto& r : verify_encoding(w0)) rs.push_back(r);
  for (auto& r : verify_target(w0, 2, 1024)) rs.push_back(r);
  rs.push_back(verify_checker_mass(w0, 2048));
  std::size_t passed = 0;
  for (const CheckReport& r : rs) {
    EXPECT_NE(r.status, CheckStatus::fail) << format_check(r);
    passed += r.status == CheckStatus::pass;
  }
  EXPECT_GT(passed, 20u);
  const CheckReport* a = find(rs, "degree.A");
  ASSERT_NE(a, nullptr);
  EXPECT_NEAR(a->expected, 90.0 / 252.0, 1e-15);
  EXPECT_LE(a->tolerance, 0.02);
  const CheckReport* q = find(rs, "degree.Q.lower");
  ASSERT_NE(q, nullptr);
  EXPECT_EQ(q->status, CheckStatus::pass);
}

INSTANTIATE_TEST_SUITE_P(Verify, StandardInputs,
                         ::testing::Values("zero", "one", "const:1/2", "half", "checker"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s)
                             if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                           return s;
                         });

TEST(Target, HalfGraphonSquare) {
  const UniversalGraphon w0 = build_universal(make_half(), small_options(8, 4096));
  const std::vector<CheckReport> rs = verify_target(w0, 1, 1024);
  const CheckReport* r = find(rs, "target.density(1,1,0)");
  ASSERT_NE(r, nullptr);
  EXPECT_NEAR(r->expected, 0.5, 1e-12);
  EXPECT_NEAR(r->measured, 0.5, r->tolerance);
  EXPECT_LE(r->tolerance, 2.0 / 1024.0 + 1e-9);
  EXPECT_EQ(r->status, CheckStatus::pass);
}

TEST(Target, ConstantEverySquare) {
  const UniversalGraphon w0 = build_universal(make_constant(0.375), small_options(8, 4096));
  for (unsigned d = 0; d <= 2; ++d)
    for (unsigned s = 0; s < (1u << d); ++s)
      for (unsigned t = 0; t < (1u << d); ++t)
        EXPECT_NEAR(decode_from_tiles(w0, {d, s, t}), 0.375, 1e-12);
}

TEST(Target, ExactRoundTripForDyadicSteps) {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 3; ++rep) {
    const ExactStepGraphon wf = testing::random_sixteenths(rng);
    const UniversalGraphon w0 = build_universal(wf, small_options(8, 2048));
    for (const CheckReport& r : verify_target_exact(w0, 2)) {
      EXPECT_EQ(r.status, CheckStatus::pass) << format_check(r);
      EXPECT_EQ(r.tolerance, 0.0);
    }
  }
}

TEST(Target, FewBitsDecodeIsNotApplicable) {
  const UniversalGraphon w0 = build_universal(make_constant(0.5), small_options(8, 4));
  bool saw_na = false;
  for (const CheckReport& r : verify_target(w0, 2, 256)) {
    EXPECT_NE(r.status, CheckStatus::fail) << format_check(r);
    saw_na = saw_na || r.status == CheckStatus::not_applicable;
  }
  EXPECT_TRUE(saw_na);
}

}  // namespace
}  // namespace graphon
