#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "graphon/core_ops.hpp"
#include "graphon/errors.hpp"
#include "graphon/graphon.hpp"
#include "graphon/step_io.hpp"
#include "graphon/universal/iterated.hpp"
#include "support/generators.hpp"

namespace graphon {
namespace {

StepGraphon two_part_graphon() {
  return StepGraphon(IntervalPartition::uniform(2), {{0.5, 1.0 / 3.0}, {1.0 / 3.0, 1.0}});
}

TEST(Interval, HalfOpenMembership) {
  const Interval i = make_interval(0.25, 0.5);
  EXPECT_TRUE(i.contains(0.25));
  EXPECT_FALSE(i.contains(0.5));
  EXPECT_THROW(make_interval(0.5, 0.5), ValidationError);
  EXPECT_THROW(make_interval(-0.1, 0.5), ValidationError);
}

TEST(Interval, UnionMergesAndMeasures) {
  const IntervalUnion u{{0.5, 0.75}, {0.0, 0.25}, {0.25, 0.3}};
  EXPECT_DOUBLE_EQ(u.measure(), 0.55);
  EXPECT_TRUE(u.contains(0.29));
  EXPECT_FALSE(u.contains(0.3));
}

TEST(Partition, LocateUsesLeftClosedCells) {
  const auto p = IntervalPartition::uniform(4);
  EXPECT_EQ(p.locate(0.0), 0u);
  EXPECT_EQ(p.locate(0.25), 1u);
  EXPECT_EQ(p.locate(0.9999), 3u);
  EXPECT_THROW(p.locate(1.0), DomainError);
}

TEST(Partition, RejectsBadBounds) {
  EXPECT_THROW(IntervalPartition({0.0, 0.5, 0.5, 1.0}), ValidationError);
  EXPECT_THROW(IntervalPartition({0.1, 1.0}), ValidationError);
}

TEST(Partition, CommonRefinementRefinesBoth) {
  const IntervalPartition a({0.0, 0.3, 1.0});
  const IntervalPartition b({0.0, 0.5, 0.7, 1.0});
  const auto c = common_refinement(a, b);
  EXPECT_EQ(c.size(), 4u);
  EXPECT_TRUE(c.refines(a));
  EXPECT_TRUE(c.refines(b));
  EXPECT_FALSE(a.refines(b));
}

TEST(Eval, HalfGraphon) {
  HalfGraphon h;
  EXPECT_EQ(eval(h, 0.6, 0.7), 1.0);
  EXPECT_EQ(eval(h, 0.2, 0.3), 0.0);
  EXPECT_EQ(eval(h, 0.5, 0.5), 1.0);
  EXPECT_EQ(eval(h, 0.9, 0.2), 1.0);
}

TEST(Eval, StepGraphonBlockValue) {
  EXPECT_DOUBLE_EQ(eval(two_part_graphon(), 0.25, 0.75), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(eval(two_part_graphon(), 0.5, 0.5), 1.0);  // boundary belongs to the right cell
}

TEST(Eval, RejectsCoordinatesOutsideUnitInterval) {
  HalfGraphon h;
  EXPECT_THROW(eval(h, 1.0, 0.2), DomainError);
  EXPECT_THROW(eval(h, 0.2, -0.1), DomainError);
  EXPECT_THROW(eval(two_part_graphon(), 0.2, 1.0), DomainError);
}

TEST(Degree, Examples) {
  HalfGraphon h;
  EXPECT_NEAR(degree(h, 0.25, 4096), 0.25, 1e-12);
  ConstantGraphon c(0.3);
  EXPECT_NEAR(degree(c, 0.7, 16), 0.3, 1e-15);
  const IntervalUnion b{{0.5, 1.0}};
  EXPECT_DOUBLE_EQ(degree(two_part_graphon(), 0.1, b), 1.0 / 3.0);
}

TEST(Degree, ExactStepDegree) {
  const auto g = to_exact_graphon(two_part_graphon());
  // 1/3 is not a double; convert exactly from the rational literal instead.
  const ExactStepGraphon exact(ExactIntervalPartition::uniform(2),
                               {{Rational(1, 2), Rational(1, 3)}, {Rational(1, 3), Rational(1)}});
  EXPECT_EQ(degree(exact, 0.1), Rational(5, 12));
  EXPECT_EQ(degree(exact, 0.9), Rational(2, 3));
  EXPECT_EQ(g.parts(), 2u);
}

TEST(Degree, NullSubsetRejected) {
  HalfGraphon h;
  EXPECT_THROW(degree(h, 0.1, IntervalUnion{}, 64), DomainError);
  EXPECT_THROW(degree(two_part_graphon(), 0.1, IntervalUnion{{0.5, 0.5 + 1e-14}}), DomainError);
}

TEST(DyadicAverage, HalfGraphonDepthOne) {
  HalfGraphon h;
  const StepGraphon a = dyadic_average(h, 1, 1024);
  EXPECT_NEAR(a.cell(0, 0), 0.0, 1e-12);
  EXPECT_NEAR(a.cell(0, 1), 0.5, 1e-12);
  EXPECT_NEAR(a.cell(1, 0), 0.5, 1e-12);
  EXPECT_NEAR(a.cell(1, 1), 1.0, 1e-12);
}

TEST(DyadicAverage, ConstantAndDepthZero) {
  ConstantGraphon c(0.4);
  const StepGraphon a = dyadic_average(c, 3, 64);
  for (std::size_t i = 0; i < a.parts(); ++i)
    for (std::size_t j = 0; j < a.parts(); ++j) EXPECT_DOUBLE_EQ(a.cell(i, j), 0.4);
  HalfGraphon h;
  EXPECT_NEAR(dyadic_average(h, 0, 64).cell(0, 0), 0.5, 1e-12);
}

TEST(DyadicAverage, DepthLimit) {
  HalfGraphon h;
  EXPECT_THROW(dyadic_average(h, 12, 64), ResourceError);
  Limits small;
  small.max_dyadic_depth = 2;
  EXPECT_THROW(dyadic_average(h, 3, 64, small), ResourceError);
}

TEST(DyadicAverage, IsAProjection) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const auto g = to_exact_graphon(testing::random_step_graphon(rng, testing::pick(rng, 1, 5)));
    for (unsigned d = 0; d <= 3; ++d) {
      const auto once = dyadic_average(g, d);
      EXPECT_EQ(dyadic_average(once, d).values(), once.values());
    }
  }
}

TEST(DyadicAverage, DyadicStepGraphonsAreFixedPoints) {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 10; ++rep) {
    const ExactStepGraphon g = testing::random_sixteenths(rng);
    for (unsigned d = 2; d <= 5; ++d) {
      const auto avg = dyadic_average(g, d);
      EXPECT_EQ(l1_distance<Rational>(avg, g), Rational(0)) << "depth " << d;
    }
  }
}

TEST(DyadicAverage, L1ErrorIsMonotoneInDepth) {
  HalfGraphon h;
  CheckerGraphon checker(0, 12);
  for (const Graphon* g : {static_cast<const Graphon*>(&h), static_cast<const Graphon*>(&checker)}) {
    double previous = 2.0;
    for (unsigned d = 0; d <= 6; ++d) {
      const StepEvaluator avg(dyadic_average(*g, d, 2048));
      const double dist = l1_distance(avg, *g, 2048).value;
      EXPECT_LE(dist, previous + 1e-12) << g->name() << " depth " << d;
      previous = dist;
    }
  }
}

TEST(L1Distance, Examples) {
  HalfGraphon h;
  ConstantGraphon zero(0.0), one(1.0);
  const L1Distance d = l1_distance(h, zero, 4096);
  EXPECT_NEAR(d.value, 0.5, d.error_bound + 1e-12);
  EXPECT_EQ(l1_distance(h, h, 256).value, 0.0);
  const L1Distance exact = l1_distance(one, zero, 8);
  EXPECT_EQ(exact.value, 1.0);
  EXPECT_EQ(exact.resolution, 0u);
}

TEST(L1Distance, ExactOnCommonRefinement) {
  const ExactStepGraphon a(ExactIntervalPartition({Rational(0), Rational(1, 3), Rational(1)}),
                           {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  const auto b = ExactStepGraphon::constant(Rational(1, 2));
  EXPECT_EQ(l1_distance<Rational>(a, b), Rational(1, 2));
}

TEST(RenderGrid, Examples) {
  ConstantGraphon one(1.0);
  const Grid g1 = render_grid(one, 2);
  for (double v : g1.cells) EXPECT_EQ(v, 1.0);

  HalfGraphon h;
  const Grid g2 = render_grid(h, 2);
  EXPECT_EQ(g2.at(0, 0), 0.0);
  EXPECT_EQ(g2.at(0, 1), 1.0);
  EXPECT_EQ(g2.at(1, 0), 1.0);
  EXPECT_EQ(g2.at(1, 1), 1.0);

  CheckerGraphon checker(0, 20);
  const Grid g3 = render_grid(checker, 4);
  EXPECT_EQ(g3.at(0, 0), 1.0);
  EXPECT_EQ(g3.at(0, 1), 1.0);
  EXPECT_EQ(g3.at(1, 1), 1.0);
  EXPECT_EQ(g3.at(0, 2), 0.0);
  EXPECT_EQ(g3.at(2, 2), 1.0);
  EXPECT_EQ(g3.at(2, 3), 0.0);
  EXPECT_THROW(render_grid(one, 0), ValidationError);
}

TEST(RenderGrid, PgmOutput) {
  HalfGraphon h;
  std::ostringstream out;
  write_pgm(render_grid(h, 2), out);
  EXPECT_EQ(out.str(), "P2\n2 2\n255\n0 255\n255 255\n");
}

TEST(Properties, SymmetryAndRange) {
  std::mt19937_64 rng(5);
  HalfGraphon h;
  CheckerGraphon c(2, 6);
  const StepEvaluator s(testing::random_step_graphon(rng, 5));
  for (const Graphon* g : {static_cast<const Graphon*>(&h), static_cast<const Graphon*>(&c),
                           static_cast<const Graphon*>(&s)}) {
    for (int i = 0; i < 10000; ++i) {
      const double x = testing::uniform01(rng);
      const double y = testing::uniform01(rng);
      const double v = g->value(x, y);
      ASSERT_EQ(v, g->value(y, x)) << g->name();
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
    }
  }
}

TEST(StepIo, RoundTripExact) {
  const ExactStepGraphon g(ExactIntervalPartition({Rational(0), Rational(1, 3), Rational(1)}),
                           {{Rational(1, 7), Rational(2, 3)}, {Rational(2, 3), Rational(0)}});
  std::stringstream buf;
  write_step_function(buf, g);
  const ExactStepGraphon back = read_exact_step_graphon(buf);
  EXPECT_EQ(back.values(), g.values());
  EXPECT_EQ(back.partition(), g.partition());
}

TEST(StepIo, RoundTripDouble) {
  std::mt19937_64 rng(3);
  const StepGraphon g = testing::random_step_graphon(rng, 4);
  std::stringstream buf;
  write_step_function(buf, g);
  const StepGraphon back = read_step_graphon(buf);
  EXPECT_EQ(back.values(), g.values());
}

TEST(StepIo, CommentsAndFractions) {
  std::istringstream in(
      "# two-part graphon\nstepgraphon 1\nparts 2\nbounds 0 1/2 1\n1/2 1/3\n1/3 1\n");
  const ExactStepGraphon g = read_exact_step_graphon(in);
  EXPECT_EQ(g.cell(0, 1), Rational(1, 3));
}

TEST(StepIo, ErrorsCarryLineAndColumn) {
  std::istringstream asym("stepgraphon 1\nparts 2\nbounds 0 0.5 1\n0 1\n0.5 1\n");
  try {
    read_step_graphon(asym);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5u);
    EXPECT_EQ(e.column(), 1u);
  }
  std::istringstream bad_number("stepgraphon 1\nparts 1\nbounds 0 1\n  x\n");
  try {
    read_step_graphon(bad_number);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 3u);
  }
  std::istringstream short_row("stepgraphon 1\nparts 2\nbounds 0 0.5 1\n0 1\n1\n");
  EXPECT_THROW(read_step_graphon(short_row), ParseError);
  std::istringstream range("stepgraphon 1\nparts 1\nbounds 0 1\n2\n");
  EXPECT_THROW(read_step_graphon(range), ParseError);
}

TEST(StepIo, AsymmetricStepFunction) {
  std::istringstream in("stepgraphon 1\nparts 2\nasymmetric\nbounds 0 0.5 1\n0 -1\n0.5 1\n");
  const StepFunction f = read_step_function(in);
  EXPECT_EQ(f.cell(0, 1), -1.0);
  EXPECT_FALSE(f.symmetric());
}

TEST(StepGraphonType, Invariants) {
  EXPECT_THROW(StepGraphon(IntervalPartition::uniform(2), {{0.0, 0.5}, {0.4, 0.0}}), ValidationError);
  EXPECT_THROW(StepGraphon(IntervalPartition::uniform(1), {{-0.5}}), ValidationError);
  EXPECT_THROW(StepFunction(IntervalPartition::uniform(1), {{1.5}}), ValidationError);
  EXPECT_THROW(StepGraphon(IntervalPartition::uniform(2), {{0.5}}), ValidationError);
}

}  // namespace
}  // namespace graphon
