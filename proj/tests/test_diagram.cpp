#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace clasplab;

TEST(Validate, MinimalAndEmpty) {
  EXPECT_TRUE(validate(generate_unknot()).ok());
  EXPECT_TRUE(validate(FrontDiagram{}).ok());
}

TEST(Validate, RightCuspOutOfRange) {
  auto rep = validate(FrontDiagram{left_cusp(1), right_cusp(2)});
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.violations.front().event, 2u);
  EXPECT_EQ(rep.violations.front().rule, "position-range");
}

TEST(Validate, OpenDiagramAndBadPositions) {
  auto open = validate(FrontDiagram{left_cusp(1)});
  ASSERT_FALSE(open.ok());
  EXPECT_EQ(open.violations.front().rule, "closed");
  EXPECT_FALSE(validate(FrontDiagram{left_cusp(3), right_cusp(1)}).ok());
  EXPECT_FALSE(validate(FrontDiagram{left_cusp(1), crossing(2), right_cusp(1)}).ok());
  // an eye crossing itself is a legal front
  EXPECT_TRUE(validate(FrontDiagram{left_cusp(1), crossing(1), right_cusp(1)}).ok());
  EXPECT_FALSE(validate(FrontDiagram{right_cusp(1)}).ok());
}

TEST(Validate, InsertionFlagsOnlyTheIntroducedEvent) {
  const auto t = generate_trefoil();
  for (std::size_t at = 0; at <= t.size(); ++at) {
    std::vector<Event> ev(t.events().begin(), t.events().end());
    ev.insert(ev.begin() + static_cast<long>(at), crossing(9));
    auto rep = validate(FrontDiagram(ev));
    ASSERT_FALSE(rep.ok());
    EXPECT_EQ(rep.violations.front().event, at + 1);
  }
}

TEST(Trace, Counts) {
  auto u = trace_components(generate_unknot());
  ASSERT_EQ(u.component_count(), 1);
  EXPECT_EQ(u.components[0], (CuspTally{1, 1}));

  auto t = trace_components(generate_trefoil());
  ASSERT_EQ(t.component_count(), 1);
  EXPECT_EQ(t.components[0], (CuspTally{2, 2}));

  EXPECT_EQ(trace_components(FrontDiagram{left_cusp(1), right_cusp(1), left_cusp(1), right_cusp(1)})
                .component_count(),
            2);
  EXPECT_EQ(trace_components(FrontDiagram{}).component_count(), 0);
}

TEST(Trace, InvalidThrows) {
  try {
    trace_components(FrontDiagram{right_cusp(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidDiagram);
  }
}

TEST(Trace, TalliesBalancePerComponent) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    auto d = corpus::random_front(rng, 6 + k % 30);
    auto tr = trace_components(d);
    for (const auto& c : tr.components) EXPECT_EQ(c.left_cusps, c.right_cusps);
  }
}

TEST(Profile, DyckLike) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    auto prof = corpus::random_front(rng, 20).strand_profile();
    EXPECT_EQ(prof.front(), 0);
    EXPECT_EQ(prof.back(), 0);
    for (std::size_t i = 1; i < prof.size(); ++i) {
      EXPECT_GE(prof[i], 0);
      const int step = prof[i] - prof[i - 1];
      EXPECT_TRUE(step == 2 || step == -2 || step == 0);
    }
  }
}

TEST(Generators, Trefoil) {
  auto t = generate_trefoil();
  EXPECT_EQ(t.size(), 7u);
  EXPECT_EQ(t.crossing_count(), 3);
  EXPECT_EQ(serialize_diagram(t), "lc 1\nlc 3\nx 2\nx 2\nx 2\nrc 3\nrc 1\n");
}

TEST(Generators, BraidClosure) {
  const std::vector<int> w{1, 1, 1};
  auto d = generate_negative_braid_closure(2, w);
  EXPECT_EQ(d.crossing_count(), 3);
  EXPECT_EQ(trace_components(d).component_count(), 1);

  std::vector<int> w4;
  for (int k = 0; k < 5; ++k) w4.insert(w4.end(), {1, 2, 3});
  auto d4 = generate_negative_braid_closure(4, w4);
  EXPECT_EQ(d4.crossing_count(), 15);
  EXPECT_EQ(trace_components(d4).component_count(), 1);

  const std::vector<int> bad{5};
  try {
    generate_negative_braid_closure(2, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidBraidLetter);
  }
}

TEST(Generators, Torus4Family) {
  for (int n = 0; n <= 10; ++n) {
    auto d = generate_torus4(n);
    EXPECT_EQ(d.crossing_count(), 3 * (2 * n + 5)) << n;
    EXPECT_EQ(trace_components(d).component_count(), 1) << n;
    const auto tally = trace_components(d).components[0];
    EXPECT_EQ(tally.left_cusps, 2 * n + 5);
  }
}

TEST(Generators, DisjointUnionMultipliesRulings) {
  auto t = generate_trefoil();
  auto u = disjoint_union(t, t);
  EXPECT_EQ(enumerate_rulings(u).size(), 9u);
  EXPECT_EQ(enumerate_rulings(disjoint_union(t, generate_unknot())).size(), 3u);
}
