#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace clasplab;

TEST(Resolve, Fixtures) {
  auto u = resolve(generate_unknot(), {});
  EXPECT_EQ(u.eye_count, 1);
  EXPECT_TRUE(u.crossings.empty());

  auto all = resolve(generate_trefoil(), {1, 2, 3});
  EXPECT_EQ(all.eye_count, 2);
  EXPECT_TRUE(all.crossings.empty());
  EXPECT_EQ(all.switches.size(), 3u);

  auto one = resolve(generate_trefoil(), {1});
  ASSERT_EQ(one.crossings.size(), 2u);
  EXPECT_EQ(one.crossings[0].ordinal, 2);
  EXPECT_EQ(one.crossings[1].ordinal, 3);
}

TEST(Resolve, InvalidRuling) {
  try {
    resolve(generate_trefoil(), {2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidRuling);
  }
}

TEST(CountPair, Trefoil) {
  EXPECT_EQ(count_clasps_pair(resolve(generate_trefoil(), {1}), 0, 1), 1);
  EXPECT_EQ(count_clasps_pair(resolve(generate_trefoil(), {3}), 1, 0), 1);
  EXPECT_EQ(count_clasps_pair(resolve(generate_trefoil(), {1, 2, 3}), 0, 1), 0);
  FrontDiagram unlink{left_cusp(1), right_cusp(1), left_cusp(1), right_cusp(1)};
  EXPECT_EQ(count_clasps_pair(resolve(unlink, {}), 0, 1), 0);
}

TEST(CountPair, UnknownEye) {
  auto res = resolve(generate_trefoil(), {1});
  for (auto [a, b] : {std::pair{0, 2}, std::pair{0, 0}, std::pair{-1, 1}}) {
    try {
      count_clasps_pair(res, a, b);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kUnknownEye);
    }
  }
}

// Both forms are the same front up to a transposition.  The old reading
// (clasp only when both bounding crossings use the same strand pair) made
// the second form's parities all even; the parity multiset must agree.
TEST(CountPair, TranspositionKeepsParities) {
  FrontDiagram d{left_cusp(1), left_cusp(2), crossing(1), crossing(3), crossing(1), right_cusp(2),
                 right_cusp(1)};
  FrontDiagram swapped{left_cusp(1), left_cusp(2), crossing(3), crossing(1), crossing(1),
                       right_cusp(2), right_cusp(1)};
  for (const auto& f : {d, swapped}) {
    std::vector<int> totals;
    for (const auto& r : enumerate_rulings(f)) totals.push_back(clasp_report(f, r).total);
    EXPECT_EQ(totals, (std::vector<int>{1, 1, 0})) << serialize_diagram(f);
  }
}

TEST(Report, Fixtures) {
  auto t = generate_trefoil();
  auto r3 = clasp_report(t, {3});
  EXPECT_EQ(r3.total, 1);
  EXPECT_EQ(r3.parity, Parity::kOdd);
  ASSERT_EQ(r3.pairs.size(), 1u);
  EXPECT_EQ(r3.pairs[0], (PairClasps{0, 1, 1}));
  auto r123 = clasp_report(t, {1, 2, 3});
  EXPECT_EQ(r123.total, 0);
  EXPECT_EQ(r123.parity, Parity::kEven);

  auto torus = generate_torus4(0);
  auto rep = clasp_report(torus, enumerate_rulings(torus).at(0));
  EXPECT_EQ(rep.total, 5);
  EXPECT_EQ(rep.parity, Parity::kOdd);
  for (const auto& p : rep.pairs) EXPECT_LE(p.clasps, 1);
}

TEST(Report, ParityFunction) {
  ClaspReport r;
  EXPECT_EQ(parity(r), Parity::kEven);
  r.total = 5;
  EXPECT_EQ(parity(r), Parity::kOdd);
}

TEST(Report, TotalsSumPairs) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 100; ++k) {
    auto d = corpus::random_plat(rng);
    for (const auto& r : enumerate_rulings(d)) {
      auto rep = clasp_report(d, r);
      int sum = 0;
      for (const auto& p : rep.pairs) sum += p.clasps;
      EXPECT_EQ(sum, rep.total);
      EXPECT_EQ(rep.parity, rep.total % 2 ? Parity::kOdd : Parity::kEven);
    }
  }
}

TEST(Oracle, IncrementalScanMatchesSliceClassification) {
  std::mt19937_64 rng(37);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    auto d = corpus::random_plat(rng);
    for (const auto& r : enumerate_rulings(d)) {
      auto res = resolve(d, r);
      auto brute = oracle::brute_force_clasps(d, r);
      for (int a = 0; a < res.eye_count; ++a)
        for (int b = a + 1; b < res.eye_count; ++b)
          ASSERT_EQ(count_clasps_pair(res, a, b), (brute[{a, b}])) << serialize_diagram(d);
      ++checked;
    }
  }
  EXPECT_GT(checked, 200);
}

TEST(Oracle, ConfigNeverInterleavedAtBirthOrDeath) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 100; ++k) {
    auto d = corpus::random_plat(rng);
    for (const auto& r : enumerate_rulings(d)) {
      auto res = resolve(d, r);
      for (int a = 0; a < res.eye_count; ++a)
        for (int b = a + 1; b < res.eye_count; ++b) EXPECT_NO_THROW(scan_pair(res, a, b));
    }
  }
}
