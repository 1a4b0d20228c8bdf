#include <gtest/gtest.h>

#include <numeric>

#include "brute_force.hpp"
#include "powham/constructions.hpp"
#include "powham/error.hpp"
#include "powham/solver.hpp"

using namespace powham;

namespace {

bool throws_code(auto&& fn, ErrorCode code) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

TEST(Transitive, Examples) {
  EXPECT_EQ(transitive(2).edge_count(), 1u);
  EXPECT_TRUE(transitive(2).has_edge(0, 1));
  EXPECT_FALSE(brute::has_ham_power(transitive(4), 1, true));
  EXPECT_TRUE(brute::has_transitive_factor(transitive(6), 3));
}

TEST(PowerCycle, Examples) {
  EXPECT_TRUE(brute::isomorphic(power_cycle(1, 3), paley(3)));
  const Digraph k3 = power_cycle(2, 3);
  EXPECT_EQ(k3.edge_count(), 6u);
  const Digraph c52 = power_cycle(2, 5);
  EXPECT_TRUE(is_oriented(c52));
  EXPECT_TRUE(is_oriented(power_cycle(2, 9)));
  EXPECT_EQ(classify(power_cycle(2, 9)), GraphClass::oriented);
  for (Vertex v = 0; v < 5; ++v) {
    EXPECT_EQ(c52.out_degree(v), 2);
    EXPECT_EQ(c52.in_degree(v), 2);
  }
  EXPECT_TRUE(throws_code([] { power_cycle(3, 3); }, ErrorCode::bad_params));
}

TEST(Paley, Examples) {
  const Digraph p3 = paley(3);
  EXPECT_TRUE(p3.has_edge(0, 1) && p3.has_edge(1, 2) && p3.has_edge(2, 0));
  const Digraph p7 = paley(7);
  EXPECT_EQ(classify(p7), GraphClass::tournament);
  EXPECT_EQ(degree_profile(p7).min_semi_degree, 3);
  EXPECT_TRUE(brute::transitive_sets(p7, 4).empty());
  EXPECT_TRUE(throws_code([] { paley(5); }, ErrorCode::bad_params));
  EXPECT_TRUE(throws_code([] { paley(9); }, ErrorCode::bad_params));
}

TEST(CliqueMinusMatching, Examples) {
  EXPECT_EQ(clique_minus_matching(4).edge_count(), 10u);
  EXPECT_FALSE(clique_minus_matching(4).has_edge(0, 1));
  EXPECT_TRUE(clique_minus_matching(4).has_edge(1, 0));
  EXPECT_TRUE(brute::embeds(power_cycle(2, 4), clique_minus_matching(4)));
  EXPECT_FALSE(brute::embeds(power_cycle(3, 4), clique_minus_matching(4)));
  EXPECT_TRUE(throws_code([] { clique_minus_matching(2); }, ErrorCode::bad_params));
}

TEST(ExtremalTotal, SpecExamples) {
  const auto l10 = extremal_total_layout(2, 10);
  EXPECT_EQ(l10.q, 2);
  EXPECT_EQ(l10.r, 0);
  EXPECT_EQ(l10.class_sizes, (std::vector<int>{2, 4, 4}));
  EXPECT_EQ(degree_profile(extremal_total(2, 10)).min_total_degree, 14);
  EXPECT_EQ(degree_profile(extremal_total(2, 14)).min_total_degree, 20);
  EXPECT_FALSE(brute::has_ham_power(extremal_total(2, 10), 2, true));
}

TEST(ExtremalTotal, LayoutInvariantsAndFormula) {
  for (int k = 1; k <= 6; ++k) {
    for (int n = k + 3; n <= 60; ++n) {
      const auto lay = extremal_total_layout(k, n);
      ASSERT_EQ(static_cast<int>(lay.remainders.size()), k + 1);
      EXPECT_EQ(std::accumulate(lay.remainders.begin(), lay.remainders.end(), 0), lay.r);
      for (std::size_t i = 0; i < lay.remainders.size(); ++i) {
        EXPECT_GE(lay.remainders[i], 0);
        EXPECT_LE(lay.remainders[i], 2);
        if (i > 0) EXPECT_LE(lay.remainders[i], lay.remainders[i - 1]);
      }
      EXPECT_EQ(std::accumulate(lay.class_sizes.begin(), lay.class_sizes.end(), 0), n);
      const int r = n % (k + 3);
      const int sub = r == k + 2 ? 4 : (r == k || r == k + 1) ? 3 : 2;
      const int expected = 2 * ceil_div((k + 2) * n, k + 3) - sub;
      const Digraph g = extremal_total(k, n);
      EXPECT_EQ(brute::min_total_degree(g), expected) << "k=" << k << " n=" << n;
      EXPECT_EQ(lay.min_total_degree, expected);
    }
  }
}

TEST(Gk, SpecExamples) {
  const auto l2 = gk_layout(2, 2);
  EXPECT_EQ(l2.m, 3);
  EXPECT_TRUE(l2.shrunk_first_class);
  EXPECT_EQ(l2.sizes, (std::array<int, 3>{5, 9, 8}));
  const Digraph g22 = gk(2, 2);
  EXPECT_EQ(g22.order(), 22);
  EXPECT_EQ(brute::min_semi_degree(g22), 8);

  const auto l1 = gk_layout(2, 1);
  EXPECT_FALSE(l1.shrunk_first_class);
  EXPECT_EQ(l1.sizes, (std::array<int, 3>{3, 4, 4}));
  EXPECT_EQ(gk(2, 1).order(), 11);
}

TEST(Gk, FirstClassNotDivisibleAndDegreeBound) {
  for (int k = 2; k <= 3; ++k) {
    for (int t = 1; t <= 4; ++t) {
      const auto lay = gk_layout(k, t);
      EXPECT_NE(lay.sizes[0] % k, 0) << "k=" << k << " t=" << t;
      const Digraph g = gk(k, t);
      EXPECT_EQ(g.order(), lay.order());
      const double n = g.order();
      const double bound = (1.0 - 1.0 / (3 * lay.m + 2)) * n / 2 - 2;
      EXPECT_GE(brute::min_semi_degree(g), bound - 1e-9);
    }
  }
}

TEST(Gk, BaseValidation) {
  EXPECT_TRUE(throws_code([] { gk(4, 1); }, ErrorCode::bad_params) ||
              throws_code([] { gk(4, 1); }, ErrorCode::base_invalid));
  EXPECT_TRUE(throws_code([] { validate_gk_base(transitive(7), 3); }, ErrorCode::base_invalid));
  EXPECT_NO_THROW(validate_gk_base(paley(7), 3));
  EXPECT_TRUE(throws_code([] { gk(1, 1); }, ErrorCode::bad_params));
}

TEST(RandomTournament, Determinism) {
  const Digraph a = random_tournament(10, 42);
  const Digraph b = random_tournament(10, 42);
  EXPECT_EQ(a.edge_count(), 45u);
  EXPECT_EQ(classify(a) == GraphClass::tournament ||
                classify(a) == GraphClass::transitive_tournament,
            true);
  for (Vertex u = 0; u < 10; ++u)
    for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(a.has_edge(u, v), b.has_edge(u, v));
}

TEST(RandomTournament, MeanSemiDegreeBand) {
  // The minimum of 42 correlated Bin(20, 1/2) degrees averages about 5.2
  // (independent simulation), so the band sits below (n-1)/2 by ~2.2 sd.
  double sum = 0, out_sum = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Digraph t = random_tournament(21, s);
    sum += brute::min_semi_degree(t);
    for (Vertex v = 0; v < 21; ++v) out_sum += t.out_degree(v);
  }
  const double mean = sum / 200;
  EXPECT_GE(mean, 4.5);
  EXPECT_LE(mean, 6.5);
  EXPECT_DOUBLE_EQ(out_sum / (200 * 21), 10.0);
}

TEST(RkRandom, FreeOfTransitiveAndBalanced) {
  for (int k = 2; k <= 4; ++k) {
    const auto s = rk_random(k, 40, 7, 1000);
    EXPECT_TRUE(brute::transitive_sets(s.base, k + 1).empty());
    EXPECT_FALSE(contains_transitive(s.graph, k + 1));
    const int m = s.base_order;
    ASSERT_EQ(s.base.order(), m);
    EXPECT_EQ(s.graph.order(), 40);
    if (k == 2) EXPECT_TRUE(brute::isomorphic(s.base, power_cycle(1, 3)));
  }
  const Digraph bu = balanced_blow_up(power_cycle(1, 3), 10);
  EXPECT_EQ(bu.order(), 10);
  // Classes of sizes 4, 3, 3: vertex 0 sees the class after it.
  EXPECT_EQ(bu.out_degree(0), 3);
  EXPECT_EQ(bu.out_degree(9), 4);
}

TEST(DR, Examples) {
  EXPECT_TRUE(brute::isomorphic(d_r(1), power_cycle(1, 3)));
  EXPECT_EQ(classify(d_r(3)), GraphClass::tournament);
  EXPECT_TRUE(brute::embeds(power_cycle(2, 6), d_r(2)));
  EXPECT_EQ(embed(power_cycle(2, 5), d_r(4)).outcome, Outcome::exhausted);
}

TEST(FR, Examples) {
  EXPECT_TRUE(brute::isomorphic(f_r(1), power_cycle(1, 3)));
  const Digraph f2 = f_r(2);
  EXPECT_EQ(f2.order(), 9);
  for (Vertex v = 0; v < 9; ++v) {
    EXPECT_EQ(f2.out_degree(v), 4);
    EXPECT_EQ(f2.in_degree(v), 4);
  }
  EXPECT_FALSE(brute::embeds(power_cycle(2, 5), f2));
  const Digraph f3 = f_r(3);
  EXPECT_EQ(degree_profile(f3).min_semi_degree, 13);
}

TEST(SemiRegular, DegreesDifferByAtMostOne) {
  for (int s = 1; s <= 12; ++s) {
    const Digraph t = semi_regular_tournament(s);
    EXPECT_EQ(t.edge_count(), static_cast<std::size_t>(s * (s - 1) / 2));
    for (Vertex v = 0; v < s; ++v) EXPECT_LE(std::abs(t.out_degree(v) - t.in_degree(v)), 1);
  }
}

TEST(Build, DispatchesFamilies) {
  ConstructionSpec spec;
  spec.family = Family::paley;
  spec.q = 7;
  EXPECT_TRUE(brute::isomorphic(build(spec), paley(7)));
  EXPECT_EQ(parse_family("gk"), Family::gk);
  EXPECT_FALSE(parse_family("nope").has_value());
}
