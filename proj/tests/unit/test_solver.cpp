#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "brute_force.hpp"
#include "powham/constructions.hpp"
#include "powham/error.hpp"
#include "powham/solver.hpp"
#include "random_graphs.hpp"

using namespace powham;
using testing_support::random_digraph;

namespace {

// Blow-ups of a random base give many vertices with identical rows.
Digraph twin_rich(int base_n, int t, std::uint64_t seed) {
  const Digraph base = random_digraph(base_n, 0.6, seed);
  DigraphBuilder b(base_n * t);
  for (Vertex u = 0; u < base_n * t; ++u)
    for (Vertex v = 0; v < base_n * t; ++v) {
      if (u == v) continue;
      const Vertex bu = u / t, bv = v / t;
      if (bu == bv ? (seed + u + v) % 2 == 0 : base.has_edge(bu, bv)) b.add_edge(u, v);
    }
  return b.build();
}

void expect_agrees(const Digraph& g, int k, PowerMode mode) {
  const bool cyclic = mode == PowerMode::cycle;
  const auto rep = find_ham_power(g, k, mode);
  ASSERT_NE(rep.outcome, Outcome::budget);
  const bool truth = brute::has_ham_power(g, k, cyclic);
  EXPECT_EQ(rep.outcome == Outcome::found, truth) << "n=" << g.order() << " k=" << k;
  if (rep.outcome == Outcome::found) {
    ASSERT_EQ(static_cast<int>(rep.witness.size()), g.order());
    EXPECT_TRUE(brute::window_ok(g, rep.witness, k, cyclic));
    EXPECT_TRUE(validate_certificate(g, {k, rep.witness}, mode));
  }
}

}  // namespace

TEST(Certificate, SpecExamples) {
  std::vector<Vertex> id6(6), id5(5);
  std::iota(id6.begin(), id6.end(), 0);
  std::iota(id5.begin(), id5.end(), 0);
  EXPECT_TRUE(validate_certificate(power_cycle(2, 6), {2, id6}, PowerMode::cycle));
  EXPECT_TRUE(validate_certificate(transitive(5), {2, id5}, PowerMode::path));
  EXPECT_FALSE(validate_certificate(transitive(5), {2, id5}, PowerMode::cycle));
  std::vector<Vertex> rev(id6.rbegin(), id6.rend());
  EXPECT_FALSE(validate_certificate(power_cycle(2, 6), {2, rev}, PowerMode::cycle));
}

TEST(Certificate, RejectsNonPermutation) {
  const Digraph g = power_cycle(2, 6);
  for (const std::vector<Vertex>& bad :
       {std::vector<Vertex>{0, 1, 2, 3, 4, 4}, std::vector<Vertex>{0, 1, 2}, std::vector<Vertex>{0, 1, 2, 3, 4, 6}}) {
    try {
      validate_certificate(g, {2, bad}, PowerMode::cycle);
      ADD_FAILURE() << "expected NotAPermutation";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::not_a_permutation);
    }
  }
}

TEST(Certificate, KPath) {
  const std::vector<Vertex> seq{0, 1, 2, 3};
  EXPECT_TRUE(is_k_path(transitive(4), seq, 3));
  EXPECT_FALSE(is_k_path(power_cycle(1, 4), seq, 2));
}

TEST(FindHamPower, SpecExamples) {
  const auto r = find_ham_power(power_cycle(3, 10), 3, PowerMode::cycle);
  ASSERT_EQ(r.outcome, Outcome::found);
  std::vector<Vertex> id(10);
  std::iota(id.begin(), id.end(), 0);
  EXPECT_EQ(r.witness, id);
  EXPECT_EQ(find_ham_power(extremal_total(2, 10), 2, PowerMode::cycle).outcome, Outcome::exhausted);
  const auto p = find_ham_power(extremal_total(2, 10), 2, PowerMode::path);
  ASSERT_EQ(p.outcome, Outcome::found);
  EXPECT_TRUE(brute::window_ok(extremal_total(2, 10), p.witness, 2, false));
}

TEST(FindHamPower, AgreesWithOracleOnRandomGraphs) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const int n = 5 + static_cast<int>(s % 4);
    const double p = 0.55 + 0.1 * static_cast<double>(s % 4);
    const Digraph g = random_digraph(n, p, s);
    for (int k = 1; k <= 3; ++k) {
      if (n < k + 1) continue;
      expect_agrees(g, k, PowerMode::cycle);
      expect_agrees(g, k, PowerMode::path);
    }
  }
}

TEST(FindHamPower, AgreesWithOracleOnTwinRichGraphs) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Digraph g = twin_rich(4, 2, s);
    for (int k = 1; k <= 3; ++k) {
      expect_agrees(g, k, PowerMode::cycle);
      expect_agrees(g, k, PowerMode::path);
    }
  }
}

TEST(FindHamPower, HamiltonCycleOracleOverAllSmallDigraphs) {
  // Each unordered pair of a 4-vertex digraph is absent, one arc, the other
  // arc, or both: 4^6 labelled digraphs.
  const int n = 4;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 4;
  for (std::uint64_t code = 0; code < total; ++code) {
    DigraphBuilder b(n);
    std::uint64_t c = code;
    for (auto [i, j] : pairs) {
      const int s = static_cast<int>(c % 4);
      c /= 4;
      if (s & 1) b.add_edge(i, j);
      if (s & 2) b.add_edge(j, i);
    }
    const Digraph g = b.build();
    const bool truth = brute::has_ham_power(g, 1, true);
    ASSERT_EQ(find_ham_power(g, 1, PowerMode::cycle).outcome == Outcome::found, truth)
        << "code " << code;
  }
}

TEST(FindHamPower, SmallCasesAndErrors) {
  EXPECT_EQ(find_ham_power(complete_digraph(3), 2, PowerMode::cycle).outcome, Outcome::found);
  EXPECT_EQ(find_ham_power(transitive(5), 2, PowerMode::path).outcome, Outcome::found);
  EXPECT_THROW(find_ham_power(complete_digraph(3), 0, PowerMode::cycle), Error);
  EXPECT_THROW(find_ham_power(complete_digraph(3), 3, PowerMode::cycle), Error);
}

TEST(FindHamPower, NodeBudget) {
  SearchBudget budget;
  budget.max_nodes = 50;
  const auto r = find_ham_power(gk(2, 2), 2, PowerMode::cycle, budget);
  EXPECT_EQ(r.outcome, Outcome::budget);
  EXPECT_LE(r.nodes_expanded, 51u);
}

TEST(FindHamPower, Deterministic) {
  const Digraph g = random_digraph(14, 0.8, 5);
  const auto a = find_ham_power(g, 2, PowerMode::cycle);
  const auto b = find_ham_power(g, 2, PowerMode::cycle);
  EXPECT_EQ(a.outcome, b.outcome);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.nodes_expanded, b.nodes_expanded);
}

TEST(Embed, SpecExamples) {
  const auto r = embed(power_cycle(2, 6), d_r(2));
  ASSERT_EQ(r.outcome, Outcome::found);
  EXPECT_TRUE(validate_embedding(power_cycle(2, 6), d_r(2), r.witness));
  EXPECT_EQ(embed(power_cycle(2, 5), f_r(2)).outcome, Outcome::exhausted);
  EXPECT_EQ(embed(transitive(4), paley(7)).outcome, Outcome::exhausted);
}

TEST(Embed, AgreesWithOracle) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Digraph host = random_digraph(7, 0.6, s);
    const Digraph pattern = random_digraph(4 + static_cast<int>(s % 3), 0.5, s + 1000);
    const auto r = embed(pattern, host);
    EXPECT_EQ(r.outcome == Outcome::found, brute::embeds(pattern, host)) << "seed " << s;
    if (r.outcome == Outcome::found) EXPECT_TRUE(validate_embedding(pattern, host, r.witness));
  }
}

TEST(Embed, IdentityAndMonotone) {
  for (const Digraph& g : {paley(7), d_r(2), f_r(2), gk(2, 1), extremal_total(2, 10)})
    EXPECT_EQ(embed(g, g).outcome, Outcome::found);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Digraph h = random_digraph(8, 0.7, s);
    if (embed(power_cycle(2, 5), h).outcome != Outcome::found) continue;
    DigraphBuilder b(8);
    const Digraph extra = random_digraph(8, 0.3, s + 99);
    for (Vertex u = 0; u < 8; ++u)
      for (Vertex v = 0; v < 8; ++v)
        if (h.has_edge(u, v) || extra.has_edge(u, v)) b.add_edge(u, v);
    EXPECT_EQ(embed(power_cycle(2, 5), b.build()).outcome, Outcome::found);
  }
}

TEST(Embed, DrSmallCases) {
  for (int k = 1; k <= 3; ++k)
    for (int l = k + 1; l <= 9; ++l)
      EXPECT_EQ(embed(power_cycle(k, l), d_r(l)).outcome == Outcome::found, l >= 3 * k)
          << "k=" << k << " l=" << l;
}

TEST(Transitive, Counts) {
  EXPECT_EQ(find_transitive(power_cycle(1, 3), 3, TransitiveMode::count).vertex_set_count, 0u);
  EXPECT_EQ(find_transitive(transitive(4), 3, TransitiveMode::count).vertex_set_count, 4u);
  EXPECT_EQ(find_transitive(paley(7), 4, TransitiveMode::count).vertex_set_count, 0u);
  EXPECT_EQ(find_transitive(paley(7), 4, TransitiveMode::one).outcome, Outcome::exhausted);
  const auto one = find_transitive(paley(7), 3, TransitiveMode::one);
  ASSERT_EQ(one.outcome, Outcome::found);
  EXPECT_TRUE(is_k_path(paley(7), one.witness, 2));
}

TEST(Transitive, CountMatchesOracle) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Digraph t = random_tournament(9, s);
    for (int k = 2; k <= 4; ++k)
      EXPECT_EQ(find_transitive(t, k, TransitiveMode::count).vertex_set_count,
                brute::transitive_sets(t, k).size());
  }
}

TEST(Transitive, Greedy) {
  const auto r = find_transitive(transitive(8), 3, TransitiveMode::greedy);
  ASSERT_EQ(r.outcome, Outcome::found);
  EXPECT_TRUE(is_k_path(transitive(8), r.witness, 2));
  EXPECT_TRUE(find_transitive(power_cycle(1, 3), 3, TransitiveMode::greedy).greedy_stuck);
}

TEST(TransitiveFactor, ExamplesAndOracle) {
  const auto r = transitive_factor(transitive(6), 3);
  ASSERT_EQ(r.outcome, Outcome::found);
  EXPECT_EQ(r.parts.size(), 2u);
  EXPECT_EQ(transitive_factor(power_cycle(1, 3), 3).outcome, Outcome::exhausted);
  EXPECT_THROW(transitive_factor(transitive(7), 3), Error);
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Digraph t = random_tournament(9, s);
    EXPECT_EQ(transitive_factor(t, 3).outcome == Outcome::found, brute::has_transitive_factor(t, 3));
  }
}

TEST(Scans, Ramsey) {
  EXPECT_EQ(ramsey_scan(2, 7).value, 2);
  EXPECT_EQ(ramsey_scan(3, 7).value, 4);
  EXPECT_THROW(ramsey_scan(3, 8), Error);
}

TEST(Scans, Tiling) {
  EXPECT_TRUE(tiling_scan(2, 4).all_tile);
  const auto t3 = tiling_scan(3, 3);
  EXPECT_FALSE(t3.all_tile);
  ASSERT_TRUE(t3.counterexample.has_value());
  EXPECT_TRUE(brute::isomorphic(*t3.counterexample, power_cycle(1, 3)));
  EXPECT_EQ(tiling_scan(2, 4, 3).all_tile, true);
}

TEST(Scans, TournamentFromIndex) {
  const Digraph t = tournament_from_index(3, 0b101);
  // Pairs (0,1), (0,2), (1,2): bits 1, 0, 1.
  EXPECT_TRUE(t.has_edge(0, 1));
  EXPECT_TRUE(t.has_edge(2, 0));
  EXPECT_TRUE(t.has_edge(1, 2));
  EXPECT_TRUE(isomorphic_small(t, power_cycle(1, 3)));
}
