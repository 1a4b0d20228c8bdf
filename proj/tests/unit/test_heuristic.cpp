#include <gtest/gtest.h>

#include <set>

#include "brute_force.hpp"
#include "powham/constructions.hpp"
#include "powham/error.hpp"
#include "powham/heuristic.hpp"
#include "powham/random.hpp"
#include "random_graphs.hpp"

using namespace powham;
using testing_support::random_digraph;

namespace {

void expect_cover_sound(const Digraph& g, int k, const CoverResult& c) {
  std::set<Vertex> seen;
  for (const auto& p : c.paths) {
    EXPECT_GE(static_cast<int>(p.size()), 2 * k);
    EXPECT_TRUE(brute::window_ok(g, p, k, false));
    for (Vertex v : p) {
      EXPECT_TRUE(seen.insert(v).second) << "vertex " << v << " covered twice";
      EXPECT_FALSE(c.leftover.contains(v));
    }
  }
  EXPECT_EQ(static_cast<int>(seen.size()) + c.leftover.size(), g.order());
}

}  // namespace

TEST(Params, Validation) {
  HeuristicParams p;
  EXPECT_NO_THROW(validate(p));
  p.reservoir_fraction = Fraction{1, 2};
  EXPECT_THROW(validate(p), Error);
  p = {};
  p.absorber_target = 0;
  EXPECT_THROW(validate(p), Error);
  p = {};
  p.max_retries = 0;
  EXPECT_THROW(validate(p), Error);
  p = {};
  p.absorbing_fraction = Fraction{1, 1};
  EXPECT_THROW(validate(p), Error);
}

TEST(GreedyCover, Examples) {
  const Digraph k30 = complete_digraph(30);
  const auto full = greedy_cover(k30, 2, 1);
  ASSERT_EQ(full.paths.size(), 1u);
  EXPECT_EQ(full.paths[0].size(), 30u);
  expect_cover_sound(k30, 2, full);

  const auto none = greedy_cover(empty_digraph(12), 2, 1);
  EXPECT_TRUE(none.paths.empty());
  EXPECT_EQ(none.leftover.size(), 12);

  const Digraph c = power_cycle(2, 20);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto r = greedy_cover(c, 2, s);
    expect_cover_sound(c, 2, r);
    EXPECT_LE(r.leftover.size(), 4) << "seed " << s;
  }
}

TEST(GreedyCover, RandomHostsAndRestriction) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Digraph g = random_digraph(40, 0.6, s);
    expect_cover_sound(g, 2, greedy_cover(g, 2, s));
    VertexSet within(40);
    for (Vertex v = 0; v < 40; v += 2) within.insert(v);
    const auto r = greedy_cover(g, 2, s, within);
    for (const auto& p : r.paths)
      for (Vertex v : p) EXPECT_TRUE(within.contains(v));
  }
}

TEST(AbsorbingPath, CompleteHostRegistersEveryVertex) {
  const Digraph g = complete_digraph(200);
  const auto ap = build_absorbing_path(g, 2, HeuristicParams{});
  ASSERT_EQ(ap.failure, FailureStage::none);
  EXPECT_EQ(ap.kind, AbsorberKind::digraph_absorber);
  EXPECT_TRUE(brute::window_ok(g, ap.path, 2, false));
  std::vector<bool> on_path(200, false);
  for (Vertex v : ap.path) on_path[v] = true;
  for (Vertex v = 0; v < 200; ++v)
    if (!on_path[v]) EXPECT_FALSE(ap.registry[v].empty()) << "vertex " << v;
  for (const auto& gad : ap.gadgets)
    for (std::size_t i = 0; i < gad.vertices.size(); ++i)
      EXPECT_EQ(ap.path[gad.offset + i], gad.vertices[i]);
}

TEST(AbsorbingPath, EdgelessFailsAtSampling) {
  const auto ap = build_absorbing_path(empty_digraph(30), 2, HeuristicParams{});
  EXPECT_EQ(ap.failure, FailureStage::sampling);
}

TEST(AbsorbingPath, OrientedHostUsesStretchedAbsorbers) {
  const auto ap = build_absorbing_path(random_tournament(40, 3), 2, HeuristicParams{});
  EXPECT_EQ(ap.kind, AbsorberKind::stretched_k_absorber);
}

TEST(AbsorbingPath, DenseRandomHosts) {
  int ok = 0;
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Digraph g = random_digraph(120, 0.9, substream_seed(120, s));
    HeuristicParams p;
    p.seed = s;
    const auto ap = build_absorbing_path(g, 2, p);
    if (ap.failure == FailureStage::none) {
      ++ok;
      EXPECT_TRUE(brute::window_ok(g, ap.path, 2, false));
    }
  }
  EXPECT_GE(ok, 4);
}

TEST(Heuristic, CompleteHost) {
  const Digraph g = complete_digraph(60);
  const auto r = heuristic_ham_power(g, 2, HeuristicParams{});
  ASSERT_TRUE(r.success());
  EXPECT_EQ(r.failure, FailureStage::none);
  EXPECT_TRUE(brute::window_ok(g, r.certificate->order, 2, true));
  EXPECT_EQ(r.attempts.size(), 1u);
}

TEST(Heuristic, HigherPower) {
  const Digraph g = complete_digraph(50);
  const auto r = heuristic_ham_power(g, 3, HeuristicParams{});
  ASSERT_TRUE(r.success());
  EXPECT_TRUE(brute::window_ok(g, r.certificate->order, 3, true));
}

TEST(Heuristic, NoCertificateWithoutPower) {
  HeuristicParams p;
  p.max_retries = 2;
  for (const Digraph& g : {extremal_total(2, 30), gk(2, 2), empty_digraph(20)}) {
    const auto r = heuristic_ham_power(g, 2, p);
    EXPECT_FALSE(r.success());
    EXPECT_NE(r.failure, FailureStage::none);
    EXPECT_EQ(r.attempts.size(), 2u);
  }
}

TEST(Heuristic, DeterministicTranscript) {
  const Digraph g = random_digraph(50, 0.9, 11);
  HeuristicParams p;
  p.seed = 4;
  const auto a = heuristic_ham_power(g, 2, p);
  const auto b = heuristic_ham_power(g, 2, p);
  ASSERT_EQ(a.success(), b.success());
  if (a.success()) EXPECT_EQ(a.certificate->order, b.certificate->order);
  ASSERT_EQ(a.attempts.size(), b.attempts.size());
  for (std::size_t i = 0; i < a.attempts.size(); ++i) {
    const auto& x = a.attempts[i];
    const auto& y = b.attempts[i];
    EXPECT_EQ(x.seed, y.seed);
    EXPECT_EQ(x.failure, y.failure);
    EXPECT_EQ(x.gadgets, y.gadgets);
    EXPECT_EQ(x.absorbing_path_vertices, y.absorbing_path_vertices);
    EXPECT_EQ(x.registry_entries, y.registry_entries);
    EXPECT_EQ(x.reservoir_size, y.reservoir_size);
    EXPECT_EQ(x.cover_paths, y.cover_paths);
    EXPECT_EQ(x.cover_leftover, y.cover_leftover);
    EXPECT_EQ(x.dissolved_paths, y.dissolved_paths);
    EXPECT_EQ(x.absorbed, y.absorbed);
  }
}

TEST(Heuristic, StageNames) {
  EXPECT_EQ(to_string(FailureStage::sampling), "sampling");
  EXPECT_EQ(to_string(FailureStage::chaining), "chaining");
  EXPECT_EQ(to_string(FailureStage::reservoir_connect), "reservoirConnect");
  EXPECT_EQ(to_string(FailureStage::absorb_capacity), "absorbCapacity");
}
