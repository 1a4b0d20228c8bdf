#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "powham/constructions.hpp"
#include "powham/digraph.hpp"
#include "powham/error.hpp"
#include "random_graphs.hpp"

using namespace powham;
using testing_support::random_digraph;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::io_error;
}

}  // namespace

TEST(VertexSet, BasicOps) {
  VertexSet s(130, {0, 64, 129});
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(64));
  EXPECT_FALSE(s.contains(65));
  EXPECT_EQ(s.first(), 0);
  s.erase(0);
  EXPECT_EQ(s.first(), 64);
  const auto c = s.complement();
  EXPECT_EQ(c.size(), 128);
  EXPECT_FALSE(c.intersects(s));
  EXPECT_TRUE(s.is_subset_of(VertexSet::full(130)));
  EXPECT_EQ(s.members(), (std::vector<Vertex>{64, 129}));
}

TEST(Builder, Errors) {
  DigraphBuilder b(3);
  EXPECT_EQ(code_of([&] { b.add_edge(0, 0); }), ErrorCode::self_loop);
  EXPECT_EQ(code_of([&] { b.add_edge(0, 3); }), ErrorCode::vertex_out_of_range);
  EXPECT_EQ(code_of([&] { b.add_edge(-1, 1); }), ErrorCode::vertex_out_of_range);
  b.add_edge(0, 1);
  EXPECT_EQ(code_of([&] { b.add_edge(0, 1); }), ErrorCode::duplicate_edge);
  EXPECT_EQ(code_of([] { DigraphBuilder big(5000); }), ErrorCode::vertex_cap_exceeded);
}

TEST(Builder, DoubleEdgeAndRemove) {
  DigraphBuilder b(3);
  b.add_edge(0, 1);
  b.add_double_edge(0, 1);
  b.add_double_edge(1, 2);
  b.remove_edge(2, 1);
  const Digraph g = b.build();
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(2, 1));
  EXPECT_TRUE(check_invariants(g));
}

TEST(Digraph, Classify) {
  EXPECT_EQ(classify(complete_digraph(4)), GraphClass::digraph);
  EXPECT_EQ(classify(power_cycle(2, 7)), GraphClass::oriented);
  EXPECT_EQ(classify(paley(7)), GraphClass::tournament);
  EXPECT_EQ(classify(transitive(6)), GraphClass::transitive_tournament);
  EXPECT_EQ(classify(empty_digraph(3)), GraphClass::oriented);
  EXPECT_TRUE(is_tournament(power_cycle(1, 3)));
  EXPECT_FALSE(is_oriented(complete_digraph(2)));
}

TEST(Digraph, DegreeProfileMatchesOracle) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Digraph g = random_digraph(12, 0.5, s);
    const auto prof = degree_profile(g);
    EXPECT_EQ(prof.min_semi_degree, brute::min_semi_degree(g));
    EXPECT_EQ(prof.min_total_degree, brute::min_total_degree(g));
    EXPECT_TRUE(check_invariants(g));
  }
}

TEST(Digraph, InducedRelabels) {
  const Digraph g = transitive(6);
  const auto sub = induced(g, VertexSet(6, {1, 3, 5}));
  EXPECT_EQ(sub.graph.order(), 3);
  EXPECT_EQ(sub.relabel, (std::vector<Vertex>{1, 3, 5}));
  EXPECT_EQ(classify(sub.graph), GraphClass::transitive_tournament);
  EXPECT_TRUE(spans_tournament(g, VertexSet(6, {0, 2, 4})));
}

TEST(Digraph, ReverseAndBlowUp) {
  const Digraph c3 = power_cycle(1, 3);
  const Digraph r = reverse(c3);
  EXPECT_TRUE(r.has_edge(1, 0));
  EXPECT_FALSE(r.has_edge(0, 1));
  const Digraph b = blow_up(c3, 2);
  EXPECT_EQ(b.order(), 6);
  EXPECT_EQ(b.edge_count(), 12u);
  EXPECT_EQ(classify(b), GraphClass::oriented);
  EXPECT_EQ(edges_between(b, VertexSet(6, {0, 1}), VertexSet(6, {2, 3})), 4u);
}

TEST(Digraph, EdgeListRoundTrip) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}};
  const Digraph g = from_edge_list(3, edges);
  EXPECT_TRUE(brute::isomorphic(g, power_cycle(1, 3)));
}
