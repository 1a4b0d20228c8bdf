#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "powham/vertex_set.hpp"

namespace powham {

using Edge = std::pair<Vertex, Vertex>;

/**
 * Immutable directed graph on vertices [0, n) stored as per-vertex out- and
 * in-adjacency bitsets. No loops; at most one edge per ordered pair, so both
 * uv and vu may be present. Instances are built through DigraphBuilder or
 * from_edge_list and are safe to share between threads.
 */
class Digraph {
 public:
  Digraph() = default;

  int order() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Word> out_row(Vertex v) const noexcept {
    return {out_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::span<const Word> in_row(Vertex v) const noexcept {
    return {in_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  VertexSet out_neighbors(Vertex v) const { return VertexSet(n_, out_row(v)); }
  VertexSet in_neighbors(Vertex v) const { return VertexSet(n_, in_row(v)); }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    return (out_[static_cast<std::size_t>(u) * words_ +
                 static_cast<std::size_t>(v) / kWordBits] >>
            (static_cast<unsigned>(v) % kWordBits)) & 1u;
  }
  int out_degree(Vertex v) const noexcept { return out_deg_[static_cast<std::size_t>(v)]; }
  int in_degree(Vertex v) const noexcept { return in_deg_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const noexcept { return out_degree(v) + in_degree(v); }

  /// Edges sorted by (tail, head).
  std::vector<Edge> edges() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  friend class DigraphBuilder;

  int n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<Word> out_;
  std::vector<Word> in_;
  std::vector<int> out_deg_;
  std::vector<int> in_deg_;
};

/// Single-owner mutable staging area for a Digraph.
class DigraphBuilder {
 public:
  explicit DigraphBuilder(int n);

  int order() const noexcept { return n_; }
  bool has_edge(Vertex u, Vertex v) const;
  /// Throws SelfLoop, VertexOutOfRange or DuplicateEdge.
  void add_edge(Vertex u, Vertex v);
  /// Adds both uv and vu; either may already be present.
  void add_double_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  Digraph build() const;

 private:
  void check_vertex(Vertex v) const;

  int n_;
  std::size_t words_;
  std::vector<Word> out_;
};

enum class GraphClass { digraph, oriented, tournament, transitive_tournament };

std::string_view to_string(GraphClass c);

struct DegreeProfile {
  int min_semi_degree = 0;
  int min_total_degree = 0;
  std::vector<int> out_degree;
  std::vector<int> in_degree;
  std::vector<int> total_degree;
};

struct InducedSubgraph {
  Digraph graph;
  /// relabel[i] is the host vertex that became vertex i.
  std::vector<Vertex> relabel;
};

Digraph from_edge_list(int n, std::span<const Edge> edges);
Digraph complete_digraph(int n);
Digraph empty_digraph(int n);

GraphClass classify(const Digraph& g);
bool is_oriented(const Digraph& g);
/// True when every unordered pair carries exactly one direction.
bool is_tournament(const Digraph& g);
/// True when every pair inside s is joined in at least one direction.
bool spans_tournament(const Digraph& g, const VertexSet& s);

DegreeProfile degree_profile(const Digraph& g);
InducedSubgraph induced(const Digraph& g, const VertexSet& s);
Digraph reverse(const Digraph& g);
Digraph blow_up(const Digraph& g, int t);
std::size_t edges_between(const Digraph& g, const VertexSet& a, const VertexSet& b);

/// Full rescan of the loop-free and mirror invariants.
bool check_invariants(const Digraph& g);

}  // namespace powham
