#include "powham/digraph.hpp"

#include <algorithm>
#include <string>

#include "powham/error.hpp"

namespace powham {

namespace {

void check_order(int n) {
  if (n < 0) throw Error(ErrorCode::bad_params, "negative vertex count");
  if (n > kVertexCap) {
    throw Error(ErrorCode::vertex_cap_exceeded,
                "vertex count " + std::to_string(n) + " exceeds cap " +
                    std::to_string(kVertexCap));
  }
}

}  // namespace

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    out_neighbors(u).for_each([&](Vertex v) { out.emplace_back(u, v); });
  }
  return out;
}

DigraphBuilder::DigraphBuilder(int n) : n_(n), words_(words_for(n)) {
  check_order(n);
  out_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void DigraphBuilder::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorCode::vertex_out_of_range,
                "vertex " + std::to_string(v) + " outside [0, " +
                    std::to_string(n_) + ")");
  }
}

bool DigraphBuilder::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (out_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / kWordBits] >>
          (static_cast<unsigned>(v) % kWordBits)) & 1u;
}

void DigraphBuilder::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw Error(ErrorCode::self_loop, "self-loop at vertex " + std::to_string(u));
  }
  if (has_edge(u, v)) {
    throw Error(ErrorCode::duplicate_edge,
                "duplicate edge " + std::to_string(u) + " -> " + std::to_string(v));
  }
  out_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / kWordBits] |=
      Word{1} << (static_cast<unsigned>(v) % kWordBits);
}

void DigraphBuilder::add_double_edge(Vertex u, Vertex v) {
  if (!has_edge(u, v)) add_edge(u, v);
  if (!has_edge(v, u)) add_edge(v, u);
}

void DigraphBuilder::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  out_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / kWordBits] &=
      ~(Word{1} << (static_cast<unsigned>(v) % kWordBits));
}

Digraph DigraphBuilder::build() const {
  Digraph g;
  g.n_ = n_;
  g.words_ = words_;
  g.out_ = out_;
  g.in_.assign(out_.size(), 0);
  g.out_deg_.assign(static_cast<std::size_t>(n_), 0);
  g.in_deg_.assign(static_cast<std::size_t>(n_), 0);
  for (Vertex u = 0; u < n_; ++u) {
    VertexSet(n_, g.out_row(u)).for_each([&](Vertex v) {
      g.in_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u) / kWordBits] |=
          Word{1} << (static_cast<unsigned>(u) % kWordBits);
      ++g.out_deg_[static_cast<std::size_t>(u)];
      ++g.in_deg_[static_cast<std::size_t>(v)];
      ++g.edge_count_;
    });
  }
  return g;
}

std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::digraph: return "digraph";
    case GraphClass::oriented: return "oriented";
    case GraphClass::tournament: return "tournament";
    case GraphClass::transitive_tournament: return "transitive_tournament";
  }
  return "digraph";
}

Digraph from_edge_list(int n, std::span<const Edge> edges) {
  DigraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Digraph complete_digraph(int n) {
  DigraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) b.add_edge(u, v);
    }
  }
  return b.build();
}

Digraph empty_digraph(int n) { return DigraphBuilder(n).build(); }

bool is_oriented(const Digraph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto out = g.out_row(v);
    const auto in = g.in_row(v);
    for (std::size_t w = 0; w < g.words(); ++w) {
      if ((out[w] & in[w]) != 0) return false;
    }
  }
  return true;
}

bool is_tournament(const Digraph& g) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  return is_oriented(g) && g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool spans_tournament(const Digraph& g, const VertexSet& s) {
  const auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!g.has_edge(members[i], members[j]) && !g.has_edge(members[j], members[i])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

bool has_directed_triangle(const Digraph& g) {
  for (Vertex a = 0; a < g.order(); ++a) {
    bool found = false;
    g.out_neighbors(a).for_each([&](Vertex b) {
      if (found) return;
      const auto out_b = g.out_row(b);
      const auto in_a = g.in_row(a);
      for (std::size_t w = 0; w < g.words(); ++w) {
        if ((out_b[w] & in_a[w]) != 0) {
          found = true;
          return;
        }
      }
    });
    if (found) return true;
  }
  return false;
}

}  // namespace

GraphClass classify(const Digraph& g) {
  if (!is_oriented(g)) return GraphClass::digraph;
  if (!is_tournament(g)) return GraphClass::oriented;
  if (has_directed_triangle(g)) return GraphClass::tournament;
  return GraphClass::transitive_tournament;
}

DegreeProfile degree_profile(const Digraph& g) {
  DegreeProfile p;
  const auto n = static_cast<std::size_t>(g.order());
  p.out_degree.resize(n);
  p.in_degree.resize(n);
  p.total_degree.resize(n);
  p.min_semi_degree = n == 0 ? 0 : g.order();
  p.min_total_degree = n == 0 ? 0 : 2 * g.order();
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto i = static_cast<std::size_t>(v);
    p.out_degree[i] = g.out_degree(v);
    p.in_degree[i] = g.in_degree(v);
    p.total_degree[i] = g.degree(v);
    p.min_semi_degree = std::min({p.min_semi_degree, p.out_degree[i], p.in_degree[i]});
    p.min_total_degree = std::min(p.min_total_degree, p.total_degree[i]);
  }
  return p;
}

InducedSubgraph induced(const Digraph& g, const VertexSet& s) {
  InducedSubgraph result;
  result.relabel = s.members();
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < result.relabel.size(); ++i) {
    index[static_cast<std::size_t>(result.relabel[i])] = static_cast<int>(i);
  }
  DigraphBuilder b(static_cast<int>(result.relabel.size()));
  for (std::size_t i = 0; i < result.relabel.size(); ++i) {
    (g.out_neighbors(result.relabel[i]) & s).for_each([&](Vertex v) {
      b.add_edge(static_cast<Vertex>(i), index[static_cast<std::size_t>(v)]);
    });
  }
  result.graph = b.build();
  return result;
}

Digraph reverse(const Digraph& g) {
  DigraphBuilder b(g.order());
  for (const auto& [u, v] : g.edges()) b.add_edge(v, u);
  return b.build();
}

Digraph blow_up(const Digraph& g, int t) {
  if (t < 1) throw Error(ErrorCode::bad_params, "blow-up factor must be >= 1");
  if (static_cast<long long>(g.order()) * t > kVertexCap) {
    throw Error(ErrorCode::vertex_cap_exceeded, "blow-up exceeds vertex cap");
  }
  // Copy m of vertex v becomes v * t + m.
  DigraphBuilder b(g.order() * t);
  for (const auto& [u, v] : g.edges()) {
    for (int i = 0; i < t; ++i) {
      for (int j = 0; j < t; ++j) b.add_edge(u * t + i, v * t + j);
    }
  }
  return b.build();
}

std::size_t edges_between(const Digraph& g, const VertexSet& a, const VertexSet& b) {
  std::size_t total = 0;
  a.for_each([&](Vertex v) {
    const auto row = g.out_row(v);
    const auto bw = b.words();
    for (std::size_t w = 0; w < g.words(); ++w) {
      total += static_cast<std::size_t>(std::popcount(row[w] & bw[w]));
    }
  });
  return total;
}

bool check_invariants(const Digraph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.has_edge(u, u)) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.has_edge(u, v) != g.in_neighbors(v).contains(u)) return false;
    }
  }
  return true;
}

}  // namespace powham
