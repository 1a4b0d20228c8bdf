#include "powham/absorbing.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>

#include "powham/error.hpp"
#include "powham/random.hpp"
#include "powham/solver.hpp"

namespace powham {

Fraction Fraction::parse(std::string_view text) {
  auto to_int = [&](std::string_view s) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw Error(ErrorCode::bad_params, "malformed fraction '" + std::string(text) + "'");
    }
    return value;
  };
  Fraction f;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    f.num = to_int(text.substr(0, slash));
    f.den = to_int(text.substr(slash + 1));
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 12) throw Error(ErrorCode::bad_params, "too many decimals");
    f.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) f.den *= 10;
    f.num = to_int(text.substr(0, dot)) * f.den + (frac.empty() ? 0 : to_int(frac));
  } else {
    f.num = to_int(text);
  }
  if (f.den <= 0 || f.num < 0) throw Error(ErrorCode::bad_params, "fraction must be >= 0 with positive denominator");
  const auto g = std::gcd(f.num, f.den);
  if (g > 1) {
    f.num /= g;
    f.den /= g;
  }
  return f;
}

std::string Fraction::str() const { return std::to_string(num) + "/" + std::to_string(den); }

std::string_view to_string(AbsorberKind kind) {
  switch (kind) {
    case AbsorberKind::digraph_absorber: return "digraph";
    case AbsorberKind::k_absorber: return "k";
    case AbsorberKind::stretched_k_absorber: return "stretched";
  }
  return "digraph";
}

std::optional<AbsorberKind> parse_absorber_kind(std::string_view name) {
  for (AbsorberKind kind : {AbsorberKind::digraph_absorber, AbsorberKind::k_absorber,
                            AbsorberKind::stretched_k_absorber}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

int absorber_length(AbsorberKind kind, int k) {
  switch (kind) {
    case AbsorberKind::digraph_absorber: return 2 * (k + 2);
    case AbsorberKind::k_absorber: return 2 * k;
    case AbsorberKind::stretched_k_absorber: return 4 * k;
  }
  return 0;
}

int absorber_split(AbsorberKind kind, int k) { return absorber_length(kind, k) / 2; }

namespace {

bool windows_ok(const Digraph& g, std::span<const Vertex> path, Vertex v, int k, int split) {
  if (!is_k_path(g, path, k)) return false;
  // Only pairs straddling the insertion point change distance.
  const int len = static_cast<int>(path.size());
  for (int i = std::max(0, split - k); i < split; ++i) {
    if (!g.has_edge(path[static_cast<std::size_t>(i)], v)) return false;
  }
  for (int i = split; i < std::min(len, split + k); ++i) {
    if (!g.has_edge(v, path[static_cast<std::size_t>(i)])) return false;
  }
  return true;
}

}  // namespace

bool is_absorber(const Digraph& g, std::span<const Vertex> path, Vertex v, int k,
                 AbsorberKind kind) {
  if (k < 1) throw Error(ErrorCode::bad_params, "k must be >= 1");
  if (static_cast<int>(path.size()) != absorber_length(kind, k)) {
    throw Error(ErrorCode::bad_length, "absorber has the wrong number of vertices");
  }
  VertexSet seen(g.order());
  if (v < 0 || v >= g.order()) throw Error(ErrorCode::vertex_out_of_range, "vertex out of range");
  seen.insert(v);
  for (Vertex u : path) {
    if (u < 0 || u >= g.order()) throw Error(ErrorCode::vertex_out_of_range, "vertex out of range");
    if (seen.contains(u)) {
      throw Error(ErrorCode::precondition_violated, "absorber vertices must be distinct and avoid v");
    }
    seen.insert(u);
  }
  return windows_ok(g, path, v, k, absorber_split(kind, k));
}

AbsorberSample sample_absorbers(const Digraph& g, Vertex v, int k, AbsorberKind kind,
                                std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::bad_params, "trials must be >= 1");
  if (v < 0 || v >= g.order()) throw Error(ErrorCode::vertex_out_of_range, "vertex out of range");
  const int len = absorber_length(kind, k);
  AbsorberSample sample;
  sample.trials = trials;
  std::vector<Vertex> pool;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u != v) pool.push_back(u);
  }
  if (static_cast<int>(pool.size()) >= len) {
    std::vector<Vertex> work(pool.size());
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
      Rng rng(substream_seed(seed, trial));
      std::copy(pool.begin(), pool.end(), work.begin());
      // Partial Fisher-Yates: the first len entries are a uniform ordered tuple.
      for (int i = 0; i < len; ++i) {
        const auto j = static_cast<std::size_t>(i) +
                       rng.below(static_cast<std::uint64_t>(work.size()) - static_cast<std::uint64_t>(i));
        std::swap(work[static_cast<std::size_t>(i)], work[j]);
      }
      std::span<const Vertex> tuple(work.data(), static_cast<std::size_t>(len));
      if (windows_ok(g, tuple, v, k, absorber_split(kind, k))) {
        ++sample.hits;
        sample.absorbers.emplace_back(tuple.begin(), tuple.end());
      }
    }
  }
  sample.hit_rate = static_cast<double>(sample.hits) / static_cast<double>(trials);
  return sample;
}

std::int64_t goodness_threshold(int k, Fraction delta, int n) {
  if (k < 1 || n < 0 || delta.den <= 0) throw Error(ErrorCode::bad_params, "bad goodness parameters");
  // ((2k-1) p/q - (k-1)) n / (k 2^(2k-1)) = ((2k-1)p - (k-1)q) n / (q k 2^(2k-1))
  const std::int64_t numer =
      ((2 * k - 1) * delta.num - static_cast<std::int64_t>(k - 1) * delta.den) * n;
  const std::int64_t denom = delta.den * k * (std::int64_t{1} << (2 * k - 1));
  if (numer <= 0) return 0;
  return (numer + denom - 1) / denom;
}

GoodnessResult goodness(const Digraph& g, const VertexSet& t, int k, Fraction delta, Side side) {
  if (t.size() != k) throw Error(ErrorCode::precondition_violated, "T must have exactly k vertices");
  if (!spans_tournament(g, t)) throw Error(ErrorCode::not_a_tournament, "T does not span a tournament");
  VertexSet common = VertexSet::full(g.order());
  t.for_each([&](Vertex x) {
    common &= side == Side::out ? g.out_neighbors(x) : g.in_neighbors(x);
  });
  GoodnessResult result;
  result.common = common.size();
  result.threshold = goodness_threshold(k, delta, g.order());
  result.good = result.common >= result.threshold;
  return result;
}

GoodSubTournament good_sub_tournament(const Digraph& g, const VertexSet& t, int k,
                                      Fraction delta, Side side) {
  if (k < 1 || t.size() != 2 * k - 1) {
    throw Error(ErrorCode::precondition_violated, "T must have exactly 2k - 1 vertices");
  }
  if (!spans_tournament(g, t)) throw Error(ErrorCode::not_a_tournament, "T does not span a tournament");
  const auto members = t.members();
  const int m = static_cast<int>(members.size());
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  GoodSubTournament result;
  while (true) {
    VertexSet sub(g.order());
    for (int i : idx) sub.insert(members[static_cast<std::size_t>(i)]);
    const auto check = goodness(g, sub, k, delta, side);
    if (check.good) {
      result.outcome = SubTournamentOutcome::found;
      result.subset = sub.members();
      result.common = check.common;
      return result;
    }
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  // Regime where a good subset is guaranteed: oriented host, min semi-degree >= delta n and
  // delta > (k-1)/(2k-1).
  const auto profile = degree_profile(g);
  const bool regime = is_oriented(g) &&
                      static_cast<std::int64_t>(profile.min_semi_degree) * delta.den >=
                          delta.num * g.order() &&
                      delta.num * (2 * k - 1) > static_cast<std::int64_t>(k - 1) * delta.den;
  result.outcome = regime ? SubTournamentOutcome::lemma_violation : SubTournamentOutcome::not_found;
  return result;
}

std::string_view to_string(ConnectOutcome o) {
  switch (o) {
    case ConnectOutcome::found: return "FOUND";
    case ConnectOutcome::not_found: return "NOT_FOUND";
    case ConnectOutcome::budget: return "BUDGET";
  }
  return "NOT_FOUND";
}

namespace {

constexpr int kUnreachable = 1 << 29;

/// Depth-bounded path search shared by both connectors. `inner_ok` holds the
/// vertices allowed strictly between the two end tuples. The path is grown
/// from `from`; after `inner` inner vertices the tuple `to` must fit.
class ConnectorSearch {
 public:
  ConnectorSearch(const Digraph& g, std::span<const Vertex> from, std::span<const Vertex> to,
                  VertexSet inner_ok, int k, std::uint64_t max_nodes)
      : g_(g), from_(from.begin(), from.end()), to_(to.begin(), to.end()),
        inner_ok_(std::move(inner_ok)), k_(k), max_nodes_(max_nodes) {
    compute_distance_bound();
  }

  ConnectResult run(int max_inner) {
    ConnectResult result;
    for (int inner = 0; inner <= max_inner && !exceeded_; ++inner) {
      if (lower_bound_inner_ >= kUnreachable) break;
      if (inner < lower_bound_inner_) continue;
      seq_ = from_;
      used_ = inner_ok_;
      if (grow(inner)) {
        result.outcome = ConnectOutcome::found;
        result.path = seq_;
        result.path.insert(result.path.end(), to_.begin(), to_.end());
        result.nodes_expanded = nodes_;
        return result;
      }
    }
    result.outcome = exceeded_ ? ConnectOutcome::budget : ConnectOutcome::not_found;
    result.nodes_expanded = nodes_;
    return result;
  }

 private:
  // Any k-path walks along consecutive edges, so the number of inner
  // vertices is at least the BFS distance from the last `from` vertex to
  // the first `to` vertex through allowed vertices, minus one.
  void compute_distance_bound() {
    const int n = g_.order();
    dist_to_target_.assign(static_cast<std::size_t>(n), kUnreachable);
    const Vertex target = to_.front();
    std::deque<Vertex> queue;
    // Reverse BFS from the target through allowed vertices.
    inner_ok_.for_each([&](Vertex u) {
      if (g_.has_edge(u, target)) {
        dist_to_target_[static_cast<std::size_t>(u)] = 1;
        queue.push_back(u);
      }
    });
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      (g_.in_neighbors(v) & inner_ok_).for_each([&](Vertex u) {
        if (dist_to_target_[static_cast<std::size_t>(u)] == kUnreachable) {
          dist_to_target_[static_cast<std::size_t>(u)] = dist_to_target_[static_cast<std::size_t>(v)] + 1;
          queue.push_back(u);
        }
      });
    }
    const Vertex source = from_.back();
    if (g_.has_edge(source, target)) {
      lower_bound_inner_ = 0;
    } else {
      int best = kUnreachable;
      g_.out_neighbors(source).for_each([&](Vertex u) {
        if (inner_ok_.contains(u)) best = std::min(best, dist_to_target_[static_cast<std::size_t>(u)]);
      });
      lower_bound_inner_ = best;
    }
  }

  /// The tuple `to` fits after the current sequence.
  bool closes() const {
    std::vector<Vertex> tail(seq_.end() - std::min<std::ptrdiff_t>(k_, static_cast<std::ptrdiff_t>(seq_.size())), seq_.end());
    for (Vertex y : to_) {
      for (Vertex x : tail) {
        if (!g_.has_edge(x, y)) return false;
      }
      tail.push_back(y);
      if (static_cast<int>(tail.size()) > k_) tail.erase(tail.begin());
    }
    return true;
  }

  bool grow(int remaining) {
    if (nodes_ >= max_nodes_) {
      exceeded_ = true;
      return false;
    }
    ++nodes_;
    if (remaining == 0) return closes();
    VertexSet cand = used_;
    const int window = std::min<int>(k_, static_cast<int>(seq_.size()));
    for (int j = 1; j <= window; ++j) cand &= g_.out_neighbors(seq_[seq_.size() - static_cast<std::size_t>(j)]);
    // Inner vertex at distance `remaining` from to[0] must reach the first
    // few `to` vertices directly.
    for (int j = 0; j < static_cast<int>(to_.size()) && remaining + j <= k_; ++j) {
      cand &= g_.in_neighbors(to_[static_cast<std::size_t>(j)]);
    }
    bool found = false;
    cand.for_each([&](Vertex w) {
      if (found || exceeded_) return;
      if (dist_to_target_[static_cast<std::size_t>(w)] > remaining) return;
      seq_.push_back(w);
      used_.erase(w);
      found = grow(remaining - 1);
      if (!found) {
        used_.insert(w);
        seq_.pop_back();
      }
    });
    return found;
  }

  const Digraph& g_;
  std::vector<Vertex> from_;
  std::vector<Vertex> to_;
  VertexSet inner_ok_;
  int k_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
  int lower_bound_inner_ = 0;
  std::vector<int> dist_to_target_;
  std::vector<Vertex> seq_;
  VertexSet used_;
};

void check_vertex(const Digraph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw Error(ErrorCode::vertex_out_of_range, "vertex out of range");
}

}  // namespace

ConnectResult connect_2path(const Digraph& g, Vertex a, Vertex b, Vertex y, Vertex z,
                            const VertexSet& avoid, int max_len, std::uint64_t max_nodes) {
  for (Vertex v : {a, b, y, z}) check_vertex(g, v);
  if (!g.has_edge(a, b) || !g.has_edge(y, z)) {
    throw Error(ErrorCode::precondition_violated, "ab and yz must be edges");
  }
  if (a == y || a == z || b == y || b == z) {
    throw Error(ErrorCode::precondition_violated, "end edges must be vertex-disjoint");
  }
  for (Vertex v : {a, b, y, z}) {
    if (avoid.contains(v)) {
      throw Error(ErrorCode::precondition_violated, "avoid set must not contain the end vertices");
    }
  }
  if (max_len < 4) return {};
  VertexSet inner_ok = avoid.complement();
  for (Vertex v : {a, b, y, z}) inner_ok.erase(v);
  const std::vector<Vertex> from{a, b};
  const std::vector<Vertex> to{y, z};
  return ConnectorSearch(g, from, to, std::move(inner_ok), 2, max_nodes).run(max_len - 4);
}

ConnectResult connect_ktuples(const Digraph& g, std::span<const Vertex> from,
                              std::span<const Vertex> to, const VertexSet& avoid, int k,
                              int max_inner, std::uint64_t max_nodes) {
  if (k < 1 || static_cast<int>(from.size()) != k || static_cast<int>(to.size()) != k) {
    throw Error(ErrorCode::precondition_violated, "end tuples must have exactly k vertices");
  }
  VertexSet ends(g.order());
  for (Vertex v : from) {
    check_vertex(g, v);
    ends.insert(v);
  }
  for (Vertex v : to) {
    check_vertex(g, v);
    if (ends.contains(v)) throw Error(ErrorCode::precondition_violated, "end tuples must be disjoint");
    ends.insert(v);
  }
  if (!is_k_path(g, from, k) || !is_k_path(g, to, k)) {
    throw Error(ErrorCode::precondition_violated, "end tuples must be k-paths");
  }
  VertexSet inner_ok = (avoid | ends).complement();
  return ConnectorSearch(g, from, to, std::move(inner_ok), k, max_nodes).run(std::max(0, max_inner));
}

}  // namespace powham
