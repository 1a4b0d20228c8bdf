#include "powham/heuristic.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "powham/error.hpp"
#include "powham/random.hpp"

namespace powham {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Intersection of out-rows of the last min(k, len) vertices of seq.
VertexSet forward_candidates(const Digraph& g, const std::vector<Vertex>& seq, int k,
                             const VertexSet& pool) {
  VertexSet c = pool;
  const int len = static_cast<int>(seq.size());
  for (int j = 1; j <= std::min(k, len) && !c.empty(); ++j) c &= g.out_neighbors(seq[len - j]);
  return c;
}

// Vertices w such that w -> seq[0..min(k,len)-1].
VertexSet backward_candidates(const Digraph& g, const std::vector<Vertex>& seq, int k,
                              const VertexSet& pool) {
  VertexSet c = pool;
  const int len = static_cast<int>(seq.size());
  for (int j = 0; j < std::min(k, len) && !c.empty(); ++j) c &= g.in_neighbors(seq[j]);
  return c;
}

// Picks from cands, preferring vertices after which the path can still grow;
// ties by rank. Returns -1 when cands is empty.
Vertex pick_extension(const Digraph& g, std::vector<Vertex>& seq, int k, const VertexSet& cands,
                      VertexSet& pool, const std::vector<int>& rank, bool forward) {
  Vertex best = -1;
  bool best_ext = false;
  cands.for_each([&](Vertex c) {
    pool.erase(c);
    bool ext;
    if (forward) {
      seq.push_back(c);
      ext = !forward_candidates(g, seq, k, pool).empty();
      seq.pop_back();
    } else {
      seq.insert(seq.begin(), c);
      ext = !backward_candidates(g, seq, k, pool).empty();
      seq.erase(seq.begin());
    }
    pool.insert(c);
    if (best < 0 || (ext && !best_ext) || (ext == best_ext && rank[c] < rank[best])) {
      best = c;
      best_ext = ext;
    }
  });
  return best;
}

// Windows v needs around the split of an absorber.
bool can_absorb(const Digraph& g, const std::vector<Vertex>& gadget, Vertex v, int k, int split) {
  for (int i = split - k; i < split; ++i)
    if (!g.has_edge(gadget[i], v)) return false;
  for (int i = split; i < split + k; ++i)
    if (!g.has_edge(v, gadget[i])) return false;
  return true;
}

// Randomised constrained extension; returns an empty vector on failure.
std::vector<Vertex> sample_gadget(const Digraph& g, Vertex v, int k, AbsorberKind kind,
                                  const VertexSet& available, int trials, Rng& rng) {
  const int len = absorber_length(kind, k);
  const int split = absorber_split(kind, k);
  std::vector<Vertex> seq;
  std::vector<Vertex> cand_list;
  for (int t = 0; t < trials; ++t) {
    seq.clear();
    VertexSet pool = available;
    pool.erase(v);
    bool ok = true;
    for (int i = 0; i < len; ++i) {
      VertexSet c = forward_candidates(g, seq, k, pool);
      if (i >= split - k && i < split) c &= g.in_neighbors(v);
      if (i >= split && i < split + k) c &= g.out_neighbors(v);
      if (c.empty()) {
        ok = false;
        break;
      }
      cand_list = c.members();
      const Vertex pick = cand_list[rng.below(cand_list.size())];
      seq.push_back(pick);
      pool.erase(pick);
    }
    if (ok && is_absorber(g, seq, v, k, kind)) return seq;
  }
  return {};
}

int connector_cap(const HeuristicParams& p, int k) {
  return p.connector_max_vertices > 0 ? p.connector_max_vertices : 6 * k;
}

std::span<const Vertex> head(const std::vector<Vertex>& p, int k) { return {p.data(), static_cast<std::size_t>(k)}; }
std::span<const Vertex> tail(const std::vector<Vertex>& p, int k) {
  return {p.data() + p.size() - static_cast<std::size_t>(k), static_cast<std::size_t>(k)};
}

// Connector inner vertices, without the end tuples.
std::vector<Vertex> inner_of(const ConnectResult& r, int k) {
  return {r.path.begin() + k, r.path.end() - k};
}

}  // namespace

void validate(const HeuristicParams& p) {
  auto bad = [](const char* what) { throw Error(ErrorCode::bad_params, what); };
  if (p.absorber_target < 1) bad("absorber_target must be >= 1");
  if (p.reservoir_fraction.den <= 0 || p.reservoir_fraction.num <= 0 ||
      2 * p.reservoir_fraction.num >= p.reservoir_fraction.den)
    bad("reservoir_fraction must lie in (0, 1/2)");
  if (p.absorbing_fraction.den <= 0 || p.absorbing_fraction.num <= 0 ||
      p.absorbing_fraction.num >= p.absorbing_fraction.den)
    bad("absorbing_fraction must lie in (0, 1)");
  if (p.connector_max_vertices < 0) bad("connector_max_vertices must be >= 0");
  if (p.connector_node_budget == 0) bad("connector_node_budget must be > 0");
  if (p.cover_restarts < 1) bad("cover_restarts must be >= 1");
  if (p.max_retries < 1) bad("max_retries must be >= 1");
  if (p.sampling_trials < 1) bad("sampling_trials must be >= 1");
}

std::string_view to_string(FailureStage stage) {
  switch (stage) {
    case FailureStage::none: return "none";
    case FailureStage::sampling: return "sampling";
    case FailureStage::chaining: return "chaining";
    case FailureStage::reservoir_connect: return "reservoirConnect";
    case FailureStage::absorb_capacity: return "absorbCapacity";
  }
  return "?";
}

CoverResult greedy_cover(const Digraph& g, int k, std::uint64_t seed) {
  return greedy_cover(g, k, seed, VertexSet::full(g.order()));
}

CoverResult greedy_cover(const Digraph& g, int k, std::uint64_t seed, const VertexSet& within) {
  if (k < 1) throw Error(ErrorCode::bad_params, "k must be >= 1");
  const int n = g.order();
  Rng rng(seed);
  std::vector<Vertex> order = within.members();
  rng.shuffle(std::span<Vertex>(order));
  std::vector<int> rank(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);

  CoverResult out{{}, VertexSet(n)};
  VertexSet pool = within;
  for (Vertex start : order) {
    if (!pool.contains(start)) continue;
    std::vector<Vertex> path{start};
    pool.erase(start);
    for (;;) {
      const VertexSet c = forward_candidates(g, path, k, pool);
      const Vertex pick = pick_extension(g, path, k, c, pool, rank, true);
      if (pick < 0) break;
      path.push_back(pick);
      pool.erase(pick);
    }
    for (;;) {
      const VertexSet c = backward_candidates(g, path, k, pool);
      const Vertex pick = pick_extension(g, path, k, c, pool, rank, false);
      if (pick < 0) break;
      path.insert(path.begin(), pick);
      pool.erase(pick);
    }
    if (static_cast<int>(path.size()) < 2 * k) {
      for (Vertex v : path) out.leftover.insert(v);
    } else {
      out.paths.push_back(std::move(path));
    }
  }
  return out;
}

AbsorbingPath build_absorbing_path(const Digraph& g, int k, const HeuristicParams& params) {
  validate(params);
  if (k < 1) throw Error(ErrorCode::bad_params, "k must be >= 1");
  const int n = g.order();
  AbsorbingPath out;
  out.kind = is_oriented(g) ? AbsorberKind::stretched_k_absorber : AbsorberKind::digraph_absorber;
  out.registry.assign(static_cast<std::size_t>(n), {});
  const int len = absorber_length(out.kind, k);
  const int split = absorber_split(out.kind, k);
  const std::int64_t cap =
      params.absorbing_fraction.num * n / params.absorbing_fraction.den;
  // Enough gadgets for the expected leftover (unused reservoir plus slack).
  const std::int64_t min_gadgets =
      (params.reservoir_fraction.num * n + params.reservoir_fraction.den - 1) /
          params.reservoir_fraction.den + 2 * k;

  Rng rng(substream_seed(params.seed, 0));
  std::vector<int> rank(static_cast<std::size_t>(n));
  std::iota(rank.begin(), rank.end(), 0);
  rng.shuffle(std::span<int>(rank));

  VertexSet committed(n);
  std::vector<int> coverage(static_cast<std::size_t>(n), 0);
  std::vector<char> hopeless(static_cast<std::size_t>(n), 0);
  bool chaining_failed = false;

  for (;;) {
    Vertex v = -1;
    for (Vertex u = 0; u < n; ++u) {
      if (committed.contains(u) || hopeless[u]) continue;
      if (v < 0 || coverage[u] < coverage[v] ||
          (coverage[u] == coverage[v] && rank[u] < rank[v]))
        v = u;
    }
    if (v < 0) break;
    const bool covered = coverage[v] >= params.absorber_target;
    if (covered && static_cast<std::int64_t>(out.gadgets.size()) >= min_gadgets) break;
    if (static_cast<std::int64_t>(out.path.size()) + len > cap) break;

    VertexSet available = committed.complement();
    std::vector<Vertex> gadget =
        sample_gadget(g, v, k, out.kind, available, params.sampling_trials, rng);
    if (gadget.empty()) {
      hopeless[v] = 1;
      continue;
    }
    std::vector<Vertex> bridge;
    if (!out.path.empty()) {
      VertexSet avoid = committed;
      for (Vertex w : gadget) avoid.insert(w);
      avoid.insert(v);
      const ConnectResult r = connect_ktuples(g, tail(out.path, k), head(gadget, k), avoid, k,
                                              connector_cap(params, k),
                                              params.connector_node_budget);
      if (r.outcome != ConnectOutcome::found) {
        chaining_failed = true;
        hopeless[v] = 1;
        continue;
      }
      bridge = inner_of(r, k);
      if (static_cast<std::int64_t>(out.path.size() + bridge.size()) + len > cap) break;
    }
    for (Vertex w : bridge) {
      out.path.push_back(w);
      committed.insert(w);
    }
    Gadget gd{out.path.size(), gadget};
    for (Vertex w : gadget) {
      out.path.push_back(w);
      committed.insert(w);
    }
    out.gadgets.push_back(std::move(gd));
    // Coverage counts only the vertices still off the path.
    for (Vertex u = 0; u < n; ++u) {
      if (committed.contains(u)) continue;
      if (can_absorb(g, out.gadgets.back().vertices, u, k, split)) ++coverage[u];
    }
  }

  if (out.gadgets.empty()) {
    out.failure = chaining_failed ? FailureStage::chaining : FailureStage::sampling;
    return out;
  }
  for (Vertex u = 0; u < n; ++u) {
    if (committed.contains(u)) continue;
    for (std::size_t gi = 0; gi < out.gadgets.size(); ++gi) {
      if (can_absorb(g, out.gadgets[gi].vertices, u, k, split)) {
        out.registry[u].push_back(static_cast<int>(gi));
        ++out.registry_entries;
      }
    }
  }
  return out;
}

namespace {

struct Attempt {
  std::optional<CycleCertificate> cert;
  AttemptLog log;
};

Attempt run_attempt(const Digraph& g, int k, const HeuristicParams& params) {
  Attempt a;
  a.log.seed = params.seed;
  const int n = g.order();

  auto t0 = Clock::now();
  AbsorbingPath ap = build_absorbing_path(g, k, params);
  a.log.timings.absorbing_ms = ms_since(t0);
  a.log.gadgets = ap.gadgets.size();
  a.log.absorbing_path_vertices = ap.path.size();
  a.log.registry_entries = ap.registry_entries;
  if (ap.failure != FailureStage::none) {
    a.log.failure = ap.failure;
    return a;
  }

  t0 = Clock::now();
  Rng rng(substream_seed(params.seed, 1));
  VertexSet rest = VertexSet::full(n);
  for (Vertex v : ap.path) rest.erase(v);
  std::vector<Vertex> rest_list = rest.members();
  rng.shuffle(std::span<Vertex>(rest_list));
  const std::size_t rsize = static_cast<std::size_t>(
      (params.reservoir_fraction.num * static_cast<std::int64_t>(rest_list.size()) +
       params.reservoir_fraction.den - 1) /
      params.reservoir_fraction.den);
  VertexSet reservoir(n);
  for (std::size_t i = 0; i < rsize && i < rest_list.size(); ++i) reservoir.insert(rest_list[i]);
  a.log.reservoir_size = static_cast<std::size_t>(reservoir.size());
  a.log.timings.reservoir_ms = ms_since(t0);

  t0 = Clock::now();
  const VertexSet to_cover = rest - reservoir;
  CoverResult cover;
  for (int r = 0; r < params.cover_restarts; ++r) {
    CoverResult c = greedy_cover(g, k, substream_seed(params.seed, 100 + static_cast<std::uint64_t>(r)),
                                 to_cover);
    if (r == 0 || c.leftover.size() < cover.leftover.size()) cover = std::move(c);
  }
  a.log.cover_paths = cover.paths.size();
  a.log.cover_leftover = static_cast<std::size_t>(cover.leftover.size());
  a.log.timings.cover_ms = ms_since(t0);

  t0 = Clock::now();
  std::stable_sort(cover.paths.begin(), cover.paths.end(),
                   [](const auto& x, const auto& y) {
                     if (x.size() != y.size()) return x.size() > y.size();
                     return x.front() < y.front();
                   });
  VertexSet leftover = cover.leftover;
  VertexSet pool = reservoir;  // reservoir vertices still free
  struct Link {
    std::vector<Vertex> bridge;  // inner vertices before the segment
    const std::vector<Vertex>* segment;
  };
  std::vector<Link> chain;
  const int cap = connector_cap(params, k);
  auto connect = [&](const std::vector<Vertex>& from, const std::vector<Vertex>& to,
                     std::vector<Vertex>& bridge) {
    const ConnectResult r = connect_ktuples(g, tail(from, k), head(to, k), pool.complement(), k,
                                            cap, params.connector_node_budget);
    if (r.outcome != ConnectOutcome::found) return false;
    bridge = inner_of(r, k);
    for (Vertex w : bridge) pool.erase(w);
    return true;
  };
  const std::vector<Vertex>* last = &ap.path;
  for (const auto& p : cover.paths) {
    std::vector<Vertex> bridge;
    if (connect(*last, p, bridge)) {
      chain.push_back({std::move(bridge), &p});
      last = &p;
    } else {
      for (Vertex v : p) leftover.insert(v);
      ++a.log.dissolved_paths;
    }
  }
  std::vector<Vertex> closing;
  for (;;) {
    if (connect(*last, ap.path, closing)) break;
    if (chain.empty()) {
      a.log.failure = FailureStage::reservoir_connect;
      a.log.timings.connect_ms = ms_since(t0);
      return a;
    }
    for (Vertex v : chain.back().bridge) pool.insert(v);
    for (Vertex v : *chain.back().segment) leftover.insert(v);
    ++a.log.dissolved_paths;
    chain.pop_back();
    last = chain.empty() ? &ap.path : chain.back().segment;
  }
  leftover |= pool;
  a.log.timings.connect_ms = ms_since(t0);

  t0 = Clock::now();
  std::vector<Vertex> todo = leftover.members();
  std::stable_sort(todo.begin(), todo.end(), [&](Vertex x, Vertex y) {
    return ap.registry[x].size() < ap.registry[y].size();
  });
  std::vector<Vertex> assigned(ap.gadgets.size(), -1);
  for (Vertex v : todo) {
    bool placed = false;
    for (int gi : ap.registry[v]) {
      if (assigned[gi] < 0) {
        assigned[gi] = v;
        placed = true;
        break;
      }
    }
    if (!placed) {
      a.log.failure = FailureStage::absorb_capacity;
      a.log.timings.absorb_ms = ms_since(t0);
      return a;
    }
    ++a.log.absorbed;
  }

  const int split = absorber_split(ap.kind, k);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  std::size_t next_gadget = 0;
  for (std::size_t i = 0; i < ap.path.size(); ++i) {
    if (next_gadget < ap.gadgets.size() &&
        i == ap.gadgets[next_gadget].offset + static_cast<std::size_t>(split)) {
      if (assigned[next_gadget] >= 0) order.push_back(assigned[next_gadget]);
      ++next_gadget;
    }
    order.push_back(ap.path[i]);
  }
  for (const Link& l : chain) {
    order.insert(order.end(), l.bridge.begin(), l.bridge.end());
    order.insert(order.end(), l.segment->begin(), l.segment->end());
  }
  order.insert(order.end(), closing.begin(), closing.end());
  a.log.timings.absorb_ms = ms_since(t0);

  CycleCertificate cert{k, std::move(order)};
  if (!validate_certificate(g, cert, PowerMode::cycle))
    throw std::logic_error("heuristic assembled an invalid certificate");
  a.cert = std::move(cert);
  return a;
}

}  // namespace

HeuristicResult heuristic_ham_power(const Digraph& g, int k, const HeuristicParams& params) {
  validate(params);
  if (k < 1) throw Error(ErrorCode::bad_params, "k must be >= 1");
  HeuristicResult out;
  for (int attempt = 0; attempt < params.max_retries; ++attempt) {
    HeuristicParams p = params;
    p.seed = attempt == 0 ? params.seed : substream_seed(params.seed, 1000 + attempt);
    Attempt a = run_attempt(g, k, p);
    out.attempts.push_back(a.log);
    if (a.cert) {
      out.certificate = std::move(a.cert);
      out.failure = FailureStage::none;
      return out;
    }
    out.failure = a.log.failure;
  }
  return out;
}

}  // namespace powham
