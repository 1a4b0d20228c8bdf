#pragma once

// Naive reference implementations. They touch a Digraph only through
// order() and has_edge() and share no code with the searches they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "powham/digraph.hpp"

namespace brute {

using powham::Digraph;
using powham::Vertex;

inline bool window_ok(const Digraph& g, const std::vector<Vertex>& seq, int k, bool cyclic) {
  const int n = static_cast<int>(seq.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (!cyclic && i + j >= n) break;
      if (!g.has_edge(seq[i], seq[(i + j) % n])) return false;
    }
  }
  return true;
}

/// Permutation scan for the k-th power of a Hamilton cycle (cyclic) or path.
inline bool has_ham_power(const Digraph& g, int k, bool cyclic) {
  const int n = g.order();
  if (n == 0) return true;
  if (cyclic && n < k + 1) return false;
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  if (cyclic) {
    do {
      if (window_ok(g, p, k, true)) return true;
    } while (std::next_permutation(p.begin() + 1, p.end()));
    return false;
  }
  do {
    if (window_ok(g, p, k, false)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Injective maps pattern -> host preserving every pattern edge.
inline bool embeds(const Digraph& pattern, const Digraph& host) {
  const int m = pattern.order();
  const int n = host.order();
  if (m > n) return false;
  std::vector<Vertex> map(static_cast<std::size_t>(m), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == m) return true;
    for (Vertex h = 0; h < n; ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (pattern.has_edge(j, i) && !host.has_edge(map[j], h)) ok = false;
        if (pattern.has_edge(i, j) && !host.has_edge(h, map[j])) ok = false;
      }
      if (!ok) continue;
      used[h] = true;
      map[i] = h;
      if (self(self, i + 1)) return true;
      used[h] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

/// Vertex sets of size k (bitmask, n <= 20) carrying a transitive tournament.
inline std::vector<std::uint32_t> transitive_sets(const Digraph& g, int k) {
  const int n = g.order();
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<Vertex> vs;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) vs.push_back(v);
    // Transitive iff it is a tournament whose out-degrees inside are 0..k-1.
    bool tournament = true;
    std::vector<int> deg;
    for (Vertex a : vs) {
      int d = 0;
      for (Vertex b : vs) {
        if (a == b) continue;
        if (g.has_edge(a, b) == g.has_edge(b, a)) tournament = false;
        if (g.has_edge(a, b)) ++d;
      }
      deg.push_back(d);
    }
    if (!tournament) continue;
    std::sort(deg.begin(), deg.end());
    bool distinct = true;
    for (int i = 0; i < k; ++i)
      if (deg[i] != i) distinct = false;
    if (distinct) out.push_back(mask);
  }
  return out;
}

/// Partition of V into transitive k-sets.
inline bool has_transitive_factor(const Digraph& g, int k) {
  const int n = g.order();
  if (n % k != 0) return false;
  const auto sets = transitive_sets(g, k);
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  auto rec = [&](auto&& self, std::uint32_t covered) -> bool {
    if (covered == full) return true;
    const int low = __builtin_ctz(~covered);
    for (std::uint32_t s : sets) {
      if (!(s >> low & 1u) || (s & covered) != 0) continue;
      if (self(self, covered | s)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

/// ceil(((2k-1)p - (k-1)q) n / (q k 2^(2k-1))) clamped at zero, for delta = p/q.
inline std::int64_t goodness_threshold(int k, std::int64_t p, std::int64_t q, int n) {
  const std::int64_t num = ((2 * k - 1) * p - (k - 1) * q) * n;
  const std::int64_t den = q * k * (std::int64_t{1} << (2 * k - 1));
  if (num <= 0) return 0;
  return (num + den - 1) / den;
}

inline int min_semi_degree(const Digraph& g) {
  int best = g.order();
  for (Vertex v = 0; v < g.order(); ++v) {
    int in = 0, out = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
      if (g.has_edge(v, u)) ++out;
      if (g.has_edge(u, v)) ++in;
    }
    best = std::min({best, in, out});
  }
  return best;
}

inline int min_total_degree(const Digraph& g) {
  int best = 2 * g.order();
  for (Vertex v = 0; v < g.order(); ++v) {
    int d = 0;
    for (Vertex u = 0; u < g.order(); ++u) d += g.has_edge(v, u) + g.has_edge(u, v);
    best = std::min(best, d);
  }
  return best;
}

/// Relabelling search for isomorphism (n <= 9).
inline bool isomorphic(const Digraph& a, const Digraph& b) {
  const int n = a.order();
  if (n != b.order()) return false;
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u)
      for (Vertex v = 0; v < n && ok; ++v)
        if (a.has_edge(u, v) != b.has_edge(p[u], p[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace brute
