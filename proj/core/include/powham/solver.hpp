#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "powham/digraph.hpp"

namespace powham {

enum class Outcome { found, exhausted, budget };
std::string_view to_string(Outcome o);

enum class PowerMode { cycle, path };
std::string_view to_string(PowerMode m);

/// Zero means unlimited.
struct SearchBudget {
  std::uint64_t max_nodes = 0;
  std::uint64_t max_millis = 0;
  /// Memory cap for the table of states proven dead.
  std::size_t memo_bytes = std::size_t{1} << 30;
};

struct SearchReport {
  Outcome outcome = Outcome::exhausted;
  /// Vertex order (power searches), pattern-to-host injection (embed), or
  /// ordered transitive tournament.
  std::vector<Vertex> witness;
  /// Blocks of a transitive factor.
  std::vector<std::vector<Vertex>> parts;
  std::uint64_t nodes_expanded = 0;
  double elapsed_ms = 0.0;
};

struct CycleCertificate {
  int k = 1;
  std::vector<Vertex> order;
};

/// Naive window check. Throws NotAPermutation if order is not a permutation
/// of [0, n).
bool validate_certificate(const Digraph& g, const CycleCertificate& cert, PowerMode mode);
/// Window check on a sequence of distinct vertices that need not cover V(G).
bool is_k_path(const Digraph& g, std::span<const Vertex> seq, int k);
/// Edge-preservation check for an injection pattern -> host.
bool validate_embedding(const Digraph& pattern, const Digraph& host,
                        std::span<const Vertex> map);

/// Exact backtracking search for the k-th power of a Hamilton cycle or path.
SearchReport find_ham_power(const Digraph& g, int k, PowerMode mode,
                            SearchBudget budget = {});

/// Subdigraph (not induced) embedding search.
SearchReport embed(const Digraph& pattern, const Digraph& host, SearchBudget budget = {});

enum class TransitiveMode { one, count, greedy };

struct TransitiveReport {
  /// found / exhausted; greedy mode reports budget-free `stuck` instead of
  /// exhausted.
  Outcome outcome = Outcome::exhausted;
  bool greedy_stuck = false;
  /// Witness in transitive order (every earlier vertex beats every later).
  std::vector<Vertex> witness;
  std::uint64_t vertex_set_count = 0;
  std::uint64_t ordered_count = 0;
  std::uint64_t nodes_expanded = 0;
};

TransitiveReport find_transitive(const Digraph& g, int k, TransitiveMode mode);
/// Greedy majority-direction descent restricted to `within`.
TransitiveReport greedy_transitive(const Digraph& g, int k, const VertexSet& within);
bool contains_transitive(const Digraph& g, int k);
/// All vertex sets carrying a transitive tournament on k vertices, each with
/// one transitive order, sorted by the order's vertex set.
std::vector<std::vector<Vertex>> transitive_copies(const Digraph& g, int k);

SearchReport transitive_factor(const Digraph& g, int k, SearchBudget budget = {});

/// Labelled n-vertex tournament: pair (i<j) number p in lexicographic order
/// is oriented i->j iff bit p of index is set.
Digraph tournament_from_index(int n, std::uint64_t index);

inline constexpr int kScanMaxPairs = 21;

struct RamseyResult {
  /// Smallest n <= n_max where every n-vertex tournament contains T_k.
  std::optional<int> value;
  int largest_scanned = 0;
  /// At the largest scanned n without a value: lowest-index T_k-free
  /// tournament, number of T_k-free labelled tournaments, and whether all
  /// of them are regular.
  std::optional<Digraph> witness;
  std::uint64_t witness_index = 0;
  std::uint64_t free_count = 0;
  bool free_all_regular = true;
  std::uint64_t tournaments_checked = 0;
};

/// Throws InfeasibleScan if n_max > 7.
RamseyResult ramsey_scan(int k, int n_max, int jobs = 1);

struct TilingResult {
  bool all_tile = true;
  std::optional<Digraph> counterexample;
  std::uint64_t counterexample_index = 0;
  std::uint64_t tournaments_checked = 0;
};

/// Throws BadParams if k does not divide n, InfeasibleScan past 2^21 objects.
TilingResult tiling_scan(int k, int n, int jobs = 1);

/// True if some relabelling maps a onto b (brute force, n <= 9).
bool isomorphic_small(const Digraph& a, const Digraph& b);

}  // namespace powham
