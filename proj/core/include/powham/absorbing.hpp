#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "powham/digraph.hpp"

namespace powham {

/// Exact non-negative rational, den > 0.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  /// Accepts "p/q", an integer, or a decimal such as "0.5".
  static Fraction parse(std::string_view text);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

enum class AbsorberKind { digraph_absorber, k_absorber, stretched_k_absorber };

std::string_view to_string(AbsorberKind kind);
std::optional<AbsorberKind> parse_absorber_kind(std::string_view name);

/// Number of vertices in an absorber of this kind: 2(k+2), 2k or 4k.
int absorber_length(AbsorberKind kind, int k);
/// Index in the absorber before which the absorbed vertex is inserted.
int absorber_split(AbsorberKind kind, int k);

/// True iff `path` is a k-path and stays one with v inserted at the split
/// point. Throws BadLength on a wrong length and PreconditionViolated when
/// the vertices are not distinct or v lies on the path.
bool is_absorber(const Digraph& g, std::span<const Vertex> path, Vertex v, int k,
                 AbsorberKind kind);

struct AbsorberSample {
  std::vector<std::vector<Vertex>> absorbers;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double hit_rate = 0.0;
};

/// Samples `trials` uniform ordered tuples of distinct vertices from V - {v};
/// trial i draws from its own sub-stream of `seed`.
AbsorberSample sample_absorbers(const Digraph& g, Vertex v, int k, AbsorberKind kind,
                                std::uint64_t trials, std::uint64_t seed);

/// ceil(((2k-1)delta - k + 1) / (k 2^(2k-1)) * n), clamped at zero.
std::int64_t goodness_threshold(int k, Fraction delta, int n);

enum class Side { out, in };

struct GoodnessResult {
  bool good = false;
  int common = 0;
  std::int64_t threshold = 0;
};

/// Common out- (or in-) neighbourhood of T against the goodness threshold.
/// Throws NotATournament unless every pair of T is adjacent.
GoodnessResult goodness(const Digraph& g, const VertexSet& t, int k, Fraction delta, Side side);

enum class SubTournamentOutcome { found, not_found, lemma_violation };

struct GoodSubTournament {
  SubTournamentOutcome outcome = SubTournamentOutcome::not_found;
  std::vector<Vertex> subset;
  int common = 0;
};

/// First k-subset (lexicographic) of a (2k-1)-vertex tournament that is good.
/// Absence is reported as lemma_violation when the host is oriented with
/// min semi-degree >= delta n and delta > (k-1)/(2k-1).
GoodSubTournament good_sub_tournament(const Digraph& g, const VertexSet& t, int k,
                                      Fraction delta, Side side);

enum class ConnectOutcome { found, not_found, budget };
std::string_view to_string(ConnectOutcome o);

struct ConnectResult {
  ConnectOutcome outcome = ConnectOutcome::not_found;
  std::vector<Vertex> path;
  std::uint64_t nodes_expanded = 0;
};

inline constexpr std::uint64_t kDefaultConnectNodes = 20'000'000;

/// Shortest 2-path a, b, ..., y, z on at most max_len vertices whose inner
/// vertices avoid `avoid`.
ConnectResult connect_2path(const Digraph& g, Vertex a, Vertex b, Vertex y, Vertex z,
                            const VertexSet& avoid, int max_len = 20,
                            std::uint64_t max_nodes = kDefaultConnectNodes);

/// Shortest k-path starting with the tuple `from` and ending with `to`, with
/// at most max_inner vertices in between, none of them in `avoid`.
ConnectResult connect_ktuples(const Digraph& g, std::span<const Vertex> from,
                              std::span<const Vertex> to, const VertexSet& avoid, int k,
                              int max_inner, std::uint64_t max_nodes = kDefaultConnectNodes);

}  // namespace powham
