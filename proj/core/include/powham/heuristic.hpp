#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "powham/absorbing.hpp"
#include "powham/digraph.hpp"
#include "powham/solver.hpp"

namespace powham {

struct HeuristicParams {
  /// Registered absorbers wanted for every vertex outside the absorbing path.
  int absorber_target = 2;
  /// Share of the non-absorbing vertices set aside for connectors; in (0, 1/2).
  Fraction reservoir_fraction{1, 20};
  /// Inner-vertex cap for each connector; 0 selects 6k.
  int connector_max_vertices = 0;
  std::uint64_t connector_node_budget = 200'000;
  int cover_restarts = 8;
  int max_retries = 10;
  /// Randomised construction attempts per absorber.
  int sampling_trials = 200;
  /// Upper bound on the absorbing path's share of V(G); in (0, 1).
  Fraction absorbing_fraction{1, 2};
  std::uint64_t seed = 0;
};

/// Throws BadParams when a field is outside its documented range.
void validate(const HeuristicParams& params);

struct CoverResult {
  std::vector<std::vector<Vertex>> paths;
  VertexSet leftover;
};

/// Greedy vertex-disjoint k-path cover of `within`. Paths grow forwards then
/// backwards, preferring extensions that can be extended again; ties follow
/// a seeded shuffle. Paths shorter than 2k are dissolved into the leftover.
CoverResult greedy_cover(const Digraph& g, int k, std::uint64_t seed);
CoverResult greedy_cover(const Digraph& g, int k, std::uint64_t seed, const VertexSet& within);

enum class FailureStage { none, sampling, chaining, reservoir_connect, absorb_capacity };
std::string_view to_string(FailureStage stage);

struct Gadget {
  /// Offset of the gadget's first vertex within the absorbing path.
  std::size_t offset = 0;
  std::vector<Vertex> vertices;
};

struct AbsorbingPath {
  FailureStage failure = FailureStage::none;
  AbsorberKind kind = AbsorberKind::digraph_absorber;
  std::vector<Vertex> path;
  std::vector<Gadget> gadgets;
  /// registry[v]: gadgets (by index) able to absorb v, for v off the path.
  std::vector<std::vector<int>> registry;
  std::size_t registry_entries = 0;
};

/// Step 1: samples vertex-disjoint absorbers and chains them by connectors.
AbsorbingPath build_absorbing_path(const Digraph& g, int k, const HeuristicParams& params);

struct StageTimings {
  double absorbing_ms = 0;
  double reservoir_ms = 0;
  double cover_ms = 0;
  double connect_ms = 0;
  double absorb_ms = 0;
};

struct AttemptLog {
  std::uint64_t seed = 0;
  FailureStage failure = FailureStage::none;
  std::size_t gadgets = 0;
  std::size_t absorbing_path_vertices = 0;
  std::size_t registry_entries = 0;
  std::size_t reservoir_size = 0;
  std::size_t cover_paths = 0;
  std::size_t cover_leftover = 0;
  std::size_t dissolved_paths = 0;
  std::size_t absorbed = 0;
  StageTimings timings;
};

struct HeuristicResult {
  std::optional<CycleCertificate> certificate;
  FailureStage failure = FailureStage::none;
  std::vector<AttemptLog> attempts;
  bool success() const { return certificate.has_value(); }
};

/// Absorbing-connecting pipeline for the k-th power of a Hamilton cycle.
/// A returned certificate has passed validate_certificate.
HeuristicResult heuristic_ham_power(const Digraph& g, int k, const HeuristicParams& params);

}  // namespace powham
