#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "powham/digraph.hpp"

namespace powham::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// One machine-readable record per CLI invocation.
struct Report {
  std::string command;
  std::vector<std::string> argv;
  Json params = Json::object();
  std::string outcome;
  std::optional<Json> witness;
  std::uint64_t nodes_expanded = 0;
  double elapsed_ms = 0;
  std::vector<std::uint64_t> seeds;
  std::optional<std::string> fingerprint;
  Json details = Json::object();

  Json to_json() const;
};

struct WitnessCheck {
  bool fingerprint_matches = false;
  bool witness_valid = false;
  std::string message;
};

/// Re-validates a stored report's witness. Witness kinds tied to a graph
/// need `graph`, whose fingerprint must match the stored one.
WitnessCheck validate_report(const Json& report, const std::optional<Digraph>& graph);

Json edges_json(const Digraph& g);
Digraph graph_from_json(const Json& j);

}  // namespace powham::cli
