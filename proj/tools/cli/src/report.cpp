#include "powham_cli/report.hpp"

#include <set>

#include "powham/absorbing.hpp"
#include "powham/error.hpp"
#include "powham/io.hpp"
#include "powham/solver.hpp"

namespace powham::cli {

Json Report::to_json() const {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = {{"name", command}, {"argv", argv}};
  j["params"] = params;
  j["outcome"] = outcome;
  if (witness) j["witness"] = *witness;
  j["counters"] = {{"nodes_expanded", nodes_expanded}, {"elapsed_ms", elapsed_ms}};
  j["seeds"] = seeds;
  j["fingerprint"] = fingerprint ? Json(*fingerprint) : Json(nullptr);
  if (!details.empty()) j["details"] = details;
  return j;
}

Json edges_json(const Digraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

Digraph graph_from_json(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return from_edge_list(j.at("n").get<int>(), edges);
}

namespace {

bool distinct(const std::vector<Vertex>& seq) {
  return std::set<Vertex>(seq.begin(), seq.end()).size() == seq.size();
}

bool in_range(const Digraph& g, const std::vector<Vertex>& seq) {
  for (Vertex v : seq)
    if (v < 0 || v >= g.order()) return false;
  return true;
}

bool transitive_order(const Digraph& g, const std::vector<Vertex>& seq) {
  if (!in_range(g, seq) || !distinct(seq)) return false;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (!g.has_edge(seq[i], seq[j]) || g.has_edge(seq[j], seq[i])) return false;
  return true;
}

bool check_witness(const Json& w, const Digraph* g, std::string& why) {
  const std::string kind = w.at("kind").get<std::string>();
  auto need_graph = [&] {
    if (g == nullptr) why = "witness kind '" + kind + "' needs the graph";
    return g != nullptr;
  };
  if (kind == "power_cycle" || kind == "power_path") {
    if (!need_graph()) return false;
    CycleCertificate cert{w.at("k").get<int>(), w.at("order").get<std::vector<Vertex>>()};
    try {
      return validate_certificate(*g, cert, kind == "power_cycle" ? PowerMode::cycle : PowerMode::path);
    } catch (const Error& e) {
      why = e.what();
      return false;
    }
  }
  if (kind == "k_path") {
    if (!need_graph()) return false;
    const auto seq = w.at("sequence").get<std::vector<Vertex>>();
    const auto from = w.at("from").get<std::vector<Vertex>>();
    const auto to = w.at("to").get<std::vector<Vertex>>();
    const int k = w.at("k").get<int>();
    if (!in_range(*g, seq) || !distinct(seq) || seq.size() < from.size() + to.size()) return false;
    if (!std::equal(from.begin(), from.end(), seq.begin())) return false;
    if (!std::equal(to.begin(), to.end(), seq.end() - static_cast<std::ptrdiff_t>(to.size()))) return false;
    return is_k_path(*g, seq, k);
  }
  if (kind == "embedding") {
    if (!need_graph()) return false;
    const Digraph pattern = graph_from_json(w.at("pattern"));
    return validate_embedding(pattern, *g, w.at("map").get<std::vector<Vertex>>());
  }
  if (kind == "transitive") {
    if (!need_graph()) return false;
    return transitive_order(*g, w.at("order").get<std::vector<Vertex>>());
  }
  if (kind == "factor") {
    if (!need_graph()) return false;
    std::vector<Vertex> all;
    for (const auto& part : w.at("parts")) {
      const auto p = part.get<std::vector<Vertex>>();
      if (!transitive_order(*g, p)) return false;
      all.insert(all.end(), p.begin(), p.end());
    }
    return static_cast<int>(all.size()) == g->order() && distinct(all);
  }
  if (kind == "absorber") {
    if (!need_graph()) return false;
    const auto akind = parse_absorber_kind(w.at("absorber_kind").get<std::string>());
    if (!akind) return false;
    try {
      return is_absorber(*g, w.at("path").get<std::vector<Vertex>>(), w.at("vertex").get<Vertex>(),
                         w.at("k").get<int>(), *akind);
    } catch (const Error& e) {
      why = e.what();
      return false;
    }
  }
  if (kind == "tk_free_tournament") {
    const Digraph t = graph_from_json(w.at("graph"));
    return is_tournament(t) && !contains_transitive(t, w.at("k").get<int>());
  }
  if (kind == "no_factor_tournament") {
    const Digraph t = graph_from_json(w.at("graph"));
    return is_tournament(t) &&
           transitive_factor(t, w.at("k").get<int>()).outcome == Outcome::exhausted;
  }
  why = "unknown witness kind '" + kind + "'";
  return false;
}

}  // namespace

WitnessCheck validate_report(const Json& report, const std::optional<Digraph>& graph) {
  WitnessCheck out;
  if (report.value("schema_version", "") != std::string(kSchemaVersion)) {
    out.message = "unsupported schema_version";
    return out;
  }
  const auto& fp = report.contains("fingerprint") ? report.at("fingerprint") : Json(nullptr);
  if (graph) {
    out.fingerprint_matches = fp.is_string() && fp.get<std::string>() == fingerprint_hex(*graph);
  } else {
    out.fingerprint_matches = fp.is_null();
  }
  if (!out.fingerprint_matches) {
    out.message = "graph fingerprint does not match the report";
    return out;
  }
  if (!report.contains("witness")) {
    out.witness_valid = true;
    out.message = "no witness stored";
    return out;
  }
  std::string why;
  out.witness_valid = check_witness(report.at("witness"), graph ? &*graph : nullptr, why);
  out.message = out.witness_valid ? "witness re-validated" : (why.empty() ? "witness rejected" : why);
  return out;
}

}  // namespace powham::cli
