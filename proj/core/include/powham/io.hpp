#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "powham/digraph.hpp"

namespace powham {

/// Reads the `powham v1` edge-list format. Errors carry the 1-based line.
Digraph parse_graph(std::istream& in);
Digraph parse_graph_text(std::string_view text);
Digraph parse_graph(const std::filesystem::path& path);

/// Canonical form: header, then edges sorted by (tail, head).
std::string serialize_graph(const Digraph& g);
void serialize_graph(const Digraph& g, const std::filesystem::path& path);

std::string export_dot(const Digraph& g);
void export_dot(const Digraph& g, const std::filesystem::path& path);

/// FNV-1a 64 over serialize_graph(g).
std::uint64_t fingerprint(const Digraph& g);
std::string fingerprint_hex(const Digraph& g);

}  // namespace powham
