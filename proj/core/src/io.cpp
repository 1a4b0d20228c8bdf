#include "powham/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "powham/error.hpp"

namespace powham {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t j = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > j) out.push_back(line.substr(j, i - j));
  }
  return out;
}

bool to_int(std::string_view s, long long& out) {
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && p == end;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what, line);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error(ErrorCode::io_error, "write failed: " + path.string());
}

}  // namespace

Digraph parse_graph(std::istream& in) {
  std::string raw;
  int line_no = 0;
  // Header lines are counted from the first non-comment line.
  int stage = 0;
  std::optional<DigraphBuilder> builder;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string_view line = raw;
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] == '#') continue;
    const auto tok = split_ws(line);
    if (stage == 0) {
      if (tok.size() != 2 || tok[0] != "powham" || tok[1] != "v1")
        parse_fail(line_no, "expected header 'powham v1'");
      stage = 1;
      continue;
    }
    if (tok.empty()) continue;
    if (stage == 1) {
      long long n = 0;
      if (tok.size() != 2 || tok[0] != "n" || !to_int(tok[1], n) || n < 0)
        parse_fail(line_no, "expected 'n <N>'");
      if (n > kVertexCap)
        throw Error(ErrorCode::vertex_cap_exceeded, "n exceeds vertex cap", line_no);
      builder.emplace(static_cast<int>(n));
      stage = 2;
      continue;
    }
    long long u = 0, v = 0;
    if (tok.size() != 3 || tok[0] != "e" || !to_int(tok[1], u) || !to_int(tok[2], v))
      parse_fail(line_no, "expected 'e <u> <v>'");
    const int n = builder->order();
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::vertex_out_of_range,
                  "line " + std::to_string(line_no) + ": vertex out of range", line_no);
    try {
      builder->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  if (stage == 0) parse_fail(line_no + 1, "missing header 'powham v1'");
  if (stage == 1) parse_fail(line_no + 1 < 2 ? 2 : line_no + 1, "missing 'n <N>' line");
  return builder->build();
}

Digraph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Digraph parse_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
  return parse_graph(in);
}

std::string serialize_graph(const Digraph& g) {
  std::string out = "powham v1\nn " + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += "e ";
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

void serialize_graph(const Digraph& g, const std::filesystem::path& path) {
  write_file(path, serialize_graph(g));
}

std::string export_dot(const Digraph& g) {
  std::string out = "digraph {\n";
  for (const auto& [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

void export_dot(const Digraph& g, const std::filesystem::path& path) {
  write_file(path, export_dot(g));
}

std::uint64_t fingerprint(const Digraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const unsigned char c : serialize_graph(g)) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fingerprint_hex(const Digraph& g) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::uint64_t h = fingerprint(g);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
  return out;
}

}  // namespace powham
