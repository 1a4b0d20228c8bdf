#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powham/digraph.hpp"

namespace powham {

enum class Family {
  transitive,
  power_cycle,
  paley,
  clique_minus_matching,
  extremal_total,
  gk,
  random_tournament,
  rk_random,
  d_r,
  f_r,
};

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Parameters naming one member of a family. Fields a family does not use
/// are ignored.
struct ConstructionSpec {
  Family family = Family::transitive;
  int k = 0;
  int n = 0;
  int t = 0;
  int r = 0;
  int l = 0;
  int q = 0;
  std::uint64_t seed = 0;
  int retries = 1000;
  std::optional<Digraph> base;
};

Digraph build(const ConstructionSpec& spec);

Digraph transitive(int k);
/// k-th power of the directed cycle on l vertices.
Digraph power_cycle(int k, int l);
Digraph paley(int q);
Digraph clique_minus_matching(int k);
/// Circulant tournament with |d+ - d-| <= 1 at every vertex.
Digraph semi_regular_tournament(int s);

struct ExtremalTotalLayout {
  int q = 0;
  int r = 0;
  /// r_1 >= ... >= r_{k+1}, entries in {0, 1, 2}, summing to r.
  std::vector<int> remainders;
  /// |V_1|, ..., |V_{k+1}| in vertex-index order.
  std::vector<int> class_sizes;
  /// Closed-form minimum total degree.
  int min_total_degree = 0;
};

ExtremalTotalLayout extremal_total_layout(int k, int n);
/// Dense digraph without the k-th power of a Hamilton cycle.
Digraph extremal_total(int k, int n);

struct GkLayout {
  int m = 0;
  int t = 0;
  bool shrunk_first_class = false;
  std::array<int, 3> sizes{};
  int order() const { return sizes[0] + sizes[1] + sizes[2]; }
};

/// Known r(k+1) - 1 for k in [2, 5].
int transitive_ramsey_minus_one(int k);
GkLayout gk_layout(int k, int t);
/// Oriented graph of high semi-degree without the k-th power of a Hamilton
/// cycle. V_1 occupies the lowest indices, then V_2, then V_3.
Digraph gk(int k, int t, const std::optional<Digraph>& base = std::nullopt);
/// Throws BaseInvalid unless base is a regular tournament on m vertices free
/// of the transitive tournament on k+1 vertices.
void validate_gk_base(const Digraph& base, int k);

Digraph random_tournament(int n, std::uint64_t seed);

struct RkSample {
  Digraph graph;
  Digraph base;
  int base_order = 0;
  /// True when the nominal ceil(2^((k-5)/2)) was raised to the minimum 3.
  bool clamped = false;
  int attempts = 0;
};

int rk_base_order(int k, bool* clamped = nullptr);
RkSample rk_random(int k, int n, std::uint64_t seed, int retries);

/// Balanced blow-up: class sizes floor(n/|g|) or ceil(n/|g|), larger first,
/// vertex v owning a contiguous block.
Digraph balanced_blow_up(const Digraph& g, int n);

Digraph d_r(int r);
Digraph f_r(int r);

bool is_prime(int q);

}  // namespace powham
