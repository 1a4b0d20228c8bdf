#include "powham/constructions.hpp"

#include <cmath>
#include <string>

#include "powham/error.hpp"
#include "powham/random.hpp"
#include "powham/solver.hpp"

namespace powham {

namespace {

[[noreturn]] void bad_params(const std::string& what) {
  throw Error(ErrorCode::bad_params, what);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::transitive: return "transitive";
    case Family::power_cycle: return "power_cycle";
    case Family::paley: return "paley";
    case Family::clique_minus_matching: return "clique_minus_matching";
    case Family::extremal_total: return "extremal_total";
    case Family::gk: return "gk";
    case Family::random_tournament: return "random_tournament";
    case Family::rk_random: return "rk_random";
    case Family::d_r: return "d_r";
    case Family::f_r: return "f_r";
  }
  return "transitive";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::transitive, Family::power_cycle, Family::paley,
                   Family::clique_minus_matching, Family::extremal_total, Family::gk,
                   Family::random_tournament, Family::rk_random, Family::d_r,
                   Family::f_r}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

Digraph build(const ConstructionSpec& spec) {
  switch (spec.family) {
    case Family::transitive: return transitive(spec.k > 0 ? spec.k : spec.n);
    case Family::power_cycle: return power_cycle(spec.k, spec.l > 0 ? spec.l : spec.n);
    case Family::paley: return paley(spec.q > 0 ? spec.q : spec.n);
    case Family::clique_minus_matching:
      return clique_minus_matching(spec.k > 0 ? spec.k : spec.n);
    case Family::extremal_total: return extremal_total(spec.k, spec.n);
    case Family::gk: return gk(spec.k, spec.t, spec.base);
    case Family::random_tournament: return random_tournament(spec.n, spec.seed);
    case Family::rk_random: return rk_random(spec.k, spec.n, spec.seed, spec.retries).graph;
    case Family::d_r: return d_r(spec.r);
    case Family::f_r: return f_r(spec.r);
  }
  bad_params("unknown family");
}

Digraph transitive(int k) {
  if (k < 1) bad_params("transitive tournament needs k >= 1");
  DigraphBuilder b(k);
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = i + 1; j < k; ++j) b.add_edge(i, j);
  }
  return b.build();
}

Digraph power_cycle(int k, int l) {
  if (k < 1 || l <= k) bad_params("power_cycle needs k >= 1 and l >= k + 1");
  DigraphBuilder b(l);
  for (Vertex i = 0; i < l; ++i) {
    for (int j = 1; j <= k; ++j) b.add_edge(i, (i + j) % l);
  }
  return b.build();
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

Digraph paley(int q) {
  if (!is_prime(q) || q % 4 != 3) bad_params("paley needs a prime q = 3 (mod 4)");
  std::vector<bool> residue(static_cast<std::size_t>(q), false);
  for (int x = 1; x < q; ++x) residue[static_cast<std::size_t>((x * x) % q)] = true;
  DigraphBuilder b(q);
  for (Vertex i = 0; i < q; ++i) {
    for (Vertex j = 0; j < q; ++j) {
      if (i != j && residue[static_cast<std::size_t>(((j - i) % q + q) % q)]) b.add_edge(i, j);
    }
  }
  return b.build();
}

Digraph clique_minus_matching(int k) {
  if (k < 3) bad_params("clique_minus_matching needs k >= 3");
  DigraphBuilder b(k);
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = 0; v < k; ++v) {
      if (u != v) b.add_edge(u, v);
    }
  }
  for (int i = 0; i < k / 2; ++i) b.remove_edge(2 * i, 2 * i + 1);
  return b.build();
}

Digraph semi_regular_tournament(int s) {
  if (s < 1) bad_params("tournament needs at least one vertex");
  DigraphBuilder b(s);
  const int reach = (s - 1) / 2;
  for (Vertex i = 0; i < s; ++i) {
    for (int j = 1; j <= reach; ++j) b.add_edge(i, (i + j) % s);
  }
  if (s % 2 == 0) {
    for (Vertex i = 0; i < s / 2; ++i) b.add_edge(i, i + s / 2);
  }
  return b.build();
}

ExtremalTotalLayout extremal_total_layout(int k, int n) {
  if (k < 1 || n < k + 3) bad_params("extremal_total needs k >= 1 and n >= k + 3");
  ExtremalTotalLayout layout;
  layout.q = n / (k + 3);
  layout.r = n % (k + 3);
  const int parts = k + 1;
  layout.remainders.assign(static_cast<std::size_t>(parts), 0);
  for (int i = 0; i < parts; ++i) {
    if (layout.r <= parts) {
      layout.remainders[static_cast<std::size_t>(i)] = i < layout.r ? 1 : 0;
    } else {
      layout.remainders[static_cast<std::size_t>(i)] = i < layout.r - parts ? 2 : 1;
    }
  }
  for (int i = 0; i < parts; ++i) {
    const int base = i < k - 1 ? layout.q : 2 * layout.q;
    layout.class_sizes.push_back(base + layout.remainders[static_cast<std::size_t>(i)]);
  }
  const int c = ceil_div((k + 2) * n, k + 3);
  int offset = 2;
  if (layout.r == k + 2) {
    offset = 4;
  } else if (layout.r == k || layout.r == k + 1) {
    offset = 3;
  }
  layout.min_total_degree = 2 * c - offset;
  return layout;
}

Digraph extremal_total(int k, int n) {
  const auto layout = extremal_total_layout(k, n);
  std::vector<int> start;
  int acc = 0;
  for (int size : layout.class_sizes) {
    start.push_back(acc);
    acc += size;
  }
  auto class_of = [&](Vertex v) {
    int c = 0;
    while (c + 1 < static_cast<int>(start.size()) && v >= start[static_cast<std::size_t>(c + 1)]) ++c;
    return c;
  };
  // Classes 0..k-2 are the independent sets, k-1 and k the two cliques.
  const int first_clique = k - 1;
  const int second_clique = k;
  DigraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      const int cu = class_of(u);
      const int cv = class_of(v);
      const bool independent_end = cu < first_clique || cv < first_clique;
      if (independent_end) {
        if (cu != cv) b.add_edge(u, v);
      } else if (cu == cv) {
        b.add_edge(u, v);
      } else if (cu == first_clique && cv == second_clique) {
        b.add_edge(u, v);
      }
    }
  }
  return b.build();
}

int transitive_ramsey_minus_one(int k) {
  switch (k) {
    case 2: return 3;
    case 3: return 7;
    case 4: return 13;
    case 5: return 27;
    default: bad_params("gk needs 2 <= k <= 5");
  }
}

GkLayout gk_layout(int k, int t) {
  if (t < 1) bad_params("gk needs t >= 1");
  GkLayout layout;
  layout.m = transitive_ramsey_minus_one(k);
  layout.t = t;
  const int mt = layout.m * t;
  if (mt % k != 0) {
    layout.sizes = {mt, (layout.m + 1) * t, (layout.m + 1) * t};
  } else {
    layout.shrunk_first_class = true;
    layout.sizes = {mt - 1, (layout.m + 1) * t + 1, (layout.m + 1) * t};
  }
  if (layout.order() > kVertexCap) {
    throw Error(ErrorCode::vertex_cap_exceeded, "gk exceeds vertex cap");
  }
  return layout;
}

void validate_gk_base(const Digraph& base, int k) {
  const int m = transitive_ramsey_minus_one(k);
  if (base.order() != m) {
    throw Error(ErrorCode::base_invalid,
                "base must have " + std::to_string(m) + " vertices");
  }
  if (!is_tournament(base)) throw Error(ErrorCode::base_invalid, "base is not a tournament");
  for (Vertex v = 0; v < base.order(); ++v) {
    if (base.out_degree(v) != base.in_degree(v)) {
      throw Error(ErrorCode::base_invalid, "base tournament is not regular");
    }
  }
  if (contains_transitive(base, k + 1)) {
    throw Error(ErrorCode::base_invalid, "base contains a transitive (k+1)-tournament");
  }
}

Digraph gk(int k, int t, const std::optional<Digraph>& base) {
  const auto layout = gk_layout(k, t);
  Digraph core;
  if (base) {
    core = *base;
  } else if (k == 2) {
    core = power_cycle(1, 3);
  } else if (k == 3) {
    core = paley(7);
  } else {
    throw Error(ErrorCode::base_invalid, "gk with k >= 4 requires a base tournament");
  }
  validate_gk_base(core, k);

  const Digraph blown = blow_up(core, t);
  const Digraph second = semi_regular_tournament(layout.sizes[1]);
  const Digraph third = semi_regular_tournament(layout.sizes[2]);
  const int s1 = layout.sizes[0];
  const int s2 = layout.sizes[1];
  const int n = layout.order();
  DigraphBuilder b(n);
  // A shrunk V_1 drops the highest-index copy of the blow-up.
  for (const auto& [u, v] : blown.edges()) {
    if (u < s1 && v < s1) b.add_edge(u, v);
  }
  for (const auto& [u, v] : second.edges()) b.add_edge(s1 + u, s1 + v);
  for (const auto& [u, v] : third.edges()) b.add_edge(s1 + s2 + u, s1 + s2 + v);
  for (Vertex a = 0; a < s1; ++a) {
    for (Vertex c = s1; c < s1 + s2; ++c) b.add_edge(a, c);
  }
  for (Vertex c = s1; c < s1 + s2; ++c) {
    for (Vertex d = s1 + s2; d < n; ++d) b.add_edge(c, d);
  }
  for (Vertex d = s1 + s2; d < n; ++d) {
    for (Vertex a = 0; a < s1; ++a) b.add_edge(d, a);
  }
  return b.build();
}

Digraph random_tournament(int n, std::uint64_t seed) {
  if (n < 1) bad_params("random_tournament needs n >= 1");
  Rng rng(seed);
  DigraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.coin()) {
        b.add_edge(i, j);
      } else {
        b.add_edge(j, i);
      }
    }
  }
  return b.build();
}

int rk_base_order(int k, bool* clamped) {
  if (k < 2) bad_params("rk_random needs k >= 2");
  const double nominal = std::ceil(std::pow(2.0, (k - 5) / 2.0));
  if (nominal > kVertexCap) bad_params("rk_random base order exceeds vertex cap");
  int t = static_cast<int>(nominal);
  const bool raised = t < 3;
  if (raised) t = 3;
  if (clamped != nullptr) *clamped = raised;
  return t;
}

Digraph balanced_blow_up(const Digraph& g, int n) {
  const int parts = g.order();
  if (parts < 1 || n < parts) bad_params("balanced blow-up needs n >= |g| >= 1");
  std::vector<int> start(static_cast<std::size_t>(parts) + 1, 0);
  for (int i = 0; i < parts; ++i) {
    const int size = n / parts + (i < n % parts ? 1 : 0);
    start[static_cast<std::size_t>(i) + 1] = start[static_cast<std::size_t>(i)] + size;
  }
  DigraphBuilder b(n);
  for (const auto& [u, v] : g.edges()) {
    for (int x = start[static_cast<std::size_t>(u)]; x < start[static_cast<std::size_t>(u) + 1]; ++x) {
      for (int y = start[static_cast<std::size_t>(v)]; y < start[static_cast<std::size_t>(v) + 1]; ++y) {
        b.add_edge(x, y);
      }
    }
  }
  return b.build();
}

RkSample rk_random(int k, int n, std::uint64_t seed, int retries) {
  RkSample sample;
  sample.base_order = rk_base_order(k, &sample.clamped);
  if (n < sample.base_order) bad_params("rk_random needs n >= base order");
  if (retries < 1) bad_params("rk_random needs retries >= 1");
  for (int attempt = 0; attempt < retries; ++attempt) {
    Digraph candidate = random_tournament(
        sample.base_order, substream_seed(seed, static_cast<std::uint64_t>(attempt)));
    if (!contains_transitive(candidate, k + 1)) {
      sample.attempts = attempt + 1;
      sample.graph = balanced_blow_up(candidate, n);
      sample.base = std::move(candidate);
      return sample;
    }
  }
  throw Error(ErrorCode::retries_exhausted,
              "no transitive-free base tournament after " + std::to_string(retries) +
                  " samples");
}

Digraph d_r(int r) {
  if (r < 1) bad_params("d_r needs r >= 1");
  const int n = 3 * r;
  DigraphBuilder b(n);
  for (int c = 0; c < 3; ++c) {
    const int lo = c * r;
    const int next = ((c + 1) % 3) * r;
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) b.add_edge(lo + i, lo + j);
      for (int j = 0; j < r; ++j) b.add_edge(lo + i, next + j);
    }
  }
  return b.build();
}

Digraph f_r(int r) {
  if (r < 1) bad_params("f_r needs r >= 1");
  long long size = 3;
  for (int i = 1; i < r; ++i) size *= 3;
  if (size > kVertexCap) throw Error(ErrorCode::bad_params, "f_r exceeds vertex cap");
  if (r == 1) return power_cycle(1, 3);
  const Digraph inner = f_r(r - 1);
  const int s = inner.order();
  DigraphBuilder b(3 * s);
  for (int block = 0; block < 3; ++block) {
    const int lo = block * s;
    const int next = ((block + 1) % 3) * s;
    for (const auto& [u, v] : inner.edges()) b.add_edge(lo + u, lo + v);
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < s; ++j) b.add_edge(lo + i, next + j);
    }
  }
  return b.build();
}

}  // namespace powham
