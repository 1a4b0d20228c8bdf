#include "powham_cli/checks.hpp"

#include <fmt/format.h>

#include <chrono>
#include <set>

#include "brute_force.hpp"
#include "powham/absorbing.hpp"
#include "powham/constructions.hpp"
#include "powham/error.hpp"
#include "powham/heuristic.hpp"
#include "powham/random.hpp"
#include "powham/solver.hpp"

namespace powham::cli {

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "FAILED " + what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

Digraph random_digraph(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  DigraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && rng.unit() < p) b.add_edge(u, v);
  return b.build();
}

Verdict check_ramsey(int jobs) {
  Verdict o;
  const auto r2 = ramsey_scan(2, 7, jobs);
  const auto r3 = ramsey_scan(3, 7, jobs);
  const auto r4 = ramsey_scan(4, 7, jobs);
  o.expect(r2.value == 2, "r(2) = 2");
  o.expect(r3.value == 4, "r(3) = 4");
  o.expect(!r4.value && r4.largest_scanned == 7, "r(4) > 7");
  o.expect(r4.witness.has_value() && brute::isomorphic(*r4.witness, paley(7)),
           "T4-free witness is paley(7)");
  // paley(7) has 21 automorphisms, hence 7!/21 = 240 labelled copies.
  o.expect(r4.free_count == 240 && r4.free_all_regular,
           "every T4-free 7-tournament is a labelled paley(7)");
  o.note(fmt::format("r(2)={} r(3)={} T4-free 7-tournaments={} checked={}",
                     r2.value.value_or(-1), r3.value.value_or(-1), r4.free_count,
                     r4.tournaments_checked));
  return o;
}

Verdict check_tiling(int jobs) {
  Verdict o;
  const auto six = tiling_scan(3, 6, jobs);
  const auto three = tiling_scan(3, 3, jobs);
  o.expect(six.all_tile, "every 6-tournament has a T3-factor");
  o.expect(!three.all_tile && three.counterexample &&
               brute::isomorphic(*three.counterexample, power_cycle(1, 3)),
           "C3 is the 3-vertex counterexample");
  if (three.counterexample) {
    o.expect(!brute::has_transitive_factor(*three.counterexample, 3),
             "oracle confirms the counterexample");
  }
  o.note(fmt::format("n=6 checked={} n=3 checked={}", six.tournaments_checked,
                     three.tournaments_checked));
  return o;
}

Verdict check_extremal_total() {
  Verdict o;
  int cases = 0;
  for (int k = 2; k <= 3; ++k) {
    for (int n = k + 4; n <= 14; ++n) {
      const Digraph g = extremal_total(k, n);
      const int r = n % (k + 3);
      const int c = ((k + 2) * n + k + 2) / (k + 3);  // ceil((k+2)n/(k+3))
      const int expected = 2 * c - (r == k + 2 ? 4 : (r == k || r == k + 1) ? 3 : 2);
      const int delta = brute::min_total_degree(g);
      o.expect(delta == expected, fmt::format("delta(k={}, n={}) = {} (got {})", k, n, expected, delta));
      const auto cyc = find_ham_power(g, k, PowerMode::cycle);
      o.expect(cyc.outcome == powham::Outcome::exhausted, fmt::format("k={} n={} cycle EXHAUSTED", k, n));
      const auto path = find_ham_power(g, k, PowerMode::path);
      o.expect(path.outcome == powham::Outcome::found &&
                   validate_certificate(g, {k, path.witness}, PowerMode::path),
               fmt::format("k={} n={} path FOUND", k, n));
      ++cases;
    }
  }
  o.note(fmt::format("{} (k, n) cases", cases));
  return o;
}

Verdict check_gk() {
  Verdict o;
  const Digraph g1 = gk(2, 1);
  const Digraph g2 = gk(2, 2);
  const int d1 = brute::min_semi_degree(g1);
  const int d2 = brute::min_semi_degree(g2);
  o.expect(g1.order() == 11 && 11 * (d1 + 2) >= 5 * 11, "gk(2,1): delta0 >= 5n/11 - 2");
  o.expect(g2.order() == 22 && d2 == 8, "gk(2,2): delta0 = 8");
  SearchBudget budget;
  budget.max_nodes = 1'000'000'000;
  const auto s1 = find_ham_power(g1, 2, PowerMode::cycle, budget);
  const auto s2 = find_ham_power(g2, 2, PowerMode::cycle, budget);
  o.expect(s1.outcome == powham::Outcome::exhausted, "gk(2,1) cycle EXHAUSTED");
  o.expect(s2.outcome == powham::Outcome::exhausted, "gk(2,2) cycle EXHAUSTED");
  o.note(fmt::format("delta0 {} / {}, nodes {} / {}", d1, d2, s1.nodes_expanded, s2.nodes_expanded));
  return o;
}

Verdict check_tournaments() {
  Verdict o;
  const Digraph f2 = f_r(2);
  bool regular = true;
  for (Vertex v = 0; v < f2.order(); ++v)
    regular = regular && f2.out_degree(v) == 4 && f2.in_degree(v) == 4;
  o.expect(f2.order() == 9 && regular && brute::min_semi_degree(f2) == 4, "f_r(2) regular, delta0 = 4");
  o.expect(embed(power_cycle(2, 5), f2).outcome == powham::Outcome::exhausted, "C5^2 not in f_r(2)");
  const auto d2 = embed(power_cycle(2, 6), d_r(2));
  o.expect(d2.outcome == powham::Outcome::found &&
               validate_embedding(power_cycle(2, 6), d_r(2), d2.witness),
           "C6^2 in d_r(2)");
  o.expect(embed(power_cycle(2, 5), d_r(4)).outcome == powham::Outcome::exhausted, "C5^2 not in d_r(4)");
  int cases = 0;
  for (int k = 1; k <= 3; ++k) {
    for (int l = k + 1; l <= 9; ++l) {
      const Digraph pattern = power_cycle(k, l);
      const Digraph host = d_r(l);
      const auto rep = embed(pattern, host);
      const bool want = l >= 3 * k;
      const bool got = rep.outcome == powham::Outcome::found && validate_embedding(pattern, host, rep.witness);
      o.expect(rep.outcome != powham::Outcome::budget && got == want,
               fmt::format("C_{}^{} in d_r({}) iff l >= 3k", l, k, l));
      ++cases;
    }
  }
  o.note(fmt::format("{} (k, l) cases", cases));
  return o;
}

Verdict check_clique_minus_matching() {
  Verdict o;
  for (int k = 2; k <= 4; ++k) {
    const auto yes = embed(power_cycle(k, k + 2), clique_minus_matching(k + 2));
    o.expect(yes.outcome == powham::Outcome::found &&
                 validate_embedding(power_cycle(k, k + 2), clique_minus_matching(k + 2), yes.witness),
             fmt::format("C_{}^{} embeds (k={})", k + 2, k, k));
    const auto no = embed(power_cycle(k, k + 1), clique_minus_matching(k + 1));
    o.expect(no.outcome == powham::Outcome::exhausted, fmt::format("C_{}^{} absent (k={})", k + 1, k, k));
  }
  return o;
}

Verdict check_oracle() {
  Verdict o;
  int mismatches = 0;
  int total = 0;
  // Every pair of 4 vertices: absent, i->j or j->i.
  for (int code = 0; code < 729; ++code) {
    DigraphBuilder b(4);
    int rest = code;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const int s = rest % 3;
        rest /= 3;
        if (s == 1) b.add_edge(i, j);
        if (s == 2) b.add_edge(j, i);
      }
    }
    const Digraph g = b.build();
    const auto rep = find_ham_power(g, 1, PowerMode::cycle);
    const bool got = rep.outcome == powham::Outcome::found;
    if (got != brute::has_ham_power(g, 1, true) ||
        (got && !validate_certificate(g, {1, rep.witness}, PowerMode::cycle)))
      ++mismatches;
    ++total;
  }
  for (std::uint64_t idx = 0; idx < 1024; ++idx) {
    const Digraph g = tournament_from_index(5, idx);
    const auto rep = find_ham_power(g, 2, PowerMode::cycle);
    const bool got = rep.outcome == powham::Outcome::found;
    if (got != brute::has_ham_power(g, 2, true) ||
        (got && !validate_certificate(g, {2, rep.witness}, PowerMode::cycle)))
      ++mismatches;
    ++total;
  }
  o.expect(mismatches == 0, fmt::format("{} mismatches", mismatches));
  o.note(fmt::format("{} graphs compared", total));
  return o;
}

Verdict check_connector() {
  Verdict o;
  constexpr int n = 30;
  int instances = 0;
  int found = 0;
  int invalid = 0;
  std::uint64_t stream = 0;
  while (instances < 100 && stream < 1'000'000) {
    const Digraph g = random_digraph(n, 0.85, substream_seed(2024, stream++));
    if (5 * degree_profile(g).min_total_degree < 8 * n) continue;
    Rng rng(substream_seed(4048, static_cast<std::uint64_t>(instances)));
    const auto edges = g.edges();
    Edge e1 = edges[rng.below(edges.size())];
    Edge e2;
    do {
      e2 = edges[rng.below(edges.size())];
    } while (e2.first == e1.first || e2.first == e1.second || e2.second == e1.first ||
             e2.second == e1.second);
    const auto r = connect_2path(g, e1.first, e1.second, e2.first, e2.second, VertexSet(n), 20);
    ++instances;
    if (r.outcome != ConnectOutcome::found) continue;
    ++found;
    const auto& p = r.path;
    const bool ok = p.size() <= 20 && p.size() >= 4 && p[0] == e1.first && p[1] == e1.second &&
                    p[p.size() - 2] == e2.first && p.back() == e2.second &&
                    brute::window_ok(g, p, 2, false) &&
                    static_cast<int>(std::set<Vertex>(p.begin(), p.end()).size()) ==
                        static_cast<int>(p.size());
    if (!ok) ++invalid;
  }
  o.expect(instances == 100, "100 instances pass the degree filter");
  o.expect(found >= 99, fmt::format("{} of {} connected", found, instances));
  o.expect(invalid == 0, fmt::format("{} invalid paths", invalid));
  o.note(fmt::format("found {}/{}; graphs sampled {}", found, instances, stream));
  return o;
}

Verdict check_heuristic() {
  Verdict o;
  HeuristicParams params;
  const Digraph kn = complete_digraph(100);
  const auto full = heuristic_ham_power(kn, 2, params);
  o.expect(full.success() && validate_certificate(kn, *full.certificate, PowerMode::cycle),
           "complete digraph n=100");
  int wins = 0;
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Digraph g = random_digraph(60, 0.9, substream_seed(9, s));
    params.seed = s;
    const auto r = heuristic_ham_power(g, 2, params);
    if (r.success() && validate_certificate(g, *r.certificate, PowerMode::cycle)) ++wins;
  }
  o.expect(wins >= 3, fmt::format("{} of 5 random seeds", wins));
  params.seed = 0;
  const auto ext = heuristic_ham_power(extremal_total(2, 100), 2, params);
  o.expect(!ext.success() && !ext.certificate, "extremal_total(2,100) fails");
  o.note(fmt::format("random wins {}/5; extremal failure stage {}", wins, to_string(ext.failure)));
  return o;
}

Verdict check_goodness() {
  Verdict o;
  const auto half = goodness_threshold(2, Fraction{1, 2}, 32);
  const auto third = goodness_threshold(2, Fraction{1, 3}, 32);
  o.expect(half == 1 && half == brute::goodness_threshold(2, 1, 2, 32), "threshold(2, 1/2, 32) = 1");
  o.expect(third == 0 && third == brute::goodness_threshold(2, 1, 3, 32), "threshold(2, 1/3, 32) = 0");
  o.note(fmt::format("thresholds {} and {}", half, third));
  return o;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = {
      {1, "ramsey"},         {2, "tiling"},     {3, "extremal-total"},
      {4, "gk"},             {5, "tournaments"}, {6, "clique-minus-matching"},
      {7, "oracle"},         {8, "connector"},  {9, "heuristic"},
      {10, "goodness"},
  };
  return catalog;
}

std::optional<int> resolve_check(std::string_view key) {
  for (const auto& c : check_catalog()) {
    if (key == c.name || key == std::to_string(c.id)) return c.id;
  }
  return std::nullopt;
}

CheckResult run_check(int id, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  Verdict o;
  switch (id) {
    case 1: o = check_ramsey(jobs); break;
    case 2: o = check_tiling(jobs); break;
    case 3: o = check_extremal_total(); break;
    case 4: o = check_gk(); break;
    case 5: o = check_tournaments(); break;
    case 6: o = check_clique_minus_matching(); break;
    case 7: o = check_oracle(); break;
    case 8: o = check_connector(); break;
    case 9: o = check_heuristic(); break;
    case 10: o = check_goodness(); break;
    default: throw Error(ErrorCode::bad_params, fmt::format("unknown check {}", id));
  }
  CheckResult r;
  r.id = id;
  for (const auto& c : check_catalog())
    if (c.id == id) r.name = std::string(c.name);
  r.pass = o.pass;
  r.detail = o.detail;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace powham::cli
