#include "powham_cli/cli.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>

#include "CLI11.hpp"
#include "powham/absorbing.hpp"
#include "powham/constructions.hpp"
#include "powham/error.hpp"
#include "powham/heuristic.hpp"
#include "powham/io.hpp"
#include "powham/solver.hpp"
#include "powham_cli/checks.hpp"
#include "powham_cli/report.hpp"

namespace powham::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Options {
  int jobs = 0;
  std::string out;

  // gen
  std::string family;
  int k = 0, n = 0, t = 0, r = 0, l = 0, q = 0;
  std::uint64_t seed = 0;
  int retries = 1000;
  std::string base;
  std::string graph_out;
  std::string dot_out;
  std::string sidecar;

  // shared
  std::string graph;
  std::string mode = "cycle";
  std::uint64_t max_nodes = 0;
  std::uint64_t max_millis = 0;
  std::string task;

  // embed
  std::string pattern;
  int cycle_power = 0, cycle_length = 0;

  // connect
  std::vector<int> from, to;
  std::vector<std::string> avoid_tokens;
  int max_len = 20;
  int max_inner = -1;

  // absorb
  std::string kind = "digraph";
  int vertex = -1;
  std::vector<int> path;
  std::uint64_t trials = 1000;
  std::vector<int> set;
  std::string delta = "1/2";
  std::string side = "out";

  // heuristic
  HeuristicParams heuristic;
  std::string reservoir_fraction = "1/20";
  std::string seed_range;

  // check
  std::vector<std::string> properties;
  std::string report;
};

int resolve_jobs(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("POWHAM_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

std::vector<std::uint64_t> maybe_seed(bool used, std::uint64_t seed) {
  if (!used) return {};
  return {seed};
}

Json power_witness(int k, PowerMode mode, const std::vector<Vertex>& order) {
  return {{"kind", mode == PowerMode::cycle ? "power_cycle" : "power_path"}, {"k", k}, {"order", order}};
}

int exit_for(const std::string& outcome) {
  return (outcome == "BUDGET" || outcome == "NotDetermined") ? kExitUndetermined : kExitAnswered;
}

bool randomized(Family f) { return f == Family::random_tournament || f == Family::rk_random; }

void run_gen(const Options& o, Report& rep) {
  const auto family = parse_family(o.family);
  if (!family) throw Error(ErrorCode::bad_params, "unknown family '" + o.family + "'");
  ConstructionSpec spec;
  spec.family = *family;
  spec.k = o.k;
  spec.n = o.n;
  spec.t = o.t;
  spec.r = o.r;
  spec.l = o.l;
  spec.q = o.q;
  spec.seed = o.seed;
  spec.retries = o.retries;
  if (!o.base.empty()) spec.base = parse_graph(std::filesystem::path(o.base));
  rep.params = {{"family", o.family}, {"k", o.k}, {"n", o.n}, {"t", o.t}, {"r", o.r},
                {"l", o.l},           {"q", o.q}, {"retries", o.retries}};
  if (!o.base.empty()) rep.params["base"] = o.base;
  const auto t0 = Clock::now();
  std::optional<RkSample> rk;
  if (*family == Family::rk_random) rk = rk_random(spec.k, spec.n, spec.seed, spec.retries);
  const Digraph g = rk ? rk->graph : build(spec);
  rep.elapsed_ms = ms_since(t0);
  serialize_graph(g, std::filesystem::path(o.graph_out));
  if (!o.dot_out.empty()) export_dot(g, std::filesystem::path(o.dot_out));
  const auto prof = degree_profile(g);
  rep.outcome = "GENERATED";
  rep.seeds = maybe_seed(randomized(*family), o.seed);
  rep.fingerprint = fingerprint_hex(g);
  rep.details = {{"path", o.graph_out},
                 {"order", g.order()},
                 {"edges", g.edge_count()},
                 {"class", to_string(classify(g))},
                 {"min_semi_degree", prof.min_semi_degree},
                 {"min_total_degree", prof.min_total_degree}};
  if (rk) {
    rep.details["base_order"] = rk->base_order;
    rep.details["base_order_clamped"] = rk->clamped;
    rep.details["sampling_attempts"] = rk->attempts;
  }
  if (!o.sidecar.empty()) {
    const Json side = {{"family", o.family},
                       {"params", rep.params},
                       {"n", g.order()},
                       {"delta0", prof.min_semi_degree},
                       {"delta_total", prof.min_total_degree},
                       {"classify", to_string(classify(g))}};
    std::ofstream f(o.sidecar);
    if (!f || !(f << side.dump(2) << "\n")) throw Error(ErrorCode::io_error, "cannot write " + o.sidecar);
  }
}

PowerMode parse_mode(const std::string& m) {
  if (m == "cycle") return PowerMode::cycle;
  if (m == "path") return PowerMode::path;
  throw Error(ErrorCode::bad_params, "mode must be cycle or path");
}

void run_solve(const Options& o, Report& rep) {
  const Digraph g = parse_graph(std::filesystem::path(o.graph));
  const PowerMode mode = parse_mode(o.mode);
  rep.params = {{"graph", o.graph}, {"k", o.k}, {"mode", o.mode},
                {"max_nodes", o.max_nodes}, {"max_millis", o.max_millis}};
  rep.fingerprint = fingerprint_hex(g);
  SearchBudget budget;
  budget.max_nodes = o.max_nodes;
  budget.max_millis = o.max_millis;
  const auto res = find_ham_power(g, o.k, mode, budget);
  rep.outcome = std::string(to_string(res.outcome));
  if (res.outcome == Outcome::found) rep.witness = power_witness(o.k, mode, res.witness);
  rep.nodes_expanded = res.nodes_expanded;
  rep.elapsed_ms = res.elapsed_ms;
}

void run_embed(const Options& o, Report& rep) {
  const Digraph host = parse_graph(std::filesystem::path(o.graph));
  Digraph pattern;
  if (!o.pattern.empty()) {
    pattern = parse_graph(std::filesystem::path(o.pattern));
  } else if (o.cycle_power > 0 && o.cycle_length > 0) {
    pattern = power_cycle(o.cycle_power, o.cycle_length);
  } else {
    throw Error(ErrorCode::bad_params, "give --pattern FILE or --cycle-power K --cycle-length L");
  }
  rep.params = {{"host", o.graph}, {"max_nodes", o.max_nodes}, {"max_millis", o.max_millis}};
  if (!o.pattern.empty()) rep.params["pattern"] = o.pattern;
  else rep.params["pattern"] = {{"cycle_power", o.cycle_power}, {"cycle_length", o.cycle_length}};
  rep.fingerprint = fingerprint_hex(host);
  SearchBudget budget;
  budget.max_nodes = o.max_nodes;
  budget.max_millis = o.max_millis;
  const auto res = embed(pattern, host, budget);
  rep.outcome = std::string(to_string(res.outcome));
  if (res.outcome == Outcome::found)
    rep.witness = Json{{"kind", "embedding"}, {"map", res.witness}, {"pattern", edges_json(pattern)}};
  rep.nodes_expanded = res.nodes_expanded;
  rep.elapsed_ms = res.elapsed_ms;
}

void run_scan(const Options& o, Report& rep, int jobs) {
  rep.params = {{"task", o.task}, {"k", o.k}, {"n", o.n}, {"jobs", jobs}};
  const auto t0 = Clock::now();
  if (o.task == "ramsey") {
    const auto res = ramsey_scan(o.k, o.n, jobs);
    rep.nodes_expanded = res.tournaments_checked;
    rep.details = {{"largest_scanned", res.largest_scanned}, {"tournaments_checked", res.tournaments_checked}};
    if (res.value) {
      rep.outcome = "VALUE";
      rep.details["value"] = *res.value;
    } else {
      rep.outcome = "NotDetermined";
      rep.details["lower_bound_exclusive"] = res.largest_scanned;
      rep.details["free_count"] = res.free_count;
      rep.details["free_all_regular"] = res.free_all_regular;
      if (res.witness) {
        rep.details["witness_index"] = res.witness_index;
        rep.witness = Json{{"kind", "tk_free_tournament"}, {"k", o.k}, {"graph", edges_json(*res.witness)}};
      }
    }
  } else if (o.task == "tiling") {
    const auto res = tiling_scan(o.k, o.n, jobs);
    rep.nodes_expanded = res.tournaments_checked;
    rep.outcome = res.all_tile ? "AllTile" : "Counterexample";
    rep.details = {{"tournaments_checked", res.tournaments_checked}};
    if (res.counterexample) {
      rep.details["counterexample_index"] = res.counterexample_index;
      rep.witness = Json{{"kind", "no_factor_tournament"}, {"k", o.k}, {"graph", edges_json(*res.counterexample)}};
    }
  } else if (o.task == "transitive" || o.task == "factor") {
    if (o.graph.empty()) throw Error(ErrorCode::bad_params, "this task needs a GRAPH argument");
    const Digraph g = parse_graph(std::filesystem::path(o.graph));
    rep.params["graph"] = o.graph;
    rep.fingerprint = fingerprint_hex(g);
    if (o.task == "transitive") {
      TransitiveMode mode = TransitiveMode::one;
      if (o.mode == "count") mode = TransitiveMode::count;
      else if (o.mode == "greedy") mode = TransitiveMode::greedy;
      else if (o.mode != "one" && o.mode != "cycle") throw Error(ErrorCode::bad_params, "mode must be one, count or greedy");
      rep.params["mode"] = std::string(mode == TransitiveMode::one ? "one" : mode == TransitiveMode::count ? "count" : "greedy");
      const auto res = find_transitive(g, o.k, mode);
      rep.outcome = res.greedy_stuck ? "STUCK" : std::string(to_string(res.outcome));
      rep.nodes_expanded = res.nodes_expanded;
      if (mode == TransitiveMode::count) {
        rep.details = {{"vertex_sets", res.vertex_set_count}, {"ordered", res.ordered_count}};
      }
      if (!res.witness.empty()) rep.witness = Json{{"kind", "transitive"}, {"order", res.witness}};
    } else {
      SearchBudget budget;
      budget.max_nodes = o.max_nodes;
      budget.max_millis = o.max_millis;
      const auto res = transitive_factor(g, o.k, budget);
      rep.outcome = std::string(to_string(res.outcome));
      rep.nodes_expanded = res.nodes_expanded;
      if (res.outcome == Outcome::found) {
        Json parts = Json::array();
        for (const auto& p : res.parts) parts.push_back(p);
        rep.witness = Json{{"kind", "factor"}, {"parts", parts}};
      }
    }
  } else {
    throw Error(ErrorCode::bad_params, "task must be ramsey, tiling, transitive or factor");
  }
  rep.elapsed_ms = ms_since(t0);
}

VertexSet to_set(int n, const std::vector<int>& vs) {
  VertexSet s(n);
  for (int v : vs) {
    if (v < 0 || v >= n) throw Error(ErrorCode::vertex_out_of_range, fmt::format("vertex {} out of range", v));
    s.insert(v);
  }
  return s;
}

// Each token is a vertex id or the path of a file of whitespace-separated ids.
std::vector<int> parse_vertex_tokens(const std::vector<std::string>& tokens) {
  std::vector<int> out;
  for (const auto& tok : tokens) {
    if (!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos) {
      out.push_back(std::stoi(tok));
      continue;
    }
    std::ifstream in(tok);
    if (!in) throw Error(ErrorCode::io_error, "cannot open vertex list " + tok);
    std::string word;
    while (in >> word) {
      if (word.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorCode::parse_error, "bad vertex id '" + word + "' in " + tok);
      out.push_back(std::stoi(word));
    }
  }
  return out;
}

void run_connect(const Options& o, Report& rep) {
  const Digraph g = parse_graph(std::filesystem::path(o.graph));
  const int k = o.k > 0 ? o.k : 2;
  const std::vector<int> avoid_list = parse_vertex_tokens(o.avoid_tokens);
  rep.params = {{"graph", o.graph}, {"k", k}, {"from", o.from}, {"to", o.to}, {"avoid", avoid_list},
                {"max_len", o.max_len}, {"max_inner", o.max_inner}, {"max_nodes", o.max_nodes}};
  rep.fingerprint = fingerprint_hex(g);
  const VertexSet avoid = to_set(g.order(), avoid_list);
  const std::uint64_t nodes = o.max_nodes > 0 ? o.max_nodes : kDefaultConnectNodes;
  const auto t0 = Clock::now();
  ConnectResult res;
  if (k == 2 && o.max_inner < 0) {
    if (o.from.size() != 2 || o.to.size() != 2) throw Error(ErrorCode::bad_params, "--from and --to need two vertices");
    res = connect_2path(g, o.from[0], o.from[1], o.to[0], o.to[1], avoid, o.max_len, nodes);
  } else {
    const int inner = o.max_inner >= 0 ? o.max_inner : std::max(0, o.max_len - 2 * k);
    res = connect_ktuples(g, o.from, o.to, avoid, k, inner, nodes);
  }
  rep.elapsed_ms = ms_since(t0);
  rep.nodes_expanded = res.nodes_expanded;
  rep.outcome = res.outcome == ConnectOutcome::found ? "FOUND"
                : res.outcome == ConnectOutcome::budget ? "BUDGET" : "NotFound";
  if (res.outcome == ConnectOutcome::found)
    rep.witness = Json{{"kind", "k_path"}, {"k", k}, {"from", o.from}, {"to", o.to}, {"sequence", res.path}};
}

void run_absorb(Options o, Report& rep) {
  if (o.task.empty()) o.task = o.path.empty() ? "sample" : "check";
  const auto t0 = Clock::now();
  rep.params = {{"task", o.task}, {"k", o.k}};
  if (o.task == "threshold") {
    const Fraction d = Fraction::parse(o.delta);
    rep.params["delta"] = d.str();
    rep.params["n"] = o.n;
    rep.outcome = "VALUE";
    rep.details = {{"threshold", goodness_threshold(o.k, d, o.n)}};
    rep.elapsed_ms = ms_since(t0);
    return;
  }
  if (o.graph.empty()) throw Error(ErrorCode::bad_params, "this task needs a GRAPH argument");
  const Digraph g = parse_graph(std::filesystem::path(o.graph));
  rep.params["graph"] = o.graph;
  rep.fingerprint = fingerprint_hex(g);
  const auto kind = parse_absorber_kind(o.kind);
  if (!kind) throw Error(ErrorCode::bad_params, "kind must be digraph, k or stretched");
  if (o.task == "check") {
    rep.params["kind"] = o.kind;
    rep.params["vertex"] = o.vertex;
    rep.params["path"] = o.path;
    const bool ok = is_absorber(g, o.path, o.vertex, o.k, *kind);
    rep.outcome = ok ? "ABSORBER" : "NotAbsorber";
    if (ok)
      rep.witness = Json{{"kind", "absorber"}, {"absorber_kind", o.kind}, {"k", o.k},
                         {"vertex", o.vertex}, {"path", o.path}};
  } else if (o.task == "sample") {
    rep.params["kind"] = o.kind;
    rep.params["vertex"] = o.vertex;
    rep.params["trials"] = o.trials;
    rep.seeds = {o.seed};
    const auto s = sample_absorbers(g, o.vertex, o.k, *kind, o.trials, o.seed);
    rep.outcome = "SAMPLED";
    rep.nodes_expanded = s.trials;
    rep.details = {{"trials", s.trials}, {"hits", s.hits}, {"hit_rate", s.hit_rate}};
    if (!s.absorbers.empty())
      rep.witness = Json{{"kind", "absorber"}, {"absorber_kind", o.kind}, {"k", o.k},
                         {"vertex", o.vertex}, {"path", s.absorbers.front()}};
  } else if (o.task == "goodness" || o.task == "subtournament") {
    const Fraction d = Fraction::parse(o.delta);
    const Side side = o.side == "in" ? Side::in : Side::out;
    if (o.side != "in" && o.side != "out") throw Error(ErrorCode::bad_params, "side must be out or in");
    rep.params["delta"] = d.str();
    rep.params["side"] = o.side;
    rep.params["set"] = o.set;
    const VertexSet t = to_set(g.order(), o.set);
    if (o.task == "goodness") {
      const auto res = goodness(g, t, o.k, d, side);
      rep.outcome = res.good ? "GOOD" : "NotGood";
      rep.details = {{"common", res.common}, {"threshold", res.threshold}};
    } else {
      const auto res = good_sub_tournament(g, t, o.k, d, side);
      rep.outcome = res.outcome == SubTournamentOutcome::found       ? "FOUND"
                    : res.outcome == SubTournamentOutcome::not_found ? "NotFound"
                                                                     : "LemmaViolation";
      rep.details = {{"subset", res.subset}, {"common", res.common}};
    }
  } else {
    throw Error(ErrorCode::bad_params, "task must be check, sample, goodness, subtournament or threshold");
  }
  rep.elapsed_ms = ms_since(t0);
}

std::vector<std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Error(ErrorCode::bad_params, "--seeds expects A..B");
  try {
    const std::uint64_t lo = std::stoull(text.substr(0, dots));
    const std::uint64_t hi = std::stoull(text.substr(dots + 2));
    if (hi < lo || hi - lo > 100000) throw Error(ErrorCode::bad_params, "bad seed range " + text);
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = lo; s <= hi; ++s) out.push_back(s);
    return out;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::bad_params, "bad seed range " + text);
  }
}

// Runs seeds in batches of `jobs`; the lowest seed with a certificate wins.
HeuristicResult run_seeds(const Digraph& g, int k, const HeuristicParams& base,
                          const std::vector<std::uint64_t>& seeds, int jobs,
                          std::vector<HeuristicResult>& all) {
  const std::size_t batch = static_cast<std::size_t>(std::max(1, jobs));
  for (std::size_t i = 0; i < seeds.size(); i += batch) {
    std::vector<std::future<HeuristicResult>> futs;
    for (std::size_t j = i; j < std::min(seeds.size(), i + batch); ++j) {
      HeuristicParams p = base;
      p.seed = seeds[j];
      futs.push_back(std::async(std::launch::async, [&g, k, p] { return heuristic_ham_power(g, k, p); }));
    }
    for (auto& f : futs) all.push_back(f.get());
    for (const auto& r : all)
      if (r.success()) return r;
  }
  return all.back();
}

void run_heuristic(const Options& o, Report& rep, int jobs) {
  const Digraph g = parse_graph(std::filesystem::path(o.graph));
  HeuristicParams p = o.heuristic;
  p.seed = o.seed;
  p.reservoir_fraction = Fraction::parse(o.reservoir_fraction);
  const int k = o.k > 0 ? o.k : 2;
  rep.params = {{"graph", o.graph},
                {"k", k},
                {"absorber_target", p.absorber_target},
                {"reservoir_fraction", p.reservoir_fraction.str()},
                {"connector_max_vertices", p.connector_max_vertices},
                {"connector_node_budget", p.connector_node_budget},
                {"cover_restarts", p.cover_restarts},
                {"max_retries", p.max_retries},
                {"sampling_trials", p.sampling_trials}};
  const std::vector<std::uint64_t> seeds =
      o.seed_range.empty() ? std::vector<std::uint64_t>{o.seed} : parse_seed_range(o.seed_range);
  if (!o.seed_range.empty()) rep.params["seeds"] = o.seed_range;
  rep.seeds.clear();
  rep.fingerprint = fingerprint_hex(g);
  const auto t0 = Clock::now();
  std::vector<HeuristicResult> runs;
  const auto res = run_seeds(g, k, p, seeds, jobs, runs);
  rep.elapsed_ms = ms_since(t0);
  rep.outcome = res.success() ? "SUCCESS" : "Failure";
  if (res.success()) rep.witness = power_witness(k, PowerMode::cycle, res.certificate->order);
  Json attempts = Json::array();
  for (const auto& a : res.attempts) {
    attempts.push_back({{"seed", a.seed},
                        {"failure", to_string(a.failure)},
                        {"gadgets", a.gadgets},
                        {"absorbing_path_vertices", a.absorbing_path_vertices},
                        {"registry_entries", a.registry_entries},
                        {"reservoir_size", a.reservoir_size},
                        {"cover_paths", a.cover_paths},
                        {"cover_leftover", a.cover_leftover},
                        {"dissolved_paths", a.dissolved_paths},
                        {"absorbed", a.absorbed},
                        {"timings_ms",
                         {{"absorbing", a.timings.absorbing_ms},
                          {"reservoir", a.timings.reservoir_ms},
                          {"cover", a.timings.cover_ms},
                          {"connect", a.timings.connect_ms},
                          {"absorb", a.timings.absorb_ms}}}});
    rep.seeds.push_back(a.seed);
  }
  std::size_t total_attempts = 0;
  for (const auto& r : runs) total_attempts += r.attempts.size();
  rep.nodes_expanded = total_attempts;
  rep.details["seeds_tried"] = runs.size();
  rep.details["failure_stage"] = to_string(res.failure);
  rep.details["attempts"] = attempts;
}

void run_check_command(const Options& o, Report& rep, int jobs, std::ostream& err) {
  const auto t0 = Clock::now();
  if (!o.report.empty()) {
    std::ifstream in(o.report);
    if (!in) throw Error(ErrorCode::io_error, "cannot open " + o.report);
    Json stored;
    try {
      stored = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::parse_error, std::string("report is not JSON: ") + e.what());
    }
    std::optional<Digraph> g;
    if (!o.graph.empty()) g = parse_graph(std::filesystem::path(o.graph));
    const auto res = validate_report(stored, g);
    rep.params = {{"report", o.report}, {"graph", o.graph}};
    if (g) rep.fingerprint = fingerprint_hex(*g);
    rep.outcome = res.fingerprint_matches && res.witness_valid ? "VALID" : "INVALID";
    rep.details = {{"fingerprint_matches", res.fingerprint_matches},
                   {"witness_valid", res.witness_valid},
                   {"message", res.message}};
    rep.elapsed_ms = ms_since(t0);
    return;
  }
  if (o.properties.empty()) throw Error(ErrorCode::bad_params, "give --property NAME or --report FILE");
  std::vector<int> ids;
  for (const auto& p : o.properties) {
    if (p == "all") {
      for (const auto& c : check_catalog()) ids.push_back(c.id);
      continue;
    }
    const auto id = resolve_check(p);
    if (!id) throw Error(ErrorCode::bad_params, "unknown property '" + p + "'");
    ids.push_back(*id);
  }
  rep.params = {{"properties", o.properties}, {"jobs", jobs}};
  Json results = Json::array();
  bool all = true;
  for (int id : ids) {
    const CheckResult r = powham::cli::run_check(id, jobs);
    all = all && r.pass;
    err << fmt::format("{} {:>2} {} ({:.1f}s)\n", r.pass ? "PASS" : "FAIL", r.id, r.name, r.seconds);
    results.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass},
                       {"detail", r.detail}, {"seconds", r.seconds}});
  }
  rep.outcome = all ? "PASS" : "FAIL";
  rep.details = {{"checks", results}};
  rep.elapsed_ms = ms_since(t0);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"powham: powers of Hamilton cycles in digraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--jobs", o.jobs, "Worker threads (default: POWHAM_JOBS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "Write the JSON report here instead of stdout");

  auto* gen = app.add_subcommand("gen", "Generate a graph family member");
  gen->add_option("--family", o.family, "Family name")->required();
  gen->add_option("--k", o.k);
  gen->add_option("--n", o.n);
  gen->add_option("--t", o.t);
  gen->add_option("--r", o.r);
  gen->add_option("--l", o.l);
  gen->add_option("--q", o.q);
  gen->add_option("--seed", o.seed);
  gen->add_option("--retries", o.retries);
  gen->add_option("--base", o.base, "Base tournament file (gk)");
  gen->add_option("-o,--graph-out", o.graph_out, "Edge-list output file")->required();
  gen->add_option("--dot", o.dot_out, "Also write a DOT file");
  gen->add_option("--emit-report", o.sidecar, "Also write a JSON summary of the graph");

  auto* solve = app.add_subcommand("solve", "Exact search for the k-th power of a Hamilton cycle or path");
  solve->add_option("graph", o.graph)->required();
  solve->add_option("--k", o.k)->required();
  solve->add_option("--mode", o.mode)->check(CLI::IsMember({"cycle", "path"}));
  solve->add_option("--max-nodes,--budget-nodes", o.max_nodes);
  solve->add_option("--max-millis,--budget-ms", o.max_millis);

  auto* emb = app.add_subcommand("embed", "Subdigraph embedding search");
  emb->add_option("host,--host", o.graph)->required();
  emb->add_option("--pattern", o.pattern);
  emb->add_option("--cycle-power", o.cycle_power);
  emb->add_option("--cycle-length", o.cycle_length);
  emb->add_option("--max-nodes,--budget-nodes", o.max_nodes);
  emb->add_option("--max-millis,--budget-ms", o.max_millis);

  auto* scan = app.add_subcommand("scan", "Exhaustive tournament scans and transitive searches");
  scan->add_option("--task", o.task)->required()->check(CLI::IsMember({"ramsey", "tiling", "transitive", "factor"}));
  scan->add_option("--k", o.k)->required();
  scan->add_option("--n", o.n);
  scan->add_option("graph", o.graph);
  scan->add_option("--mode", o.mode);
  scan->add_option("--max-nodes", o.max_nodes);
  scan->add_option("--max-millis", o.max_millis);

  auto* conn = app.add_subcommand("connect", "Connect two k-tuples by a short k-path");
  conn->add_option("graph", o.graph)->required();
  conn->add_option("--k", o.k);
  conn->add_option("--from", o.from)->required()->delimiter(',');
  conn->add_option("--to", o.to)->required()->delimiter(',');
  conn->add_option("--avoid", o.avoid_tokens, "Vertex list or a file of vertex ids")->delimiter(',');
  conn->add_option("--max-len", o.max_len);
  conn->add_option("--max-inner", o.max_inner);
  conn->add_option("--max-nodes", o.max_nodes);

  auto* absorb = app.add_subcommand("absorb", "Absorber and goodness utilities");
  absorb->add_option("--task", o.task, "Defaults to check with --path, else sample")->check(
      CLI::IsMember({"check", "sample", "goodness", "subtournament", "threshold"}));
  absorb->add_option("graph", o.graph);
  absorb->add_option("--k", o.k)->required();
  absorb->add_option("--kind", o.kind);
  absorb->add_option("--vertex", o.vertex);
  absorb->add_option("--path", o.path)->delimiter(',');
  absorb->add_option("--trials", o.trials);
  absorb->add_option("--seed", o.seed);
  absorb->add_option("--set", o.set)->delimiter(',');
  absorb->add_option("--delta", o.delta);
  absorb->add_option("--side", o.side);
  absorb->add_option("--n", o.n);

  auto* heur = app.add_subcommand("heuristic", "Absorbing-connecting heuristic");
  heur->add_option("graph", o.graph)->required();
  heur->add_option("--k", o.k);
  heur->add_option("--seed", o.seed);
  heur->add_option("--seeds", o.seed_range, "Seed range A..B; lowest validated seed wins");
  heur->add_option("--absorber-target", o.heuristic.absorber_target);
  heur->add_option("--reservoir,--reservoir-fraction", o.reservoir_fraction);
  heur->add_option("--connector-max", o.heuristic.connector_max_vertices);
  heur->add_option("--connector-nodes", o.heuristic.connector_node_budget);
  heur->add_option("--cover-restarts", o.heuristic.cover_restarts);
  heur->add_option("--max-retries", o.heuristic.max_retries);
  heur->add_option("--sampling-trials", o.heuristic.sampling_trials);

  auto* check = app.add_subcommand("check", "Run acceptance properties or re-validate a report");
  check->add_option("--property", o.properties, "Property id or name, or 'all'");
  check->add_option("--report", o.report, "Stored JSON report to re-validate");
  check->add_option("--graph", o.graph, "Graph the stored report refers to");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitAnswered;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const int jobs = resolve_jobs(o.jobs);
  Report rep;
  rep.argv = args;
  try {
    if (gen->parsed()) { rep.command = "gen"; run_gen(o, rep); }
    else if (solve->parsed()) { rep.command = "solve"; run_solve(o, rep); }
    else if (emb->parsed()) { rep.command = "embed"; run_embed(o, rep); }
    else if (scan->parsed()) { rep.command = "scan"; run_scan(o, rep, jobs); }
    else if (conn->parsed()) { rep.command = "connect"; run_connect(o, rep); }
    else if (absorb->parsed()) { rep.command = "absorb"; run_absorb(o, rep); }
    else if (heur->parsed()) { rep.command = "heuristic"; run_heuristic(o, rep, jobs); }
    else if (check->parsed()) { rep.command = "check"; run_check_command(o, rep, jobs, err); }
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string text = rep.to_json().dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out);
    if (!f || !(f << text)) {
      err << "error [IoError]: cannot write " << o.out << "\n";
      return kExitUsage;
    }
  }
  return exit_for(rep.outcome);
}

int dispatch(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return dispatch(args, std::cout, std::cerr);
}

}  // namespace powham::cli
