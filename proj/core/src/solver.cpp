#include "powham/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_set>

#include "powham/error.hpp"

namespace powham {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::found: return "FOUND";
    case Outcome::exhausted: return "EXHAUSTED";
    case Outcome::budget: return "BUDGET";
  }
  return "EXHAUSTED";
}

std::string_view to_string(PowerMode m) { return m == PowerMode::cycle ? "cycle" : "path"; }

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Node and wall-clock accounting shared by the backtracking searches.
class BudgetGuard {
 public:
  explicit BudgetGuard(SearchBudget budget) : budget_(budget), start_(Clock::now()) {}

  /// Counts one node; returns false once the budget is spent.
  bool tick() {
    ++nodes_;
    if (budget_.max_nodes != 0 && nodes_ > budget_.max_nodes) {
      exceeded_ = true;
    } else if (budget_.max_millis != 0 && (nodes_ & 0xFFF) == 0 &&
               millis_since(start_) > static_cast<double>(budget_.max_millis)) {
      exceeded_ = true;
    }
    return !exceeded_;
  }
  bool exceeded() const { return exceeded_; }
  std::uint64_t nodes() const { return nodes_; }
  double elapsed_ms() const { return millis_since(start_); }

 private:
  SearchBudget budget_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

inline bool test_bit(std::span<const Word> row, Vertex v) {
  return (row[static_cast<std::size_t>(v) / kWordBits] >> (static_cast<unsigned>(v) % kWordBits)) & 1u;
}
inline void set_bit(std::span<Word> row, Vertex v) {
  row[static_cast<std::size_t>(v) / kWordBits] |= Word{1} << (static_cast<unsigned>(v) % kWordBits);
}
inline void clear_bit(std::span<Word> row, Vertex v) {
  row[static_cast<std::size_t>(v) / kWordBits] &= ~(Word{1} << (static_cast<unsigned>(v) % kWordBits));
}

template <typename Fn>
void for_each_bit(std::span<const Word> row, Fn&& fn) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    Word bits = row[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      bits &= bits - 1;
      if (!fn(static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(b)))) return;
    }
  }
}

inline int popcount_and(std::span<const Word> a, std::span<const Word> b) {
  int total = 0;
  for (std::size_t w = 0; w < a.size(); ++w) total += std::popcount(a[w] & b[w]);
  return total;
}

/// Insert-only open-addressing set of fixed-width keys with a hard memory cap.
/// The all-zero key marks an empty slot, so callers must never insert it.
/// Used to remember search states proven dead.
class DeadStateTable {
 public:
  DeadStateTable(std::size_t key_words, std::size_t max_bytes) : key_words_(key_words) {
    max_slots_ = std::max<std::size_t>(1024, max_bytes / (key_words_ * sizeof(Word)));
    resize(1024);
  }

  bool contains(std::span<const Word> key) const {
    const std::size_t mask = slots_ - 1;
    for (std::size_t i = hash(key) & mask;; i = (i + 1) & mask) {
      const Word* slot = keys_.data() + i * key_words_;
      if (is_empty(slot)) return false;
      if (std::equal(key.begin(), key.end(), slot)) return true;
    }
  }

  void insert(std::span<const Word> key) {
    // Load factor 3/4.
    if ((size_ + 1) * 4 > slots_ * 3) {
      if (slots_ * 2 > max_slots_) return;
      resize(slots_ * 2);
    }
    place(key);
  }

 private:
  bool is_empty(const Word* slot) const {
    for (std::size_t w = 0; w < key_words_; ++w)
      if (slot[w] != 0) return false;
    return true;
  }

  std::size_t hash(std::span<const Word> key) const {
    std::uint64_t h = 0x243F6A8885A308D3ull;
    for (Word w : key) {
      h ^= w;
      h *= 0x9E3779B97F4A7C15ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  void place(std::span<const Word> key) {
    const std::size_t mask = slots_ - 1;
    for (std::size_t i = hash(key) & mask;; i = (i + 1) & mask) {
      Word* slot = keys_.data() + i * key_words_;
      if (is_empty(slot)) {
        std::copy(key.begin(), key.end(), slot);
        ++size_;
        return;
      }
      if (std::equal(key.begin(), key.end(), slot)) return;
    }
  }

  void resize(std::size_t slots) {
    std::vector<Word> old_keys = std::move(keys_);
    const std::size_t old_slots = slots_;
    slots_ = slots;
    keys_.assign(slots_ * key_words_, 0);
    size_ = 0;
    for (std::size_t i = 0; i < old_slots; ++i) {
      const Word* slot = old_keys.data() + i * key_words_;
      if (!is_empty(slot)) place({slot, key_words_});
    }
  }

  std::size_t key_words_;
  std::size_t slots_ = 0;
  std::size_t max_slots_ = 0;
  std::size_t size_ = 0;
  std::vector<Word> keys_;
};


/// Backtracking search for a spanning k-path or k-cycle.
class PowerSearch {
 public:
  PowerSearch(const Digraph& g, int k, PowerMode mode, SearchBudget budget)
      : g_(g), n_(g.order()), w_(g.words()), k_(k), mode_(mode), guard_(budget),
        cand_(static_cast<std::size_t>(n_ + 1) * w_, 0), used_(w_, 0),
        avail_(w_, 0), order_(static_cast<std::size_t>(n_), -1),
        window_slots_(mode == PowerMode::cycle ? 2 * static_cast<std::size_t>(k) - 1
                                               : static_cast<std::size_t>(k)),
        id_bits_(static_cast<std::size_t>(std::bit_width(static_cast<unsigned>(n_)))),
        key_((static_cast<std::size_t>(n_) + window_slots_ * id_bits_ + 63) / 64, 0),
        dead_(key_.size(), budget.memo_bytes) {
    if (mode_ == PowerMode::cycle) {
      // Rotations are equivalent; the lowest out-degree root branches least.
      for (Vertex v = 1; v < n_; ++v)
        if (g_.out_degree(v) < g_.out_degree(root_)) root_ = v;
    }
    find_twins();
  }

  SearchReport run() {
    SearchReport report;
    bool found = false;
    if (mode_ == PowerMode::cycle) {
      found = place(root_, 0);
    } else {
      for (Vertex v = 0; v < n_ && !found && !guard_.exceeded(); ++v) {
        if (twin_prev_[static_cast<std::size_t>(v)] < 0) found = place(v, 0);
      }
    }
    report.nodes_expanded = guard_.nodes();
    report.elapsed_ms = guard_.elapsed_ms();
    if (found) {
      report.outcome = Outcome::found;
      report.witness = order_;
    } else {
      report.outcome = guard_.exceeded() ? Outcome::budget : Outcome::exhausted;
    }
    return report;
  }

 private:
  std::span<Word> cand(int depth) {
    return {cand_.data() + static_cast<std::size_t>(depth) * w_, w_};
  }

  /// Places v at position pos and explores the rest. Returns true on success.
  bool place(Vertex v, int pos) {
    if (!guard_.tick()) return false;
    order_[static_cast<std::size_t>(pos)] = v;
    set_bit(used_, v);
    const int len = pos + 1;
    bool ok = false;
    if (len == n_) {
      ok = true;
    } else if (feasible(len)) {
      build_key(len);
      if (!dead_.contains(key_)) {
        ok = extend(len);
        if (!ok && !guard_.exceeded()) {
          // Children overwrite key_; rebuild it from the restored state.
          build_key(len);
          dead_.insert(key_);
        }
      }
    }
    if (!ok) {
      clear_bit(used_, v);
      order_[static_cast<std::size_t>(pos)] = -1;
    }
    return ok;
  }

  bool extend(int len) {
    auto c = cand(len);
    for (std::size_t w = 0; w < w_; ++w) c[w] = ~used_[w];
    const int rem = n_ % kWordBits;
    if (rem != 0) c[w_ - 1] &= (Word{1} << rem) - 1;
    for (int j = 1; j <= std::min(k_, len); ++j) {
      const auto row = g_.out_row(order_[static_cast<std::size_t>(len - j)]);
      for (std::size_t w = 0; w < w_; ++w) c[w] &= row[w];
    }
    if (mode_ == PowerMode::cycle) {
      for (int j = std::max(1, n_ - len); j <= k_; ++j) {
        const auto row = g_.in_row(order_[static_cast<std::size_t>(len + j - n_)]);
        for (std::size_t w = 0; w < w_; ++w) c[w] &= row[w];
      }
    }
    bool found = false;
    for_each_bit(std::span<const Word>(c), [&](Vertex next) {
      const Vertex prev = twin_prev_[static_cast<std::size_t>(next)];
      if (prev >= 0 && !test_bit(used_, prev)) return true;
      found = place(next, len);
      return !found && !guard_.exceeded();
    });
    return found;
  }

  // Twins (equal in- and out-rows) are interchangeable in any solution, so
  // each twin class is placed in ascending id order. The cycle root is
  // exempt since its position is fixed.
  void find_twins() {
    twin_prev_.assign(static_cast<std::size_t>(n_), -1);
    std::vector<Vertex> ids(static_cast<std::size_t>(n_));
    std::iota(ids.begin(), ids.end(), 0);
    auto rows_less = [&](Vertex a, Vertex b) {
      const auto oa = g_.out_row(a), ob = g_.out_row(b);
      if (!std::equal(oa.begin(), oa.end(), ob.begin()))
        return std::lexicographical_compare(oa.begin(), oa.end(), ob.begin(), ob.end());
      const auto ia = g_.in_row(a), ib = g_.in_row(b);
      if (!std::equal(ia.begin(), ia.end(), ib.begin()))
        return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
      return a < b;
    };
    auto same_rows = [&](Vertex a, Vertex b) {
      const auto oa = g_.out_row(a), ob = g_.out_row(b);
      const auto ia = g_.in_row(a), ib = g_.in_row(b);
      return std::equal(oa.begin(), oa.end(), ob.begin()) &&
             std::equal(ia.begin(), ia.end(), ib.begin());
    };
    std::sort(ids.begin(), ids.end(), rows_less);
    Vertex prev = -1;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const Vertex v = ids[i];
      if (mode_ == PowerMode::cycle && v == root_) continue;
      if (prev >= 0 && same_rows(prev, v)) twin_prev_[static_cast<std::size_t>(v)] = prev;
      prev = v;
    }
  }

  /// Necessary conditions on the unused vertices.
  bool feasible(int len) {
    const int unused = n_ - len;
    // avail_ = unused + last min(k, len) placed.
    for (std::size_t w = 0; w < w_; ++w) avail_[w] = ~used_[w];
    const int rem = n_ % kWordBits;
    if (rem != 0) avail_[w_ - 1] &= (Word{1} << rem) - 1;
    std::vector<Word>& unused_set = scratch_unused_;
    unused_set.assign(avail_.begin(), avail_.end());
    for (int j = 1; j <= std::min(k_, len); ++j) set_bit(avail_, order_[static_cast<std::size_t>(len - j)]);

    if (mode_ == PowerMode::cycle) {
      scratch_succ_.assign(unused_set.begin(), unused_set.end());
      for (int i = 0; i < std::min(k_, len); ++i) set_bit(scratch_succ_, order_[static_cast<std::size_t>(i)]);
      bool ok = true;
      for_each_bit(std::span<const Word>(unused_set), [&](Vertex u) {
        if (popcount_and(g_.in_row(u), avail_) < k_ ||
            popcount_and(g_.out_row(u), scratch_succ_) < k_) {
          ok = false;
        }
        return ok;
      });
      if (!ok) return false;
      // Neighbours at distance two: some predecessor must reach some successor.
      if (k_ >= 2) {
        for_each_bit(std::span<const Word>(unused_set), [&](Vertex u) {
          const auto in_u = g_.in_row(u);
          const auto out_u = g_.out_row(u);
          for (std::size_t w = 0; w < w_; ++w) scratch_out_[w] = out_u[w] & scratch_succ_[w];
          bool bridged = false;
          for (std::size_t w = 0; w < w_ && !bridged; ++w) {
            Word bits = in_u[w] & avail_[w];
            while (bits != 0 && !bridged) {
              const int b = std::countr_zero(bits);
              bits &= bits - 1;
              const auto x = static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(b));
              bridged = popcount_and(g_.out_row(x), scratch_out_) > 0;
            }
          }
          ok = bridged;
          return ok;
        });
        if (!ok) return false;
      }
      // The first placed vertices still need predecessors at the end.
      for (int i = 0; i < std::min(k_, len); ++i) {
        const int needed = std::min(k_ - i, unused);
        if (popcount_and(g_.in_row(order_[static_cast<std::size_t>(i)]), unused_set) < needed) {
          return false;
        }
      }
      return true;
    }

    const int need_in = std::min(k_, len);
    std::vector<int> short_out(static_cast<std::size_t>(k_) + 1, 0);
    bool ok = true;
    for_each_bit(std::span<const Word>(unused_set), [&](Vertex u) {
      if (popcount_and(g_.in_row(u), avail_) < need_in) {
        ok = false;
        return false;
      }
      const int outs = popcount_and(g_.out_row(u), unused_set);
      if (outs < k_) ++short_out[static_cast<std::size_t>(outs)];
      return true;
    });
    if (!ok) return false;
    // A vertex with fewer than j unused out-neighbours must sit among the
    // final j positions.
    int below = 0;
    for (int j = 1; j <= k_; ++j) {
      below += short_out[static_cast<std::size_t>(j - 1)];
      if (below > std::min(j, unused)) return false;
    }
    return true;
  }

  // Bit stream: used set, then (cycle mode) order[1..k-1], then the last k
  // vertices, each as id + 1 in id_bits_ bits.
  void build_key(int len) {
    std::fill(key_.begin(), key_.end(), 0);
    for (std::size_t w = 0; w < w_; ++w) key_[w] = used_[w];
    std::size_t bit = static_cast<std::size_t>(n_);
    auto push = [&](Vertex v) {
      const auto value = static_cast<Word>(v + 1);
      const std::size_t word = bit / 64;
      const std::size_t off = bit % 64;
      key_[word] |= value << off;
      if (off + id_bits_ > 64) key_[word + 1] |= value >> (64 - off);
      bit += id_bits_;
    };
    const int window = std::min(k_, len);
    if (mode_ == PowerMode::cycle) {
      for (int i = 1; i < std::min(k_, len); ++i) push(order_[static_cast<std::size_t>(i)]);
      for (int i = std::max(1, std::min(k_, len)); i < k_; ++i) push(-1);
    }
    for (int j = window; j >= 1; --j) push(order_[static_cast<std::size_t>(len - j)]);
  }

  const Digraph& g_;
  int n_;
  std::size_t w_;
  int k_;
  PowerMode mode_;
  BudgetGuard guard_;
  std::vector<Word> cand_;
  std::vector<Word> used_;
  std::vector<Word> avail_;
  std::vector<Word> scratch_unused_;
  std::vector<Word> scratch_succ_;
  std::vector<Word> scratch_out_ = std::vector<Word>(w_, 0);
  std::vector<Vertex> order_;
  std::size_t window_slots_;
  std::size_t id_bits_;
  std::vector<Word> key_;
  DeadStateTable dead_;
  Vertex root_ = 0;
  std::vector<Vertex> twin_prev_;
};

}  // namespace

bool is_k_path(const Digraph& g, std::span<const Vertex> seq, int k) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (int j = 1; j <= k && i + static_cast<std::size_t>(j) < seq.size(); ++j) {
      if (!g.has_edge(seq[i], seq[i + static_cast<std::size_t>(j)])) return false;
    }
  }
  return true;
}

bool validate_certificate(const Digraph& g, const CycleCertificate& cert, PowerMode mode) {
  const int n = g.order();
  if (static_cast<int>(cert.order.size()) != n) {
    throw Error(ErrorCode::not_a_permutation, "certificate length differs from vertex count");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Vertex v : cert.order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::not_a_permutation, "certificate order is not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (cert.k < 1) return false;
  if (mode == PowerMode::path) return is_k_path(g, cert.order, cert.k);
  if (n < cert.k + 1) return false;
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= cert.k; ++j) {
      if (!g.has_edge(cert.order[static_cast<std::size_t>(i)],
                      cert.order[static_cast<std::size_t>((i + j) % n)])) {
        return false;
      }
    }
  }
  return true;
}

bool validate_embedding(const Digraph& pattern, const Digraph& host, std::span<const Vertex> map) {
  if (static_cast<int>(map.size()) != pattern.order()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(host.order()), false);
  for (Vertex h : map) {
    if (h < 0 || h >= host.order() || seen[static_cast<std::size_t>(h)]) return false;
    seen[static_cast<std::size_t>(h)] = true;
  }
  for (const auto& [u, v] : pattern.edges()) {
    if (!host.has_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)])) return false;
  }
  return true;
}

SearchReport find_ham_power(const Digraph& g, int k, PowerMode mode, SearchBudget budget) {
  if (k < 1) throw Error(ErrorCode::bad_params, "power k must be >= 1");
  if (mode == PowerMode::cycle && g.order() < k + 1) {
    throw Error(ErrorCode::bad_params, "a k-cycle needs at least k + 1 vertices");
  }
  if (g.order() == 0) {
    SearchReport empty;
    empty.outcome = Outcome::found;
    return empty;
  }
  return PowerSearch(g, k, mode, budget).run();
}

namespace {

class EmbedSearch {
 public:
  EmbedSearch(const Digraph& pattern, const Digraph& host, SearchBudget budget)
      : p_(pattern), h_(host), w_(host.words()), guard_(budget),
        map_(static_cast<std::size_t>(pattern.order()), -1),
        cand_(static_cast<std::size_t>(pattern.order() + 1) * w_, 0),
        used_(w_, 0) {
    plan_order();
    feasible_.assign(static_cast<std::size_t>(p_.order()) * w_, 0);
    for (Vertex pv = 0; pv < p_.order(); ++pv) {
      for (Vertex hv = 0; hv < h_.order(); ++hv) {
        if (h_.out_degree(hv) >= p_.out_degree(pv) && h_.in_degree(hv) >= p_.in_degree(pv)) {
          set_bit(feasible_row(pv), hv);
        }
      }
    }
  }

  SearchReport run() {
    SearchReport report;
    const bool found = descend(0);
    report.nodes_expanded = guard_.nodes();
    report.elapsed_ms = guard_.elapsed_ms();
    if (found) {
      report.outcome = Outcome::found;
      report.witness = map_;
    } else {
      report.outcome = guard_.exceeded() ? Outcome::budget : Outcome::exhausted;
    }
    return report;
  }

 private:
  std::span<Word> feasible_row(Vertex pv) {
    return {feasible_.data() + static_cast<std::size_t>(pv) * w_, w_};
  }

  // Highest-degree vertex first, then greedily the vertex with the most
  // already-ordered neighbours (ties by degree, then id).
  void plan_order() {
    const int n = p_.order();
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    for (int step = 0; step < n; ++step) {
      Vertex best = -1;
      int best_links = -1;
      int best_degree = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        int links = 0;
        for (Vertex u : plan_) {
          if (p_.has_edge(u, v) || p_.has_edge(v, u)) ++links;
        }
        const int degree = p_.degree(v);
        if (links > best_links || (links == best_links && degree > best_degree)) {
          best = v;
          best_links = links;
          best_degree = degree;
        }
      }
      placed[static_cast<std::size_t>(best)] = true;
      plan_.push_back(best);
    }
  }

  bool descend(int depth) {
    if (depth == p_.order()) return true;
    const Vertex pv = plan_[static_cast<std::size_t>(depth)];
    std::span<Word> c{cand_.data() + static_cast<std::size_t>(depth) * w_, w_};
    const auto feas = feasible_row(pv);
    for (std::size_t w = 0; w < w_; ++w) c[w] = feas[w] & ~used_[w];
    for (int d = 0; d < depth; ++d) {
      const Vertex q = plan_[static_cast<std::size_t>(d)];
      const Vertex hq = map_[static_cast<std::size_t>(q)];
      if (p_.has_edge(q, pv)) {
        const auto row = h_.out_row(hq);
        for (std::size_t w = 0; w < w_; ++w) c[w] &= row[w];
      }
      if (p_.has_edge(pv, q)) {
        const auto row = h_.in_row(hq);
        for (std::size_t w = 0; w < w_; ++w) c[w] &= row[w];
      }
    }
    bool found = false;
    for_each_bit(std::span<const Word>(c), [&](Vertex hv) {
      if (!guard_.tick()) return false;
      map_[static_cast<std::size_t>(pv)] = hv;
      set_bit(used_, hv);
      found = descend(depth + 1);
      if (!found) {
        clear_bit(used_, hv);
        map_[static_cast<std::size_t>(pv)] = -1;
      }
      return !found && !guard_.exceeded();
    });
    return found;
  }

  const Digraph& p_;
  const Digraph& h_;
  std::size_t w_;
  BudgetGuard guard_;
  std::vector<Vertex> plan_;
  std::vector<Vertex> map_;
  std::vector<Word> cand_;
  std::vector<Word> used_;
  std::vector<Word> feasible_;
};

}  // namespace

SearchReport embed(const Digraph& pattern, const Digraph& host, SearchBudget budget) {
  if (pattern.order() > host.order()) {
    SearchReport none;
    none.outcome = Outcome::exhausted;
    return none;
  }
  return EmbedSearch(pattern, host, budget).run();
}

namespace {

/// Enumerates sequences v_1..v_k with v_i -> v_j for all i < j. The callback
/// returns false to stop.
template <typename Fn>
void enumerate_transitive(const Digraph& g, int k, Fn&& fn) {
  const std::size_t w = g.words();
  std::vector<Word> cand(static_cast<std::size_t>(k + 1) * w, 0);
  std::vector<Vertex> seq;
  seq.reserve(static_cast<std::size_t>(k));
  bool stop = false;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      if (!fn(std::span<const Vertex>(seq))) stop = true;
      return;
    }
    std::span<Word> c{cand.data() + static_cast<std::size_t>(depth) * w, w};
    if (depth == 0) {
      std::fill(c.begin(), c.end(), ~Word{0});
      const int rem = g.order() % kWordBits;
      if (rem != 0) c[w - 1] &= (Word{1} << rem) - 1;
    } else {
      std::span<const Word> prev{cand.data() + static_cast<std::size_t>(depth - 1) * w, w};
      const auto row = g.out_row(seq.back());
      for (std::size_t i = 0; i < w; ++i) c[i] = prev[i] & row[i];
    }
    for_each_bit(std::span<const Word>(c), [&](Vertex v) {
      seq.push_back(v);
      self(self, depth + 1);
      seq.pop_back();
      return !stop;
    });
  };
  if (k >= 1 && g.order() > 0) rec(rec, 0);
}

}  // namespace

bool contains_transitive(const Digraph& g, int k) {
  if (k < 1) throw Error(ErrorCode::bad_params, "k must be >= 1");
  bool found = false;
  enumerate_transitive(g, k, [&](std::span<const Vertex>) {
    found = true;
    return false;
  });
  return found;
}

TransitiveReport greedy_transitive(const Digraph& g, int k, const VertexSet& within) {
  if (k < 1) throw Error(ErrorCode::bad_params, "k must be >= 1");
  TransitiveReport report;
  std::vector<Vertex> sources;
  std::vector<Vertex> sinks;
  VertexSet pool = within;
  for (int step = 0; step < k; ++step) {
    ++report.nodes_expanded;
    const Vertex v = pool.first();
    if (v < 0) {
      report.greedy_stuck = true;
      report.outcome = Outcome::exhausted;
      return report;
    }
    pool.erase(v);
    if (step == k - 1) {
      sources.push_back(v);
      break;
    }
    VertexSet outs = g.out_neighbors(v) & pool;
    VertexSet ins = g.in_neighbors(v) & pool;
    if (outs.size() >= ins.size()) {
      sources.push_back(v);
      pool = std::move(outs);
    } else {
      sinks.push_back(v);
      pool = std::move(ins);
    }
  }
  report.witness = sources;
  report.witness.insert(report.witness.end(), sinks.rbegin(), sinks.rend());
  report.outcome = Outcome::found;
  report.vertex_set_count = 1;
  report.ordered_count = 1;
  return report;
}

TransitiveReport find_transitive(const Digraph& g, int k, TransitiveMode mode) {
  if (k < 1) throw Error(ErrorCode::bad_params, "k must be >= 1");
  if (mode == TransitiveMode::greedy) {
    return greedy_transitive(g, k, VertexSet::full(g.order()));
  }
  TransitiveReport report;
  if (mode == TransitiveMode::one) {
    enumerate_transitive(g, k, [&](std::span<const Vertex> seq) {
      ++report.nodes_expanded;
      report.witness.assign(seq.begin(), seq.end());
      return false;
    });
    report.outcome = report.witness.empty() ? Outcome::exhausted : Outcome::found;
    return report;
  }
  std::unordered_set<VertexSet, VertexSetHash> sets;
  enumerate_transitive(g, k, [&](std::span<const Vertex> seq) {
    ++report.ordered_count;
    if (report.witness.empty()) report.witness.assign(seq.begin(), seq.end());
    VertexSet s(g.order());
    for (Vertex v : seq) s.insert(v);
    sets.insert(std::move(s));
    return true;
  });
  report.nodes_expanded = report.ordered_count;
  report.vertex_set_count = sets.size();
  report.outcome = report.ordered_count > 0 ? Outcome::found : Outcome::exhausted;
  return report;
}

std::vector<std::vector<Vertex>> transitive_copies(const Digraph& g, int k) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> keyed;
  enumerate_transitive(g, k, [&](std::span<const Vertex> seq) {
    VertexSet s(g.order());
    for (Vertex v : seq) s.insert(v);
    if (seen.insert(s).second) {
      keyed.emplace_back(s.members(), std::vector<Vertex>(seq.begin(), seq.end()));
    }
    return true;
  });
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::vector<Vertex>> out;
  out.reserve(keyed.size());
  for (auto& entry : keyed) out.push_back(std::move(entry.second));
  return out;
}

SearchReport transitive_factor(const Digraph& g, int k, SearchBudget budget) {
  if (k < 1 || g.order() % k != 0) {
    throw Error(ErrorCode::bad_params, "k must divide the vertex count");
  }
  BudgetGuard guard(budget);
  const int n = g.order();
  const auto copies = transitive_copies(g, k);
  // Bucket by smallest member: the lowest uncovered vertex is always the
  // smallest member of the block that covers it.
  std::vector<std::vector<std::size_t>> by_min(static_cast<std::size_t>(n));
  std::vector<VertexSet> sets;
  sets.reserve(copies.size());
  for (std::size_t i = 0; i < copies.size(); ++i) {
    VertexSet s(n);
    for (Vertex v : copies[i]) s.insert(v);
    by_min[static_cast<std::size_t>(s.first())].push_back(i);
    sets.push_back(std::move(s));
  }
  VertexSet covered(n);
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self) -> bool {
    const Vertex v = covered.complement().first();
    if (v < 0) return true;
    for (std::size_t idx : by_min[static_cast<std::size_t>(v)]) {
      if (sets[idx].intersects(covered)) continue;
      if (!guard.tick()) return false;
      covered |= sets[idx];
      chosen.push_back(idx);
      if (self(self)) return true;
      chosen.pop_back();
      covered -= sets[idx];
      if (guard.exceeded()) return false;
    }
    return false;
  };
  SearchReport report;
  const bool found = rec(rec);
  report.nodes_expanded = guard.nodes();
  report.elapsed_ms = guard.elapsed_ms();
  if (found) {
    report.outcome = Outcome::found;
    for (std::size_t idx : chosen) report.parts.push_back(copies[idx]);
  } else {
    report.outcome = guard.exceeded() ? Outcome::budget : Outcome::exhausted;
  }
  return report;
}

Digraph tournament_from_index(int n, std::uint64_t index) {
  DigraphBuilder b(n);
  int p = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++p) {
      if ((index >> p) & 1u) {
        b.add_edge(i, j);
      } else {
        b.add_edge(j, i);
      }
    }
  }
  return b.build();
}

namespace {

struct ScanChunk {
  std::uint64_t checked = 0;
  std::uint64_t hits = 0;
  std::uint64_t first_hit = ~std::uint64_t{0};
  bool hits_regular = true;
};

/// Runs `probe(index) -> bool hit` over [0, total) split into contiguous
/// chunks; merging is order-independent so the result is deterministic.
template <typename Probe, typename OnHit>
ScanChunk parallel_scan(std::uint64_t total, int jobs, bool stop_at_first, Probe&& probe,
                        OnHit&& on_hit) {
  jobs = std::max(1, jobs);
  std::vector<ScanChunk> chunks(static_cast<std::size_t>(jobs));
  auto work = [&](int j) {
    const std::uint64_t lo = total * static_cast<std::uint64_t>(j) / static_cast<std::uint64_t>(jobs);
    const std::uint64_t hi = total * static_cast<std::uint64_t>(j + 1) / static_cast<std::uint64_t>(jobs);
    ScanChunk& c = chunks[static_cast<std::size_t>(j)];
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      ++c.checked;
      if (probe(idx)) {
        ++c.hits;
        c.first_hit = std::min(c.first_hit, idx);
        if (!on_hit(idx)) c.hits_regular = false;
        if (stop_at_first) break;
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }
  ScanChunk merged;
  for (const auto& c : chunks) {
    merged.checked += c.checked;
    merged.hits += c.hits;
    merged.first_hit = std::min(merged.first_hit, c.first_hit);
    merged.hits_regular = merged.hits_regular && c.hits_regular;
  }
  return merged;
}

bool is_regular(const Digraph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.out_degree(v) != g.in_degree(v)) return false;
  }
  return true;
}

}  // namespace

RamseyResult ramsey_scan(int k, int n_max, int jobs) {
  if (k < 1 || n_max < 1) throw Error(ErrorCode::bad_params, "ramsey_scan needs k, n_max >= 1");
  if (n_max * (n_max - 1) / 2 > kScanMaxPairs) {
    throw Error(ErrorCode::infeasible_scan, "ramsey_scan limited to n_max <= 7");
  }
  RamseyResult result;
  for (int n = 1; n <= n_max; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    const auto merged = parallel_scan(
        total, jobs, false,
        [&](std::uint64_t idx) { return !contains_transitive(tournament_from_index(n, idx), k); },
        [&](std::uint64_t idx) { return is_regular(tournament_from_index(n, idx)); });
    result.tournaments_checked += merged.checked;
    result.largest_scanned = n;
    if (merged.hits == 0) {
      result.value = n;
      result.witness.reset();
      result.free_count = 0;
      result.free_all_regular = true;
      return result;
    }
    result.witness_index = merged.first_hit;
    result.witness = tournament_from_index(n, merged.first_hit);
    result.free_count = merged.hits;
    result.free_all_regular = merged.hits_regular;
  }
  return result;
}

TilingResult tiling_scan(int k, int n, int jobs) {
  if (k < 1 || n < 1 || n % k != 0) throw Error(ErrorCode::bad_params, "k must divide n");
  if (n * (n - 1) / 2 > kScanMaxPairs) {
    throw Error(ErrorCode::infeasible_scan, "tiling_scan limited to 2^21 tournaments");
  }
  TilingResult result;
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  const auto merged = parallel_scan(
      total, jobs, false,
      [&](std::uint64_t idx) {
        return transitive_factor(tournament_from_index(n, idx), k).outcome != Outcome::found;
      },
      [](std::uint64_t) { return true; });
  result.tournaments_checked = merged.checked;
  if (merged.hits > 0) {
    result.all_tile = false;
    result.counterexample_index = merged.first_hit;
    result.counterexample = tournament_from_index(n, merged.first_hit);
  }
  return result;
}

bool isomorphic_small(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const int n = a.order();
  if (n > 9) throw Error(ErrorCode::bad_params, "isomorphic_small limited to 9 vertices");
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const auto edges = a.edges();
  do {
    bool ok = true;
    for (const auto& [u, v] : edges) {
      if (!b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace powham
