#include "powham/vertex_set.hpp"

#include <algorithm>

#include "powham/error.hpp"

namespace powham {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::self_loop: return "SelfLoop";
    case ErrorCode::vertex_out_of_range: return "VertexOutOfRange";
    case ErrorCode::duplicate_edge: return "DuplicateEdge";
    case ErrorCode::vertex_cap_exceeded: return "VertexCapExceeded";
    case ErrorCode::bad_params: return "BadParams";
    case ErrorCode::base_invalid: return "BaseInvalid";
    case ErrorCode::not_a_permutation: return "NotAPermutation";
    case ErrorCode::not_a_tournament: return "NotATournament";
    case ErrorCode::bad_length: return "BadLength";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::infeasible_scan: return "InfeasibleScan";
    case ErrorCode::retries_exhausted: return "RetriesExhausted";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::io_error: return "IoError";
  }
  return "Unknown";
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) {
    if (v < 0 || v >= universe) {
      throw Error(ErrorCode::vertex_out_of_range, "vertex outside set universe");
    }
    insert(v);
  }
}

VertexSet::VertexSet(int universe, std::span<const Word> words)
    : universe_(universe), words_(words.begin(), words.end()) {
  words_.resize(words_for(universe), 0);
  clear_tail();
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.clear_tail();
  return s;
}

void VertexSet::clear_tail() noexcept {
  const int rem = universe_ % kWordBits;
  if (rem != 0 && !words_.empty()) {
    words_.back() &= (Word{1} << rem) - 1;
  }
}

int VertexSet::size() const noexcept {
  int total = 0;
  for (Word w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

Vertex VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<Vertex>(w * kWordBits +
                                 static_cast<std::size_t>(std::countr_zero(words_[w])));
    }
  }
  return -1;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet out(*this);
  for (Word& w : out.words_) w = ~w;
  out.clear_tail();
  return out;
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::size_t VertexSetHash::operator()(const VertexSet& s) const noexcept {
  std::size_t h = static_cast<std::size_t>(s.universe()) * 0x9E3779B97F4A7C15ull;
  for (Word w : s.words()) {
    h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace powham
