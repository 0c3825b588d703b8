#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nnsd/errors.hpp"

namespace nnsd {

using Word = std::uint64_t;

namespace bits {

inline constexpr int kWordBits = 64;

inline int word_count(int n) { return (n + kWordBits - 1) / kWordBits; }

inline bool test(std::span<const Word> row, int i) {
  return (row[std::size_t(i) / kWordBits] >> (i % kWordBits)) & Word(1);
}

inline void set(std::span<Word> row, int i) {
  row[std::size_t(i) / kWordBits] |= Word(1) << (i % kWordBits);
}

inline void clear(std::span<Word> row, int i) {
  row[std::size_t(i) / kWordBits] &= ~(Word(1) << (i % kWordBits));
}

inline int count(std::span<const Word> row) {
  int c = 0;
  for (Word w : row) c += std::popcount(w);
  return c;
}

inline int count_and(std::span<const Word> a, std::span<const Word> b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

inline bool disjoint(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return false;
  return true;
}

inline bool any(std::span<const Word> row) {
  for (Word w : row)
    if (w) return true;
  return false;
}

// Lowest set bit, or -1 when empty.
inline int first(std::span<const Word> row) {
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i]) return int(i * kWordBits + std::countr_zero(row[i]));
  return -1;
}

template <typename F>
inline void for_each(std::span<const Word> row, F&& f) {
  for (std::size_t i = 0; i < row.size(); ++i)
    for (Word w = row[i]; w; w &= w - 1) f(int(i * kWordBits + std::countr_zero(w)));
}

}  // namespace bits

// Immutable simple graph on vertices 0..n-1. Adjacency is stored as per-vertex
// bit rows of ceil(n/64) words, so closed-neighborhood counting in the solver
// inner loops is a handful of popcounts. Safe to share across threads.
class Graph {
 public:
  Graph(int n, std::span<const std::pair<int, int>> edge_pairs) {
    if (n < 1) throw BadParams("graph order must be at least 1, got " + std::to_string(n));
    n_ = n;
    words_ = bits::word_count(n);
    open_.assign(std::size_t(n) * words_, 0);
    closed_.assign(std::size_t(n) * words_, 0);
    degree_.assign(n, 0);
    for (auto [u, v] : edge_pairs) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw IndexOutOfRange("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ") with n = " + std::to_string(n));
      if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
      if (bits::test(open_row(u), v)) {
        had_duplicates_ = true;
        continue;
      }
      bits::set(mut_open(u), v);
      bits::set(mut_open(v), u);
      ++degree_[u];
      ++degree_[v];
      ++m_;
    }
    for (int v = 0; v < n; ++v) {
      auto c = mut_closed(v);
      auto o = open_row(v);
      std::copy(o.begin(), o.end(), c.begin());
      bits::set(c, v);
    }
  }

  int order() const { return n_; }
  int size() const { return m_; }
  int words() const { return words_; }
  bool had_duplicate_edges() const { return had_duplicates_; }

  bool adjacent(int u, int v) const { return bits::test(open_row(u), v); }
  int degree(int v) const { return degree_[v]; }

  int min_degree() const { return *std::min_element(degree_.begin(), degree_.end()); }
  int max_degree() const { return *std::max_element(degree_.begin(), degree_.end()); }

  std::optional<int> regular_degree() const {
    int d = degree_[0];
    for (int v : degree_)
      if (v != d) return std::nullopt;
    return d;
  }

  std::span<const Word> open_row(int v) const {
    return {open_.data() + std::size_t(v) * words_, std::size_t(words_)};
  }
  std::span<const Word> closed_row(int v) const {
    return {closed_.data() + std::size_t(v) * words_, std::size_t(words_)};
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    out.reserve(degree_[v]);
    bits::for_each(open_row(v), [&](int u) { out.push_back(u); });
    return out;
  }

  // Edge list sorted lexicographically with u < v.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      bits::for_each(open_row(u), [&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  bool connected() const {
    std::vector<Word> seen(words_, 0), frontier(words_, 0);
    bits::set(frontier, 0);
    bits::set(seen, 0);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Word> next(words_, 0);
      bits::for_each(frontier, [&](int v) {
        auto row = open_row(v);
        for (int i = 0; i < words_; ++i) next[i] |= row[i] & ~seen[i];
      });
      for (int i = 0; i < words_; ++i) {
        if (next[i]) grew = true;
        seen[i] |= next[i];
      }
      frontier = std::move(next);
    }
    return bits::count(seen) == n_;
  }

  bool is_tree() const { return m_ == n_ - 1 && connected(); }

  bool bipartite() const {
    std::vector<int> side(n_, -1);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
      if (side[s] >= 0) continue;
      side[s] = 0;
      stack.push_back(s);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        bool odd = false;
        bits::for_each(open_row(v), [&](int u) {
          if (side[u] < 0) {
            side[u] = 1 - side[v];
            stack.push_back(u);
          } else if (side[u] == side[v]) {
            odd = true;
          }
        });
        if (odd) return false;
      }
    }
    return true;
  }

 private:
  std::span<Word> mut_open(int v) { return {open_.data() + std::size_t(v) * words_, std::size_t(words_)}; }
  std::span<Word> mut_closed(int v) { return {closed_.data() + std::size_t(v) * words_, std::size_t(words_)}; }

  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  bool had_duplicates_ = false;
  std::vector<Word> open_;
  std::vector<Word> closed_;
  std::vector<int> degree_;
};

inline Graph make_graph(int n, std::span<const std::pair<int, int>> edges) { return Graph(n, edges); }

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  return Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), edges);
}

}  // namespace nnsd
