#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nnsd/graph.hpp"

namespace nnsd {

// Build a tree from a rooted level sequence (root at level 0; entry i is the
// depth of vertex i; a vertex's parent is the nearest earlier vertex one
// level up).
inline Graph level_sequence_to_tree(std::span<const int> levels) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> stack;
  for (int i = 0; i < int(levels.size()); ++i) {
    while (!stack.empty() && levels[stack.back()] >= levels[i]) stack.pop_back();
    if (!stack.empty()) edges.emplace_back(stack.back(), i);
    stack.push_back(i);
  }
  return Graph(int(levels.size()), edges);
}

namespace detail {

// Beyer-Hedetniemi successor of a canonical rooted level sequence. With p < 0
// the rightmost entry greater than 1 is located; otherwise the sequence is
// truncated at position p. Returns false once the star is reached.
inline bool next_rooted_level_sequence(std::vector<int>& s, int p = -1) {
  if (p < 0) {
    p = int(s.size()) - 1;
    while (p > 0 && s[p] == 1) --p;
  }
  if (p <= 0) return false;
  int q = p - 1;
  while (s[q] != s[p] - 1) --q;
  for (std::size_t i = p; i < s.size(); ++i) s[i] = s[i - p + q];
  return true;
}

struct SplitView {
  std::vector<int> left;  // first principal subtree, levels shifted down by 1
  std::vector<int> rest;  // the tree with that subtree removed
  int boundary;           // index of the first entry after the left subtree
};

inline SplitView split_level_sequence(const std::vector<int>& s) {
  int m = int(s.size());
  bool one_seen = false;
  for (int i = 0; i < int(s.size()); ++i) {
    if (s[i] == 1) {
      if (one_seen) {
        m = i;
        break;
      }
      one_seen = true;
    }
  }
  SplitView out;
  out.boundary = m;
  for (int i = 1; i < m; ++i) out.left.push_back(s[i] - 1);
  out.rest.push_back(0);
  for (int i = m; i < int(s.size()); ++i) out.rest.push_back(s[i]);
  return out;
}

// Wright-Richmond-Odlyzko-McKay step: either accept the current rooted
// sequence as the canonical representative of its free tree, or jump past the
// rooted trees that cannot be representatives.
inline void skip_to_free_tree(std::vector<int>& s) {
  SplitView sv = split_level_sequence(s);
  const int left_height = *std::max_element(sv.left.begin(), sv.left.end());
  const int rest_height = *std::max_element(sv.rest.begin(), sv.rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (sv.left.size() > sv.rest.size())
      valid = false;
    else if (sv.left.size() == sv.rest.size() && sv.left > sv.rest)
      valid = false;
  }
  if (valid) return;
  const int p = int(sv.left.size());
  const int old_entry = s[p];
  next_rooted_level_sequence(s, p);
  if (old_entry > 2) {
    SplitView nv = split_level_sequence(s);
    const int h = *std::max_element(nv.left.begin(), nv.left.end());
    const int tail = h + 1;
    for (int i = 0; i < tail; ++i) s[s.size() - tail + i] = i + 1;
  }
}

}  // namespace detail

// Enumerates exactly one representative per isomorphism class of trees on n
// vertices, in a fixed deterministic order. Single-consumer stream.
class FreeTreeEnumerator {
 public:
  explicit FreeTreeEnumerator(int n) : n_(n) {
    if (n < 1 || n > 16) throw BadParams("free trees: 1 <= n <= 16 required");
    if (n_ >= 2) {
      for (int i = 0; i <= n_ / 2; ++i) layout_.push_back(i);
      for (int i = 1; i < (n_ + 1) / 2; ++i) layout_.push_back(i);
    }
  }

  std::optional<Graph> next() {
    if (done_) return std::nullopt;
    if (n_ == 1) {
      done_ = true;
      return empty_single();
    }
    if (first_) {
      first_ = false;
    } else if (!detail::next_rooted_level_sequence(layout_)) {
      done_ = true;
      return std::nullopt;
    }
    detail::skip_to_free_tree(layout_);
    return level_sequence_to_tree(layout_);
  }

 private:
  static Graph empty_single() { return Graph(1, std::span<const std::pair<int, int>>{}); }

  int n_;
  bool first_ = true;
  bool done_ = false;
  std::vector<int> layout_;
};

inline std::vector<Graph> free_trees(int n) {
  FreeTreeEnumerator it(n);
  std::vector<Graph> out;
  while (auto t = it.next()) out.push_back(std::move(*t));
  return out;
}

inline long long free_tree_count(int n) {
  FreeTreeEnumerator it(n);
  long long c = 0;
  while (it.next()) ++c;
  return c;
}

}  // namespace nnsd
