#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nnsd/graph.hpp"

namespace nnsd {

struct TreeProfile {
  bool is_tree = false;
  std::vector<int> leaves;          // degree-1 vertices, ascending (n >= 2)
  std::vector<int> supports;        // vertices adjacent to at least one leaf
  std::map<int, int> leaf_count;    // support vertex -> number of adjacent leaves
  int ell = 0;                      // total number of leaves
  int s_prime = 0;                  // supports with an odd leaf count
};

struct StructureProfile {
  int delta = 0;
  int Delta = 0;
  std::optional<int> regular_degree;
  int clique_number = 0;
  TreeProfile tree;
};

inline TreeProfile tree_profile(const Graph& g) {
  TreeProfile p;
  p.is_tree = g.is_tree();
  if (g.order() < 2) return p;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) p.leaves.push_back(v);
  p.ell = int(p.leaves.size());
  for (int leaf : p.leaves) {
    int s = bits::first(g.open_row(leaf));
    ++p.leaf_count[s];
  }
  for (auto [s, c] : p.leaf_count) {
    p.supports.push_back(s);
    if (c % 2 == 1) ++p.s_prime;
  }
  return p;
}

namespace detail {

// Exact maximum clique, branch and bound with a greedy-coloring bound.
// When target > 0 the search stops as soon as a clique of that size exists.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, int target) : g_(g), w_(g.words()), target_(target) {}

  int run() {
    std::vector<Word> all(w_, 0);
    for (int v = 0; v < g_.order(); ++v) bits::set(all, v);
    expand(all, 0);
    return best_;
  }

 private:
  void expand(std::vector<Word> cand, int size) {
    if (target_ > 0 && best_ >= target_) return;
    if (!bits::any(cand)) {
      best_ = std::max(best_, size);
      return;
    }
    // Greedy coloring: vertices of one color class are pairwise non-adjacent,
    // so a clique takes at most one per class.
    std::vector<int> order, color;
    std::vector<Word> rest = cand;
    int c = 0;
    while (bits::any(rest)) {
      ++c;
      std::vector<Word> cls = rest;
      while (true) {
        int v = bits::first(cls);
        if (v < 0) break;
        order.push_back(v);
        color.push_back(c);
        bits::clear(rest, v);
        bits::clear(cls, v);
        auto row = g_.open_row(v);
        for (int i = 0; i < w_; ++i) cls[i] &= ~row[i];
      }
    }
    for (int k = int(order.size()) - 1; k >= 0; --k) {
      if (size + color[k] <= best_) return;
      int v = order[k];
      std::vector<Word> next(w_);
      auto row = g_.open_row(v);
      for (int i = 0; i < w_; ++i) next[i] = cand[i] & row[i];
      expand(std::move(next), size + 1);
      if (target_ > 0 && best_ >= target_) return;
      bits::clear(cand, v);
    }
  }

  const Graph& g_;
  int w_;
  int target_;
  int best_ = 0;
};

}  // namespace detail

inline int clique_number(const Graph& g) { return detail::CliqueSearch(g, 0).run(); }

inline bool has_clique(const Graph& g, int q) {
  if (q <= 1) return g.order() >= q;
  return detail::CliqueSearch(g, q).run() >= q;
}

// True iff G contains no complete subgraph on q vertices.
inline bool is_clique_free(const Graph& g, int q) {
  if (q < 2) throw BadParams("is_clique_free requires q >= 2");
  return !has_clique(g, q);
}

inline StructureProfile structure_profile(const Graph& g) {
  StructureProfile p;
  p.delta = g.min_degree();
  p.Delta = g.max_degree();
  p.regular_degree = g.regular_degree();
  p.clique_number = clique_number(g);
  p.tree = tree_profile(g);
  return p;
}

// If G is a complete multipartite graph, returns its part sizes in descending
// order (K_n gives n parts of size 1, the edgeless graph gives one part).
// Vertices share a part exactly when their open rows coincide, and then every
// cross pair must be adjacent, i.e. deg(v) = n - |part(v)|.
inline std::optional<std::vector<int>> complete_multipartite_parts(const Graph& g) {
  const int n = g.order();
  std::vector<int> part(n, -1);
  std::vector<int> sizes;
  for (int v = 0; v < n; ++v) {
    if (part[v] >= 0) continue;
    int id = int(sizes.size());
    sizes.push_back(0);
    auto row = g.open_row(v);
    for (int u = v; u < n; ++u) {
      if (part[u] >= 0) continue;
      auto other = g.open_row(u);
      if (std::equal(row.begin(), row.end(), other.begin())) {
        part[u] = id;
        ++sizes[id];
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != n - sizes[part[v]]) return std::nullopt;
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

}  // namespace nnsd
