#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "nnsd/graph.hpp"

namespace nnsd {

// Color refinement (1-WL). Color ids are assigned by sorting signatures, so
// isomorphic graphs receive identical color vectors up to vertex relabeling.
inline std::vector<int> wl_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  {
    std::vector<int> vals(color);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (int v = 0; v < n; ++v)
      color[v] = int(std::lower_bound(vals.begin(), vals.end(), color[v]) - vals.begin());
  }
  int classes = 0;
  {
    std::vector<int> vals(color);
    std::sort(vals.begin(), vals.end());
    classes = int(std::unique(vals.begin(), vals.end()) - vals.begin());
  }
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      bits::for_each(g.open_row(v), [&](int u) { nb.push_back(color[u]); });
      std::sort(nb.begin(), nb.end());
      sig[v].push_back(color[v]);
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> uniq(sig.begin(), sig.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n; ++v)
      color[v] = int(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    if (int(uniq.size()) == classes) break;
    classes = int(uniq.size());
  }
  return color;
}

inline std::uint64_t iso_invariant_key(const Graph& g, const std::vector<int>& colors) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) { h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  mix(std::uint64_t(g.order()));
  mix(std::uint64_t(g.size()));
  std::vector<int> cs(colors);
  std::sort(cs.begin(), cs.end());
  for (int c : cs) mix(std::uint64_t(c) + 1);
  std::vector<std::pair<int, int>> ec;
  for (auto [u, v] : g.edges())
    ec.emplace_back(std::min(colors[u], colors[v]), std::max(colors[u], colors[v]));
  std::sort(ec.begin(), ec.end());
  for (auto [a, b] : ec) mix((std::uint64_t(a) << 20) | std::uint64_t(b));
  return h;
}

namespace detail {

inline bool iso_extend(const Graph& a, const Graph& b, const std::vector<int>& ca,
                       const std::vector<int>& cb, const std::vector<int>& order, std::size_t pos,
                       std::vector<int>& map, std::vector<char>& used) {
  if (pos == order.size()) return true;
  const int x = order[pos];
  for (int w = 0; w < b.order(); ++w) {
    if (used[w] || ca[x] != cb[w]) continue;
    bool ok = true;
    for (std::size_t p = 0; p < pos && ok; ++p)
      if (a.adjacent(x, order[p]) != b.adjacent(w, map[order[p]])) ok = false;
    if (!ok) continue;
    map[x] = w;
    used[w] = 1;
    if (iso_extend(a, b, ca, cb, order, pos + 1, map, used)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace detail

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const auto ca = wl_colors(a);
  const auto cb = wl_colors(b);
  {
    std::vector<int> sa(ca), sb(cb);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  const int n = a.order();
  // rarity of each color in a
  std::vector<int> freq(n + 1, 0);
  for (int c : ca) ++freq[c];
  // map vertices in a BFS-ish order starting from the rarest color
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  while (int(order.size()) < n) {
    int start = -1;
    for (int v = 0; v < n; ++v)
      if (!seen[v] && (start < 0 || freq[ca[v]] < freq[ca[start]])) start = v;
    seen[start] = 1;
    order.push_back(start);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i)
      bits::for_each(a.open_row(order[i]), [&](int u) {
        if (!seen[u]) {
          seen[u] = 1;
          order.push_back(u);
        }
      });
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  return detail::iso_extend(a, b, ca, cb, order, 0, map, used);
}

// Stores one representative per isomorphism class, bucketed by a refinement
// invariant so full isomorphism tests run only within a bucket.
class IsoClassRegistry {
 public:
  // true when the graph starts a new class
  bool insert(Graph g) {
    const auto colors = wl_colors(g);
    auto& bucket = buckets_[iso_invariant_key(g, colors)];
    for (int idx : bucket)
      if (isomorphic(graphs_[idx], g)) return false;
    bucket.push_back(int(graphs_.size()));
    graphs_.push_back(std::move(g));
    return true;
  }

  std::vector<Graph> take() { return std::move(graphs_); }
  std::size_t size() const { return graphs_.size(); }

 private:
  std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
  std::vector<Graph> graphs_;
};

// classes[n] holds one representative per isomorphism class of connected
// triangle-free graphs of order n, for 1 <= n <= max_n. Built by vertex
// augmentation: every connected graph has a non-cut vertex, and in a
// triangle-free graph its neighborhood is independent, so joining a fresh
// vertex to each nonempty independent set of each smaller class covers every
// class exactly.
inline std::vector<std::vector<Graph>> connected_triangle_free_classes(int max_n) {
  if (max_n < 1 || max_n > 11) throw BadParams("triangle-free enumeration: 1 <= max_n <= 11");
  std::vector<std::vector<Graph>> classes(max_n + 1);
  classes[1].push_back(Graph(1, std::span<const std::pair<int, int>>{}));
  for (int n = 2; n <= max_n; ++n) {
    IsoClassRegistry reg;
    for (const Graph& parent : classes[n - 1]) {
      const int pn = n - 1;
      std::vector<std::uint32_t> adj(pn, 0);
      const auto base = parent.edges();
      for (auto [u, v] : base) {
        adj[u] |= std::uint32_t(1) << v;
        adj[v] |= std::uint32_t(1) << u;
      }
      for (std::uint32_t s = 1; s < (std::uint32_t(1) << pn); ++s) {
        bool independent = true;
        for (int u = 0; u < pn && independent; ++u)
          if (((s >> u) & 1) && (adj[u] & s)) independent = false;
        if (!independent) continue;
        auto edges = base;
        for (int u = 0; u < pn; ++u)
          if ((s >> u) & 1) edges.emplace_back(u, pn);
        reg.insert(Graph(n, edges));
      }
    }
    classes[n] = reg.take();
  }
  return classes;
}

}  // namespace nnsd
