#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nnsd/graph.hpp"

namespace nnsd {

inline Graph path_graph(int n) {
  if (n < 1) throw BadParams("path: n >= 1 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw BadParams("cycle: n >= 3 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, e);
}

// K_{1,k}: center 0 with k leaves.
inline Graph star_graph(int k) {
  if (k < 1) throw BadParams("star: k >= 1 leaves required");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
  return Graph(k + 1, e);
}

inline Graph complete_graph(int n) {
  if (n < 1) throw BadParams("complete: n >= 1 required");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph empty_graph(int n) {
  if (n < 1) throw BadParams("empty: n >= 1 required");
  return Graph(n, std::span<const std::pair<int, int>>{});
}

// Parts occupy consecutive index blocks in the order given.
inline Graph complete_multipartite(std::span<const int> parts) {
  if (parts.empty()) throw BadParams("multipartite: at least one part required");
  for (int p : parts)
    if (p < 1) throw BadParams("multipartite: part sizes must be >= 1");
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], int(i));
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph complete_multipartite(std::initializer_list<int> parts) {
  return complete_multipartite(std::span<const int>(parts.begin(), parts.size()));
}

// Balanced complete r-partite graph on n vertices: n mod r parts of size
// ceil(n/r), the rest of size floor(n/r).
inline Graph turan_graph(int n, int r) {
  if (r < 1 || r > n) throw BadParams("turan: 1 <= r <= n required");
  std::vector<int> parts(r, n / r);
  for (int i = 0; i < n % r; ++i) ++parts[i];
  return complete_multipartite(parts);
}

// One copy of g1; vertex i of g1 joined to every vertex of a private copy of
// g2. g1's vertices keep indices 0..n1-1; copy i occupies n1 + i*n2 onward.
inline Graph corona(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  std::vector<std::pair<int, int>> e = g1.edges();
  for (int i = 0; i < n1; ++i) {
    const int base = n1 + i * n2;
    for (auto [u, v] : g2.edges()) e.emplace_back(base + u, base + v);
    for (int u = 0; u < n2; ++u) e.emplace_back(i, base + u);
  }
  return Graph(n1 + n1 * n2, e);
}

// A family graph whose first core_count vertices form the distinguished core
// (the corona centers); the remaining vertices are the attached leaves.
struct MarkedGraph {
  Graph graph;
  int core_count;
};

// K_{p,p} with p+1 private leaves per center. Bipartite for every p.
inline MarkedGraph sigma_family(int p) {
  if (p < 1) throw BadParams("sigma: p >= 1 required");
  return {corona(complete_multipartite({p, p}), empty_graph(p + 1)), 2 * p};
}

// H with (r-1)p + 1 private leaves per core vertex, H complete r-partite with
// p vertices in each part. (r+1)-clique-free by construction.
inline MarkedGraph clique_free_equality_family(int r, int p) {
  if (r < 2 || p < 1) throw BadParams("clique-free equality family: r >= 2 and p >= 1 required");
  std::vector<int> parts(r, p);
  return {corona(complete_multipartite(parts), empty_graph((r - 1) * p + 1)), r * p};
}

// A tree whose nonnegative signed domination number equals k.
inline Graph observation_tree(int k) {
  if (k <= -2) return corona(path_graph(-k), empty_graph(2));
  // k = -1 needs its own witness: the one-vertex corona is K_{1,2} with value 1.
  if (k == -1) return make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
  if (k == 0) return path_graph(2);
  return path_graph(3 * k);
}

// The two cubic graphs on six vertices.
inline Graph prism_graph() {
  return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline Graph k33_graph() { return complete_multipartite({3, 3}); }

inline Graph disjoint_copies(const Graph& g, int t) {
  if (t < 1) throw BadParams("disjoint copies: t >= 1 required");
  Graph out = g;
  for (int i = 1; i < t; ++i) out = disjoint_union(out, g);
  return out;
}

namespace detail {

// Small deterministic engine so generated graphs are reproducible across
// platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform-ish value in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace detail

inline constexpr int kRegularRestartCap = 200000;

// Configuration-model pairing with full restart on loops or repeated edges.
// Deterministic for a fixed seed.
inline Graph random_regular(int n, int r, std::uint64_t seed) {
  if (n < 1 || r < 0 || r >= n) throw BadParams("random regular: need 0 <= r < n");
  if ((std::int64_t(n) * r) % 2 != 0) throw BadParams("random regular: n*r must be even");
  detail::SplitMix64 rng(seed);
  std::vector<int> stubs(std::size_t(n) * r);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < r; ++i) stubs[std::size_t(v) * r + i] = v;
  const int m = int(stubs.size()) / 2;
  std::vector<std::pair<int, int>> edges(m);
  for (int attempt = 0; attempt < kRegularRestartCap; ++attempt) {
    for (int i = int(stubs.size()) - 1; i > 0; --i)
      std::swap(stubs[i], stubs[rng.below(std::uint64_t(i) + 1)]);
    bool ok = true;
    std::vector<std::uint64_t> seen;
    seen.reserve(m);
    for (int i = 0; i < m && ok; ++i) {
      int u = stubs[2 * i], v = stubs[2 * i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      if (u > v) std::swap(u, v);
      edges[i] = {u, v};
      seen.push_back((std::uint64_t(u) << 32) | std::uint64_t(v));
    }
    if (!ok) continue;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) continue;
    return Graph(n, edges);
  }
  throw RetriesExhausted("random regular: pairing restart cap hit; reseed and retry");
}

// Family spec strings as used by the command line, e.g. "path:6", "turan:6:3",
// "sigma:3", "obs-tree:-3", "random-regular:8:3:42", "g6-prism",
// "corona:path:3:empty:2" (components limited to single-parameter kinds).
inline Graph build_family(std::string_view spec) {
  std::vector<std::string> tok;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t colon = spec.find(':', start);
    if (colon == std::string_view::npos) {
      tok.emplace_back(spec.substr(start));
      break;
    }
    tok.emplace_back(spec.substr(start, colon - start));
    start = colon + 1;
  }
  if (tok.empty() || tok[0].empty()) throw BadParams("family: empty spec");
  auto as_int = [](const std::string& s) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw BadParams("family: expected integer, got \"" + s + "\"");
    }
  };
  auto want = [&](std::size_t k) {
    if (tok.size() != k + 1)
      throw BadParams("family: " + tok[0] + " expects " + std::to_string(k) + " parameter(s)");
  };
  const std::string& kind = tok[0];
  if (kind == "path") { want(1); return path_graph(int(as_int(tok[1]))); }
  if (kind == "cycle") { want(1); return cycle_graph(int(as_int(tok[1]))); }
  if (kind == "star") { want(1); return star_graph(int(as_int(tok[1]))); }
  if (kind == "complete") { want(1); return complete_graph(int(as_int(tok[1]))); }
  if (kind == "empty") { want(1); return empty_graph(int(as_int(tok[1]))); }
  if (kind == "multipartite") {
    if (tok.size() < 2) throw BadParams("family: multipartite expects part sizes");
    std::vector<int> parts;
    for (std::size_t i = 1; i < tok.size(); ++i) parts.push_back(int(as_int(tok[i])));
    return complete_multipartite(parts);
  }
  if (kind == "turan") { want(2); return turan_graph(int(as_int(tok[1])), int(as_int(tok[2]))); }
  if (kind == "sigma") { want(1); return sigma_family(int(as_int(tok[1]))).graph; }
  if (kind == "cfe" || kind == "clique-free-equality") {
    want(2);
    return clique_free_equality_family(int(as_int(tok[1])), int(as_int(tok[2]))).graph;
  }
  if (kind == "obs-tree") { want(1); return observation_tree(int(as_int(tok[1]))); }
  if (kind == "random-regular") {
    want(3);
    return random_regular(int(as_int(tok[1])), int(as_int(tok[2])), std::uint64_t(as_int(tok[3])));
  }
  if (kind == "g6-prism") { want(0); return prism_graph(); }
  if (kind == "g6-k33") { want(0); return k33_graph(); }
  if (kind == "prisms") { want(1); return disjoint_copies(prism_graph(), int(as_int(tok[1]))); }
  if (kind == "corona") {
    want(4);
    auto component = [&](const std::string& k, long long v) {
      if (k == "path") return path_graph(int(v));
      if (k == "cycle") return cycle_graph(int(v));
      if (k == "star") return star_graph(int(v));
      if (k == "complete") return complete_graph(int(v));
      if (k == "empty") return empty_graph(int(v));
      throw BadParams("family: corona component kind \"" + k + "\" not supported");
    };
    return corona(component(tok[1], as_int(tok[2])), component(tok[3], as_int(tok[4])));
  }
  throw BadParams("family: unknown kind \"" + kind + "\"");
}

}  // namespace nnsd
