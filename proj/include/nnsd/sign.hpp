#pragma once

#include <cstdint>
#include <vector>

#include "nnsd/graph.hpp"

namespace nnsd {

// Closed-neighborhood sum constraints on a +/-1 vertex labeling:
//   nnsdf: f(N[v]) >= 0 for every v, minimize the weight
//   sdf:   f(N[v]) >= 1 for every v, minimize the weight
//   s2if:  f(N[v]) <= 1 for every v, maximize the weight
enum class SignMode { nnsdf, sdf, s2if };

inline const char* to_string(SignMode m) {
  switch (m) {
    case SignMode::nnsdf: return "nnsdf";
    case SignMode::sdf: return "sdf";
    default: return "s2if";
  }
}

// A +/-1 vertex labeling together with its derived views.
struct SignFunction {
  std::vector<std::int8_t> labels;

  static SignFunction all_positive(int n) { return {std::vector<std::int8_t>(n, 1)}; }

  int weight() const {
    int w = 0;
    for (int v : labels) w += v;
    return w;
  }

  std::vector<int> positive_set() const {
    std::vector<int> out;
    for (int v = 0; v < int(labels.size()); ++v)
      if (labels[v] > 0) out.push_back(v);
    return out;
  }

  std::vector<int> negative_set() const {
    std::vector<int> out;
    for (int v = 0; v < int(labels.size()); ++v)
      if (labels[v] < 0) out.push_back(v);
    return out;
  }

  // Number of edges with one endpoint labeled -1 and the other +1.
  int cut_size(const Graph& g) const {
    int c = 0;
    for (auto [u, v] : g.edges())
      if (labels[u] != labels[v]) ++c;
    return c;
  }
};

inline int closed_neighborhood_sum(const Graph& g, const SignFunction& f, int v) {
  int s = f.labels[v];
  bits::for_each(g.open_row(v), [&](int u) { s += f.labels[u]; });
  return s;
}

inline bool verify_sign_function(const Graph& g, const SignFunction& f, SignMode mode) {
  if (int(f.labels.size()) != g.order())
    throw SizeMismatch("sign function has " + std::to_string(f.labels.size()) +
                       " labels for a graph of order " + std::to_string(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    const int s = closed_neighborhood_sum(g, f, v);
    if (mode == SignMode::s2if ? s > 1 : s < (mode == SignMode::sdf ? 1 : 0)) return false;
  }
  return true;
}

}  // namespace nnsd
