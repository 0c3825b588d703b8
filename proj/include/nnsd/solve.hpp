#pragma once

#include <chrono>
#include <cstdlib>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "nnsd/graph.hpp"
#include "nnsd/sign.hpp"

namespace nnsd {

enum class Strategy { automatic, oracle, bnb, treedp };

inline const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::automatic: return "auto";
    case Strategy::oracle: return "oracle";
    case Strategy::bnb: return "bnb";
    default: return "treedp";
  }
}

inline constexpr int kDefaultOracleCap = 26;

// Explicit override wins, then NNSD_ORACLE_CAP, then the default.
inline int resolved_oracle_cap(int override_cap = -1) {
  if (override_cap >= 0) return override_cap;
  if (const char* env = std::getenv("NNSD_ORACLE_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return int(v);
  }
  return kDefaultOracleCap;
}

struct ParameterResult {
  long long value = 0;
  std::variant<SignFunction, std::vector<int>> witness;
  std::string solver;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0;

  const SignFunction& sign_witness() const { return std::get<SignFunction>(witness); }
  const std::vector<int>& set_witness() const { return std::get<std::vector<int>>(witness); }
};

namespace detail {

// Everything below solves one problem shape: minimize |X| subject to
// |N[v] cap X| >= need[v] for every vertex v. All five parameters reduce to
// it; needs of 0 or less are vacuous. Callers must screen infeasible needs
// (need[v] > deg(v)+1).

struct CoverOutcome {
  std::vector<char> in_set;
  int size = 0;
  std::uint64_t nodes = 0;
};

class CoverBnb {
 public:
  CoverBnb(const Graph& g, const std::vector<int>& need)
      : g_(g), need_(need), n_(g.order()), words_(g.words()) {
    chosen_cnt_.assign(n_, 0);
    undecided_cnt_.assign(n_, 0);
    for (int v = 0; v < n_; ++v) undecided_cnt_[v] = g_.degree(v) + 1;
    state_.assign(n_, kUndecided);
  }

  CoverOutcome run() {
    greedy_seed();
    dfs();
    return {best_, best_size_, nodes_};
  }

 private:
  static constexpr char kUndecided = 0, kIn = 1, kOut = 2;

  // Start from X = V and drop vertices in index order while feasibility holds.
  void greedy_seed() {
    std::vector<int> cnt(n_);
    for (int v = 0; v < n_; ++v) cnt[v] = g_.degree(v) + 1;
    std::vector<char> in(n_, 1);
    for (int u = 0; u < n_; ++u) {
      bool removable = true;
      bits::for_each(g_.closed_row(u), [&](int w) {
        if (cnt[w] - 1 < need_[w]) removable = false;
      });
      if (removable) {
        in[u] = 0;
        bits::for_each(g_.closed_row(u), [&](int w) { --cnt[w]; });
      }
    }
    best_ = in;
    best_size_ = 0;
    for (char c : in) best_size_ += c;
  }

  void include(int v) {
    state_[v] = kIn;
    ++chosen_total_;
    bits::for_each(g_.closed_row(v), [&](int w) {
      ++chosen_cnt_[w];
      --undecided_cnt_[w];
    });
    trail_.push_back(v + 1);
  }

  void exclude(int v) {
    state_[v] = kOut;
    bits::for_each(g_.closed_row(v), [&](int w) { --undecided_cnt_[w]; });
    trail_.push_back(-(v + 1));
  }

  void rewind(std::size_t mark) {
    while (trail_.size() > mark) {
      const int t = trail_.back();
      trail_.pop_back();
      if (t > 0) {
        const int v = t - 1;
        state_[v] = kUndecided;
        --chosen_total_;
        bits::for_each(g_.closed_row(v), [&](int w) {
          --chosen_cnt_[w];
          ++undecided_cnt_[w];
        });
      } else {
        const int v = -t - 1;
        state_[v] = kUndecided;
        bits::for_each(g_.closed_row(v), [&](int w) { ++undecided_cnt_[w]; });
      }
    }
  }

  // Force vertices whose neighborhoods have no slack left; false on a dead end.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n_; ++v) {
        const int deficit = need_[v] - chosen_cnt_[v];
        if (deficit <= 0) continue;
        if (deficit > undecided_cnt_[v]) return false;
        if (deficit == undecided_cnt_[v]) {
          forced_.clear();
          bits::for_each(g_.closed_row(v), [&](int u) {
            if (state_[u] == kUndecided) forced_.push_back(u);
          });
          for (int u : forced_) include(u);
          changed = true;
        }
      }
    }
    return true;
  }

  // Deficits of vertex-disjoint closed neighborhoods must be paid separately.
  int lower_bound() {
    scratch_.assign(words_, 0);
    int lb = chosen_total_;
    for (int v = 0; v < n_; ++v) {
      const int deficit = need_[v] - chosen_cnt_[v];
      if (deficit <= 0) continue;
      const auto row = g_.closed_row(v);
      if (bits::disjoint(row, scratch_)) {
        lb += deficit;
        for (int i = 0; i < words_; ++i) scratch_[i] |= row[i];
      }
    }
    return lb;
  }

  void dfs() {
    ++nodes_;
    const std::size_t mark = trail_.size();
    if (!propagate()) {
      rewind(mark);
      return;
    }
    int branch_v = -1, branch_slack = std::numeric_limits<int>::max();
    for (int v = 0; v < n_; ++v) {
      const int deficit = need_[v] - chosen_cnt_[v];
      if (deficit <= 0) continue;
      const int slack = undecided_cnt_[v] - deficit;
      if (slack < branch_slack) {
        branch_slack = slack;
        branch_v = v;
      }
    }
    if (branch_v < 0) {
      if (chosen_total_ < best_size_) {
        best_size_ = chosen_total_;
        for (int v = 0; v < n_; ++v) best_[v] = (state_[v] == kIn) ? 1 : 0;
      }
      rewind(mark);
      return;
    }
    if (lower_bound() >= best_size_) {
      rewind(mark);
      return;
    }
    int u = -1;
    bits::for_each(g_.closed_row(branch_v), [&](int w) {
      if (u < 0 && state_[w] == kUndecided) u = w;
    });
    const std::size_t before = trail_.size();
    include(u);
    dfs();
    rewind(before);
    exclude(u);
    dfs();
    rewind(mark);
  }

  const Graph& g_;
  const std::vector<int>& need_;
  int n_, words_;
  std::vector<int> chosen_cnt_, undecided_cnt_;
  std::vector<char> state_;
  std::vector<int> trail_, forced_;
  std::vector<Word> scratch_;
  std::vector<char> best_;
  int best_size_ = 0;
  int chosen_total_ = 0;
  std::uint64_t nodes_ = 0;
};

// Plain subset scan: sizes ascending, masks per size in ascending numeric
// order (Gosper), first feasible subset wins. Requires n < 64.
inline CoverOutcome oracle_cover_min(const Graph& g, const std::vector<int>& need) {
  const int n = g.order();
  std::vector<Word> cm(n);
  for (int v = 0; v < n; ++v) cm[v] = g.closed_row(v)[0];
  std::vector<int> todo;
  for (int v = 0; v < n; ++v)
    if (need[v] > 0) todo.push_back(v);
  std::uint64_t nodes = 0;
  for (int k = 0; k <= n; ++k) {
    Word mask = (k == 0) ? 0 : ((Word(1) << k) - 1);
    while (true) {
      ++nodes;
      bool ok = true;
      for (int v : todo) {
        if (std::popcount(cm[v] & mask) < need[v]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        std::vector<char> in(n, 0);
        for (int v = 0; v < n; ++v) in[v] = (mask >> v) & 1;
        return {in, k, nodes};
      }
      if (k == 0) break;
      const Word c = mask & (~mask + 1);
      const Word r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
      if (mask >= (Word(1) << n)) break;
    }
  }
  return {{}, -1, nodes};  // unreachable for screened inputs
}

inline std::vector<int> sign_needs(const Graph& g, int threshold) {
  // f(N[v]) >= t on a +/-1 labeling is |N[v] cap V+| >= ceil((deg(v)+1+t)/2).
  std::vector<int> need(g.order());
  for (int v = 0; v < g.order(); ++v) need[v] = (g.degree(v) + 1 + threshold + 1) / 2;
  return need;
}

inline constexpr int kInfWeight = 1 << 28;

// Rooted dynamic program over (own sign, running sum of own plus children
// signs); children are folded in by sequential convolution. A child's own
// constraint is checked at the parent boundary (sum + parent sign >= t); at
// the root the plain sum >= t closes the last constraint.
class TreeSignDp {
 public:
  TreeSignDp(const Graph& t, int threshold) : g_(t), t_(threshold), n_(t.order()) {
    if (!t.is_tree()) throw NotATree("tree solver requires a tree");
    build_order();
    tables_.resize(n_);
    for (int i = n_ - 1; i >= 0; --i) build_table(order_[i]);
    int best = kInfWeight, best_sigma = 0, best_sum = 0;
    const int root = order_[0];
    for (int si = 0; si < 2; ++si) {
      const auto& tab = tables_[root].val[si];
      const int off = tables_[root].offset;
      for (int s = t_; s <= off; ++s) {
        if (tab[off + s] < best) {
          best = tab[off + s];
          best_sigma = si;
          best_sum = s;
        }
      }
    }
    value = best;
    labels.labels.assign(n_, 0);
    assign(root, best_sigma, best_sum);
  }

  long long value = 0;
  SignFunction labels;
  std::uint64_t cells = 0;

 private:
  struct Table {
    std::vector<int> val[2];  // index 0: own sign +1, index 1: own sign -1
    int offset = 0;           // val[s + offset]; s ranges over -offset..offset
  };

  static int sigma_of(int si) { return si == 0 ? 1 : -1; }

  void build_order() {
    parent_.assign(n_, -1);
    children_.assign(n_, {});
    order_.reserve(n_);
    order_.push_back(0);
    std::vector<char> seen(n_, 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const int v = order_[i];
      bits::for_each(g_.open_row(v), [&](int u) {
        if (!seen[u]) {
          seen[u] = 1;
          parent_[u] = v;
          children_[v].push_back(u);
          order_.push_back(u);
        }
      });
    }
  }

  // Cheapest subtree weight for child c given its sign and the parent's sign,
  // honoring the child's own closed-neighborhood constraint.
  int child_best(int c, int si, int parent_sigma) const {
    const auto& tab = tables_[c];
    int best = kInfWeight;
    for (int s = std::max(t_ - parent_sigma, -tab.offset); s <= tab.offset; ++s)
      best = std::min(best, tab.val[si][tab.offset + s]);
    return best;
  }

  void build_table(int v) {
    const int k = int(children_[v].size());
    Table tab;
    tab.offset = k + 1;
    for (int si = 0; si < 2; ++si) {
      std::vector<int> cur(2 * tab.offset + 1, kInfWeight);
      cur[tab.offset + sigma_of(si)] = sigma_of(si);
      for (int c : children_[v]) {
        const int wb[2] = {child_best(c, 0, sigma_of(si)), child_best(c, 1, sigma_of(si))};
        std::vector<int> next(2 * tab.offset + 1, kInfWeight);
        for (int s = 0; s < int(cur.size()); ++s) {
          if (cur[s] >= kInfWeight) continue;
          for (int ci = 0; ci < 2; ++ci) {
            if (wb[ci] >= kInfWeight) continue;
            const int ns = s + sigma_of(ci);
            next[ns] = std::min(next[ns], cur[s] + wb[ci]);
            ++cells;
          }
        }
        cur = std::move(next);
      }
      tab.val[si] = std::move(cur);
    }
    tables_[v] = std::move(tab);
  }

  void assign(int v, int si, int target_sum) {
    labels.labels[v] = std::int8_t(sigma_of(si));
    const int k = int(children_[v].size());
    if (k == 0) return;
    const int off = k + 1;
    // replay the convolution to recover per-child choices
    std::vector<std::vector<int>> layers(k + 1);
    layers[0].assign(2 * off + 1, kInfWeight);
    layers[0][off + sigma_of(si)] = sigma_of(si);
    for (int j = 0; j < k; ++j) {
      const int c = children_[v][j];
      const int wb[2] = {child_best(c, 0, sigma_of(si)), child_best(c, 1, sigma_of(si))};
      layers[j + 1].assign(2 * off + 1, kInfWeight);
      for (int s = 0; s < 2 * off + 1; ++s) {
        if (layers[j][s] >= kInfWeight) continue;
        for (int ci = 0; ci < 2; ++ci) {
          if (wb[ci] >= kInfWeight) continue;
          layers[j + 1][s + sigma_of(ci)] = std::min(layers[j + 1][s + sigma_of(ci)], layers[j][s] + wb[ci]);
        }
      }
    }
    int s = off + target_sum;
    for (int j = k; j >= 1; --j) {
      const int c = children_[v][j - 1];
      const int wb[2] = {child_best(c, 0, sigma_of(si)), child_best(c, 1, sigma_of(si))};
      int pick = -1;
      for (int ci = 0; ci < 2; ++ci) {
        const int ps = s - sigma_of(ci);
        if (ps < 0 || ps >= 2 * off + 1 || wb[ci] >= kInfWeight) continue;
        if (layers[j - 1][ps] < kInfWeight && layers[j - 1][ps] + wb[ci] == layers[j][s]) {
          pick = ci;
          break;
        }
      }
      // recover the child's own admissible running sum
      const auto& ctab = tables_[c];
      int child_sum = 0;
      for (int cs = std::max(t_ - sigma_of(si), -ctab.offset); cs <= ctab.offset; ++cs) {
        if (ctab.val[pick][ctab.offset + cs] == wb[pick]) {
          child_sum = cs;
          break;
        }
      }
      assign(c, pick, child_sum);
      s -= sigma_of(pick);
    }
  }

  const Graph& g_;
  int t_, n_;
  std::vector<int> order_, parent_;
  std::vector<std::vector<int>> children_;
  std::vector<Table> tables_;
};

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

inline CoverOutcome run_cover(const Graph& g, const std::vector<int>& need, Strategy strategy,
                              int oracle_cap, std::string& solver_name) {
  if (strategy == Strategy::oracle) {
    const int cap = resolved_oracle_cap(oracle_cap);
    if (g.order() > cap || g.order() > 63)
      throw CapExceeded("oracle cap " + std::to_string(std::min(cap, 63)) + " exceeded: n = " +
                        std::to_string(g.order()) + " (raise with --oracle-cap or NNSD_ORACLE_CAP)");
    solver_name = "oracle";
    return oracle_cover_min(g, need);
  }
  solver_name = "bnb";
  return CoverBnb(g, need).run();
}

}  // namespace detail

// Exact optimum of the requested sign problem. `automatic` picks the tree
// dynamic program for trees and branch and bound otherwise; `oracle` enforces
// the vertex cap.
inline ParameterResult solve_sign_optimum(const Graph& g, SignMode mode,
                                          Strategy strategy = Strategy::automatic,
                                          int oracle_cap = -1) {
  detail::Timer timer;
  const int threshold = mode == SignMode::sdf ? 1 : (mode == SignMode::nnsdf ? 0 : -1);
  const bool flip = (mode == SignMode::s2if);
  Strategy chosen = strategy;
  if (chosen == Strategy::automatic) chosen = g.is_tree() ? Strategy::treedp : Strategy::bnb;

  ParameterResult out;
  if (chosen == Strategy::treedp) {
    detail::TreeSignDp dp(g, threshold);
    SignFunction f = dp.labels;
    long long value = dp.value;
    if (flip) {
      for (auto& l : f.labels) l = -l;
      value = -value;
    }
    out.value = value;
    out.witness = std::move(f);
    out.solver = "treedp";
    out.nodes = dp.cells;
  } else {
    std::string solver;
    const auto needs = detail::sign_needs(g, threshold);
    const auto cover = detail::run_cover(g, needs, chosen, oracle_cap, solver);
    SignFunction f;
    f.labels.assign(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) {
      const bool in = cover.in_set[v];
      f.labels[v] = std::int8_t(flip ? (in ? -1 : 1) : (in ? 1 : -1));
    }
    out.value = flip ? (g.order() - 2LL * cover.size) : (2LL * cover.size - g.order());
    out.witness = std::move(f);
    out.solver = solver;
    out.nodes = cover.nodes;
  }
  out.elapsed_seconds = timer.seconds();
  return out;
}

inline ParameterResult nnsdn(const Graph& g, Strategy strategy = Strategy::automatic, int oracle_cap = -1) {
  return solve_sign_optimum(g, SignMode::nnsdf, strategy, oracle_cap);
}

inline ParameterResult sdn(const Graph& g, Strategy strategy = Strategy::automatic, int oracle_cap = -1) {
  return solve_sign_optimum(g, SignMode::sdf, strategy, oracle_cap);
}

inline ParameterResult s2in(const Graph& g, Strategy strategy = Strategy::automatic, int oracle_cap = -1) {
  return solve_sign_optimum(g, SignMode::s2if, strategy, oracle_cap);
}

// Largest B with |N[v] cap B| <= k everywhere, solved as the complement cover.
inline ParameterResult limited_packing_number(const Graph& g, int k,
                                              Strategy strategy = Strategy::automatic,
                                              int oracle_cap = -1) {
  if (k < 1) throw BadParams("limited packing: k >= 1 required");
  detail::Timer timer;
  if (strategy == Strategy::automatic || strategy == Strategy::treedp) strategy = Strategy::bnb;
  std::vector<int> need(g.order());
  for (int v = 0; v < g.order(); ++v) need[v] = g.degree(v) + 1 - k;
  std::string solver;
  const auto cover = detail::run_cover(g, need, strategy, oracle_cap, solver);
  ParameterResult out;
  std::vector<int> packing;
  for (int v = 0; v < g.order(); ++v)
    if (!cover.in_set[v]) packing.push_back(v);
  out.value = g.order() - cover.size;
  out.witness = std::move(packing);
  out.solver = solver;
  out.nodes = cover.nodes;
  out.elapsed_seconds = timer.seconds();
  return out;
}

// Smallest D with |N[v] cap D| >= k everywhere; exists only when delta >= k-1.
inline ParameterResult tuple_domination_number(const Graph& g, int k,
                                               Strategy strategy = Strategy::automatic,
                                               int oracle_cap = -1) {
  if (k < 1) throw BadParams("tuple domination: k >= 1 required");
  if (g.min_degree() < k - 1)
    throw Infeasible("tuple domination: requires delta >= k-1 (delta = " +
                     std::to_string(g.min_degree()) + ", k = " + std::to_string(k) + ")");
  detail::Timer timer;
  if (strategy == Strategy::automatic || strategy == Strategy::treedp) strategy = Strategy::bnb;
  std::vector<int> need(g.order(), k);
  std::string solver;
  const auto cover = detail::run_cover(g, need, strategy, oracle_cap, solver);
  ParameterResult out;
  std::vector<int> dmset;
  for (int v = 0; v < g.order(); ++v)
    if (cover.in_set[v]) dmset.push_back(v);
  out.value = cover.size;
  out.witness = std::move(dmset);
  out.solver = solver;
  out.nodes = cover.nodes;
  out.elapsed_seconds = timer.seconds();
  return out;
}

inline ParameterResult tree_dp_nnsdn(const Graph& t) {
  return solve_sign_optimum(t, SignMode::nnsdf, Strategy::treedp);
}

// Feasibility checks for set witnesses.
inline bool verify_limited_packing(const Graph& g, std::span<const int> b, int k) {
  std::vector<char> in(g.order(), 0);
  for (int v : b) in[v] = 1;
  for (int v = 0; v < g.order(); ++v) {
    int c = in[v];
    bits::for_each(g.open_row(v), [&](int u) { c += in[u]; });
    if (c > k) return false;
  }
  return true;
}

inline bool verify_tuple_domination(const Graph& g, std::span<const int> d, int k) {
  std::vector<char> in(g.order(), 0);
  for (int v : d) in[v] = 1;
  for (int v = 0; v < g.order(); ++v) {
    int c = in[v];
    bits::for_each(g.open_row(v), [&](int u) { c += in[u]; });
    if (c < k) return false;
  }
  return true;
}

}  // namespace nnsd
