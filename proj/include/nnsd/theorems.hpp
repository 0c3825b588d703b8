#pragma once

#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nnsd/graph.hpp"
#include "nnsd/graph_io.hpp"
#include "nnsd/solve.hpp"
#include "nnsd/structure.hpp"

namespace nnsd {

// ---- exact rational arithmetic for the bound evaluators --------------------

struct Fraction {
  long long num = 0;
  long long den = 1;

  Fraction() = default;
  Fraction(long long n, long long d = 1) : num(n), den(d) {
    if (den == 0) throw BadParams("fraction with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return double(num) / double(den); }
  bool is_integer() const { return den == 1; }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return a < b || a == b; }
};

// A bound value that is exact when its radicand is a perfect square.
struct ExactReal {
  double approx = 0;
  std::optional<Fraction> exact;
};

inline constexpr double kBoundTolerance = 1e-9;
inline constexpr double kNearBoundaryMargin = 1e-6;

struct BoundCheck {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  std::string relation;  // "<=", ">=" or "="
  bool holds = false;
  bool tight = false;
  bool near_boundary = false;
};

namespace detail {

inline BoundCheck finish_exact(BoundCheck c, bool holds, bool tight) {
  c.holds = holds;
  c.tight = tight;
  c.near_boundary = false;
  return c;
}

}  // namespace detail

inline BoundCheck make_check(std::string name, const Fraction& lhs, std::string relation,
                             const Fraction& rhs) {
  BoundCheck c{std::move(name), lhs.to_double(), rhs.to_double(), std::move(relation), false, false, false};
  const bool eq = lhs == rhs;
  const bool holds = c.relation == "<=" ? lhs <= rhs : (c.relation == ">=" ? rhs <= lhs : eq);
  return detail::finish_exact(std::move(c), holds, eq);
}

inline BoundCheck make_check(std::string name, long long lhs, std::string relation, long long rhs) {
  return make_check(std::move(name), Fraction(lhs), std::move(relation), Fraction(rhs));
}

inline BoundCheck make_check(std::string name, long long lhs, std::string relation, const Fraction& rhs) {
  return make_check(std::move(name), Fraction(lhs), std::move(relation), rhs);
}

inline BoundCheck make_check_real(std::string name, double lhs, std::string relation, double rhs) {
  BoundCheck c{std::move(name), lhs, rhs, std::move(relation), false, false, false};
  const double margin = c.relation == "<=" ? rhs - lhs : lhs - rhs;
  if (c.relation == "=") {
    c.holds = std::abs(lhs - rhs) <= kBoundTolerance;
  } else {
    c.holds = margin >= -kBoundTolerance;
  }
  c.tight = std::abs(lhs - rhs) <= kBoundTolerance;
  c.near_boundary = !c.tight && std::abs(lhs - rhs) < kNearBoundaryMargin;
  return c;
}

inline BoundCheck make_check(std::string name, long long lhs, std::string relation, const ExactReal& rhs) {
  if (rhs.exact) return make_check(std::move(name), Fraction(lhs), std::move(relation), *rhs.exact);
  return make_check_real(std::move(name), double(lhs), std::move(relation), rhs.approx);
}

// ---- closed-form bounds -----------------------------------------------------

inline long long isqrt_ll(long long x) {
  if (x < 0) return -1;
  long long r = (long long)std::sqrt((double)x);
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// Bounds on the nonnegative signed domination number of an r-regular graph of
// order n: (n/(r+1), n(r+1)/(r+3)) for even r and (0, n(r-1)/(r+1)) for odd r.
inline std::pair<Fraction, Fraction> regular_bounds(long long n, long long r) {
  if (r < 1 || n <= r) throw BadParams("regular bounds: need r >= 1 and n > r");
  if (r % 2 == 0) return {Fraction(n, r + 1), Fraction(n * (r + 1), r + 3)};
  return {Fraction(0), Fraction(n * (r - 1), r + 1)};
}

// Lower bound for an (r+1)-clique-free graph of order n:
//   -2r/(r-1) + (2/(r-1)) * sqrt(r^2 + r(r-1)n) - n
inline ExactReal clique_free_lower_bound(long long n, long long r) {
  if (r < 2 || n < 1) throw BadParams("clique-free lower bound: need r >= 2 and n >= 1");
  const long long radicand = r * r + r * (r - 1) * n;
  ExactReal out;
  out.approx = -2.0 * double(r) / double(r - 1) +
               2.0 / double(r - 1) * std::sqrt(double(radicand)) - double(n);
  const long long s = isqrt_ll(radicand);
  if (s * s == radicand) out.exact = Fraction(2 * (s - r) - n * (r - 1), r - 1);
  return out;
}

// The earlier bipartite claim 2(-1+sqrt(1+2n)) - n, kept for counterexample
// demonstrations.
inline ExactReal old_bipartite_bound(long long n) {
  if (n < 1) throw BadParams("prior bipartite bound: need n >= 1");
  const long long radicand = 1 + 2 * n;
  ExactReal out;
  out.approx = 2.0 * (-1.0 + std::sqrt(double(radicand))) - double(n);
  const long long s = isqrt_ll(radicand);
  if (s * s == radicand) out.exact = Fraction(2 * (s - 1) - n);
  return out;
}

// ---- regular-graph identity and bound checks --------------------------------

namespace detail {

struct RegularParams {
  int r = 0;
  long long nnsdn = 0, sdn = 0, s2in = 0;
  int pack_k = 0, dom_k = 0;
  long long pack_value = 0, dom_value = 0;
};

inline RegularParams compute_regular_params(const Graph& g, Strategy strategy, int oracle_cap) {
  auto r_opt = g.regular_degree();
  if (!r_opt) throw NotRegular("regular identities require a regular graph");
  RegularParams p;
  p.r = *r_opt;
  p.nnsdn = nnsdn(g, strategy, oracle_cap).value;
  p.sdn = sdn(g, strategy, oracle_cap).value;
  p.s2in = s2in(g, strategy, oracle_cap).value;
  p.pack_k = (p.r + 1) / 2;
  p.dom_k = (p.r + 2) / 2;
  p.pack_value = p.pack_k >= 1 ? limited_packing_number(g, p.pack_k, strategy, oracle_cap).value : 0;
  p.dom_value = tuple_domination_number(g, p.dom_k, strategy, oracle_cap).value;
  return p;
}

inline std::vector<BoundCheck> regular_identity_checks(int n, const RegularParams& p) {
  std::vector<BoundCheck> out;
  out.push_back(make_check("regular_packing_identity", p.nnsdn, "=", n - 2 * p.pack_value));
  out.push_back(make_check("regular_tuple_identity", p.nnsdn, "=", 2 * p.dom_value - n));
  if (p.r % 2 == 0) {
    out.push_back(make_check("even_regular_signed_equality", p.sdn, "=", p.nnsdn));
  } else {
    // for odd r, ceil(r/2) equals ceil((r+1)/2), so the same tuple value serves
    out.push_back(make_check("odd_regular_s2i_negation", p.nnsdn, "=", -p.s2in));
    out.push_back(make_check("odd_regular_s2i_tuple_identity", p.s2in, "=", n - 2 * p.dom_value));
  }
  return out;
}

}  // namespace detail

inline std::vector<BoundCheck> check_regular_identities(const Graph& g,
                                                        Strategy strategy = Strategy::automatic,
                                                        int oracle_cap = -1) {
  const auto p = detail::compute_regular_params(g, strategy, oracle_cap);
  return detail::regular_identity_checks(g.order(), p);
}

inline BoundCheck cubic_upper_check(const Graph& g, Strategy strategy = Strategy::automatic,
                                    int oracle_cap = -1) {
  if (g.regular_degree() != 3) throw NotCubic("the n/3 upper bound applies to cubic graphs");
  const long long value = nnsdn(g, strategy, oracle_cap).value;
  return make_check("cubic_upper_bound", value, "<=", Fraction(g.order(), 3));
}

// Edge bound for an (r+1)-clique-free graph: |E| <= ((r-1)/2r) n^2.
inline BoundCheck turan_edge_check(const Graph& g, int r) {
  if (r < 1) throw BadParams("turan edge bound: r >= 1 required");
  if (r >= 2 && !is_clique_free(g, r + 1))
    throw NotCliqueFree("turan edge bound at r = " + std::to_string(r) +
                        " requires an (r+1)-clique-free graph");
  if (r == 1 && g.size() > 0)
    throw NotCliqueFree("turan edge bound at r = 1 requires an edgeless graph");
  const long long n = g.order();
  return make_check("turan_edge_bound", g.size(), "<=", Fraction((r - 1) * n * n, 2 * r));
}

// Equality in the edge bound must single out the balanced complete r-partite
// graph with r dividing n; certified via the part-structure of equal rows.
inline BoundCheck turan_equality_check(const Graph& g, int r, const BoundCheck& edge_bound) {
  bool expected = false;
  if (g.order() % r == 0) {
    const auto parts = complete_multipartite_parts(g);
    expected = parts && int(parts->size()) == r &&
               std::all_of(parts->begin(), parts->end(),
                           [&](int p) { return p == g.order() / r; });
  }
  BoundCheck c;
  c.name = "turan_equality_characterization";
  c.lhs = edge_bound.tight ? 1 : 0;
  c.rhs = expected ? 1 : 0;
  c.relation = "=";
  c.holds = (edge_bound.tight == expected);
  c.tight = c.holds;
  c.near_boundary = false;
  return c;
}

inline BoundCheck delta_lower_check(const Graph& g, Strategy strategy = Strategy::automatic,
                                    int oracle_cap = -1) {
  const long long value = nnsdn(g, strategy, oracle_cap).value;
  const long long bound = -g.order() + 2 * ((g.max_degree() + 2) / 2);
  return make_check("max_degree_lower_bound", value, ">=", bound);
}

// ---- tree characterizations --------------------------------------------------

// Trees built from a star around a maximum-degree vertex u: every vertex
// outside N[u] is a leaf whose support lies in N(u), those supports number at
// most floor(Delta/2), and each has degree at most 3. Every maximum-degree
// vertex is tried before rejecting.
inline bool theta_membership(const Graph& t) {
  if (!t.is_tree()) throw NotATree("theta membership requires a tree");
  const int n = t.order();
  if (n == 1) return true;
  const int Delta = t.max_degree();
  for (int u = 0; u < n; ++u) {
    if (t.degree(u) != Delta) continue;
    bool ok = true;
    std::set<int> supports;
    for (int w = 0; w < n && ok; ++w) {
      if (w == u || t.adjacent(u, w)) continue;
      if (t.degree(w) != 1) {
        ok = false;
        break;
      }
      const int s = bits::first(t.open_row(w));
      if (!t.adjacent(u, s)) {
        ok = false;
        break;
      }
      supports.insert(s);
    }
    if (!ok || int(supports.size()) > Delta / 2) continue;
    for (int s : supports) {
      if (t.degree(s) > 3) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// Readings of the upper-bound equality family. `anchored_supports` is the
// adopted reading: it is exactly the equality set (checked exhaustively for
// all trees with 3 <= n <= 15). The other two apply the one-non-leaf-neighbor
// restriction to every support, or to every vertex; both are sound but miss
// part of the equality set, and stay selectable for comparison sweeps.
enum class OmegaReading { anchored_supports, all_supports, all_vertices };

inline bool omega_membership(const Graph& t, OmegaReading reading = OmegaReading::anchored_supports) {
  if (!t.is_tree()) throw NotATree("omega membership requires a tree");
  const int n = t.order();
  if (n < 3) throw TooSmall("omega membership requires n >= 3");
  const auto tp = tree_profile(t);
  const bool star = (t.max_degree() == n - 1);
  if (star && tp.ell % 2 == 0) return true;
  for (auto [s, c] : tp.leaf_count)
    if (c % 2 == 0) return false;
  std::vector<char> is_support(n, 0), is_leaf(n, 0);
  for (int v : tp.supports) is_support[v] = 1;
  for (int v : tp.leaves) is_leaf[v] = 1;
  auto non_leaf_degree = [&](int v) {
    int c = 0;
    bits::for_each(t.open_row(v), [&](int u) {
      if (!is_leaf[u]) ++c;
    });
    return c;
  };
  if (reading == OmegaReading::anchored_supports) {
    // a support with at least three leaves and two non-leaf neighbors can
    // absorb one more negative leaf, so it must be excluded; a vertex outside
    // supports and leaves stays positive only when it is the unique non-leaf
    // neighbor of some support
    for (int v : tp.supports)
      if (tp.leaf_count.at(v) >= 3 && non_leaf_degree(v) > 1) return false;
    for (int x = 0; x < n; ++x) {
      if (is_support[x] || is_leaf[x]) continue;
      bool anchored = false;
      bits::for_each(t.open_row(x), [&](int u) {
        if (is_support[u] && non_leaf_degree(u) == 1) anchored = true;
      });
      if (!anchored) return false;
    }
    return true;
  }
  for (int v = 0; v < n; ++v) {
    if (is_support[v]) continue;
    bool dominated = false;
    bits::for_each(t.open_row(v), [&](int u) {
      if (is_support[u]) dominated = true;
    });
    if (!dominated) return false;
  }
  for (int v = 0; v < n; ++v) {
    if (reading == OmegaReading::all_supports && !is_support[v]) continue;
    if (non_leaf_degree(v) > 1) return false;
  }
  return true;
}

namespace detail {

inline BoundCheck tree_upper_check_value(int n, const TreeProfile& tp, long long value, bool plus_form) {
  const long long rhs = plus_form ? n - tp.ell + tp.s_prime : n - tp.ell - tp.s_prime;
  return make_check(plus_form ? "leaf_support_upper_bound_plus_variant" : "leaf_support_upper_bound",
                    value, "<=", rhs);
}

}  // namespace detail

// Upper bound n - ell - s' for trees with n >= 3; the additive variant
// n - ell + s' is reported alongside for comparison.
inline BoundCheck tree_upper_check(const Graph& t, Strategy strategy = Strategy::automatic,
                                   int oracle_cap = -1) {
  if (!t.is_tree()) throw NotATree("leaf-support upper bound requires a tree");
  if (t.order() < 3) throw TooSmall("leaf-support upper bound requires n >= 3");
  const auto tp = tree_profile(t);
  const long long value = nnsdn(t, strategy, oracle_cap).value;
  return detail::tree_upper_check_value(t.order(), tp, value, false);
}

// ---- per-graph verification report -------------------------------------------

struct ReportOptions {
  Strategy strategy = Strategy::automatic;
  int oracle_cap = -1;
  OmegaReading omega_reading = OmegaReading::anchored_supports;
  bool sweep_all_clique_free_r = false;
};

struct ReportParameters {
  std::optional<long long> nnsdn, sdn, s2in;
  std::optional<std::pair<int, long long>> lk;        // (k, L_k)
  std::optional<std::pair<int, long long>> tupledom;  // (k, gamma_xk)
};

struct VerificationReport {
  int n = 0;
  std::string format;  // "graph6", or "edgelist" above the graph6 size limit
  std::string repr;
  bool had_duplicate_edges = false;
  StructureProfile profile;
  ReportParameters parameters;
  SignFunction nnsdn_witness;
  std::vector<BoundCheck> checks;
  std::optional<bool> theta;
  std::optional<bool> omega;
  std::optional<bool> refuted_prior_bound;
  std::vector<std::string> notes;

  // Failures of the demonstrably refuted prior bound are expected, not
  // violations.
  bool any_violation() const {
    for (const auto& c : checks)
      if (!c.holds && c.name != "bipartite_prior_bound") return true;
    return false;
  }
};

inline VerificationReport run_report(const Graph& g, const ReportOptions& opt = {}) {
  VerificationReport rep;
  rep.n = g.order();
  rep.had_duplicate_edges = g.had_duplicate_edges();
  if (g.order() <= 62) {
    rep.format = "graph6";
    rep.repr = encode_graph6(g);
  } else {
    rep.format = "edgelist";
    rep.repr = emit_edge_list(g);
  }
  rep.profile = structure_profile(g);

  auto solve_or_note = [&](SignMode mode) -> std::optional<long long> {
    try {
      auto r = solve_sign_optimum(g, mode, opt.strategy, opt.oracle_cap);
      if (mode == SignMode::nnsdf) rep.nnsdn_witness = r.sign_witness();
      return r.value;
    } catch (const CapExceeded& e) {
      rep.notes.push_back(std::string(to_string(mode)) + ": " + e.what());
      return std::nullopt;
    }
  };
  rep.parameters.nnsdn = solve_or_note(SignMode::nnsdf);
  rep.parameters.sdn = solve_or_note(SignMode::sdf);
  rep.parameters.s2in = solve_or_note(SignMode::s2if);

  const auto r_opt = rep.profile.regular_degree;
  if (r_opt && rep.parameters.nnsdn && rep.parameters.sdn && rep.parameters.s2in) {
    try {
      detail::RegularParams p;
      p.r = *r_opt;
      p.nnsdn = *rep.parameters.nnsdn;
      p.sdn = *rep.parameters.sdn;
      p.s2in = *rep.parameters.s2in;
      p.pack_k = (p.r + 1) / 2;
      p.dom_k = (p.r + 2) / 2;
      p.pack_value = p.pack_k >= 1
                         ? limited_packing_number(g, p.pack_k, opt.strategy, opt.oracle_cap).value
                         : 0;
      p.dom_value = tuple_domination_number(g, p.dom_k, opt.strategy, opt.oracle_cap).value;
      if (p.pack_k >= 1) rep.parameters.lk = {p.pack_k, p.pack_value};
      rep.parameters.tupledom = {p.dom_k, p.dom_value};
      for (auto& c : detail::regular_identity_checks(g.order(), p)) rep.checks.push_back(std::move(c));
      if (p.r >= 1 && g.order() > p.r) {
        const auto [lo, hi] = regular_bounds(g.order(), p.r);
        rep.checks.push_back(make_check("regular_lower_bound", p.nnsdn, ">=", lo));
        rep.checks.push_back(make_check("regular_upper_bound", p.nnsdn, "<=", hi));
      }
      if (p.r == 3)
        rep.checks.push_back(make_check("cubic_upper_bound", p.nnsdn, "<=", Fraction(g.order(), 3)));
    } catch (const CapExceeded& e) {
      rep.notes.push_back(std::string("regular checks: ") + e.what());
    }
  }

  if (rep.parameters.nnsdn) {
    const long long value = *rep.parameters.nnsdn;
    const int omega_clique = rep.profile.clique_number;
    const int r_lo = std::max(2, omega_clique);
    const int r_hi = opt.sweep_all_clique_free_r ? std::max(r_lo, g.order()) : r_lo;
    for (int r = r_lo; r <= r_hi; ++r) {
      std::string suffix = (r_hi > r_lo) ? (":r=" + std::to_string(r)) : std::string();
      auto edge = turan_edge_check(g, r);
      edge.name += suffix;
      rep.checks.push_back(edge);
      auto equality = turan_equality_check(g, r, edge);
      equality.name += suffix;
      rep.checks.push_back(equality);
      auto lower = make_check("clique_free_lower_bound" + suffix, value, ">=",
                              clique_free_lower_bound(g.order(), r));
      rep.checks.push_back(lower);
    }
    if (g.bipartite()) {
      auto prior = make_check("bipartite_prior_bound", value, ">=", old_bipartite_bound(g.order()));
      rep.refuted_prior_bound = !prior.holds;
      rep.checks.push_back(std::move(prior));
    }
    rep.checks.push_back(make_check("max_degree_lower_bound", value, ">=",
                                    -(long long)g.order() + 2 * ((g.max_degree() + 2) / 2)));
    if (rep.profile.tree.is_tree) {
      rep.theta = theta_membership(g);
      const auto& degree_check = rep.checks.back();
      BoundCheck theta_eq;
      theta_eq.name = "theta_equality_characterization";
      theta_eq.lhs = degree_check.tight ? 1 : 0;
      theta_eq.rhs = *rep.theta ? 1 : 0;
      theta_eq.relation = "=";
      theta_eq.holds = degree_check.tight == *rep.theta;
      theta_eq.tight = theta_eq.holds;
      rep.checks.push_back(std::move(theta_eq));
      if (g.order() >= 3) {
        auto upper = detail::tree_upper_check_value(g.order(), rep.profile.tree, value, false);
        rep.checks.push_back(upper);
        rep.checks.push_back(detail::tree_upper_check_value(g.order(), rep.profile.tree, value, true));
        rep.omega = omega_membership(g, opt.omega_reading);
        BoundCheck omega_eq;
        omega_eq.name = "omega_equality_characterization";
        omega_eq.lhs = upper.tight ? 1 : 0;
        omega_eq.rhs = *rep.omega ? 1 : 0;
        omega_eq.relation = "=";
        omega_eq.holds = upper.tight == *rep.omega;
        omega_eq.tight = omega_eq.holds;
        rep.checks.push_back(std::move(omega_eq));
      }
    }
  }
  return rep;
}

}  // namespace nnsd
