// Acceptance suite. Each numbered criterion runs end to end and prints one
// PASS/FAIL line; failing criteria also print the measurements behind the
// verdict. Select a single criterion with --criterion K; --trifree-max-n N
// (or env NNSD_TRIFREE_MAX_N) shrinks the exhaustive triangle-free pass.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "nnsd/families.hpp"
#include "nnsd/graph_enum.hpp"
#include "nnsd/graph_io.hpp"
#include "nnsd/solve.hpp"
#include "nnsd/structure.hpp"
#include "nnsd/theorems.hpp"
#include "nnsd/tree_enum.hpp"
#include "support/reference.hpp"

using namespace nnsd;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream log;

  template <typename... Args>
  void fail(const char* fmt, Args... args) {
    pass = false;
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    log << "    " << buf << "\n";
  }

  template <typename... Args>
  void note(const char* fmt, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    log << "    " << buf << "\n";
  }

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      log << "    FAILED: " << what << "\n";
    }
  }

  void note_text(const std::string& text) { log << "    " << text << "\n"; }
};

int trifree_max_n = 10;

Graph seeded_regular(int n, int r, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    try {
      return random_regular(n, r, seed + 1000003 * attempt);
    } catch (const RetriesExhausted&) {
      if (attempt > 5) throw;
    }
  }
}

std::vector<Graph> regular_corpus() {
  std::vector<Graph> graphs;
  for (int n = 3; n <= 8; ++n) graphs.push_back(cycle_graph(n));
  for (int n = 3; n <= 6; ++n) graphs.push_back(complete_graph(n));
  graphs.push_back(prism_graph());
  graphs.push_back(k33_graph());
  const std::pair<int, int> configs[] = {{10, 3}, {12, 3}, {10, 4}, {8, 5}};
  for (const auto& [n, r] : configs)
    for (int i = 0; i < 50; ++i) graphs.push_back(seeded_regular(n, r, std::uint64_t(1000 * n + r) + i));
  return graphs;
}

// 1. nnsdn(P_n) = n - 2*ceil(n/3) for n = 1..15, via oracle and tree solver.
Outcome criterion_1() {
  Outcome out;
  for (int n = 1; n <= 15; ++n) {
    const long long formula = n - 2 * ((n + 2) / 3);
    const long long dp = tree_dp_nnsdn(path_graph(n)).value;
    const long long oracle = nnsdn(path_graph(n), Strategy::oracle).value;
    out.expect(dp == oracle, "path " + std::to_string(n) + ": solvers disagree");
    if (dp != formula)
      out.fail("P_%d: solver value %lld, formula value %lld", n, dp, formula);
  }
  if (!out.pass)
    out.note_text("the closed form fails at n = 1: the single vertex forces the all-ones labeling "
                  "(value 1), while n - 2*ceil(n/3) gives -1; the formula holds for n = 2..15");
  return out;
}

// 2. Stars with an odd number of leaves have value zero.
Outcome criterion_2() {
  Outcome out;
  for (int t = 1; t <= 5; ++t) {
    const long long v = tree_dp_nnsdn(star_graph(2 * t - 1)).value;
    if (v != 0) out.fail("star with %d leaves: value %lld, expected 0", 2 * t - 1, v);
  }
  return out;
}

// 3. A tree with value exactly k exists for every k in -5..5.
Outcome criterion_3() {
  Outcome out;
  for (int k = -5; k <= 5; ++k) {
    const Graph t = observation_tree(k);
    const long long dp = tree_dp_nnsdn(t).value;
    if (dp != k) out.fail("observation tree for k=%d has value %lld", k, dp);
    if (t.order() <= 20) {
      const long long oracle = nnsdn(t, Strategy::oracle).value;
      out.expect(dp == oracle, "observation tree k=" + std::to_string(k) + ": solvers disagree");
    }
  }
  return out;
}

// 4. Both regular identities hold on the named witnesses and on 50 seeded
//    random r-regular graphs per (n, r) configuration.
Outcome criterion_4() {
  Outcome out;
  int checked = 0;
  for (const Graph& g : regular_corpus()) {
    for (const auto& c : check_regular_identities(g)) {
      ++checked;
      if (!c.holds)
        out.fail("identity %s violated on a regular graph with n=%d (lhs=%g rhs=%g)",
                 c.name.c_str(), g.order(), c.lhs, c.rhs);
    }
  }
  out.note("identity checks evaluated: %d", checked);
  return out;
}

// 5. The regular bounds hold on the same corpus; sharpness witnesses as named.
Outcome criterion_5() {
  Outcome out;
  for (const Graph& g : regular_corpus()) {
    const int r = *g.regular_degree();
    if (r < 1 || g.order() <= r) continue;
    const auto [lo, hi] = regular_bounds(g.order(), r);
    const Fraction v(nnsdn(g).value);
    if (v < lo || hi < v)
      out.fail("bounds violated on n=%d r=%d: value %lld outside [%g, %g]", g.order(), r,
               (long long)v.num, lo.to_double(), hi.to_double());
  }
  const Fraction k4(nnsdn(complete_graph(4)).value);
  out.expect(k4 == regular_bounds(4, 3).first, "K4 does not sit on the odd lower bound");
  const Fraction k5(nnsdn(complete_graph(5)).value);
  out.expect(k5 == regular_bounds(5, 4).first, "K5 does not sit on the even lower bound");
  const Fraction c4(nnsdn(cycle_graph(4)).value);
  if (!(c4 == regular_bounds(4, 2).second)) {
    out.fail("C4 upper-bound sharpness as stated: value %lld vs bound %g", (long long)c4.num,
             regular_bounds(4, 2).second.to_double());
    out.note("the even upper bound at (n=4, r=2) is 12/5; a 4-vertex value is an even integer, "
             "so C4 cannot attain it. C5 attains the bound exactly: value %lld = 3n/5 = %g",
             nnsdn(cycle_graph(5)).value, regular_bounds(5, 2).second.to_double());
    const Fraction c5(nnsdn(cycle_graph(5)).value);
    out.expect(c5 == regular_bounds(5, 2).second, "C5 fails to attain the even upper bound");
  }
  return out;
}

// 6. Cubic upper bound n/3, tight on 1, 2, 3 disjoint prisms.
Outcome criterion_6() {
  Outcome out;
  for (const Graph& g : regular_corpus()) {
    if (g.regular_degree() != 3) continue;
    const auto c = cubic_upper_check(g);
    if (!c.holds) out.fail("cubic bound violated on n=%d (value %g)", g.order(), c.lhs);
  }
  const long long expected[] = {2, 4, 6};
  for (int t = 1; t <= 3; ++t) {
    const Graph g = disjoint_copies(prism_graph(), t);
    const long long v = nnsdn(g, Strategy::bnb).value;
    if (v != expected[t - 1])
      out.fail("%d prism copies: value %lld, expected %lld", t, v, expected[t - 1]);
    const auto c = cubic_upper_check(g);
    out.expect(c.tight, std::to_string(t) + " prism copies should be tight at n/3");
  }
  return out;
}

// 7. The prior bipartite bound is refuted by the sigma family with margin.
Outcome criterion_7() {
  Outcome out;
  const long long expected[] = {-2, -8, -18};
  for (int p = 1; p <= 3; ++p) {
    const auto fam = sigma_family(p);
    const long long v = nnsdn(fam.graph, Strategy::bnb).value;
    if (v != expected[p - 1]) {
      out.fail("sigma(%d): value %lld, expected %lld", p, v, expected[p - 1]);
      continue;
    }
    const double prior = old_bipartite_bound(fam.graph.order()).approx;
    const double margin = prior - double(v);
    if (!(margin > 0.5))
      out.fail("sigma(%d): margin %.4f below the required 0.5", p, margin);
  }
  return out;
}

// 8. The clique-free lower bound holds for every connected triangle-free graph
//    up to the configured order, with equality exactly on the named family.
Outcome criterion_8() {
  Outcome out;
  const auto classes = connected_triangle_free_classes(trifree_max_n);
  long long graphs = 0;
  for (int n = 1; n <= trifree_max_n; ++n) {
    const auto bound = clique_free_lower_bound(n, 2);
    for (const Graph& g : classes[n]) {
      ++graphs;
      const long long v = nnsdn(g).value;
      const auto c = make_check("clique_free_lower_bound", v, ">=", bound);
      if (!c.holds)
        out.fail("bound violated at n=%d (%s): value %lld vs %g", n, encode_graph6(g).c_str(), v,
                 bound.approx);
    }
  }
  out.note("connected triangle-free graphs checked (n <= %d): %lld", trifree_max_n, graphs);
  const std::pair<int, int> family[] = {{2, 1}, {2, 2}, {3, 1}};
  const long long values[] = {-2, -8, -6};
  for (int i = 0; i < 3; ++i) {
    const auto [r, p] = family[i];
    const auto fam = clique_free_equality_family(r, p);
    const long long v = nnsdn(fam.graph, Strategy::bnb).value;
    if (v != values[i]) {
      out.fail("equality family (r=%d, p=%d): value %lld, expected %lld", r, p, v, values[i]);
      continue;
    }
    const auto bound = clique_free_lower_bound(fam.graph.order(), r);
    out.expect(bound.exact && *bound.exact == Fraction(v),
               "equality family bound must be exact and attained");
  }
  return out;
}

// 9. Turan edge bound with equality exactly when r divides n.
Outcome criterion_9() {
  Outcome out;
  for (int n = 1; n <= 20; ++n) {
    for (int r = 1; r <= n; ++r) {
      const Graph t = turan_graph(n, r);
      const auto c = turan_edge_check(t, r);
      if (!c.holds) out.fail("edge bound violated for turan(%d,%d)", n, r);
      if (c.tight != (n % r == 0))
        out.fail("equality mismatch for turan(%d,%d): tight=%d, divisibility=%d", n, r,
                 int(c.tight), int(n % r == 0));
    }
  }
  return out;
}

// 10. Exhaustive characterization sweep over free trees up to n = 12; the
//     subtractive form of the leaf bound is confirmed, the additive variant's
//     tightness claim must fail.
Outcome criterion_10() {
  Outcome out;
  const long long expected_counts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  long long total = 0, plus_form_mismatches = 0;
  for (int n = 1; n <= 12; ++n) {
    long long count = 0;
    for (const Graph& t : free_trees(n)) {
      ++count;
      ++total;
      const long long v = tree_dp_nnsdn(t).value;
      const long long degree_bound = -n + 2 * ((t.max_degree() + 2) / 2);
      if (theta_membership(t) != (v == degree_bound))
        out.fail("theta mismatch at n=%d (%s)", n, encode_graph6(t).c_str());
      if (n < 3) continue;
      const auto tp = tree_profile(t);
      if (v > n - tp.ell - tp.s_prime)
        out.fail("subtractive upper bound violated at n=%d (%s)", n, encode_graph6(t).c_str());
      const bool member = omega_membership(t);
      if (member != (v == n - tp.ell - tp.s_prime))
        out.fail("omega mismatch at n=%d (%s)", n, encode_graph6(t).c_str());
      if (member != (v == n - tp.ell + tp.s_prime)) ++plus_form_mismatches;
    }
    if (count != expected_counts[n - 1])
      out.fail("tree count at n=%d: %lld, oracle-anchored expectation %lld", n, count,
               expected_counts[n - 1]);
  }
  out.note("trees checked: %lld (551 at n = 12; the documented total of 1301 matches the count "
           "of 13-vertex trees, not the n <= 12 sum)",
           total);
  out.expect(plus_form_mismatches > 0,
             "the additive-variant tightness claim should fail somewhere");
  out.note("additive-variant tightness mismatches: %lld (the subtractive form is the correct one)",
           plus_form_mismatches);
  return out;
}

// 11. Oracle and branch-and-bound agree on 300 seeded random graphs for all
//     modes; the tree solver agrees with the oracle on all free trees n <= 12.
Outcome criterion_11() {
  Outcome out;
  for (std::uint64_t i = 0; i < 300; ++i) {
    const int n = 4 + int(i % 11);  // 4..14
    const int p = (i % 3 == 0) ? 20 : (i % 3 == 1 ? 50 : 80);
    const Graph g = testref::erdos_renyi(n, p, 0xACCE55ull + i * 7919);
    for (SignMode mode : {SignMode::nnsdf, SignMode::sdf, SignMode::s2if}) {
      const auto a = solve_sign_optimum(g, mode, Strategy::oracle);
      const auto b = solve_sign_optimum(g, mode, Strategy::bnb);
      if (a.value != b.value)
        out.fail("sign mode %s disagrees on seed %llu (oracle %lld, bnb %lld)", to_string(mode),
                 (unsigned long long)i, a.value, b.value);
      if (!verify_sign_function(g, b.sign_witness(), mode) || b.sign_witness().weight() != b.value)
        out.fail("invalid witness on seed %llu", (unsigned long long)i);
    }
    for (int k = 1; k <= 2; ++k) {
      if (limited_packing_number(g, k, Strategy::oracle).value !=
          limited_packing_number(g, k, Strategy::bnb).value)
        out.fail("limited packing k=%d disagrees on seed %llu", k, (unsigned long long)i);
      if (g.min_degree() >= k - 1 &&
          tuple_domination_number(g, k, Strategy::oracle).value !=
              tuple_domination_number(g, k, Strategy::bnb).value)
        out.fail("tuple domination k=%d disagrees on seed %llu", k, (unsigned long long)i);
    }
  }
  for (int n = 1; n <= 12; ++n)
    for (const Graph& t : free_trees(n))
      for (SignMode mode : {SignMode::nnsdf, SignMode::sdf, SignMode::s2if})
        if (solve_sign_optimum(t, mode, Strategy::treedp).value !=
            solve_sign_optimum(t, mode, Strategy::oracle).value)
          out.fail("tree solver disagrees with the oracle at n=%d (%s, mode %s)", n,
                   encode_graph6(t).c_str(), to_string(mode));
  return out;
}

// 12. Parity identities on the criterion-4 corpus.
Outcome criterion_12() {
  Outcome out;
  for (const Graph& g : regular_corpus()) {
    const int r = *g.regular_degree();
    const long long gnn = nnsdn(g).value;
    if (r % 2 == 0) {
      const long long gs = sdn(g).value;
      if (gs != gnn) out.fail("even-regular equality fails: n=%d r=%d", g.order(), r);
    } else {
      const long long s2 = s2in(g).value;
      if (gnn != -s2) out.fail("odd-regular negation fails: n=%d r=%d", g.order(), r);
      const long long dom = tuple_domination_number(g, (r + 1) / 2).value;
      if (s2 != g.order() - 2 * dom)
        out.fail("odd-regular tuple identity fails: n=%d r=%d", g.order(), r);
    }
  }
  return out;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

const Criterion kCriteria[] = {
    {1, "path closed form (n = 1..15)", criterion_1},
    {2, "odd stars have value zero", criterion_2},
    {3, "a tree for every value in -5..5", criterion_3},
    {4, "regular packing/tuple identities", criterion_4},
    {5, "regular bounds and sharpness witnesses", criterion_5},
    {6, "cubic n/3 bound, tight on prism unions", criterion_6},
    {7, "prior bipartite bound refuted by the sigma family", criterion_7},
    {8, "clique-free lower bound, exhaustive triangle-free corpus", criterion_8},
    {9, "turan edge bound equality iff r divides n", criterion_9},
    {10, "tree characterizations, exhaustive to n = 12", criterion_10},
    {11, "solver cross-validation", criterion_11},
    {12, "parity identities on the regular corpus", criterion_12},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--trifree-max-n") == 0 && i + 1 < argc) {
      trifree_max_n = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--list") == 0) {
      for (const auto& c : kCriteria) std::printf("%2d  %s\n", c.id, c.title);
      return 0;
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion K] [--trifree-max-n N] [--list]\n");
      return 2;
    }
  }
  if (const char* env = std::getenv("NNSD_TRIFREE_MAX_N")) {
    const int v = std::atoi(env);
    if (v >= 1 && v <= 11) trifree_max_n = v;
  }
  if (trifree_max_n < 1 || trifree_max_n > 11) {
    std::fprintf(stderr, "trifree-max-n out of range\n");
    return 2;
  }

  int failures = 0;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.log << "    exception: " << e.what() << "\n";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d: %s  (%.2fs)  %s\n", c.id, out.pass ? "PASS" : "FAIL", secs,
                c.title);
    const std::string detail = out.log.str();
    if (!detail.empty()) std::fputs(detail.c_str(), stdout);
    if (!out.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
