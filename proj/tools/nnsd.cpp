// Command-line front end: compute parameters, generate family graphs, verify
// the identity/bound checks on files or generated corpora, and run the tree,
// regular-sample and triangle-free sweeps.
//
// Exit codes: 0 clean, 2 bad input, 3 infeasible, 4 cap exceeded, 5 a sweep
// found a mismatch.

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "nnsd/families.hpp"
#include "nnsd/graph_enum.hpp"
#include "nnsd/graph_io.hpp"
#include "nnsd/report_json.hpp"
#include "nnsd/solve.hpp"
#include "nnsd/theorems.hpp"
#include "nnsd/tree_enum.hpp"

namespace {

using namespace nnsd;

constexpr int kExitOk = 0, kExitInput = 2, kExitInfeasible = 3, kExitCap = 4, kExitFinding = 5;

struct InputOptions {
  std::string family;
  std::string input_path;
  std::string format = "auto";  // auto | graph6 | edgelist
};

struct SolverOptions {
  std::string solver = "auto";
  int oracle_cap = -1;
};

Strategy parse_strategy(const std::string& s) {
  if (s == "auto") return Strategy::automatic;
  if (s == "oracle") return Strategy::oracle;
  if (s == "bnb") return Strategy::bnb;
  if (s == "treedp") return Strategy::treedp;
  throw BadParams("unknown solver \"" + s + "\"");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadInput("cannot open input file \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    return std::isdigit(static_cast<unsigned char>(line[i])) != 0;
  }
  return false;
}

std::vector<Graph> load_graphs(const InputOptions& in) {
  if (!in.family.empty()) return {build_family(in.family)};
  const std::string text = read_file(in.input_path);
  std::string format = in.format;
  if (format == "auto") format = looks_like_edge_list(text) ? "edgelist" : "graph6";
  if (format == "edgelist") return {parse_edge_list(text)};
  if (format != "graph6") throw BadParams("unknown format \"" + format + "\"");
  std::vector<Graph> graphs;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(decode_graph6(line));
  }
  if (graphs.empty()) throw BadInput("no graphs in input");
  return graphs;
}

void warn_duplicates(const Graph& g) {
  if (g.had_duplicate_edges())
    std::cerr << "warning: duplicate edges in input were collapsed\n";
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BadInput("cannot open output file \"" + path + "\"");
  out << content;
}

template <typename Fn>
void parallel_for(int count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const int workers = std::min(jobs, count);
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

int default_jobs() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : int(hc);
}

// ---- compute ---------------------------------------------------------------

int cmd_compute(const InputOptions& in, const SolverOptions& sv, const std::string& param,
                const std::string& output) {
  Graph g = load_graphs(in).front();
  warn_duplicates(g);
  const Strategy strat = parse_strategy(sv.solver);
  ParameterResult result;
  if (param == "nnsdn") {
    result = nnsdn(g, strat, sv.oracle_cap);
  } else if (param == "sdn") {
    result = sdn(g, strat, sv.oracle_cap);
  } else if (param == "s2in") {
    result = s2in(g, strat, sv.oracle_cap);
  } else if (param.rfind("lk:", 0) == 0) {
    result = limited_packing_number(g, std::stoi(param.substr(3)), strat, sv.oracle_cap);
  } else if (param.rfind("tupledom:", 0) == 0) {
    result = tuple_domination_number(g, std::stoi(param.substr(9)), strat, sv.oracle_cap);
  } else {
    throw BadParams("unknown parameter selector \"" + param + "\"");
  }
  write_output(output, to_json(result, param, g.order()).dump() + "\n");
  return kExitOk;
}

// ---- generate ----------------------------------------------------------------

int cmd_generate(const std::string& family, const std::string& format, const std::string& output) {
  Graph g = build_family(family);
  if (format == "graph6") {
    write_output(output, encode_graph6(g) + "\n");
  } else if (format == "edgelist") {
    write_output(output, emit_edge_list(g));
  } else {
    throw BadParams("unknown format \"" + format + "\"");
  }
  return kExitOk;
}

// ---- verify ------------------------------------------------------------------

int cmd_verify(const InputOptions& in, const SolverOptions& sv, const std::string& omega_reading,
               bool all_clique_free_r, int jobs, const std::string& output) {
  const auto graphs = load_graphs(in);
  for (const Graph& g : graphs) warn_duplicates(g);
  ReportOptions opt;
  opt.strategy = parse_strategy(sv.solver);
  opt.oracle_cap = sv.oracle_cap;
  opt.sweep_all_clique_free_r = all_clique_free_r;
  if (omega_reading == "anchored-supports")
    opt.omega_reading = OmegaReading::anchored_supports;
  else if (omega_reading == "all-supports")
    opt.omega_reading = OmegaReading::all_supports;
  else if (omega_reading == "all-vertices")
    opt.omega_reading = OmegaReading::all_vertices;
  else
    throw BadParams("unknown omega reading \"" + omega_reading + "\"");

  std::vector<VerificationReport> reports(graphs.size());
  std::string error;
  std::mutex error_mutex;
  parallel_for(int(graphs.size()), jobs, [&](int i) {
    try {
      reports[i] = run_report(graphs[i], opt);
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(error_mutex);
      error = e.what();
    }
  });
  if (!error.empty()) throw BadInput(error);

  std::ostringstream out;
  long long holds = 0, violations = 0, refutations = 0;
  for (const auto& rep : reports) {
    out << to_json(rep).dump() << "\n";
    for (const auto& c : rep.checks) {
      if (c.name == "bipartite_prior_bound") continue;
      if (c.holds) ++holds; else ++violations;
    }
    if (rep.refuted_prior_bound.value_or(false)) ++refutations;
  }
  out << Json{{"summary", Json{{"graphs", reports.size()},
                               {"checks_held", holds},
                               {"violations", violations},
                               {"refuted_prior_bound_count", refutations}}}}
             .dump()
      << "\n";
  write_output(output, out.str());
  return violations == 0 ? kExitOk : kExitFinding;
}

// ---- sweeps -------------------------------------------------------------------

struct SweepEmit {
  std::string output_format = "csv";
  std::string output;
};

int emit_sweep(const SweepEmit& emit, const std::string& csv_header,
               const std::vector<std::vector<long long>>& rows, long long findings) {
  std::ostringstream out;
  if (emit.output_format == "csv") {
    out << csv_header << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << "\n";
    }
  } else if (emit.output_format == "json") {
    std::vector<std::string> cols;
    std::istringstream hs(csv_header);
    std::string col;
    while (std::getline(hs, col, ',')) cols.push_back(col);
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json obj;
      for (std::size_t i = 0; i < row.size(); ++i) obj[cols[i]] = row[i];
      arr.push_back(std::move(obj));
    }
    out << arr.dump() << "\n";
  } else {
    throw BadParams("unknown output format \"" + emit.output_format + "\"");
  }
  write_output(emit.output, out.str());
  return findings == 0 ? kExitOk : kExitFinding;
}

int cmd_sweep_trees(int max_n, int jobs, const SweepEmit& emit) {
  if (max_n < 1 || max_n > 14) throw BadParams("sweep trees: 1 <= max-n <= 14");
  std::vector<std::vector<long long>> rows;
  long long total_mismatches = 0;
  for (int n = 1; n <= max_n; ++n) {
    const auto trees = free_trees(n);
    std::vector<int> theta_flags(trees.size()), omega_flags(trees.size()), mismatch(trees.size());
    parallel_for(int(trees.size()), jobs, [&](int i) {
      const Graph& t = trees[i];
      const long long v = tree_dp_nnsdn(t).value;
      const auto tp = tree_profile(t);
      const bool theta = theta_membership(t);
      theta_flags[i] = theta;
      const long long degree_bound = -n + 2 * ((t.max_degree() + 2) / 2);
      int bad = (theta != (v == degree_bound)) ? 1 : 0;
      if (n >= 3) {
        const bool omega = omega_membership(t);
        omega_flags[i] = omega;
        if (v > n - tp.ell - tp.s_prime) ++bad;  // upper bound itself
        if (omega != (v == n - tp.ell - tp.s_prime)) ++bad;
      }
      mismatch[i] = bad;
    });
    long long thetas = 0, omegas = 0, bad = 0;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      thetas += theta_flags[i];
      omegas += omega_flags[i];
      bad += mismatch[i];
    }
    total_mismatches += bad;
    rows.push_back({n, (long long)trees.size(), thetas, omegas, bad});
  }
  return emit_sweep(emit, "n,trees,theta_members,omega_members,mismatches", rows, total_mismatches);
}

int cmd_sweep_regular(int n, int r, int samples, long long seed, int jobs, const SweepEmit& emit) {
  if (n < 2 || r < 1 || r >= n || samples < 1) throw BadParams("sweep regular: bad ranges");
  if ((n * r) % 2 != 0) throw BadParams("sweep regular: n*r must be even");
  std::vector<int> violations(samples, 0);
  std::string error;
  std::mutex error_mutex;
  parallel_for(samples, jobs, [&](int i) {
    try {
      const Graph g = random_regular(n, r, std::uint64_t(seed) + std::uint64_t(i));
      int bad = 0;
      for (const auto& c : check_regular_identities(g))
        if (!c.holds) ++bad;
      const auto [lo, hi] = regular_bounds(n, r);
      const long long v = nnsdn(g).value;
      if (Fraction(v) < lo || hi < Fraction(v)) ++bad;
      if (r == 3 && !cubic_upper_check(g).holds) ++bad;
      violations[i] = bad;
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(error_mutex);
      error = e.what();
      violations[i] = 1;
    }
  });
  if (!error.empty()) std::cerr << "warning: " << error << "\n";
  long long total = 0;
  for (int v : violations) total += v;
  std::vector<std::vector<long long>> rows{{n, r, samples, total}};
  return emit_sweep(emit, "n,r,samples,violations", rows, total);
}

int cmd_sweep_clique_free(int max_n, int jobs, const SweepEmit& emit) {
  if (max_n < 1 || max_n > 10) throw BadParams("sweep clique-free: 1 <= max-n <= 10");
  const auto classes = connected_triangle_free_classes(max_n);
  std::vector<std::vector<long long>> rows;
  long long total = 0;
  for (int n = 1; n <= max_n; ++n) {
    const auto& graphs = classes[n];
    std::vector<int> violations(graphs.size(), 0);
    parallel_for(int(graphs.size()), jobs, [&](int i) {
      const long long v = nnsdn(graphs[i]).value;
      const auto bound = clique_free_lower_bound(n, 2);
      const auto check = make_check("clique_free_lower_bound", v, ">=", bound);
      violations[i] = check.holds ? 0 : 1;
    });
    long long bad = 0;
    for (int v : violations) bad += v;
    total += bad;
    rows.push_back({n, (long long)graphs.size(), bad});
  }
  return emit_sweep(emit, "n,graphs,violations", rows, total);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact nonnegative signed domination toolkit"};
  app.require_subcommand(1);

  InputOptions in;
  SolverOptions sv;
  std::string param = "nnsdn", output, gen_format = "graph6";
  std::string omega_reading = "anchored-supports";
  bool all_clique_free_r = false;
  int jobs = default_jobs();

  auto add_input_flags = [&](CLI::App* cmd) {
    auto* fam = cmd->add_option("--family", in.family, "family spec, e.g. sigma:3 or turan:6:3");
    auto* file = cmd->add_option("--input", in.input_path, "input graph file");
    cmd->add_option("--format", in.format, "input format: auto|graph6|edgelist");
    fam->excludes(file);
    file->excludes(fam);
  };
  auto add_solver_flags = [&](CLI::App* cmd) {
    cmd->add_option("--solver", sv.solver, "auto|oracle|bnb|treedp");
    cmd->add_option("--oracle-cap", sv.oracle_cap,
                    "vertex cap for the oracle (env NNSD_ORACLE_CAP)");
  };

  auto* compute = app.add_subcommand("compute", "compute one parameter with a witness");
  add_input_flags(compute);
  add_solver_flags(compute);
  compute->add_option("--param", param, "nnsdn|sdn|s2in|lk:K|tupledom:K");
  compute->add_option("--output", output, "write to file instead of stdout");

  std::string gen_family;
  auto* generate = app.add_subcommand("generate", "emit a family graph");
  generate->add_option("--family", gen_family, "family spec")->required();
  generate->add_option("--format", gen_format, "graph6|edgelist");
  generate->add_option("--output", output, "write to file instead of stdout");

  auto* verify = app.add_subcommand("verify", "run every applicable check per graph");
  add_input_flags(verify);
  add_solver_flags(verify);
  verify->add_option("--omega-reading", omega_reading,
                     "anchored-supports|all-supports|all-vertices");
  verify->add_flag("--all-clique-free-r", all_clique_free_r,
                   "check the clique-free bound for every admissible r");
  verify->add_option("--jobs", jobs, "worker pool size");
  verify->add_option("--output", output, "write to file instead of stdout");

  auto* sweep = app.add_subcommand("sweep", "exhaustive or sampled theorem sweeps");
  sweep->require_subcommand(1);
  SweepEmit emit;
  int max_n = 10, reg_n = 10, reg_r = 3, reg_samples = 20;
  long long reg_seed = 1;

  auto* trees = sweep->add_subcommand("trees", "all free trees up to max-n");
  trees->add_option("--max-n", max_n, "largest order (<= 14)");
  trees->add_option("--jobs", jobs, "worker pool size");
  trees->add_option("--output-format", emit.output_format, "csv|json");
  trees->add_option("--output", emit.output, "write to file instead of stdout");

  auto* regular = sweep->add_subcommand("regular", "seeded random regular samples");
  regular->add_option("--n", reg_n, "order")->required();
  regular->add_option("--r", reg_r, "degree")->required();
  regular->add_option("--samples", reg_samples, "number of draws");
  regular->add_option("--seed", reg_seed, "base seed");
  regular->add_option("--jobs", jobs, "worker pool size");
  regular->add_option("--output-format", emit.output_format, "csv|json");
  regular->add_option("--output", emit.output, "write to file instead of stdout");

  auto* cliquefree = sweep->add_subcommand("clique-free",
                                           "all connected triangle-free graphs up to max-n");
  cliquefree->add_option("--max-n", max_n, "largest order (<= 10)");
  cliquefree->add_option("--jobs", jobs, "worker pool size");
  cliquefree->add_option("--output-format", emit.output_format, "csv|json");
  cliquefree->add_option("--output", emit.output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*compute) return cmd_compute(in, sv, param, output);
    if (*generate) return cmd_generate(gen_family, gen_format, output);
    if (*verify) return cmd_verify(in, sv, omega_reading, all_clique_free_r, jobs, output);
    if (*trees) return cmd_sweep_trees(max_n, jobs, emit);
    if (*regular) return cmd_sweep_regular(reg_n, reg_r, reg_samples, reg_seed, jobs, emit);
    if (*cliquefree) return cmd_sweep_clique_free(max_n, jobs, emit);
  } catch (const Infeasible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
