// Copyright 2026 The sysvar Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sysvar/cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sysvar/clearing.hpp"
#include "sysvar/convergence.hpp"
#include "sysvar/errors.hpp"
#include "sysvar/io.hpp"
#include "sysvar/kernels.hpp"
#include "sysvar/log.hpp"
#include "sysvar/netgen.hpp"
#include "sysvar/parallel.hpp"
#include "sysvar/saa.hpp"
#include "sysvar/scalarize.hpp"
#include "sysvar/shocks.hpp"

#ifndef SYSVAR_VERSION
#define SYSVAR_VERSION "0.1.0"
#endif

namespace sysvar::cli {
namespace {

using nlohmann::json;

// Thrown by handlers after writing an artifact that records an empty risk set.
struct InfeasibleOutcome {};

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

class Session {
 public:
  json config = json::object();

  void write(const std::string& path, const std::string& content) {
    io::write_atomic(path, content);
    outputs_.push_back(path);
  }

  void write_json(const std::string& path, json doc) {
    doc["config"] = config;
    write(path, doc.dump(2) + "\n");
  }

  void write_manifest(const std::string& subcommand, double seconds) {
    if (outputs_.empty()) return;
    const std::filesystem::path first(outputs_.front());
    const std::filesystem::path dir = first.has_parent_path() ? first.parent_path() : ".";
    json doc;
    doc["subcommand"] = subcommand;
    doc["version"] = SYSVAR_VERSION;
    doc["config"] = config;
    doc["config_hash"] = fnv1a_hex(config.dump());
    doc["outputs"] = outputs_;
    doc["threads"] = thread_count();
    doc["wall_time_seconds"] = seconds;
    io::write_atomic((dir / "manifest.json").string(), doc.dump(2) + "\n");
  }

 private:
  std::vector<std::string> outputs_;
};

io::NetworkFile load_network(const std::string& path) {
  return io::network_from_json(json::parse(io::read_file(path)));
}

struct AlphaFlags {
  std::optional<double> alpha;
  std::optional<double> alpha_frac;

  void add(CLI::App* cmd) {
    auto* a = cmd->add_option("--alpha", alpha, "Threshold on aggregate payments");
    auto* f = cmd->add_option("--alpha-frac", alpha_frac,
                              "Threshold as a fraction of total obligations");
    a->excludes(f);
  }

  double resolve(const FinancialNetwork& net, json& config) const {
    if (alpha_frac) {
      config["alpha_frac"] = *alpha_frac;
      const double value = *alpha_frac * net.total_obligations();
      config["alpha"] = value;
      return value;
    }
    if (!alpha) throw ValidationError("one of --alpha or --alpha-frac is required");
    config["alpha"] = *alpha;
    return *alpha;
  }
};

Vector to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// ---- gen-network ---------------------------------------------------------

struct GenNetworkArgs {
  netgen::BollobasParams params;
  int core_size = 0;
  std::vector<double> m;
  bool no_repair = false;
  std::string out;
  std::string edges;
};

void gen_network(Session& s, const GenNetworkArgs& a) {
  if (a.m.size() != 4) throw ValidationError("--m expects 4 numbers (CC,CP,PC,PP)");
  s.config = {{"theta", a.params.theta},         {"eta", a.params.eta},
              {"zeta", a.params.zeta},           {"delta_in", a.params.delta_in},
              {"delta_out", a.params.delta_out}, {"nodes", a.params.target_nodes},
              {"core_size", a.core_size},        {"m", a.m},
              {"seed", a.params.seed},           {"repair", !a.no_repair}};
  const netgen::DirectedMultigraph graph = netgen::generate_bollobas(a.params);
  netgen::IntergroupLiabilityMatrix m{Matrix(2, 2)};
  m.m << a.m[0], a.m[1], a.m[2], a.m[3];
  const netgen::LiabilityStructure ls =
      netgen::build_liabilities(graph, a.core_size, m, {!a.no_repair});
  json doc = io::network_to_json(ls.network, ls.grouping, &ls.adjacency);
  doc["rule_counts"] = graph.rule_counts;
  json repaired = json::array();
  for (const auto& [i, j] : ls.repaired) repaired.push_back({i, j});
  doc["repaired"] = std::move(repaired);
  s.write_json(a.out, std::move(doc));
  if (!a.edges.empty()) s.write(a.edges, io::edges_to_csv(graph));
}

// ---- sample-shocks -------------------------------------------------------

struct SampleShocksArgs {
  std::string network;
  shocks::ShockParams params;
  std::string out;
};

void sample_shocks(Session& s, const SampleShocksArgs& a) {
  s.config = {{"network", a.network}, {"nu", a.params.nu},   {"beta", a.params.beta_by_group},
              {"rho", a.params.rho},  {"n", a.params.count}, {"seed", a.params.seed}};
  const io::NetworkFile nf = load_network(a.network);
  s.write(a.out, io::scenarios_to_csv(shocks::sample_shocks(a.params, nf.grouping)));
}

// ---- clear / enumerate ---------------------------------------------------

ScenarioSet read_x(const std::string& spec, int d) {
  ScenarioSet xs;
  if (std::filesystem::exists(spec)) {
    xs = io::scenarios_from_csv(io::read_file(spec));
  } else {
    const Vector x = io::parse_vector(spec);
    xs.values = RowMatrix(1, x.size());
    xs.values.row(0) = x.transpose();
  }
  if (xs.dimension() != d) throw ValidationError("--x has the wrong dimension");
  return xs;
}

struct ClearArgs {
  std::string network;
  std::string x;
  std::string method = "fp";
  std::vector<double> weights;
  std::string out;
};

void clear(Session& s, const ClearArgs& a) {
  s.config = {{"network", a.network}, {"x", a.x}, {"method", a.method}, {"weights", a.weights}};
  if (a.method != "fp" && a.method != "lp") throw ValidationError("--method must be fp or lp");
  const io::NetworkFile nf = load_network(a.network);
  const int d = nf.network.size();
  const ScenarioSet xs = read_x(a.x, d);
  const Vector w = a.weights.empty() ? Vector::Ones(d) : to_vector(a.weights);
  json results = json::array();
  for (int n = 0; n < xs.count(); ++n) {
    const Vector x = xs.scenario(n);
    const clearing::ClearingResult r = a.method == "fp"
                                           ? clearing::clearing_fixed_point(nf.network, x)
                                           : clearing::clearing_lp(nf.network, x, w);
    json item;
    item["x"] = io::vector_to_json(x);
    item["p"] = io::vector_to_json(r.p);
    item["defaults"] = r.defaults;
    item["total_payment"] = r.total_payment;
    item["iterations"] = r.iterations;
    results.push_back(std::move(item));
  }
  s.write_json(a.out, {{"results", std::move(results)}});
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

struct EnumerateArgs {
  std::string network;
  std::string x;
  std::string out;
};

void enumerate(Session& s, const EnumerateArgs& a) {
  s.config = {{"network", a.network}, {"x", a.x}};
  const io::NetworkFile nf = load_network(a.network);
  const ScenarioSet xs = read_x(a.x, nf.network.size());
  if (xs.count() != 1) throw ValidationError("enumerate takes a single cash-flow vector");
  json polys = json::array();
  for (const clearing::ClearingPolytope& p :
       clearing::enumerate_clearing_vectors(nf.network, xs.scenario(0))) {
    polys.push_back({{"y", p.y},
                     {"A_eq", matrix_json(p.a_eq)},
                     {"b_eq", io::vector_to_json(p.b_eq)},
                     {"A_ub", matrix_json(p.a_ub)},
                     {"b_ub", io::vector_to_json(p.b_ub)}});
  }
  s.write_json(a.out, {{"polytopes", std::move(polys)}});
}

// ---- scalarize -----------------------------------------------------------

struct ProblemArgs {
  std::string network;
  std::string scenarios;
  AlphaFlags alpha;
  double lambda = 0.0;
  long node_budget = 100'000;
  std::string ideal_method = "auto";

  void add(CLI::App* cmd) {
    cmd->add_option("--network", network, "Network JSON")->required();
    cmd->add_option("--scenarios", scenarios, "Scenario CSV")->required();
    alpha.add(cmd);
    cmd->add_option("--lambda", lambda, "Level in (0,1)")->required();
    cmd->add_option("--node-budget", node_budget, "Branch-and-bound node budget");
    cmd->add_option("--ideal-method", ideal_method, "auto, milp or bisection");
  }
};

struct Loaded {
  io::NetworkFile nf;
  ScenarioSet scenarios;
  RiskSpec spec;
};

Loaded load_problem(Session& s, const ProblemArgs& p) {
  Loaded out{load_network(p.network), io::scenarios_from_csv(io::read_file(p.scenarios)), {}};
  s.config["network"] = p.network;
  s.config["scenarios"] = p.scenarios;
  out.spec.alpha = p.alpha.resolve(out.nf.network, s.config);
  out.spec.lambda = p.lambda;
  s.config["lambda"] = p.lambda;
  s.config["node_budget"] = p.node_budget;
  s.config["ideal_method"] = p.ideal_method;
  out.spec.validate();
  return out;
}

struct ScalarizeArgs {
  ProblemArgs problem;
  std::vector<double> weights;
  std::vector<double> point;
  bool ideal = false;
  std::string out;
};

void scalarize(Session& s, const ScalarizeArgs& a) {
  const int modes = (a.weights.empty() ? 0 : 1) + (a.point.empty() ? 0 : 1) + (a.ideal ? 1 : 0);
  if (modes != 1) throw ValidationError("give exactly one of --weights, --point or --ideal");
  const Loaded L = load_problem(s, a.problem);
  const Instance inst{L.nf.network, L.nf.grouping, L.scenarios, L.spec};
  optim::MipOptions mip;
  mip.node_budget = a.problem.node_budget;
  json doc;
  bool feasible = false;
  if (a.ideal) {
    s.config["ideal"] = true;
    const IdealPoint ip = ideal_point(inst, parse_ideal_method(a.problem.ideal_method));
    doc["kind"] = "ideal";
    feasible = ip.feasible;
    doc["feasible"] = feasible;
    if (feasible) doc["z"] = io::vector_to_json(ip.z);
  } else {
    ScalarResult r;
    if (!a.weights.empty()) {
      s.config["weights"] = a.weights;
      doc["kind"] = "weighted_sum";
      r = weighted_sum(inst, to_vector(a.weights), mip);
    } else {
      s.config["point"] = a.point;
      doc["kind"] = "norm_min";
      r = norm_min(inst, to_vector(a.point), mip);
    }
    feasible = r.feasible;
    doc["feasible"] = r.feasible;
    if (r.feasible) {
      doc["optimal"] = r.optimal;
      doc["value"] = r.value;
      doc["bound"] = r.bound;
      doc["z"] = io::vector_to_json(r.z);
      doc["nodes"] = r.nodes;
    }
  }
  s.write_json(a.out, std::move(doc));
  if (!feasible) throw InfeasibleOutcome{};
}

// ---- saa -----------------------------------------------------------------

struct SaaArgs {
  ProblemArgs problem;
  double epsilon = 0.0;
  int algo = 1;
  std::string traversal = "lines";
  std::uint64_t shuffle_seed = 0;
  std::string out;
};

void saa_cmd(Session& s, const SaaArgs& a) {
  const Loaded L = load_problem(s, a.problem);
  s.config["epsilon"] = a.epsilon;
  s.config["algo"] = a.algo;
  s.config["traversal"] = a.traversal;
  s.config["shuffle_seed"] = a.shuffle_seed;
  if (a.algo != 1 && a.algo != 2) throw ValidationError("--algo must be 1 or 2");
  saa::AlgorithmOptions opt;
  opt.traversal = saa::parse_traversal(a.traversal);
  opt.shuffle_seed = a.shuffle_seed;
  opt.ideal_method = parse_ideal_method(a.problem.ideal_method);
  opt.mip.node_budget = a.problem.node_budget;
  const Instance inst{L.nf.network, L.nf.grouping, L.scenarios, L.spec};
  const saa::ApproxSet set =
      a.algo == 1 ? saa::algorithm1(inst, a.epsilon, opt) : saa::algorithm2(inst, a.epsilon, opt);
  s.write_json(a.out, io::approx_set_to_json(set));
  if (!set.feasible) throw InfeasibleOutcome{};
}

// ---- converge ------------------------------------------------------------

struct ConvergeArgs {
  std::string network;
  shocks::ShockParams shocks;
  AlphaFlags alpha;
  double lambda = 0.0;
  double epsilon = 0.0;
  std::vector<int> n_list{25, 50, 100, 200};
  int n_ref = 400;
  int seeds = 10;
  std::string ideal_method = "auto";
  std::string out;
};

void converge(Session& s, const ConvergeArgs& a) {
  s.config = {{"network", a.network}, {"nu", a.shocks.nu},    {"beta", a.shocks.beta_by_group},
              {"rho", a.shocks.rho},  {"seed", a.shocks.seed}, {"lambda", a.lambda},
              {"epsilon", a.epsilon}, {"n_list", a.n_list},    {"n_ref", a.n_ref},
              {"seeds", a.seeds},     {"ideal_method", a.ideal_method}};
  const io::NetworkFile nf = load_network(a.network);
  RiskSpec spec;
  spec.alpha = a.alpha.resolve(nf.network, s.config);
  spec.lambda = a.lambda;
  saa::ConvergenceConfig cfg;
  cfg.sample_sizes = a.n_list;
  cfg.reference_size = a.n_ref;
  cfg.seeds = a.seeds;
  cfg.epsilon = a.epsilon;
  cfg.algorithm.ideal_method = parse_ideal_method(a.ideal_method);
  shocks::ShockParams sp = a.shocks;
  sp.count = a.n_ref;
  const saa::ConvergenceTable table = saa::convergence_study(nf.network, nf.grouping, sp, spec, cfg);
  s.write(a.out, io::convergence_to_csv(table));
}

// ---- stats ---------------------------------------------------------------

struct StatsArgs {
  std::string network;
  std::string scenarios;
  AlphaFlags alpha;
  std::optional<double> lambda;
  std::string out;
};

void stats(Session& s, const StatsArgs& a) {
  s.config = {{"network", a.network}};
  const io::NetworkFile nf = load_network(a.network);
  if (!nf.adjacency) throw ValidationError("network file carries no adjacency matrix");
  const netgen::NetworkStats st = netgen::network_stats(*nf.adjacency, nf.grouping);
  json doc = {{"avg_degree", st.avg_degree},
              {"density", st.density},
              {"total_clustering", st.total_clustering},
              {"cpe", st.cpe},
              {"cpi", st.cpi}};
  if (!a.scenarios.empty()) {
    s.config["scenarios"] = a.scenarios;
    if (!a.lambda) throw ValidationError("--lambda is required with --scenarios");
    RiskSpec spec;
    spec.alpha = a.alpha.resolve(nf.network, s.config);
    spec.lambda = *a.lambda;
    s.config["lambda"] = *a.lambda;
    spec.validate();
    const ScenarioSet sc = io::scenarios_from_csv(io::read_file(a.scenarios));
    const Vector agg = kernels::aggregates(nf.network, nf.grouping, sc, Vector::Zero(nf.grouping.g));
    doc["insensitive"] = {{"r", saa::insensitive_saa(agg, spec)},
                          {"aggregate_min", agg.minCoeff()},
                          {"aggregate_max", agg.maxCoeff()}};
  }
  s.write_json(a.out, std::move(doc));
}

// ---- plotdata ------------------------------------------------------------

struct PlotArgs {
  std::string in;
  std::string out;
};

void plotdata(Session& s, const PlotArgs& a) {
  s.config = {{"in", a.in}};
  const saa::ApproxSet set = io::approx_set_from_json(json::parse(io::read_file(a.in)));
  s.write(a.out, io::staircase_csv(set));
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Set-valued systemic value-at-risk for Eisenberg-Noe networks", "sysvar"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  std::string log_level = "warn";
  app.add_option("--threads", threads, "Worker threads (SYSVAR_THREADS overrides)");
  app.add_option("--log-level", log_level, "debug, info, warn, error or off");

  GenNetworkArgs gen;
  auto* c_gen = app.add_subcommand("gen-network", "Generate a core-periphery liability network");
  c_gen->add_option("--theta", gen.params.theta);
  c_gen->add_option("--eta", gen.params.eta);
  c_gen->add_option("--zeta", gen.params.zeta);
  c_gen->add_option("--delta-in", gen.params.delta_in);
  c_gen->add_option("--delta-out", gen.params.delta_out);
  c_gen->add_option("--nodes", gen.params.target_nodes)->required();
  c_gen->add_option("--core-size", gen.core_size)->required();
  c_gen->add_option("--m,--m-matrix", gen.m, "Per-link liabilities CC,CP,PC,PP")
      ->delimiter(',')
      ->required();
  c_gen->add_option("--seed", gen.params.seed);
  c_gen->add_flag("--no-repair", gen.no_repair, "Reject nodes without obligations");
  c_gen->add_option("--out", gen.out)->required();
  c_gen->add_option("--edges", gen.edges, "Optional edge-list CSV");

  SampleShocksArgs sh;
  auto* c_sh = app.add_subcommand("sample-shocks", "Sample operating cash-flow scenarios");
  c_sh->add_option("--network", sh.network)->required();
  c_sh->add_option("--nu", sh.params.nu);
  c_sh->add_option("--beta", sh.params.beta_by_group, "Scale per group")->delimiter(',')->required();
  c_sh->add_option("--rho", sh.params.rho);
  c_sh->add_option("--n", sh.params.count)->required();
  c_sh->add_option("--seed", sh.params.seed);
  c_sh->add_option("--out", sh.out)->required();

  ClearArgs cl;
  auto* c_cl = app.add_subcommand("clear", "Compute the maximal clearing vector");
  c_cl->add_option("--network", cl.network)->required();
  c_cl->add_option("--x", cl.x, "Cash flows: comma list or scenario CSV file")->required();
  c_cl->add_option("--method", cl.method, "fp or lp");
  c_cl->add_option("--weights", cl.weights, "LP objective weights")->delimiter(',');
  c_cl->add_option("--out", cl.out)->required();

  EnumerateArgs en;
  auto* c_en = app.add_subcommand("enumerate", "Enumerate all clearing vectors by default pattern");
  c_en->add_option("--network", en.network)->required();
  c_en->add_option("--x", en.x)->required();
  c_en->add_option("--out", en.out)->required();

  ScalarizeArgs sc;
  auto* c_sc = app.add_subcommand("scalarize", "Weighted-sum, norm-minimizing or ideal point");
  sc.problem.add(c_sc);
  c_sc->add_option("--weights", sc.weights)->delimiter(',');
  c_sc->add_option("--point", sc.point)->delimiter(',');
  c_sc->add_flag("--ideal", sc.ideal);
  c_sc->add_option("--out", sc.out)->required();

  SaaArgs sa;
  auto* c_sa = app.add_subcommand("saa", "Grid approximation of the SAA risk set");
  sa.problem.add(c_sa);
  c_sa->add_option("--epsilon", sa.epsilon)->required();
  c_sa->add_option("--algo", sa.algo, "1 (membership) or 2 (norm minimization)");
  c_sa->add_option("--traversal", sa.traversal, "lines, l1 or shuffled");
  c_sa->add_option("--shuffle-seed", sa.shuffle_seed);
  c_sa->add_option("--out", sa.out)->required();

  ConvergeArgs cv;
  auto* c_cv = app.add_subcommand("converge", "Sample-size convergence study");
  c_cv->add_option("--network", cv.network)->required();
  c_cv->add_option("--nu", cv.shocks.nu);
  c_cv->add_option("--beta", cv.shocks.beta_by_group)->delimiter(',')->required();
  c_cv->add_option("--rho", cv.shocks.rho);
  c_cv->add_option("--seed", cv.shocks.seed);
  cv.alpha.add(c_cv);
  c_cv->add_option("--lambda", cv.lambda)->required();
  c_cv->add_option("--epsilon", cv.epsilon)->required();
  c_cv->add_option("--n-list", cv.n_list)->delimiter(',');
  c_cv->add_option("--n-ref", cv.n_ref);
  c_cv->add_option("--seeds", cv.seeds);
  c_cv->add_option("--ideal-method", cv.ideal_method);
  c_cv->add_option("--out", cv.out)->required();

  StatsArgs st;
  auto* c_st = app.add_subcommand("stats", "Network statistics and the insensitive SAA value");
  c_st->add_option("--network", st.network)->required();
  c_st->add_option("--scenarios", st.scenarios);
  st.alpha.add(c_st);
  c_st->add_option("--lambda", st.lambda);
  c_st->add_option("--out", st.out)->required();

  PlotArgs pl;
  auto* c_pl = app.add_subcommand("plotdata", "Staircase boundary CSV of a g=2 approximation");
  c_pl->add_option("--in", pl.in)->required();
  c_pl->add_option("--out", pl.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitValidation;
  }

  Session session;
  const auto start = std::chrono::steady_clock::now();
  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  try {
    log::set_level(log::parse_level(log_level));
    if (threads < 0) throw ValidationError("--threads must be nonnegative");
    set_thread_count(threads);
    const std::map<std::string, std::function<void()>> handlers = {
        {"gen-network", [&] { gen_network(session, gen); }},
        {"sample-shocks", [&] { sample_shocks(session, sh); }},
        {"clear", [&] { clear(session, cl); }},
        {"enumerate", [&] { enumerate(session, en); }},
        {"scalarize", [&] { scalarize(session, sc); }},
        {"saa", [&] { saa_cmd(session, sa); }},
        {"converge", [&] { converge(session, cv); }},
        {"stats", [&] { stats(session, st); }},
        {"plotdata", [&] { plotdata(session, pl); }},
    };
    int code = kExitOk;
    try {
      handlers.at(name)();
    } catch (const InfeasibleOutcome&) {
      std::cerr << "sysvar " << name << ": risk set is empty for this configuration\n";
      code = kExitInfeasible;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    session.write_manifest(name, seconds);
    log::emit(log::Level::kInfo, "done", {{"subcommand", name}, {"seconds", seconds}});
    return code;
  } catch (const ValidationError& e) {
    std::cerr << "sysvar " << name << ": invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DomainError& e) {
    std::cerr << "sysvar " << name << ": invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const json::exception& e) {
    std::cerr << "sysvar " << name << ": malformed JSON: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InfeasibleError& e) {
    std::cerr << "sysvar " << name << ": infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const CapacityError& e) {
    std::cerr << "sysvar " << name << ": capacity exceeded: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const SolverError& e) {
    std::cerr << "sysvar " << name << ": solver failure: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "sysvar " << name << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sysvar::cli
