#include "spp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>

#include "spp/bench.hpp"
#include "spp/generate.hpp"
#include "spp/io.hpp"
#include "spp/oracle.hpp"
#include "spp/search.hpp"

namespace spp {

namespace {

using nlohmann::json;

struct InstanceArgs {
  std::string graph;
  long long s = 0;
  long long t = 0;
  int k = 0;
  int ell = 0;
  bool json = false;
};

void add_instance_options(CLI::App* cmd, InstanceArgs& a) {
  cmd->add_option("graph", a.graph, "Graph file")->required();
  cmd->add_option("--s", a.s, "Source vertex (1-based)")->required();
  cmd->add_option("--t", a.t, "Target vertex (1-based)")->required();
  cmd->add_option("--k", a.k, "Number of paths")->required();
  cmd->add_option("--ell", a.ell, "Maximum path length")->required();
  cmd->add_flag("--json", a.json, "Print JSON");
}

SppInstance load_instance(const InstanceArgs& a) {
  auto g = std::make_shared<const Graph>(read_graph_file(a.graph));
  const auto n = static_cast<long long>(g->vertex_count());
  if (a.s < 1 || a.s > n || a.t < 1 || a.t > n) {
    throw UsageError("terminals must lie in 1.." + std::to_string(n));
  }
  SppInstance inst{g, static_cast<Vertex>(a.s - 1), static_cast<Vertex>(a.t - 1), a.k, a.ell};
  inst.check();
  return inst;
}

json path_json(const Path& p) {
  json out = json::array();
  for (Vertex v : p.vertices) out.push_back(v + 1);
  return out;
}

json witness_json(const std::optional<Solution>& sol) {
  if (!sol) return nullptr;
  json out = json::array();
  for (const Path& p : sol->paths) out.push_back(path_json(p));
  return out;
}

json stats_json(const SolveStats& st) {
  return {{"nodes", st.nodes},
          {"br1", st.br1},
          {"br2", st.br2},
          {"br3", st.br3},
          {"prunes_len", st.prunes_len},
          {"prunes_bcpl", st.prunes_bcpl},
          {"prunes_bsp", st.prunes_bsp},
          {"bfi_recorded", st.bfi_recorded},
          {"bfi_masked", st.bfi_masked},
          {"bfi_skipped", st.bfi_skipped},
          {"dms_fired", st.dms_fired},
          {"max_depth", st.max_depth},
          {"solved_by", st.solved_by},
          {"trivial_rule", st.trivial_rule},
          {"wall_ms", st.wall_ms},
          {"n_before", st.n_before},
          {"n_after", st.n_after},
          {"m_before", st.m_before},
          {"m_after", st.m_after}};
}

void print_paths(std::ostream& out, const Solution& sol) {
  for (std::size_t i = 0; i < sol.paths.size(); ++i) {
    out << "path " << i + 1 << ':';
    for (Vertex v : sol.paths[i].vertices) out << ' ' << v + 1;
    out << '\n';
  }
}

int decision_code(Decision d) {
  switch (d) {
    case Decision::kYes:
      return kExitYes;
    case Decision::kNo:
      return kExitNo;
    case Decision::kTimeout:
      return kExitTimeout;
  }
  return kExitNo;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver for packing k disjoint short s-t paths", "spp"};
  app.require_subcommand(1);

  InstanceArgs solve_args;
  std::string heur = "b-sp,b-fi,d-ms,c-dist,c-pl";
  std::string config_name;
  bool no_preprocess = false;
  bool no_trivial = false;
  bool dms_bare = true;
  std::optional<std::int64_t> timeout_ms;
  auto* solve_cmd = app.add_subcommand("solve", "Decide an instance with the search-tree solver");
  add_instance_options(solve_cmd, solve_args);
  auto* heur_opt = solve_cmd->add_option(
      "--heur", heur, "Comma list of b-cpl,b-sp,b-fi,d-ms,c-dist,c-pl (empty for none)");
  solve_cmd->add_option("--config", config_name, "Named configuration instead of --heur")
      ->excludes(heur_opt);
  solve_cmd->add_flag("--no-preprocess", no_preprocess, "Skip graph reduction");
  solve_cmd->add_flag("--no-trivial", no_trivial, "Skip trivial-instance detection");
  solve_cmd->add_option("--dms-bare-lists-only", dms_bare,
                        "Run the separator test only when the remaining lists are bare");
  solve_cmd->add_option("--timeout-ms", timeout_ms, "Give up after this many milliseconds");

  InstanceArgs oracle_args;
  bool want_packing = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Decide an instance by brute force");
  add_instance_options(oracle_cmd, oracle_args);
  oracle_cmd->add_flag("--max-packing", want_packing, "Also report the largest packing");

  std::size_t gen_n = 0;
  double gen_p = 0.0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded G(n, p) random graph");
  gen_cmd->add_option("--n", gen_n, "Vertex count")->required()->check(CLI::Range(2, 1 << 24));
  gen_cmd->add_option("--p", gen_p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen_seed, "Generator seed");
  gen_cmd->add_option("-o,--output", gen_out, "Output file (default stdout)");

  BenchOptions bench;
  std::string bench_configs;
  std::string bench_out;
  bool bench_no_pre = false;
  bool bench_no_trivial = false;
  std::optional<bool> bench_dms_bare;
  auto* bench_cmd = app.add_subcommand("bench", "Run named configurations over sampled instances");
  bench_cmd->add_option("graphs", bench.graphs, "Graph files")->required();
  bench_cmd->add_option("--pairs", bench.pairs, "Sampled s-t pairs per graph");
  bench_cmd->add_option("--k-min", bench.k_min);
  bench_cmd->add_option("--k-max", bench.k_max);
  bench_cmd->add_option("--ell-min", bench.ell_min);
  bench_cmd->add_option("--ell-max", bench.ell_max);
  bench_cmd->add_option("--configs", bench_configs, "Comma list of configuration names");
  bench_cmd->add_option("--timeout-ms", bench.timeout_ms, "Per-run time limit");
  bench_cmd->add_option("--seed", bench.seed, "Sampling and shuffling seed");
  bench_cmd->add_option("--jobs", bench.jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--no-preprocess", bench_no_pre, "Skip graph reduction");
  bench_cmd->add_flag("--no-trivial", bench_no_trivial, "Skip trivial-instance detection");
  bench_cmd->add_option("--dms-bare-lists-only", bench_dms_bare);
  bench_cmd->add_option("-o,--output", bench_out, "CSV file to append to (default stdout)");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve_cmd) {
      const SppInstance inst = load_instance(solve_args);
      SolverConfig cfg;
      if (!config_name.empty()) {
        cfg = SolverConfig::named(config_name);
      } else {
        cfg.set_heuristics(heur);
      }
      cfg.preprocess = !no_preprocess;
      cfg.trivial_detection = !no_trivial;
      cfg.dms_bare_lists_only = dms_bare;
      cfg.timeout_ms = timeout_ms;
      const SolveResult res = solve(inst, cfg);
      if (solve_args.json) {
        json j = {{"decision", to_string(res.decision)},
                  {"witness", witness_json(res.witness)},
                  {"config", cfg.heuristic_fingerprint()},
                  {"s", solve_args.s},
                  {"t", solve_args.t},
                  {"k", inst.k},
                  {"ell", inst.ell},
                  {"stats", stats_json(res.stats)}};
        out << j.dump(2) << '\n';
      } else {
        out << "decision: " << to_string(res.decision) << '\n';
        if (res.witness) print_paths(out, *res.witness);
        const SolveStats& st = res.stats;
        out << "solved_by: " << st.solved_by << " (trivial rule " << st.trivial_rule << ")\n"
            << "nodes: " << st.nodes << "  br1/br2/br3: " << st.br1 << '/' << st.br2 << '/'
            << st.br3 << "  max_depth: " << st.max_depth << '\n'
            << "graph: " << st.n_before << " -> " << st.n_after << " vertices, " << st.m_before
            << " -> " << st.m_after << " edges\n"
            << "wall_ms: " << st.wall_ms << '\n';
      }
      return decision_code(res.decision);
    }

    if (*oracle_cmd) {
      const SppInstance inst = load_instance(oracle_args);
      const oracle::Answer ans = oracle::decide(inst);
      std::optional<int> packing;
      if (want_packing) packing = oracle::max_packing(inst.g(), inst.s, inst.t, inst.ell);
      if (oracle_args.json) {
        json j = {{"decision", ans.yes ? "yes" : "no"}, {"witness", witness_json(ans.witness)}};
        if (packing) j["max_packing"] = *packing;
        out << j.dump(2) << '\n';
      } else {
        out << "decision: " << (ans.yes ? "yes" : "no") << '\n';
        if (ans.witness) print_paths(out, *ans.witness);
        if (packing) out << "max_packing: " << *packing << '\n';
      }
      return ans.yes ? kExitYes : kExitNo;
    }

    if (*gen_cmd) {
      const Graph g = gnp(gen_n, gen_p, gen_seed);
      if (gen_out.empty()) {
        write_graph(out, g);
      } else {
        std::ofstream file(gen_out, std::ios::binary);
        if (!file) throw UsageError("cannot write '" + gen_out + "'");
        write_graph(file, g);
      }
      return 0;
    }

    if (*bench_cmd) {
      if (!bench_configs.empty()) {
        bench.configs.clear();
        std::stringstream ss(bench_configs);
        for (std::string name; std::getline(ss, name, ',');) {
          SolverConfig::named(name);  // validates
          bench.configs.push_back(name);
        }
      }
      if (bench.k_min < 1 || bench.k_min > bench.k_max || bench.ell_min < 1 ||
          bench.ell_min > bench.ell_max) {
        throw UsageError("empty or invalid k/ell range");
      }
      bench.preprocess = !bench_no_pre;
      bench.trivial_detection = !bench_no_trivial;
      bench.dms_bare_lists_only = bench_dms_bare;
      const auto rows = run_bench(bench, err);
      std::ofstream file;
      std::ostream* sink = &out;
      bool header = true;
      if (!bench_out.empty()) {
        {
          std::ifstream probe(bench_out);
          header = !probe || probe.peek() == std::ifstream::traits_type::eof();
        }
        file.open(bench_out, std::ios::app);
        if (!file) throw UsageError("cannot write '" + bench_out + "'");
        sink = &file;
      }
      if (header) *sink << csv_header() << '\n';
      for (const RunRecord& r : rows) *sink << to_csv(r) << '\n';
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace spp
