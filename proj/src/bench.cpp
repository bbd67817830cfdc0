#include "spp/bench.hpp"

#include <atomic>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>

#include "spp/generate.hpp"
#include "spp/io.hpp"

namespace spp {

std::string csv_header() {
  return "graph,s,t,k,ell,config,decision,solved_by,nodes,br1,br2,br3,prunes_len,prunes_bcpl,"
         "prunes_bsp,bfi_recorded,bfi_masked,dms_fired,max_depth,n_before,n_after,m_before,"
         "m_after,wall_ms";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

struct Job {
  std::size_t graph_index;
  std::shared_ptr<const Graph> graph;
  Vertex s;
  Vertex t;
  int k;
  int ell;
  std::vector<std::string> order;
};

}  // namespace

std::string to_csv(const RunRecord& r) {
  std::ostringstream os;
  os << csv_field(r.graph) << ',';
  if (r.error) {
    os << ",,,,,error," << csv_field(*r.error) << std::string(16, ',');
    return os.str();
  }
  const SolveStats& st = r.stats;
  os << r.s + 1 << ',' << r.t + 1 << ',' << r.k << ',' << r.ell << ',' << csv_field(r.config)
     << ',' << to_string(r.decision) << ',' << st.solved_by << ',' << st.nodes << ',' << st.br1
     << ',' << st.br2 << ',' << st.br3 << ',' << st.prunes_len << ',' << st.prunes_bcpl << ','
     << st.prunes_bsp << ',' << st.bfi_recorded << ',' << st.bfi_masked << ',' << st.dms_fired
     << ',' << st.max_depth << ',' << st.n_before << ',' << st.n_after << ',' << st.m_before << ','
     << st.m_after << ',' << st.wall_ms;
  return os.str();
}

std::vector<RunRecord> run_bench(const BenchOptions& opts, std::ostream& warnings) {
  std::vector<SolverConfig> configs;
  for (const std::string& name : opts.configs) configs.push_back(SolverConfig::named(name));

  std::mt19937_64 rng(opts.seed);
  std::vector<std::vector<RunRecord>> slots;
  std::vector<Job> jobs;
  for (std::size_t gi = 0; gi < opts.graphs.size(); ++gi) {
    const std::string& path = opts.graphs[gi];
    std::shared_ptr<const Graph> g;
    try {
      g = std::make_shared<const Graph>(read_graph_file(path));
    } catch (const std::exception& e) {
      warnings << "warning: skipping " << path << ": " << e.what() << '\n';
      RunRecord row;
      row.graph = path;
      row.error = e.what();
      slots.push_back({row});
      continue;
    }
    const auto n = g->vertex_count();
    std::size_t sampled = 0;
    for (std::size_t attempt = 0; n >= 2 && sampled < opts.pairs && attempt < 1000 * opts.pairs;
         ++attempt) {
      const auto s = static_cast<Vertex>(bounded(rng, n));
      const auto t = static_cast<Vertex>(bounded(rng, n));
      if (s == t) continue;
      const auto d = distances_from(*g, VertexMask(), s, 10);
      if (d[t] == kUnreachable) continue;
      ++sampled;
      for (int k = opts.k_min; k <= opts.k_max; ++k) {
        for (int ell = opts.ell_min; ell <= opts.ell_max; ++ell) {
          Job job{gi, g, s, t, k, ell, opts.configs};
          for (std::size_t i = job.order.size(); i > 1; --i) {
            std::swap(job.order[i - 1], job.order[bounded(rng, i)]);
          }
          jobs.push_back(std::move(job));
          slots.emplace_back();
        }
      }
    }
    if (sampled < opts.pairs) {
      warnings << "warning: " << path << ": found only " << sampled << " pairs at distance <= 10\n";
    }
  }

  // Map each job to its output slot (slots also hold warning rows).
  std::vector<std::size_t> slot_of;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].empty()) slot_of.push_back(i);
  }

  auto run_job = [&](std::size_t j) {
    const Job& job = jobs[j];
    std::vector<RunRecord>& out = slots[slot_of[j]];
    for (const std::string& name : job.order) {
      SolverConfig cfg = SolverConfig::named(name);
      cfg.preprocess = opts.preprocess;
      cfg.trivial_detection = opts.trivial_detection;
      if (opts.dms_bare_lists_only) cfg.dms_bare_lists_only = *opts.dms_bare_lists_only;
      cfg.timeout_ms = opts.timeout_ms;
      const SolveResult res = solve(SppInstance{job.graph, job.s, job.t, job.k, job.ell}, cfg);
      RunRecord row;
      row.graph = opts.graphs[job.graph_index];
      row.s = job.s;
      row.t = job.t;
      row.k = job.k;
      row.ell = job.ell;
      row.config = name;
      row.decision = res.decision;
      row.stats = res.stats;
      out.push_back(std::move(row));
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(opts.jobs, jobs.size()));
  if (workers <= 1) {
    for (std::size_t j = 0; j < jobs.size(); ++j) run_job(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t j = next++; j < jobs.size(); j = next++) run_job(j);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<RunRecord> rows;
  for (auto& slot : slots) {
    for (auto& r : slot) rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace spp
