// Command-line front end: bounds, generation, verification, constructions,
// oracle cross-checks, table rendering and reference-graph fetch.
//
// Exit codes: 0 success, 1 no graph exists at the requested order,
// 2 usage error, 3 verification failure (or fetch/search failure).

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>

#include "gdcage/bounds.hpp"
#include "gdcage/catalog.hpp"
#include "gdcage/constructions.hpp"
#include "gdcage/generator.hpp"
#include "gdcage/graph6.hpp"
#include "gdcage/metrics.hpp"
#include "gdcage/oracle.hpp"

using namespace gdcage;

namespace {

struct CommonOpts {
  std::string outdir = ".";
  std::string catalog;  // append results when non-empty
  int workers = 1;
  double budget_seconds = 0;
};

GeneratorOptions gen_opts(const CommonOpts& c) {
  GeneratorOptions o;
  o.workers = c.workers;
  o.budget_seconds = c.budget_seconds;
  return o;
}

std::optional<bool> bipartite_flag(const std::vector<Graph>& cages) {
  if (cages.empty()) return std::nullopt;
  for (const Graph& g : cages)
    if (!is_bipartite(g)) return false;
  return true;
}

// Writes the graph6 sidecar and appends a catalog row for a finished run.
void record_result(const CommonOpts& c, int k, int g, int d,
                   const GenerationResult& res, double seconds) {
  CageRecord rec;
  rec.k = k;
  rec.g = g;
  rec.d = d;
  rec.lower_bound = lower_bound(k, g, d);
  rec.exhaustive = res.exhaustive;
  rec.runtime_seconds = seconds;
  if (!res.cages.empty()) {
    rec.order = res.order;
    rec.count = static_cast<std::int64_t>(res.cages.size());
    rec.all_bipartite = bipartite_flag(res.cages);
    rec.graph_file = cage_file_name(k, g, d, res.order);
    write_graph6_file(
        (std::filesystem::path(c.outdir) / rec.graph_file).string(),
        res.cages);
  }
  if (!c.catalog.empty()) append_record(c.catalog, rec);
}

int cmd_bounds(int k, int g, int d) {
  BoundsReport r = bounds_report(k, g, d);
  std::cout << "M(" << k << "," << g << ") = " << r.moore_kg << "\n";
  std::cout << "M'(" << k << ";" << g << "," << d << ") = " << r.m_prime
            << "\n";
  if (r.m_double_prime)
    std::cout << "M''(" << k << ";" << g << "," << d
              << ") = " << *r.m_double_prime << " (bipartite only)\n";
  std::cout << "lower bound = " << r.combined << "\n";
  if (r.exact_order)
    std::cout << "exact order = " << *r.exact_order << "\n";
  else
    std::cout << "exact order unknown\n";
  if (r.exact_count) std::cout << "exact count = " << *r.exact_count << "\n";
  return 0;
}

int cmd_generate(const CommonOpts& c, int k, int g, int d, int n) {
  auto t0 = std::chrono::steady_clock::now();
  GenerationResult res = generate_all(k, g, d, n, gen_opts(c));
  double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (!res.exhaustive) {
    std::cout << "unresolved within budget (" << res.diagnostic << ")\n";
    return 0;
  }
  if (!res.diagnostic.empty())
    std::cout << "rejected: " << res.diagnostic << "\n";
  if (res.cages.empty()) {
    std::cout << "no (" << k << ";" << g << "," << d << ")-graph on " << n
              << " vertices\n";
    return 1;
  }
  record_result(c, k, g, d, res, dt);
  std::cout << res.cages.size() << " graph(s) on " << n << " vertices -> "
            << cage_file_name(k, g, d, n) << "\n";
  return 0;
}

int cmd_cage(const CommonOpts& c, int k, int g, int d,
             std::optional<int> n_max) {
  auto t0 = std::chrono::steady_clock::now();
  auto [n, res] = find_cage(k, g, d, n_max, gen_opts(c));
  double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (!res.exhaustive || res.cages.empty()) {
    std::cout << (res.diagnostic.empty() ? "unresolved" : res.diagnostic)
              << "\n";
    return res.exhaustive ? 1 : 0;
  }
  record_result(c, k, g, d, res, dt);
  std::cout << "n(" << k << ";" << g << "," << d << ") = " << n << ", "
            << res.cages.size() << " cage(s) -> " << cage_file_name(k, g, d, n)
            << "\n";
  return 0;
}

int cmd_verify(const std::string& file, int k, int g, int d) {
  if (!std::filesystem::exists(file))
    throw std::invalid_argument("no such file: " + file);
  std::vector<Graph> graphs = read_graph6_file(file);
  if (graphs.empty()) {
    std::cout << "no graphs in " << file << "\n";
    return 1;
  }
  for (size_t i = 0; i < graphs.size(); ++i) {
    if (!is_kgd_graph(graphs[i], k, g, d)) {
      std::cout << "graph " << i << " is not a (" << k << ";" << g << "," << d
                << ")-graph\n";
      return 3;
    }
  }
  std::cout << "ok: " << graphs.size() << " graph(s) verified\n";
  return 0;
}

int cmd_construct(const std::string& kind, const std::vector<int>& args,
                  const std::string& cage_file, const std::string& aux_file,
                  const std::string& out) {
  Graph g;
  if (kind == "k33") {
    if (args.size() != 1) throw std::invalid_argument("k33 takes one argument");
    g = build_k_3_3(args[0]);
  } else if (kind == "extremal34") {
    if (args.size() != 1)
      throw std::invalid_argument("extremal34 takes one argument");
    g = build_3_4_extremal(args[0]);
  } else if (kind == "extremal35") {
    if (args.size() != 1)
      throw std::invalid_argument("extremal35 takes one argument");
    g = build_3_5_extremal(args[0]);
  } else if (kind == "chain") {
    if (args.size() != 3 || cage_file.empty() || aux_file.empty())
      throw std::invalid_argument(
          "chain takes k g r plus --cage and --aux files");
    std::vector<Graph> cages = read_graph6_file(cage_file);
    std::vector<Graph> auxes = read_graph6_file(aux_file);
    if (cages.empty() || auxes.empty())
      throw std::invalid_argument("empty ingredient file");
    g = chain_construction(args[0], args[1], args[2], cages[0], auxes[0]);
  } else {
    throw std::invalid_argument("unknown construction: " + kind);
  }
  std::cout << graph6_encode(g) << "\n";
  std::cout << "order = " << g.order() << ", girth = " << girth(g)
            << ", diameter = " << diameter(g) << "\n";
  if (!out.empty()) write_graph6_file(out, {g});
  return 0;
}

int cmd_oracle_check(int k, int n_max, const CommonOpts& c) {
  CrossValidateReport rep = cross_validate(k, n_max, gen_opts(c));
  std::cout << rep.buckets_checked << " bucket(s) checked for k = " << k
            << ", n <= " << n_max << "\n";
  for (const auto& mm : rep.mismatches)
    std::cout << "mismatch at n=" << mm.n << " g=" << mm.g << " d=" << mm.d
              << ": oracle " << mm.oracle_keys.size() << " vs generator "
              << mm.generator_keys.size() << "\n";
  if (!rep.ok()) return 3;
  std::cout << "ok: generator agrees with the oracle\n";
  return 0;
}

int cmd_table(const CommonOpts& c, int k, int g, int d_min, int d_max,
              std::string prefix) {
  std::vector<CageRecord> known;
  if (!c.catalog.empty() && std::filesystem::exists(c.catalog))
    known = read_catalog(c.catalog);
  std::vector<CageRecord> rows;
  for (int d = d_min; d <= d_max; ++d) {
    auto hit = std::find_if(known.begin(), known.end(), [&](const CageRecord& r) {
      return r.k == k && r.g == g && r.d == d && r.exhaustive && r.order;
    });
    if (hit != known.end()) {
      rows.push_back(*hit);
      continue;
    }
    CageRecord rec;
    rec.k = k;
    rec.g = g;
    rec.d = d;
    rec.lower_bound = lower_bound(k, g, d);
    auto t0 = std::chrono::steady_clock::now();
    auto [n, res] = find_cage(k, g, d, std::nullopt, gen_opts(c));
    rec.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    rec.exhaustive = res.exhaustive;
    if (res.exhaustive && !res.cages.empty()) {
      rec.order = n;
      rec.count = static_cast<std::int64_t>(res.cages.size());
      rec.all_bipartite = bipartite_flag(res.cages);
    }
    rows.push_back(rec);
  }
  if (prefix.empty())
    prefix = "table_k" + std::to_string(k) + "_g" + std::to_string(g);
  const auto base = std::filesystem::path(c.outdir) / prefix;
  {
    std::ofstream csv(base.string() + ".csv");
    csv << render_table_csv(rows);
    std::ofstream txt(base.string() + ".txt");
    txt << render_table_text(rows);
  }
  std::cout << render_table_text(rows);
  return 0;
}

int cmd_fetch(int id, const std::string& cache_dir) {
  std::string error;
  std::optional<Graph> g = fetch_reference_graph(id, cache_dir, &error);
  if (!g) {
    std::cout << "fetch failed: " << error << "\n";
    return 3;
  }
  std::cout << graph6_encode(*g) << "\n";
  std::cout << "order = " << g->order() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"girth-diameter cage toolkit"};
  app.require_subcommand(1);
  CommonOpts common;
  int k = 0, g = 0, d = 0, n = 0, d_min = 0, d_max = 0, id = 0;
  int n_max = 0;
  std::string file, kind, out, cage_file, aux_file, prefix;
  std::string cache_dir = "hog_cache";
  std::vector<int> cargs;
  std::function<int()> action;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--outdir", common.outdir, "directory for output files");
    cmd->add_option("--catalog", common.catalog, "append results to this TSV");
    cmd->add_option("--workers", common.workers, "parallel workers");
    cmd->add_option("--budget-seconds", common.budget_seconds,
                    "stop with 'unresolved' after this long (0 = unlimited)");
  };

  CLI::App* cb = app.add_subcommand("bounds", "print all lower bounds");
  cb->add_option("k", k)->required();
  cb->add_option("g", g)->required();
  cb->add_option("d", d)->required();
  cb->callback([&] { action = [&] { return cmd_bounds(k, g, d); }; });

  CLI::App* cg = app.add_subcommand("generate", "all (k;g,d)-graphs on n");
  cg->add_option("k", k)->required();
  cg->add_option("g", g)->required();
  cg->add_option("d", d)->required();
  cg->add_option("n", n)->required();
  add_common(cg);
  cg->callback([&] { action = [&] { return cmd_generate(common, k, g, d, n); }; });

  CLI::App* cc = app.add_subcommand("cage", "smallest (k;g,d)-graphs");
  cc->add_option("k", k)->required();
  cc->add_option("g", g)->required();
  cc->add_option("d", d)->required();
  cc->add_option("--n-max", n_max, "stop scanning above this order");
  add_common(cc);
  cc->callback([&] {
    action = [&] {
      return cmd_cage(common, k, g, d,
                      n_max > 0 ? std::optional<int>(n_max) : std::nullopt);
    };
  });

  CLI::App* cv = app.add_subcommand("verify", "check a graph6 file");
  cv->add_option("file", file)->required();
  cv->add_option("k", k)->required();
  cv->add_option("g", g)->required();
  cv->add_option("d", d)->required();
  cv->callback([&] { action = [&] { return cmd_verify(file, k, g, d); }; });

  CLI::App* cn = app.add_subcommand(
      "construct", "certificate builders: k33, extremal34, extremal35, chain");
  cn->add_option("kind", kind)->required();
  cn->add_option("args", cargs, "construction parameters");
  cn->add_option("--cage", cage_file, "graph6 file with the (k,g)-cage");
  cn->add_option("--aux", aux_file, "graph6 file with the auxiliary cage");
  cn->add_option("--out", out, "write the graph6 line here too");
  cn->callback([&] {
    action = [&] { return cmd_construct(kind, cargs, cage_file, aux_file, out); };
  });

  CLI::App* co = app.add_subcommand("oracle-check",
                                    "brute-force cross-validation");
  co->add_option("k", k)->required();
  co->add_option("n_max", n_max)->required();
  add_common(co);
  co->callback([&] { action = [&] { return cmd_oracle_check(k, n_max, common); }; });

  CLI::App* ct = app.add_subcommand("table", "render a d-range as CSV + text");
  ct->add_option("k", k)->required();
  ct->add_option("g", g)->required();
  ct->add_option("d_min", d_min)->required();
  ct->add_option("d_max", d_max)->required();
  ct->add_option("--prefix", prefix, "output file prefix");
  add_common(ct);
  ct->callback([&] {
    action = [&] { return cmd_table(common, k, g, d_min, d_max, prefix); };
  });

  CLI::App* cf = app.add_subcommand("fetch", "download a reference graph");
  cf->add_option("id", id)->required();
  cf->add_option("--cache-dir", cache_dir, "cache directory");
  cf->callback([&] { action = [&] { return cmd_fetch(id, cache_dir); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
