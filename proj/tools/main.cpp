#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "subspace/api.hpp"
#include "subspace/engine.hpp"

namespace {

using subspace::engine::GridConfig;
using subspace::engine::Table;

std::string default_cache() {
  const char* env = std::getenv("SUBSPACE_CACHE");
  return env ? env : "subspace.cache";
}

std::optional<Table> load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: no cache at '" << path
              << "', run the compute command first\n";
    return std::nullopt;
  }
  std::string err;
  auto tab = Table::load(in, &err);
  if (!tab)
    std::cerr << "error: cannot read '" << path << "' (" << err
              << "), run the compute command first\n";
  return tab;
}

int run_compute(const GridConfig& cfg, const std::string& facts,
                const std::string& cache) {
  auto start = std::chrono::steady_clock::now();
  Table tab(cfg);
  if (facts != "none") {
    tab.seed_facts(subspace::engine::builtin_facts());
    if (!facts.empty()) {
      std::ifstream in(facts);
      if (!in) {
        std::cerr << "error: cannot open facts file '" << facts << "'\n";
        return 1;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      tab.seed_facts(buf.str());
    }
  }
  tab.fixpoint();
  bool ok = tab.verify_consistent(std::cerr);
  std::ofstream out(cache);
  if (!out) {
    std::cerr << "error: cannot write cache '" << cache << "'\n";
    return 1;
  }
  tab.save(out);
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  std::cerr << "computed " << tab.cdc_cells().size() << " cdc and "
            << tab.mdc_cells().size() << " mdc cells in " << secs << "s, "
            << "cache " << cache << " (hash " << tab.grid_hash() << ")\n";
  if (!ok) {
    std::cerr << "error: inconsistent bounds, see diagnostics above\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounds database for subspace codes"};
  app.require_subcommand(1);

  GridConfig cfg;
  std::string facts;
  std::string cache = default_cache();
  std::string ev_mode = "lp";
  auto* compute = app.add_subcommand("compute", "run the fixpoint, write the cache");
  compute->add_option("--qmax", cfg.qmax, "largest field size")
      ->check(CLI::Range(2L, 16L));
  compute->add_option("--nmax", cfg.nmax, "largest ambient dimension")
      ->check(CLI::Range(1L, 19L));
  compute->add_option("--ef-budget", cfg.ef_node_budget,
                      "echelon-Ferrers search nodes")
      ->check(CLI::Range(1L, 1000000L));
  compute->add_option("--ev-mode", ev_mode, "Etzion-Vardy ILP relaxation")
      ->check(CLI::IsMember({"lp", "bb"}));
  compute->add_option("--ev-budget", cfg.ev_node_budget,
                      "Etzion-Vardy branch and bound nodes")
      ->check(CLI::Range(1L, 1000000L));
  compute->add_option("--facts", facts,
                      "extra facts file on top of the built-in ones, or "
                      "'none' to start bare");
  compute->add_option("--cache", cache, "cache file path");

  long q_arg = 2, n_arg = 0, d_arg = 0, k_arg = -1;
  auto* query = app.add_subcommand("query", "print a cell as JSON");
  query->add_option("q", q_arg)->required();
  query->add_option("n", n_arg)->required();
  query->add_option("d", d_arg)->required();
  query->add_option("k", k_arg);
  query->add_option("--cache", cache, "cache file path");

  long table_q = 2;
  long table_n = 0;
  std::string view;
  auto* table = app.add_subcommand("table", "print a bounds table");
  table->add_option("--q", table_q, "field size")->required();
  table->add_option("--n", table_n, "ambient dimension (omit for the mixed "
                                    "dimension table)");
  table->add_option("--view", view,
                    "short | normal | large | relative_gap | ratio | density "
                    "| realized_density | amount_multicomponent | "
                    "amount_lifted_mrd | amount_mrd_bound");
  table->add_option("--cache", cache, "cache file path");

  auto* toplist = app.add_subcommand("toplist", "constraint scoreboards");
  toplist->add_option("--cache", cache, "cache file path");

  int port = 8723;
  auto* serve = app.add_subcommand("serve", "HTTP JSON api");
  serve->add_option("--port", port)->check(CLI::Range(1, 65535));
  serve->add_option("--cache", cache, "cache file path");

  CLI11_PARSE(app, argc, argv);

  if (compute->parsed()) {
    cfg.ev_bb = ev_mode == "bb";
    return run_compute(cfg, facts, cache);
  }

  auto tab = load_cache(cache);
  if (!tab) return 1;

  if (query->parsed()) {
    std::optional<long> k;
    if (query->count("k")) k = k_arg;
    auto res = subspace::api::query(*tab, q_arg, n_arg, d_arg, k);
    std::cout << res.body << "\n";
    return res.status == 200 ? 0 : 1;
  }
  if (table->parsed()) {
    std::optional<long> n;
    if (table->count("--n")) n = table_n;
    if (view.empty()) view = n ? "short" : "normal";
    auto v = subspace::engine::table_view_from_name(view);
    if (!v) {
      std::cerr << "error: unknown view '" << view << "'\n";
      return 1;
    }
    std::cout << subspace::engine::render_table(*tab, table_q, n, *v);
    return 0;
  }
  if (toplist->parsed()) {
    std::cout << subspace::engine::render_toplists(*tab);
    return 0;
  }
  if (serve->parsed())
    return subspace::api::serve(*tab, port) ? 0 : 1;
  return 0;
}
