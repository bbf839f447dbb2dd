#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "psf/constructions.hpp"
#include "psf/embedder.hpp"
#include "psf/formulas.hpp"
#include "psf/graph6.hpp"
#include "psf/oracle.hpp"
#include "psf/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace psf;

int default_jobs() {
  if (const char* env = std::getenv("PSF_JOBS")) {
    try {
      int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (...) {
    }
    std::cerr << "warning: ignoring invalid PSF_JOBS value \"" << env << "\"\n";
  }
  return 1;
}

std::vector<int> parse_int_list(const std::string& txt) {
  std::vector<int> out;
  std::stringstream ss(txt);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw CLI::ValidationError("empty entry in list \"" + txt + "\"");
    out.push_back(std::stoi(tok));
  }
  return out;
}

// Exact rationals: integers stay JSON numbers, halves become strings ("91/2").
ordered_json rat_json(const Rat& r) {
  if (r.is_integer()) return r.num;
  return r.str();
}

struct ForestArgs {
  std::string forest, paths, stars;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--forest", forest,
                              "Forest as comma-separated tokens, e.g. \"P4,S3\"");
    auto* p = cmd->add_option("--paths", paths, "Path orders, e.g. \"4,2\"");
    auto* s = cmd->add_option("--stars", stars, "Star leaf counts, e.g. \"3,3\"");
    f->excludes(p)->excludes(s);
  }

  PathStarForest get() const {
    if (!forest.empty()) return parse_forest(forest);
    if (paths.empty() && stars.empty())
      throw CLI::RequiredError("--forest (or --paths/--stars)");
    return make_forest(paths.empty() ? std::vector<int>{} : parse_int_list(paths),
                       stars.empty() ? std::vector<int>{} : parse_int_list(stars));
  }
};

std::pair<long long, long long> parse_range(const std::string& txt) {
  auto pos = txt.find("..");
  if (pos == std::string::npos)
    throw CLI::ValidationError("--n-range expects A..B, got \"" + txt + "\"");
  long long a = std::stoll(txt.substr(0, pos));
  long long b = std::stoll(txt.substr(pos + 2));
  if (a > b) throw CLI::ValidationError("--n-range is empty: " + txt);
  return {a, b};
}

// The validity threshold field is named for the regime it bounds.
std::string threshold_key(const PathStarForest& f, Regime r) {
  if (r == Regime::kA && f.star_count() >= 1) return "threshold_N1";
  if (r == Regime::kB && f.path_count() >= 1) return "threshold_N2";
  return "threshold";
}

ordered_json ex_json(const PathStarForest& f, long long n, bool include_n = false) {
  ExResult res = ex_main(f, n);
  ordered_json out;
  if (include_n) out["n"] = n;
  out["value"] = res.value;
  out["regime"] = regime_name(res.regime);
  if (res.threshold) out[threshold_key(f, res.regime)] = rat_json(*res.threshold);
  out["guaranteed"] = res.guaranteed;
  return out;
}

int g_exit = 0;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turán numbers and extremal graphs for path-star forests"};
  app.require_subcommand(1);

  // ---- ex ----------------------------------------------------------------
  auto* cmd_ex = app.add_subcommand("ex", "Closed-form extremal edge count");
  ForestArgs ex_forest;
  ex_forest.attach(cmd_ex);
  long long ex_n = 0;
  std::string ex_format = "json";
  cmd_ex->add_option("--n", ex_n, "Host order")->required();
  cmd_ex->add_option("--format", ex_format)->check(CLI::IsMember({"json", "csv"}));
  cmd_ex->callback([&] {
    PathStarForest f = ex_forest.get();
    if (ex_format == "csv") {
      ExResult res = ex_main(f, ex_n);
      std::cout << "n,value,regime,guaranteed\n"
                << ex_n << "," << res.value << "," << regime_name(res.regime) << ","
                << (res.guaranteed ? "true" : "false") << "\n";
    } else {
      std::cout << ex_json(f, ex_n).dump() << "\n";
    }
  });

  // ---- construct ---------------------------------------------------------
  auto* cmd_con = app.add_subcommand("construct", "Emit the extremal family");
  ForestArgs con_forest;
  con_forest.attach(cmd_con);
  long long con_n = 0;
  std::string con_format = "g6";
  cmd_con->add_option("--n", con_n, "Host order")->required();
  cmd_con->add_option("--format", con_format)->check(CLI::IsMember({"g6", "json"}));
  cmd_con->callback([&] {
    PathStarForest f = con_forest.get();
    if (con_n < 0 || con_n > Graph::kMaxVertices)
      throw CLI::ValidationError("construct supports 0 <= n <= 64");
    ExtremalSet set = extremal_set_main(f, static_cast<int>(con_n));
    if (con_format == "g6") {
      for (const Graph& g : set.graphs()) std::cout << graph6_encode(g) << "\n";
    } else {
      ordered_json out;
      out["forest"] = f.str();
      out["n"] = con_n;
      out["value"] = set.claimed_value();
      out["family"] = set.family_tag();
      out["members"] = set.size();
      ordered_json gs = ordered_json::array();
      for (const Graph& g : set.graphs()) gs.push_back(graph6_encode(g));
      out["graphs"] = std::move(gs);
      std::cout << out.dump() << "\n";
    }
  });

  // ---- check -------------------------------------------------------------
  auto* cmd_chk = app.add_subcommand("check", "Decide forest containment in a graph");
  ForestArgs chk_forest;
  chk_forest.attach(cmd_chk);
  std::string chk_graph;
  long long chk_budget = kDefaultEmbedBudget;
  cmd_chk->add_option("--graph", chk_graph, "Host graph in graph6")->required();
  cmd_chk->add_option("--budget", chk_budget, "Search node budget");
  cmd_chk->callback([&] {
    Graph g = graph6_decode(chk_graph);
    bool present = contains_forest(g, chk_forest.get(), chk_budget).has_value();
    std::cout << (present ? "present" : "absent") << "\n";
  });

  // ---- oracle ------------------------------------------------------------
  auto* cmd_orc = app.add_subcommand("oracle", "Exhaustive exact search (small n)");
  ForestArgs orc_forest;
  orc_forest.attach(cmd_orc);
  long long orc_n = 0;
  int orc_jobs = default_jobs();
  int orc_limit = 8;
  std::string orc_format = "json";
  cmd_orc->add_option("--n", orc_n, "Host order")->required();
  cmd_orc->add_option("--jobs", orc_jobs, "Worker threads");
  cmd_orc->add_option("--oracle-limit", orc_limit, "Raise the order ceiling (max 9)");
  cmd_orc->add_option("--format", orc_format)->check(CLI::IsMember({"json", "g6"}));
  cmd_orc->callback([&] {
    if (orc_limit >= 9)
      std::cerr << "warning: order " << orc_limit
                << " explores billions of graphs; expect a long run\n";
    OracleOptions opt;
    opt.jobs = orc_jobs;
    opt.limit = orc_limit;
    OracleResult res = exact_ex(static_cast<int>(orc_n), orc_forest.get(), opt);
    if (orc_format == "g6") {
      for (const Graph& g : res.extremal.graphs()) std::cout << graph6_encode(g) << "\n";
      return;
    }
    ordered_json out;
    out["forest"] = res.forest.str();
    out["n"] = res.n;
    out["max_edges"] = res.max_edges;
    out["extremal_count"] = res.extremal.size();
    // Node counts are only deterministic single-threaded; keep the output
    // byte-stable when workers race.
    if (orc_jobs == 1) out["nodes_explored"] = res.nodes_explored;
    ordered_json gs = ordered_json::array();
    for (const Graph& g : res.extremal.graphs()) gs.push_back(graph6_encode(g));
    out["graphs"] = std::move(gs);
    std::cout << out.dump() << "\n";
  });

  // ---- verify ------------------------------------------------------------
  auto* cmd_ver = app.add_subcommand("verify", "Run the full acceptance suite");
  int ver_jobs = default_jobs();
  long long ver_budget = kDefaultEmbedBudget;
  bool ver_quiet = false;
  cmd_ver->add_option("--jobs", ver_jobs, "Worker threads for the exhaustive parts");
  cmd_ver->add_option("--budget", ver_budget, "Containment search node budget");
  cmd_ver->add_flag("--quiet", ver_quiet, "Suppress per-criterion progress lines");
  cmd_ver->callback([&] {
    AcceptanceOptions opt;
    opt.jobs = ver_jobs;
    opt.embed_budget = ver_budget;
    if (!ver_quiet) opt.progress = &std::cerr;
    VerifyReport report = run_acceptance(opt);
    std::cout << report.to_json().dump(2) << "\n";
    if (!report.all_pass) g_exit = 1;
  });

  // ---- table -------------------------------------------------------------
  auto* cmd_tab = app.add_subcommand("table", "Values over a range of orders");
  ForestArgs tab_forest;
  tab_forest.attach(cmd_tab);
  std::string tab_range, tab_format = "csv";
  cmd_tab->add_option("--n-range", tab_range, "Inclusive range A..B")->required();
  cmd_tab->add_option("--format", tab_format)->check(CLI::IsMember({"csv", "json"}));
  cmd_tab->callback([&] {
    PathStarForest f = tab_forest.get();
    auto [lo, hi] = parse_range(tab_range);
    if (tab_format == "csv") {
      std::cout << "n,value,regime,guaranteed\n";
      for (long long n = lo; n <= hi; ++n) {
        ExResult res = ex_main(f, n);
        std::cout << n << "," << res.value << "," << regime_name(res.regime) << ","
                  << (res.guaranteed ? "true" : "false") << "\n";
      }
    } else {
      ordered_json rows = ordered_json::array();
      for (long long n = lo; n <= hi; ++n) rows.push_back(ex_json(f, n, true));
      std::cout << rows.dump() << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const EmbedBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return g_exit;
}
