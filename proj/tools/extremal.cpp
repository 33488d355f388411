#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "extremal/binom.hpp"
#include "extremal/cliques.hpp"
#include "extremal/colex.hpp"
#include "extremal/extremal.hpp"
#include "extremal/graph6.hpp"
#include "extremal/search.hpp"

namespace {

using nlohmann::ordered_json;

void emit(const ordered_json& j, bool pretty) {
  if (pretty) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << j.dump() << "\n";
  }
}

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// graph6 if the first non-blank line decodes; edge list ("u v" pairs,
// 0-indexed, '#' comments ignored) otherwise
extremal::Graph read_graph(const std::string& path) {
  const std::string raw = slurp(path);
  std::string text;
  std::istringstream lines(raw);
  std::string line, first;
  while (std::getline(lines, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (!line.empty() && first.empty()) first = line;
    text += line;
    text += '\n';
  }
  if (first.empty()) throw std::invalid_argument("empty input");
  try {
    return extremal::parse_graph6(first);
  } catch (const std::invalid_argument&) {
    // fall through to edge-list parsing
  }
  std::istringstream tokens(text);
  std::vector<std::pair<int, int>> edges;
  long long u, v;
  while (tokens >> u) {
    if (!(tokens >> v)) throw std::invalid_argument("edge list: odd number of endpoints");
    if (u < 0 || v < 0 || u >= 64 || v >= 64) {
      throw std::invalid_argument("edge list: endpoints must be in [0, 64)");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (!tokens.eof()) throw std::invalid_argument("input is neither graph6 nor an edge list");
  if (edges.empty()) throw std::invalid_argument("input is neither graph6 nor an edge list");
  return extremal::Graph::from_edge_list(edges);
}

long long default_cap() {
  long long cap = 14;
  if (const char* env = std::getenv("EXTREMAL_MAX_EDGES")) {
    try {
      cap = std::stoll(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("EXTREMAL_MAX_EDGES is not an integer");
    }
  }
  return cap;
}

ordered_json verdict_json(const extremal::ExtremalityVerdict& v) {
  ordered_json j;
  j["is_extremal"] = v.is_extremal;
  j["q_found"] = v.q_found;
  j["remainder_certificate"] = v.remainder_certificate.bytes;
  j["reason"] = v.reason;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extremal clique counts under a maximum-degree constraint"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  int exit_code = 0;

  // value
  auto* value_cmd = app.add_subcommand("value", "extremal clique count for (t, delta, m)");
  int val_t = 0, val_delta = 0;
  long long val_m = 0;
  bool val_total = false;
  value_cmd->add_option("--t", val_t, "clique order")->required();
  value_cmd->add_option("--delta", val_delta, "maximum degree")->required();
  value_cmd->add_option("--edges", val_m, "edge count")->required();
  value_cmd->add_flag("--total", val_total, "total count over all clique orders");
  value_cmd->callback([&] {
    const extremal::EdgeDecomposition d = extremal::decompose(val_m, val_delta);
    const extremal::Count v = val_total ? extremal::total_extremal_value(val_delta, val_m)
                                        : extremal::extremal_value(val_t, val_delta, val_m);
    ordered_json j;
    j["m"] = d.m;
    j["delta"] = d.delta;
    if (val_total) {
      j["t"] = nullptr;
    } else {
      j["t"] = val_t;
    }
    j["q"] = d.q;
    j["b"] = d.b;
    j["r"] = d.r;
    j["s"] = d.s;
    j["value"] = v.get_str();
    emit(j, pretty);
  });

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "build a maximizer graph");
  int con_t = 0, con_delta = 0;
  long long con_m = 0;
  std::string con_format = "graph6";
  construct_cmd->add_option("--t", con_t, "clique order")->required();
  construct_cmd->add_option("--delta", con_delta, "maximum degree")->required();
  construct_cmd->add_option("--edges", con_m, "edge count")->required();
  construct_cmd->add_option("--format", con_format, "graph6 or edges")
      ->check(CLI::IsMember({"graph6", "edges"}));
  construct_cmd->callback([&] {
    const extremal::Graph g = extremal::build_extremal(con_t, con_delta, con_m);
    if (con_format == "graph6") {
      std::cout << extremal::to_graph6(g) << "\n";
    } else {
      for (const auto& [u, v] : g.edges()) std::cout << u << " " << v << "\n";
    }
  });

  // count
  auto* count_cmd = app.add_subcommand("count", "clique counts of an input graph");
  int cnt_t = 0;
  bool cnt_all = false;
  std::string cnt_input;
  auto* cnt_t_opt = count_cmd->add_option("--t", cnt_t, "count only this clique order");
  count_cmd->add_flag("--all", cnt_all, "full profile (default)");
  count_cmd->add_option("--input", cnt_input, "graph file, '-' for stdin (default)");
  count_cmd->callback([&] {
    const extremal::Graph g = read_graph(cnt_input);
    if (*cnt_t_opt && cnt_all) throw std::invalid_argument("--t and --all are exclusive");
    ordered_json j;
    j["m"] = g.edge_count();
    if (*cnt_t_opt) {
      j["t"] = cnt_t;
      j["count"] = extremal::count_kt(g, cnt_t).get_str();
    } else {
      const extremal::CliqueProfile p = extremal::clique_profile(g);
      ordered_json counts = ordered_json::object();
      for (const auto& [t, c] : p.counts) counts[std::to_string(t)] = c.get_str();
      j["counts"] = std::move(counts);
      j["total"] = p.total.get_str();
    }
    emit(j, pretty);
  });

  // check
  auto* check_cmd = app.add_subcommand("check", "test a graph for extremality");
  int chk_t = 0, chk_delta = 0;
  bool chk_total = false;
  std::string chk_input;
  check_cmd->add_option("--t", chk_t, "clique order")->required();
  check_cmd->add_option("--delta", chk_delta, "maximum degree")->required();
  check_cmd->add_flag("--total", chk_total, "check the total-count variant");
  check_cmd->add_option("--input", chk_input, "graph file, '-' for stdin (default)");
  check_cmd->callback([&] {
    const extremal::Graph g = read_graph(chk_input);
    const extremal::ExtremalityVerdict v =
        chk_total ? extremal::is_total_extremal(g, chk_delta)
                  : extremal::is_extremal(g, chk_t, chk_delta);
    ordered_json j;
    j["m"] = g.edge_count();
    j["delta"] = chk_delta;
    if (chk_total) {
      j["t"] = nullptr;
    } else {
      j["t"] = chk_t;
    }
    j.update(verdict_json(v));
    emit(j, pretty);
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "exhaustively verify the bounds at one size");
  int ver_t = 0, ver_delta = 0, ver_jobs = 0;
  long long ver_m = 0, ver_cap = -1;
  bool ver_kr1 = false, ver_kk = false;
  auto* ver_t_opt = verify_cmd->add_option("--t", ver_t, "clique order");
  auto* ver_delta_opt = verify_cmd->add_option("--delta", ver_delta, "maximum degree");
  verify_cmd->add_option("--edges", ver_m, "edge count")->required();
  verify_cmd->add_option("--max-edges", ver_cap, "raise the enumeration cap");
  verify_cmd->add_flag("--kr1", ver_kr1, "verify the total-count bound instead");
  verify_cmd->add_flag("--kk", ver_kk, "verify the unbounded-degree colex bound instead");
  verify_cmd->add_option("--jobs", ver_jobs, "worker threads (0 = all cores)");
  verify_cmd->callback([&] {
    const bool run_main = !ver_kr1 && !ver_kk;
    if ((run_main || ver_kk) && !*ver_t_opt) {
      throw std::invalid_argument("verify: --t is required here");
    }
    if ((run_main || ver_kr1) && !*ver_delta_opt) {
      throw std::invalid_argument("verify: --delta is required here");
    }
    const long long cap = ver_cap >= 0 ? ver_cap : default_cap();
    extremal::CorpusCache cache(cap, ver_jobs);
    std::vector<extremal::VerificationReport> reports;
    if (run_main) reports.push_back(extremal::verify_main(ver_m, ver_delta, ver_t, cache));
    if (ver_kr1) reports.push_back(extremal::verify_total(ver_m, ver_delta, cache));
    if (ver_kk) reports.push_back(extremal::verify_kk(ver_m, ver_t, cache));
    for (const auto& r : reports) {
      emit(extremal::report_json(r), pretty);
      if (!r.passed()) exit_code = 1;
    }
  });

  // kk
  auto* kk_cmd = app.add_subcommand("kk", "colex clique bound for an edge count");
  long long kk_m = 0;
  int kk_t = 0;
  kk_cmd->add_option("--edges", kk_m, "edge count")->required();
  kk_cmd->add_option("--t", kk_t, "clique order")->required();
  kk_cmd->callback([&] {
    const extremal::ColexDecomposition d = extremal::colex_decompose(kk_m);
    ordered_json j;
    j["m"] = kk_m;
    j["t"] = kk_t;
    j["r"] = d.r;
    j["s"] = d.s;
    j["colex_kt"] = extremal::colex_kt(kk_m, kk_t).get_str();
    j["real_bound"] = extremal::kk_bound_real(kk_m, kk_t);
    emit(j, pretty);
  });

  // props
  auto* props_cmd = app.add_subcommand("props", "run the convexity/inequality grids");
  int props_scale = 1;
  props_cmd->add_option("--grid-scale", props_scale, "scale factor for the cheap grids")
      ->check(CLI::PositiveNumber);
  props_cmd->callback([&] {
    const auto grids = extremal::run_convexity_grids(props_scale);
    bool all_hold = true;
    ordered_json arr = ordered_json::array();
    for (const auto& g : grids) {
      ordered_json j;
      j["name"] = g.name;
      j["cases"] = g.cases;
      j["failures"] = g.failures;
      arr.push_back(std::move(j));
      if (g.failures != 0) all_hold = false;
    }
    ordered_json out;
    out["grids"] = std::move(arr);
    out["all_hold"] = all_hold;
    emit(out, pretty);
    if (!all_hold) exit_code = 1;
  });

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "stream one graph6 line per isomorphism class");
  long long enum_m = 0, enum_cap = -1;
  int enum_delta = -1;
  enum_cmd->add_option("--edges", enum_m, "edge count")->required();
  enum_cmd->add_option("--delta", enum_delta, "maximum degree (-1 = unbounded)");
  enum_cmd->add_option("--max-edges", enum_cap, "raise the enumeration cap");
  enum_cmd->callback([&] {
    const long long cap = enum_cap >= 0 ? enum_cap : default_cap();
    if (enum_m > cap) {
      throw std::length_error("enumeration cap exceeded (cap " + std::to_string(cap) +
                              ", requested " + std::to_string(enum_m) + ")");
    }
    extremal::CorpusCache cache(cap, 0);
    for (const extremal::Graph& g : cache.level(enum_m, enum_delta)) {
      std::cout << extremal::to_graph6(g) << "\n";
    }
  });

  // let global flags like --pretty appear after the subcommand name
  for (auto* sub : app.get_subcommands(std::function<bool(CLI::App*)>{})) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
