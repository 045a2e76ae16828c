#include "wtd/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wtd/domination.hpp"
#include "wtd/errors.hpp"
#include "wtd/graph_io.hpp"
#include "wtd/recipe_io.hpp"
#include "wtd/reduction.hpp"
#include "wtd/search.hpp"
#include "wtd/structure.hpp"
#include "wtd/wtd2.hpp"

namespace wtd {
namespace {

using json = nlohmann::json;

/// Bad input that is not a parse error of a known format (missing file, bad flag value).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A self-check of our own output failed.
class SelfCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw InputError("cannot write " + path);
}

GraphFormat format_for(const std::string& path, const std::string& flag) {
  if (!flag.empty()) return parse_format_name(flag);
  return path.ends_with(".g6") ? GraphFormat::graph6 : GraphFormat::edge_list;
}

Graph read_graph(const std::string& path, const std::string& format_flag) {
  const std::string text = read_text(path);
  if (format_for(path, format_flag) == GraphFormat::edge_list) return parse_edge_list(text);
  auto graphs = parse_graph6_lines(text);
  if (graphs.size() != 1) throw InputError("expected exactly one graph6 record, found " + std::to_string(graphs.size()));
  return graphs.front();
}

json vertex_name(const Graph& g, int v) { return g.has_labels() ? json(g.labels()[v]) : json(v); }

json vertex_list(const Graph& g, VertexSet s) {
  json out = json::array();
  for (int v : s) out.push_back(vertex_name(g, v));
  return out;
}

json edge_list_json(const Graph& g, const EdgeSet& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({vertex_name(g, e.u), vertex_name(g, e.v)});
  return out;
}

json optional_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json analysis(const Graph& g) {
  const SpernerFamily family = mtds(g);
  const TotalDominationReport r = total_domination_report(family);
  json j;
  j["n"] = g.order();
  j["m"] = g.size();
  j["gamma_t"] = r.gamma_t;
  j["Gamma_t"] = r.upper_gamma_t;
  j["is_wtd"] = r.is_wtd;
  j["mtds"] = json::array();
  for (VertexSet s : family.edges()) j["mtds"].push_back(vertex_list(g, s));
  j["rho"] = packing_number(g);
  j["diameter"] = optional_json(diameter(g));
  j["girth"] = optional_json(girth(g));
  if (r.gamma_t == 2) j["g_de_edges"] = edge_list_json(g, dominating_edge_subgraph(g).edges);
  return j;
}

int vertex_by_name(const Graph& g, const std::string& name) {
  if (g.has_labels()) {
    const auto& labels = g.labels();
    const auto it = std::find(labels.begin(), labels.end(), name);
    if (it != labels.end()) return static_cast<int>(it - labels.begin());
    throw InputError("unknown vertex '" + name + "'");
  }
  int v = -1;
  const auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), v);
  if (ec != std::errc() || ptr != name.data() + name.size() || v < 0 || v >= g.order())
    throw InputError("unknown vertex '" + name + "'");
  return v;
}

EdgeSet parse_edges_flag(const Graph& g, const std::string& flag) {
  EdgeSet edges;
  std::stringstream ss(flag);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos || item.find('-', dash + 1) != std::string::npos)
      throw InputError("expected an edge u-v, got '" + item + "'");
    const int u = vertex_by_name(g, item.substr(0, dash));
    const int v = vertex_by_name(g, item.substr(dash + 1));
    if (u == v) throw InputError("edge " + item + " is a self-loop");
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw InputError("--edges lists no edge");
  return edges;
}

struct ParsedFamily {
  SpernerFamily family;
  std::vector<std::string> labels;
};

ParsedFamily parse_family_flag(const std::string& flag) {
  std::vector<std::string> labels;
  std::map<std::string, int> ids;
  std::vector<VertexSet> members;
  std::stringstream ss(flag);
  std::string part;
  while (std::getline(ss, part, ';')) {
    part.erase(std::remove_if(part.begin(), part.end(), [](unsigned char c) { return std::isspace(c); }), part.end());
    if (part.empty()) continue;
    if (part.size() < 2 || part.front() != '{' || part.back() != '}')
      throw InputError("expected a set like {a,b}, got '" + part + "'");
    VertexSet s;
    std::stringstream inner(part.substr(1, part.size() - 2));
    std::string name;
    while (std::getline(inner, name, ',')) {
      if (!is_plain_name(name)) throw InputError("invalid element name '" + name + "'");
      auto [it, fresh] = ids.emplace(name, static_cast<int>(labels.size()));
      if (fresh) {
        if (labels.size() == kMaxVertices) throw CapabilityError("family ground set exceeds 64 elements");
        labels.push_back(name);
      }
      s = s.with(it->second);
    }
    if (s.empty()) throw InputError("empty set in --family");
    members.push_back(s);
  }
  if (members.empty()) throw InputError("--family lists no set");
  return {sperner_family(static_cast<int>(labels.size()), members), std::move(labels)};
}

int cmd_analyze(const std::string& path, const std::string& format, std::ostream& out) {
  const Graph g = read_graph(path, format);
  require_total_domination(g);
  out << analysis(g).dump(2) << '\n';
  return kExitYes;
}

int cmd_recognize(const std::string& path, const std::string& format, int k, bool witness, std::ostream& out) {
  if (k < 2) throw InputError("--k must be at least 2");
  const Graph g = read_graph(path, format);
  const WtdRecognition r = recognize_wtd_k(g, k);
  json j;
  j["k"] = k;
  j["wtd_k"] = r.accepted;
  j["reason"] = to_string(r.reason);
  if (r.accepted) j["certificate"] = vertex_list(g, r.certificate);
  else if (witness) j["witness"] = vertex_list(g, r.certificate);
  out << j.dump(2) << '\n';
  return r.accepted ? kExitYes : kExitNo;
}

std::string describe_recipe_error(const W2RecipeError& e, const W2Recipe& recipe) {
  std::string msg = e.what();
  if (e.witness()) {
    auto name = [&](int v) { return recipe.labels.empty() ? std::to_string(v) : recipe.labels.at(v); };
    const auto& [w, u, v] = *e.witness();
    msg += " [witness w=" + name(w) + ", u=" + name(u) + ", v=" + name(v) + "]";
  }
  return msg;
}

int cmd_construct_w2(const std::string& path, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const W2Recipe recipe = parse_recipe(read_text(path));
  Graph g;
  try {
    g = construct_w2(recipe);
  } catch (const W2RecipeError& e) {
    err << "invalid recipe: " << describe_recipe_error(e, recipe) << '\n';
    return kExitUsage;
  }
  json check = analysis(g);
  const bool gde_is_h = dominating_edge_subgraph(g).edges == recipe.h.edges();
  check["g_de_equals_h"] = gde_is_h;
  if (!check["is_wtd"].get<bool>() || check["gamma_t"] != 2 || check["rho"] != 2 || !gde_is_h)
    throw SelfCheckError("constructed graph failed its self-check: " + check.dump());
  const std::string text = write_edge_list(g);
  if (!out_path.empty()) write_text(out_path, text);
  out << json{{"graph", text}, {"self_check", check}}.dump(2) << '\n';
  return kExitYes;
}

int cmd_w2_check(const std::string& path, const std::string& format, std::ostream& out) {
  const Graph g = read_graph(path, format);
  W2Membership m = w2_membership(g);
  json j;
  j["member"] = m.member;
  j["reason"] = m.reason;
  if (m.member) {
    W2Recipe& recipe = *m.recipe;
    recipe.labels.clear();
    for (int v : m.recipe_to_input) recipe.labels.push_back(g.name(v));
    const Graph rebuilt = construct_w2(recipe).relabeled(m.recipe_to_input);
    if (!rebuilt.same_structure(g)) throw SelfCheckError("certificate does not reconstruct the input");
    j["recipe"] = write_recipe(recipe);
    j["reconstructs"] = true;
  }
  out << j.dump(2) << '\n';
  return m.member ? kExitYes : kExitNo;
}

int cmd_realize(const std::string& family_flag, const std::string& core, const std::string& out_path,
                std::ostream& out) {
  const ParsedFamily parsed = parse_family_flag(family_flag);
  RealizeOptions options;
  options.ground_labels = parsed.labels;
  if (core == "minimal") options.policy = CorePolicy::minimal_valid;
  else if (core != "complete") throw InputError("--core must be complete or minimal");
  const Realization r = realize_mtds(parsed.family, options);

  std::vector<VertexSet> back;
  const SpernerFamily realized = mtds(r.graph);
  for (VertexSet s : realized.edges()) {
    const auto ground = r.to_ground(s);
    if (!ground) throw SelfCheckError("a minimal TDS leaves the ground set: " + to_string(s));
    back.push_back(*ground);
  }
  std::sort(back.begin(), back.end());
  if (back != parsed.family.edges()) throw SelfCheckError("realized graph has a different MTDS family");

  const std::string text = write_edge_list(r.graph);
  if (!out_path.empty()) write_text(out_path, text);
  json check = analysis(r.graph);
  check["matches_family"] = true;
  out << json{{"graph", text}, {"self_check", check}}.dump(2) << '\n';
  return kExitYes;
}

int cmd_reduce(const std::string& path, const std::string& format, const std::string& edges_flag,
               const std::string& out_path, std::ostream& out) {
  const Graph g = read_graph(path, format);
  MatchingSelection sel{parse_edges_flag(g, edges_flag)};
  const Reduction r = reduce_by_matching(g, sel);
  json j;
  j["status"] = to_string(r.status);
  j["removed"] = vertex_list(g, g.vertices() - [&] {
    VertexSet kept;
    for (int v : r.origin) kept = kept.with(v);
    return kept;
  }());
  j["origin"] = json::array();
  for (int v : r.origin) j["origin"].push_back(vertex_name(g, v));
  const std::string text = write_edge_list(r.graph);
  j["graph"] = text;
  if (!out_path.empty()) write_text(out_path, text);
  if (r.status == ReductionStatus::ok) {
    const TotalDominationReport before = total_domination_report(g);
    const TotalDominationReport after = total_domination_report(r.graph);
    j["self_check"] = {{"input_is_wtd", before.is_wtd},
                       {"input_gamma_t", before.gamma_t},
                       {"is_wtd", after.is_wtd},
                       {"gamma_t", after.gamma_t},
                       {"gamma_t_drop", before.gamma_t - after.gamma_t}};
  }
  out << j.dump(2) << '\n';
  return kExitYes;
}

int cmd_search(const SearchOptions& options, std::ostream& out, std::ostream& err) {
  const SearchResult result = run_search(options);
  json j;
  j["assertions"] = json::parse(result.report.tallies_json());
  j["frontier"] = json::parse(result.report.frontier_json());
  j["classes"] = result.entries.size();
  j["reused"] = result.reused;
  j["catalog"] = options.catalog ? json(options.catalog->string()) : json(nullptr);
  out << j.dump(2) << '\n';
  if (const auto bad = result.report.violation_count(); bad > 0) {
    err << "assertion violated on " << bad << " graph(s); see the report\n";
    return kExitInternal;
  }
  return kExitYes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Total domination analysis for small graphs", "wtd"};
  app.require_subcommand(1);

  std::string path, format, out_path, family, core = "complete", edges, assert_ids;
  int k = 2;
  bool witness = false;
  SearchOptions search;
  int min_degree = -1;
  bool all_graphs = false;

  auto* analyze = app.add_subcommand("analyze", "Total domination report for one graph");
  analyze->add_option("path", path, "Graph file ('-' for stdin)")->required();
  analyze->add_option("--format", format, "edge-list or graph6");

  auto* recognize = app.add_subcommand("recognize", "Decide whether a graph is WTD(k)");
  recognize->add_option("path", path, "Graph file")->required();
  recognize->add_option("--format", format, "edge-list or graph6");
  recognize->add_option("--k", k, "Total domination number to test")->required();
  recognize->add_flag("--witness", witness, "Print the deviating minimal TDS on a negative answer");

  auto* construct = app.add_subcommand("construct-w2", "Build a graph from a W2 recipe");
  construct->add_option("recipe", path, "Recipe file")->required();
  construct->add_option("--out", out_path, "Also write the edge list here");

  auto* w2check = app.add_subcommand("w2-check", "Decide W2 membership and print a recipe");
  w2check->add_option("path", path, "Graph file")->required();
  w2check->add_option("--format", format, "edge-list or graph6");

  auto* realize = app.add_subcommand("realize", "Graph whose minimal TDSs are a given family");
  realize->add_option("--family", family, "Sets like \"{a,b};{c,d}\"")->required();
  realize->add_option("--core", core, "Edges among the ground vertices: complete or minimal");
  realize->add_option("--out", out_path, "Also write the edge list here");

  auto* reduce = app.add_subcommand("reduce", "Delete the closed neighbourhood of an induced matching");
  reduce->add_option("path", path, "Graph file")->required();
  reduce->add_option("--format", format, "edge-list or graph6");
  reduce->add_option("--edges", edges, "Matching edges u-v,...")->required();
  reduce->add_option("--out", out_path, "Also write the reduced edge list here");

  auto* search_cmd = app.add_subcommand("search", "Exhaustive search with structural assertions");
  search_cmd->add_option("--n-min", search.filter.n_min, "Smallest order");
  search_cmd->add_option("--n-max", search.filter.n_max, "Largest order");
  search_cmd->add_option("--min-degree", min_degree, "Minimum degree");
  search_cmd->add_flag("--planar", search.filter.planar_only, "Planar graphs only");
  search_cmd->add_flag("--triangle-free", search.filter.triangle_free_only, "Triangle-free graphs only");
  search_cmd->add_flag("--all-graphs", all_graphs, "Include disconnected isolate-free graphs");
  search_cmd->add_option("--assert", assert_ids, "Assertion ids, comma separated, or 'all'");
  search_cmd->add_option("--out", out_path, "JSONL catalog (appended, then rewritten sorted)");
  search_cmd->add_option("--jobs", search.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(path, format, out);
    if (*recognize) return cmd_recognize(path, format, k, witness, out);
    if (*construct) return cmd_construct_w2(path, out_path, out, err);
    if (*w2check) return cmd_w2_check(path, format, out);
    if (*realize) return cmd_realize(family, core, out_path, out);
    if (*reduce) return cmd_reduce(path, format, edges, out_path, out);
    if (*search_cmd) {
      search.filter.require_connected = !all_graphs;
      if (min_degree >= 0) search.filter.min_degree = min_degree;
      if (!assert_ids.empty()) search.assertions = parse_assertion_ids(assert_ids);
      if (!out_path.empty()) search.catalog = out_path;
      return cmd_search(search, out, err);
    }
  } catch (const SelfCheckError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const W2RecipeError& e) {
    err << "invalid recipe: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PersistenceError& e) {
    err << "catalog error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  err << "no command given\n";
  return kExitUsage;
}

}  // namespace wtd
