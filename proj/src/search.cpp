#include "wtd/search.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "wtd/canonical.hpp"
#include "wtd/domination.hpp"
#include "wtd/errors.hpp"
#include "wtd/graph_io.hpp"
#include "wtd/planarity.hpp"
#include "wtd/structure.hpp"
#include "wtd/wtd2.hpp"

namespace wtd {

using json = nlohmann::json;

void validate_filter(const SearchFilter& f) {
  if (f.n_min < 2) throw std::invalid_argument("n_min must be at least 2");
  if (f.n_min > f.n_max) throw std::invalid_argument("n_min exceeds n_max");
  if (f.n_max > kCanonicalBound)
    throw CapabilityError("n_max " + std::to_string(f.n_max) + " exceeds the canonicalization bound " +
                          std::to_string(kCanonicalBound));
  if (f.min_degree && *f.min_degree < 0) throw std::invalid_argument("min_degree must be nonnegative");
}

void enumerate_graphs(const SearchFilter& filter, const std::function<void(const Graph&)>& visit) {
  validate_filter(filter);
  std::vector<std::string> level{write_graph6(Graph(1))};
  for (int n = 2; n <= filter.n_max; ++n) {
    std::set<std::string> next;
    for (const std::string& key : level) {
      const Graph base = parse_graph6(key);
      const std::uint64_t subsets = std::uint64_t{1} << base.order();
      for (std::uint64_t bits = filter.require_connected ? 1 : 0; bits < subsets; ++bits) {
        const VertexSet attach(bits);
        if (filter.triangle_free_only) {
          bool independent = true;
          for (int v : attach)
            if (base.neighbors(v).intersects(attach)) {
              independent = false;
              break;
            }
          if (!independent) continue;
        }
        Graph grown(n);
        for (const Edge& e : base.edges()) grown.add_edge(e.u, e.v);
        for (int v : attach) grown.add_edge(v, n - 1);
        if (filter.planar_only && !is_planar(grown)) continue;
        next.insert(canonical_form(grown));
      }
    }
    level.assign(next.begin(), next.end());
    if (n < filter.n_min) continue;
    for (const std::string& key : level) {
      const Graph g = parse_graph6(key);
      if (filter.min_degree && g.min_degree() < *filter.min_degree) continue;
      visit(g);
    }
  }
}

std::vector<Graph> enumerate_graphs(const SearchFilter& filter) {
  std::vector<Graph> out;
  enumerate_graphs(filter, [&](const Graph& g) { out.push_back(g); });
  return out;
}

CatalogEntry classify(const Graph& g) {
  CatalogEntry e;
  e.canonical_key = canonical_form(g);
  e.n = g.order();
  e.m = g.size();
  const TotalDominationReport r = total_domination_report(g);
  e.gamma_t = r.gamma_t;
  e.upper_gamma_t = r.upper_gamma_t;
  e.is_wtd = r.is_wtd;
  e.rho = packing_number_general(g);
  e.girth = girth(g);
  e.diameter = diameter(g);
  if (r.gamma_t == 2) e.nu_gde = matching_number(g.order(), dominating_edge_subgraph(g).edges);
  e.min_degree = g.min_degree();
  e.planar = is_planar(g);
  e.triangle_free = is_triangle_free(g);
  return e;
}

namespace {

json optional_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::optional<int> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<int>();
}

}  // namespace

std::string catalog_line(const CatalogEntry& e) {
  json j;
  j["key"] = e.canonical_key;
  j["graph6"] = e.canonical_key;
  j["n"] = e.n;
  j["m"] = e.m;
  j["gamma_t"] = e.gamma_t;
  j["Gamma_t"] = e.upper_gamma_t;
  j["is_wtd"] = e.is_wtd;
  j["rho"] = e.rho;
  j["girth"] = optional_json(e.girth);
  j["diameter"] = optional_json(e.diameter);
  j["nu_gde"] = optional_json(e.nu_gde);
  j["min_degree"] = e.min_degree;
  j["planar"] = e.planar;
  j["triangle_free"] = e.triangle_free;
  return j.dump();
}

CatalogEntry parse_catalog_line(std::string_view line) {
  const json j = json::parse(line);
  CatalogEntry e;
  e.canonical_key = j.at("key").get<std::string>();
  e.n = j.at("n").get<int>();
  e.m = j.at("m").get<int>();
  e.gamma_t = j.at("gamma_t").get<int>();
  e.upper_gamma_t = j.at("Gamma_t").get<int>();
  e.is_wtd = j.at("is_wtd").get<bool>();
  e.rho = j.at("rho").get<int>();
  e.girth = optional_from(j, "girth");
  e.diameter = optional_from(j, "diameter");
  e.nu_gde = optional_from(j, "nu_gde");
  e.min_degree = j.at("min_degree").get<int>();
  e.planar = j.at("planar").get<bool>();
  e.triangle_free = j.at("triangle_free").get<bool>();
  return e;
}

std::string assertion_id(Assertion a) {
  switch (a) {
    case Assertion::planar_order_bound:
      return "T12";
    case Assertion::planar_large_matching:
      return "L12a";
    case Assertion::min_degree_matching:
      return "L12b";
    case Assertion::planar_matching_or_small:
      return "P7a";
    case Assertion::girth_min_degree3:
      return "T14";
    case Assertion::girth_min_degree2:
      return "HR97";
    case Assertion::diameter_packing:
      return "DIAM";
    case Assertion::triangle_free_recognizer:
      return "T11";
  }
  return "?";
}

std::vector<Assertion> all_assertions() {
  return {Assertion::planar_order_bound,       Assertion::planar_large_matching, Assertion::min_degree_matching,
          Assertion::planar_matching_or_small, Assertion::girth_min_degree3,     Assertion::girth_min_degree2,
          Assertion::diameter_packing,         Assertion::triangle_free_recognizer};
}

std::vector<Assertion> parse_assertion_ids(std::string_view ids) {
  std::vector<Assertion> out;
  std::size_t pos = 0;
  while (pos <= ids.size()) {
    auto comma = ids.find(',', pos);
    if (comma == std::string_view::npos) comma = ids.size();
    const std::string_view id = ids.substr(pos, comma - pos);
    pos = comma + 1;
    if (id.empty()) continue;
    if (id == "all") {
      for (Assertion a : all_assertions())
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
      continue;
    }
    bool known = false;
    for (Assertion a : all_assertions()) {
      if (assertion_id(a) == id) {
        known = true;
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
      }
    }
    if (!known) throw std::invalid_argument("unknown assertion id '" + std::string(id) + "'");
  }
  return out;
}

std::size_t AssertionReport::violation_count() const {
  std::size_t total = 0;
  for (const auto& [id, tally] : tallies) total += tally.violations.size();
  return total;
}

std::string AssertionReport::tallies_json() const {
  json j = json::object();
  for (const auto& [id, tally] : tallies) j[id] = {{"checked", tally.checked}, {"violations", tally.violations}};
  return j.dump();
}

std::string AssertionReport::frontier_json() const {
  json per_n = json::object();
  for (const auto& [n, count] : frontier.classes_per_n) per_n[std::to_string(n)] = count;
  json j = {{"n_min", frontier.n_min},
            {"n_max", frontier.n_max},
            {"classes_per_n", per_n},
            {"wtd_count", frontier.wtd_count},
            {"largest_planar_wtd2_min_degree3", optional_json(frontier.largest_planar_wtd2_min3)}};
  if (frontier.largest_planar_wtd2_min3) j["largest_planar_wtd2_min_degree3_key"] = frontier.largest_planar_wtd2_min3_key;
  return j.dump();
}

void check_assertions(const CatalogEntry& e, const Graph& g, const std::vector<Assertion>& which,
                      AssertionReport& report) {
  const bool wtd2 = e.is_wtd && e.gamma_t == 2;
  for (Assertion a : which) {
    AssertionTally& tally = report.tallies[assertion_id(a)];
    bool applies = false;
    bool holds = true;
    switch (a) {
      case Assertion::planar_order_bound:
        applies = e.planar && wtd2 && e.min_degree >= 3;
        holds = e.n <= 16;
        break;
      case Assertion::planar_large_matching:
        applies = e.planar && wtd2 && e.nu_gde.value_or(0) >= 3;
        holds = e.n <= 8;
        break;
      case Assertion::min_degree_matching:
        applies = wtd2 && e.min_degree >= 3;
        holds = e.nu_gde.value_or(0) >= 2;
        break;
      case Assertion::planar_matching_or_small:
        applies = e.planar && wtd2 && e.min_degree >= 3;
        holds = e.nu_gde == 2 || e.n <= 8;
        break;
      case Assertion::girth_min_degree3:
        applies = e.is_wtd && e.min_degree >= 3;
        holds = e.girth.has_value() && *e.girth <= 12;
        break;
      case Assertion::girth_min_degree2:
        applies = e.is_wtd && e.min_degree >= 2 && e.diameter.has_value();
        holds = e.girth.has_value() && *e.girth <= 14;
        break;
      case Assertion::diameter_packing:
        applies = e.gamma_t == 2;
        holds = e.diameter.has_value() && *e.diameter <= 3 && ((*e.diameter == 3) == (e.rho == 2));
        break;
      case Assertion::triangle_free_recognizer:
        applies = e.triangle_free;
        holds = recognize_triangle_free_wtd2(g) == wtd2;
        break;
    }
    if (!applies) continue;
    ++tally.checked;
    if (!holds) tally.violations.push_back(e.canonical_key);
  }
}

namespace {

std::map<std::string, CatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::map<std::string, CatalogEntry> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      CatalogEntry e = parse_catalog_line(line);
      out.emplace(e.canonical_key, std::move(e));
    } catch (const json::exception& ex) {
      throw ParseError("bad catalog record in " + path.string() + ": " + ex.what(), line_no);
    }
  }
  return out;
}

std::vector<CatalogEntry> classify_all(const std::vector<Graph>& graphs, int jobs) {
  std::vector<CatalogEntry> out(graphs.size());
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || graphs.size() < 2) {
    for (std::size_t i = 0; i < graphs.size(); ++i) out[i] = classify(graphs[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < graphs.size(); i += workers) out[i] = classify(graphs[i]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace

SearchResult run_search(const SearchOptions& options) {
  validate_filter(options.filter);
  SearchResult result;
  result.report.frontier.n_min = options.filter.n_min;
  result.report.frontier.n_max = options.filter.n_max;
  for (Assertion a : options.assertions) result.report.tallies[assertion_id(a)];

  std::map<std::string, CatalogEntry> stored;
  if (options.catalog) stored = load_catalog(*options.catalog);

  std::vector<Graph> graphs;
  enumerate_graphs(options.filter, [&](const Graph& g) {
    if (!g.has_isolated_vertex()) graphs.push_back(g);
  });

  std::vector<Graph> fresh;
  for (const Graph& g : graphs)
    if (!stored.contains(write_graph6(g))) fresh.push_back(g);
  const std::vector<CatalogEntry> computed = classify_all(fresh, options.jobs);

  if (options.catalog) {
    std::size_t persisted = 0;
    std::ofstream out(*options.catalog, std::ios::app);
    if (!out) throw PersistenceError("cannot open catalog " + options.catalog->string(), persisted);
    for (const CatalogEntry& e : computed) {
      out << catalog_line(e) << '\n';
      if (!out) throw PersistenceError("write to catalog " + options.catalog->string() + " failed", persisted);
      ++persisted;
    }
  }
  result.reused = graphs.size() - fresh.size();

  std::map<std::string, CatalogEntry> mine;
  for (const Graph& g : graphs) {
    const std::string key = write_graph6(g);
    if (auto it = stored.find(key); it != stored.end()) mine.emplace(key, it->second);
  }
  for (const CatalogEntry& e : computed) {
    mine.emplace(e.canonical_key, e);
    stored.emplace(e.canonical_key, e);
  }

  SearchFrontier& frontier = result.report.frontier;
  for (const auto& [key, e] : mine) {
    check_assertions(e, parse_graph6(key), options.assertions, result.report);
    ++frontier.classes_per_n[e.n];
    if (e.is_wtd) ++frontier.wtd_count;
    if (e.planar && e.is_wtd && e.gamma_t == 2 && e.min_degree >= 3 &&
        (!frontier.largest_planar_wtd2_min3 || e.n > *frontier.largest_planar_wtd2_min3)) {
      frontier.largest_planar_wtd2_min3 = e.n;
      frontier.largest_planar_wtd2_min3_key = key;
    }
    result.entries.push_back(e);
  }

  if (options.catalog) {
    // Finalize: rewrite sorted by key through a temporary file.
    const auto tmp = std::filesystem::path(options.catalog->string() + ".tmp");
    {
      std::ofstream out(tmp, std::ios::trunc);
      for (const auto& [key, e] : stored) out << catalog_line(e) << '\n';
      if (!out) throw PersistenceError("cannot finalize catalog " + options.catalog->string(), computed.size());
    }
    std::filesystem::rename(tmp, *options.catalog);
  }
  return result;
}

}  // namespace wtd
