#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wtd/graph.hpp"

namespace wtd {

struct SearchFilter {
  int n_min = 2;
  int n_max = 8;
  bool require_connected = true;
  std::optional<int> min_degree;
  bool planar_only = false;
  bool triangle_free_only = false;
};

/// Throws std::invalid_argument for n_min < 2 or n_min > n_max and
/// CapabilityError above the canonicalization bound.
void validate_filter(const SearchFilter& filter);

/**
 * One canonical representative per isomorphism class passing the filter, in
 * order of increasing n and then canonical key. Graphs on n vertices are
 * grown from the classes on n - 1 vertices by adding a vertex with every
 * possible neighbourhood; connectivity, planarity and triangle-freeness are
 * hereditary along that growth (a connected graph always has a non-cut
 * vertex), so they prune during generation. Minimum degree is applied on
 * output only.
 */
void enumerate_graphs(const SearchFilter& filter, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_graphs(const SearchFilter& filter);

struct CatalogEntry {
  std::string canonical_key;
  int n = 0;
  int m = 0;
  int gamma_t = 0;
  int upper_gamma_t = 0;
  bool is_wtd = false;
  int rho = 0;
  std::optional<int> girth;
  std::optional<int> diameter;
  /// ν(G_de), present iff γ_t = 2.
  std::optional<int> nu_gde;
  int min_degree = 0;
  bool planar = false;
  bool triangle_free = false;

  bool operator==(const CatalogEntry&) const = default;
};

/// Pure function of the isomorphism class. Needs a graph without isolated vertices.
CatalogEntry classify(const Graph& g);

/// JSONL record: the entry fields plus "graph6".
std::string catalog_line(const CatalogEntry& e);
CatalogEntry parse_catalog_line(std::string_view line);

enum class Assertion {
  planar_order_bound,       // T12
  planar_large_matching,    // L12a
  min_degree_matching,      // L12b
  planar_matching_or_small, // P7a
  girth_min_degree3,        // T14
  girth_min_degree2,        // HR97
  diameter_packing,         // DIAM
  triangle_free_recognizer, // T11
};

std::string assertion_id(Assertion a);
/// Accepts the ids above or "all"; comma separated.
std::vector<Assertion> parse_assertion_ids(std::string_view ids);
std::vector<Assertion> all_assertions();

struct AssertionTally {
  std::size_t checked = 0;
  std::vector<std::string> violations;
};

struct SearchFrontier {
  int n_min = 0;
  int n_max = 0;
  std::map<int, std::size_t> classes_per_n;
  std::size_t wtd_count = 0;
  /// Largest planar WTD(2) graph with minimum degree >= 3 met in this run.
  std::optional<int> largest_planar_wtd2_min3;
  std::string largest_planar_wtd2_min3_key;
};

struct AssertionReport {
  std::map<std::string, AssertionTally> tallies;
  SearchFrontier frontier;

  std::size_t violation_count() const;
  /// {assertion-id: {checked, violations}}
  std::string tallies_json() const;
  std::string frontier_json() const;
};

/// Checks one catalog entry (and its graph, for the recognizer comparison).
void check_assertions(const CatalogEntry& entry, const Graph& g, const std::vector<Assertion>& which,
                      AssertionReport& report);

struct SearchOptions {
  SearchFilter filter;
  std::vector<Assertion> assertions;
  /// Append-only JSONL catalog; entries already present are not recomputed.
  std::optional<std::filesystem::path> catalog;
  int jobs = 1;
};

struct SearchResult {
  /// Entries of this run's filter, sorted by canonical key.
  std::vector<CatalogEntry> entries;
  AssertionReport report;
  std::size_t reused = 0;
};

class PersistenceError : public std::runtime_error {
 public:
  PersistenceError(const std::string& what, std::size_t persisted)
      : std::runtime_error(what + " (" + std::to_string(persisted) + " new entries persisted before failure)"),
        persisted_(persisted) {}
  std::size_t persisted() const noexcept { return persisted_; }

 private:
  std::size_t persisted_;
};

/**
 * Enumerates, classifies (in parallel when jobs > 1) and checks. New entries
 * are appended to the catalog as they complete; on success the catalog is
 * rewritten sorted by key so that output is independent of worker count.
 */
SearchResult run_search(const SearchOptions& options);

}  // namespace wtd
