#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdcage/graph.hpp"

namespace gdcage {

// One result row: parameters, bounds, and what the search established.
struct CageRecord {
  int k = 0, g = 0, d = 0;
  std::int64_t lower_bound = 0;
  std::optional<std::int64_t> order;
  std::optional<std::int64_t> count;
  bool exhaustive = false;
  std::optional<bool> all_bipartite;
  double runtime_seconds = 0.0;
  std::string graph_file;

  bool operator==(const CageRecord&) const = default;
};

// Tab-separated catalog with a fixed header; optional fields serialize as "-".
std::string catalog_header();
std::string format_record(const CageRecord& rec);
CageRecord parse_record(const std::string& line);

std::vector<CageRecord> read_catalog(const std::string& path);

// Creates the file with a header on first use, then appends one line.
void append_record(const std::string& path, const CageRecord& rec);

// Canonical name for the graph6 sidecar file of a result row.
std::string cage_file_name(int k, int g, int d, std::int64_t n);

// Deterministic renderings of a set of rows (sorted by k, g, d).
std::string render_table_csv(std::vector<CageRecord> rows);
std::string render_table_text(std::vector<CageRecord> rows);

// Downloads a reference graph by its House of Graphs id, caching the
// graph6 payload under cache_dir. Returns nullopt on any failure (cache
// miss plus unreachable network, bad payload), with a reason in *error.
std::optional<Graph> fetch_reference_graph(int id, const std::string& cache_dir,
                                           std::string* error = nullptr);

}  // namespace gdcage
