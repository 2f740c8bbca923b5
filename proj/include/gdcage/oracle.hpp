#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "gdcage/canon.hpp"
#include "gdcage/generator.hpp"
#include "gdcage/graph.hpp"

namespace gdcage {

// All connected k-regular graphs on n vertices, pairwise non-isomorphic.
// Deliberately naive edge-subset backtracking; shares no pruning machinery
// with the generator so that agreement between the two is meaningful.
std::vector<Graph> brute_force_regular(int n, int k, int ceiling = 12);

struct OracleReport {
  int k = 0;
  int n = 0;
  std::map<std::pair<int, int>, std::set<CanonicalKey>> graphs_by_gd;
  std::int64_t total = 0;
};

OracleReport classify_regular(int n, int k, int ceiling = 12);

struct CrossValidateMismatch {
  int n = 0, g = 0, d = 0;
  std::set<CanonicalKey> oracle_keys;
  std::set<CanonicalKey> generator_keys;
};

struct CrossValidateReport {
  int k = 0;
  int n_ceiling = 0;
  int buckets_checked = 0;
  std::vector<CrossValidateMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// For every feasible n <= n_ceiling, buckets the brute-force enumeration by
// (girth, diameter) and compares each occurring bucket with generate_all
// by canonical-key sets.
CrossValidateReport cross_validate(int k, int n_ceiling,
                                   const GeneratorOptions& opts = {});

}  // namespace gdcage
