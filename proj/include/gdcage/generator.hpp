#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdcage/canon.hpp"
#include "gdcage/graph.hpp"

namespace gdcage {

using EdgeList = std::vector<std::pair<int, int>>;

struct StartTree {
  Graph tree;
  int u = 0;
  int v = 0;
};

// Tree that embeds (mapping u,v onto a diametral pair) into every
// (k;g,d)-graph. safe_mode keeps only the two end balls and the u-v path;
// the default additionally places middle balls and a gap tree so the tree
// reaches M'(k;g,d) vertices.
StartTree make_start_tree(int k, int g, int d, bool safe_mode = false);

struct GeneratorOptions {
  bool use_seen_set = true;
  bool use_feasibility_prune = true;
  bool safe_start_tree = false;
  std::size_t seen_cap = 1u << 22;  // max number of memoised states
  int workers = 1;
  int split_depth = 6;       // edges added before handing off to workers
  double budget_seconds = 0;  // 0 = unlimited
};

struct GenerationStats {
  std::uint64_t nodes = 0;
  std::uint64_t prune_seen = 0;
  std::uint64_t prune_deficient_vertex = 0;  // rule (a)
  std::uint64_t prune_parity = 0;            // rule (b)
  std::uint64_t prune_capacity = 0;          // rule (c)
  double wall_seconds = 0;
  bool budget_exhausted = false;

  void absorb(const GenerationStats& o) {
    nodes += o.nodes;
    prune_seen += o.prune_seen;
    prune_deficient_vertex += o.prune_deficient_vertex;
    prune_parity += o.prune_parity;
    prune_capacity += o.prune_capacity;
    budget_exhausted = budget_exhausted || o.budget_exhausted;
  }
};

struct GenerationResult {
  int order = 0;
  std::vector<Graph> cages;  // pairwise non-isomorphic, canonical-key sorted
  bool exhaustive = true;
  std::string diagnostic;  // set when the run was rejected up front
  GenerationStats stats;
};

// Partial graph plus the distinguished diametral pair and addable-edge set.
struct SearchState {
  Graph graph;
  int k = 0, g = 0, d = 0;
  int u = 0, v = 0;
  EdgeList e_add;
  int active = -1;
};

// Pairs (a,b) whose insertion keeps all degrees <= k, girth >= g and
// d(u,v) >= d.
EdgeList valid_addable_edges(const Graph& graph, int k, int g, int d, int u,
                             int v);

// Deficient vertex with the fewest addable incident edges; ties to the
// smallest index.
int choose_active_vertex(const Graph& graph, int k, const EdgeList& e_add);

// True when the state provably cannot complete to a k-regular graph.
bool feasibility_prune(const Graph& graph, int k, const EdgeList& e_add,
                       GenerationStats* stats = nullptr);

// All pairwise non-isomorphic (k;g,d)-graphs on n vertices.
GenerationResult generate_all(int k, int g, int d, int n,
                              const GeneratorOptions& opts = {});

// Smallest admissible n with a non-empty generate_all, scanning upward from
// the lower bound. Returns the order and its result; result.exhaustive is
// false (with a diagnostic) when the scan hit n_max or a budget.
std::pair<int, GenerationResult> find_cage(
    int k, int g, int d, std::optional<int> n_max = std::nullopt,
    const GeneratorOptions& opts = {});

}  // namespace gdcage
