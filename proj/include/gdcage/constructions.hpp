#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gdcage/graph.hpp"
#include "gdcage/metrics.hpp"

namespace gdcage {

// Exact rational, always reduced with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);
  bool operator==(const Rational&) const = default;
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
};

// Loops allowed; a loop (v,v) contributes 2 to the degree of v.
struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<int> degrees() const;
};

// Greedy realization: repeatedly join the two lowest-index deficient
// vertices, closing with loops when a single deficient vertex remains.
Multigraph realize_degree_sequence(const std::vector<int>& seq);

// Graph whose layer structure from N0 repeats: girth >= g, interior degrees
// k, boundary parity for even k, d+1 >= 2g, and a layer-respecting
// isomorphism between the first and last g layers.
struct RepeatableBlock {
  Graph graph;
  LayerPartition layers;
  int k = 0;
  int g = 0;
};

RepeatableBlock make_repeatable_block(const Graph& graph,
                                      const std::vector<int>& n0, int k, int g);

bool is_repeatable(const RepeatableBlock& block);

// |N_0 u ... u N_{d-g}| / (d+1-g), an upper bound on the limiting
// order-per-diameter ratio achievable with this block.
Rational repeatable_ratio(const RepeatableBlock& block);

// Concatenate two copies of the block along the boundary isomorphism,
// yielding a repeatable block on 2|V| - |first g layers| vertices.
RepeatableBlock double_repeatable(const RepeatableBlock& block);

// Remove the repeatable subgraph spanned by layers a..b of the host,
// re-gluing the prefix to the suffix along the boundary isomorphism.
Graph splice_out_repeatable(const Graph& host, const LayerPartition& layers,
                            int a, int b, int k, int g);

// Turn a k-regular multigraph into a simple k-regular graph of girth
// exactly g by splicing copies of templ minus an edge over every loop,
// parallel edge and short-cycle edge.
Graph repair_girth(const Multigraph& mg, int k, int g, const Graph& templ);

// Close the boundary deficiencies of a repeatable block to a k-regular
// girth-g graph containing the block, using templ for girth repair.
Graph complete_repeatable_to_kgd(const RepeatableBlock& block,
                                 const Graph& templ);

// Chain r modified copies of cage into a long k-regular girth-g graph,
// capped at both ends with pieces of aux_cage (a (k,g+1)-graph for odd k,
// a (k,g+2)-graph for even k). The diameter grows linearly in r.
Graph chain_construction(int k, int g, int r, const Graph& cage,
                         const Graph& aux_cage);

// Minimum-order certificates.
Graph build_3_4_extremal(int d);  // d >= 9, order exact_order_3_4(d)
Graph build_3_5_extremal(int d);  // d >= 5, order exact_order_3_5(d)
Graph build_k_3_3(int k);         // k >= 3, order 2(k+1)

struct RatioBound {
  int k = 0;
  int g = 0;
  Rational lower;
  std::optional<Rational> upper;
};

// lower = M(k,g)/g; upper = n_kg/g when the cage order is supplied.
RatioBound ratio_bounds(int k, int g,
                        std::optional<std::int64_t> n_kg = std::nullopt);

}  // namespace gdcage
