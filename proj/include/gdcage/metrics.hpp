#pragma once

#include <vector>

#include "gdcage/graph.hpp"

namespace gdcage {

// BFS layer decomposition from a (multi-source) vertex set.
struct LayerPartition {
  std::vector<std::vector<int>> layers;  // layers[i] = vertices at distance i
  std::vector<int> unreachable;

  std::vector<int> sizes() const {
    std::vector<int> s;
    s.reserve(layers.size());
    for (const auto& l : layers) s.push_back(static_cast<int>(l.size()));
    return s;
  }
};

// Single-source distances; kInfDist for unreachable vertices.
std::vector<int> distances(const Graph& g, int root);

// Multi-source distances (distance to the nearest source).
std::vector<int> distances(const Graph& g, const std::vector<int>& sources);

LayerPartition layers(const Graph& g, const std::vector<int>& sources);

// Length of a shortest cycle, kInfDist for forests.
int girth(const Graph& g);

// Max pairwise distance, kInfDist if disconnected (or n == 0).
int diameter(const Graph& g);

bool is_connected(const Graph& g);

bool is_bipartite(const Graph& g);

// k-regular, girth exactly girth_target, diameter exactly diam_target.
bool is_kgd_graph(const Graph& g, int k, int girth_target, int diam_target);

}  // namespace gdcage
