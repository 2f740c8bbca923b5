#pragma once

#include <string>
#include <vector>

#include "gdcage/graph.hpp"

namespace gdcage {

// Opaque byte string; equal iff the (colored) graphs are isomorphic.
using CanonicalKey = std::string;

// Canonical labeling by equitable-partition refinement with backtracking
// over target cells. perm[v] is the canonical index of vertex v.
std::vector<int> canonical_labeling(const Graph& g,
                                    const std::vector<int>& colors = {});

CanonicalKey canonical_key(const Graph& g, const std::vector<int>& colors = {});

// Key invariant under isomorphisms mapping {u,v} to the distinguished pair
// as a set; computed on the graph with pendant vertices attached to u and v,
// the pendants carrying their own color class.
CanonicalKey canonical_key_with_pair(const Graph& g, int u, int v);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace gdcage
