#include "gdcage/canon.hpp"

#include <algorithm>
#include <map>

namespace gdcage {

namespace {

using Partition = std::vector<std::vector<int>>;

// Equitable refinement: split cells by neighbour counts per cell until
// stable. Sub-cell order follows the count signatures, so the result is
// independent of vertex labels.
void refine(const Graph& g, Partition& part) {
  const int n = g.order();
  std::vector<int> cell_of(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t c = 0; c < part.size(); ++c)
      for (int v : part[c]) cell_of[v] = static_cast<int>(c);
    Partition next;
    next.reserve(part.size());
    for (const auto& cell : part) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<std::pair<int, int>>, std::vector<int>> groups;
      std::vector<std::pair<int, int>> sig;
      for (int v : cell) {
        sig.clear();
        g.for_neighbors(v, [&](int w) { sig.emplace_back(cell_of[w], 1); });
        std::sort(sig.begin(), sig.end());
        // collapse duplicates into counts
        std::vector<std::pair<int, int>> packed;
        for (auto [c2, one] : sig) {
          if (!packed.empty() && packed.back().first == c2)
            ++packed.back().second;
          else
            packed.emplace_back(c2, 1);
        }
        groups[packed].push_back(v);
      }
      if (groups.size() > 1) changed = true;
      for (auto& [key, verts] : groups) next.push_back(std::move(verts));
    }
    part.swap(next);
  }
}

struct CanonSearch {
  const Graph& g;
  const std::vector<int>& colors;
  std::string best_key;
  std::vector<int> best_perm;
  bool have_best = false;

  void leaf(const Partition& part) {
    const int n = g.order();
    std::vector<int> perm(n);  // perm[v] = canonical index
    for (size_t i = 0; i < part.size(); ++i) perm[part[i][0]] = static_cast<int>(i);
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[perm[v]] = v;
    std::string key;
    key.reserve(4 + n + n * n / 16 + 1);
    key.push_back(static_cast<char>(n >> 8));
    key.push_back(static_cast<char>(n & 255));
    for (int i = 0; i < n; ++i)
      key.push_back(static_cast<char>(colors.empty() ? 0 : colors[inv[i]]));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) {
        acc = (acc << 1) | (g.has_edge(inv[i], inv[j]) ? 1 : 0);
        if (++nbits == 8) {
          key.push_back(static_cast<char>(acc));
          acc = 0;
          nbits = 0;
        }
      }
    if (nbits) key.push_back(static_cast<char>(acc << (8 - nbits)));
    if (!have_best || key < best_key) {
      best_key = std::move(key);
      best_perm = std::move(perm);
      have_best = true;
    }
  }

  void search(Partition part) {
    refine(g, part);
    int target = -1;
    size_t target_size = 1;
    for (size_t c = 0; c < part.size(); ++c)
      if (part[c].size() > target_size) {
        target = static_cast<int>(c);
        target_size = part[c].size();
      }
    if (target < 0) {
      leaf(part);
      return;
    }
    const std::vector<int> cell = part[target];
    for (int v : cell) {
      Partition child;
      child.reserve(part.size() + 1);
      for (size_t c = 0; c < part.size(); ++c) {
        if (static_cast<int>(c) == target) {
          child.push_back({v});
          std::vector<int> rest;
          for (int w : cell)
            if (w != v) rest.push_back(w);
          child.push_back(std::move(rest));
        } else {
          child.push_back(part[c]);
        }
      }
      search(std::move(child));
    }
  }
};

Partition initial_partition(const Graph& g, const std::vector<int>& colors) {
  const int n = g.order();
  std::map<int, std::vector<int>> by_color;
  for (int v = 0; v < n; ++v) by_color[colors.empty() ? 0 : colors[v]].push_back(v);
  Partition part;
  for (auto& [c, verts] : by_color) part.push_back(std::move(verts));
  return part;
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g,
                                    const std::vector<int>& colors) {
  if (!colors.empty() && static_cast<int>(colors.size()) != g.order())
    throw std::invalid_argument("canonical_labeling: color size mismatch");
  if (g.order() == 0) return {};
  CanonSearch cs{g, colors};
  cs.search(initial_partition(g, colors));
  return cs.best_perm;
}

CanonicalKey canonical_key(const Graph& g, const std::vector<int>& colors) {
  if (!colors.empty() && static_cast<int>(colors.size()) != g.order())
    throw std::invalid_argument("canonical_key: color size mismatch");
  if (g.order() == 0) return std::string("\0\0", 2);
  CanonSearch cs{g, colors};
  cs.search(initial_partition(g, colors));
  return cs.best_key;
}

CanonicalKey canonical_key_with_pair(const Graph& g, int u, int v) {
  if (u == v)
    throw std::invalid_argument("canonical_key_with_pair: u == v");
  const int n = g.order();
  Graph decorated = g.with_padding(2);
  decorated.add_edge(u, n);
  decorated.add_edge(v, n + 1);
  std::vector<int> colors(n + 2, 0);
  colors[n] = colors[n + 1] = 1;
  return canonical_key(decorated, colors);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  return canonical_key(a) == canonical_key(b);
}

}  // namespace gdcage
