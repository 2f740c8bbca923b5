#include "gdcage/metrics.hpp"

#include <algorithm>
#include <cstdint>

namespace gdcage {

namespace {

// Bitset-frontier BFS; fills dist with levels, kInfDist where unreached.
void bfs_bits(const Graph& g, const std::vector<int>& sources,
              std::vector<int>& dist) {
  const int n = g.order();
  const int words = g.words_per_row();
  dist.assign(n, kInfDist);
  std::vector<std::uint64_t> cur(words, 0), visited(words, 0), next(words, 0);
  for (int s : sources) {
    cur[s / 64] |= std::uint64_t{1} << (s % 64);
    dist[s] = 0;
  }
  for (int w = 0; w < words; ++w) visited[w] = cur[w];
  int level = 0;
  bool any = !sources.empty();
  while (any) {
    ++level;
    std::fill(next.begin(), next.end(), 0);
    for (int w = 0; w < words; ++w) {
      std::uint64_t word = cur[w];
      while (word) {
        int v = w * 64 + __builtin_ctzll(word);
        word &= word - 1;
        auto r = g.row(v);
        for (int i = 0; i < words; ++i) next[i] |= r[i];
      }
    }
    any = false;
    for (int w = 0; w < words; ++w) {
      next[w] &= ~visited[w];
      visited[w] |= next[w];
      if (next[w]) any = true;
      std::uint64_t word = next[w];
      while (word) {
        dist[w * 64 + __builtin_ctzll(word)] = level;
        word &= word - 1;
      }
    }
    cur.swap(next);
  }
}

}  // namespace

std::vector<int> distances(const Graph& g, int root) {
  if (root < 0 || root >= g.order())
    throw std::out_of_range("distances: root out of range");
  std::vector<int> dist;
  bfs_bits(g, {root}, dist);
  return dist;
}

std::vector<int> distances(const Graph& g, const std::vector<int>& sources) {
  if (sources.empty())
    throw std::invalid_argument("distances: empty source set");
  for (int s : sources)
    if (s < 0 || s >= g.order())
      throw std::out_of_range("distances: source out of range");
  std::vector<int> dist;
  bfs_bits(g, sources, dist);
  return dist;
}

LayerPartition layers(const Graph& g, const std::vector<int>& sources) {
  std::vector<int> dist = distances(g, sources);
  LayerPartition lp;
  int maxd = 0;
  for (int v = 0; v < g.order(); ++v)
    if (dist[v] < kInfDist) maxd = std::max(maxd, dist[v]);
  lp.layers.resize(maxd + 1);
  for (int v = 0; v < g.order(); ++v) {
    if (dist[v] < kInfDist)
      lp.layers[dist[v]].push_back(v);
    else
      lp.unreachable.push_back(v);
  }
  return lp;
}

int girth(const Graph& g) {
  const int n = g.order();
  int best = kInfDist;
  std::vector<int> dist(n), parent(n), queue(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kInfDist);
    dist[root] = 0;
    parent[root] = -1;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      int v = queue[head++];
      // Cycles through deeper vertices are found from other roots.
      if (2 * dist[v] >= best) break;
      bool done = false;
      g.for_neighbors(v, [&](int w) {
        if (done) return;
        if (dist[w] == kInfDist) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue[tail++] = w;
        } else if (w != parent[v]) {
          best = std::min(best, dist[v] + dist[w] + 1);
          if (2 * dist[v] >= best) done = true;
        }
      });
      if (done) break;
    }
  }
  return best;
}

int diameter(const Graph& g) {
  const int n = g.order();
  if (n == 0) return kInfDist;
  int best = 0;
  std::vector<int> dist;
  for (int v = 0; v < n; ++v) {
    bfs_bits(g, {v}, dist);
    for (int w = 0; w < n; ++w) {
      if (dist[w] == kInfDist) return kInfDist;
      best = std::max(best, dist[w]);
    }
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<int> dist;
  bfs_bits(g, {0}, dist);
  for (int v = 0; v < g.order(); ++v)
    if (dist[v] == kInfDist) return false;
  return true;
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    bool odd = false;
    while (head < tail && !odd) {
      int v = queue[head++];
      g.for_neighbors(v, [&](int w) {
        if (color[w] == -1) {
          color[w] = color[v] ^ 1;
          queue[tail++] = w;
        } else if (color[w] == color[v]) {
          odd = true;
        }
      });
    }
    if (odd) return false;
  }
  return true;
}

bool is_kgd_graph(const Graph& g, int k, int girth_target, int diam_target) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != k) return false;
  if (girth(g) != girth_target) return false;
  return diameter(g) == diam_target;
}

}  // namespace gdcage
