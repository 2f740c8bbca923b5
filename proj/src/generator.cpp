#include "gdcage/generator.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "gdcage/bounds.hpp"
#include "gdcage/metrics.hpp"

namespace gdcage {

namespace {

// Growable tree under construction; converted to Graph at the end.
struct TreeBuilder {
  std::vector<std::vector<int>> adj;

  int new_vertex() {
    adj.emplace_back();
    return static_cast<int>(adj.size()) - 1;
  }
  void add_edge(int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  // BFS from the roots; every vertex at depth <= fill_depth gets children
  // appended until its degree reaches k.
  void grow_ball(const std::vector<int>& roots, int fill_depth, int k) {
    if (fill_depth < 0) return;
    std::vector<int> depth(adj.size(), -1);
    std::vector<int> queue;
    for (int r : roots) {
      depth[r] = 0;
      queue.push_back(r);
    }
    for (size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      if (depth[v] > fill_depth) continue;
      for (int w : adj[v])
        if (depth[w] == -1) {
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        }
      while (degree(v) < k) {
        int c = new_vertex();
        depth.push_back(depth[v] + 1);
        add_edge(v, c);
        queue.push_back(c);
      }
    }
  }

  Graph to_graph() const {
    Graph g(static_cast<int>(adj.size()));
    for (size_t a = 0; a < adj.size(); ++a)
      for (int b : adj[a])
        if (static_cast<int>(a) < b) g.add_edge(static_cast<int>(a), b);
    return g;
  }
};

std::pair<int, int> ordered(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

StartTree make_start_tree(int k, int g, int d, bool safe_mode) {
  if (k < 3 || g < 3) throw std::invalid_argument("make_start_tree: k,g >= 3");
  const int t = g / 2;
  if (d < t) throw std::invalid_argument("make_start_tree: d < floor(g/2)");
  // For d = g-1 with even g the odd-girth tree is larger and still embeds.
  if (g % 2 == 0 && d == g - 1) return make_start_tree(k, g - 1, d, safe_mode);

  TreeBuilder tb;
  for (int i = 0; i <= d; ++i) tb.new_vertex();
  for (int i = 0; i < d; ++i) tb.add_edge(i, i + 1);
  const int u = 0, v = d;

  auto vertex_ball = [&](int root, int radius) {
    tb.grow_ball({root}, radius - 1, k);
  };
  auto edge_ball = [&](int a, int b) {  // height t-1 on both sides
    tb.grow_ball({a, b}, t - 2, k);
  };

  if (g % 2 == 1)
    vertex_ball(u, t);
  else
    edge_ball(u, 1);

  if (d <= 2 * t) {
    vertex_ball(v, d - t - 1);
  } else {
    if (g % 2 == 1)
      vertex_ball(v, t);
    else
      edge_ball(v, d - 1);
    if (!safe_mode) {
      const int rem = d - (2 * t + 1);
      const int r = rem / g;
      const int s = rem % g;
      for (int l = 0; l < r; ++l) {
        const int q = t + l * g;
        if (g % 2 == 1)
          vertex_ball(q + t + 1, t);
        else
          edge_ball(q + t, q + t + 1);
      }
      const int base = t + r * g + 1;  // first of the s gap layers
      if (s >= 2) {
        const int half = s / 2;
        if (s % 2 == 1)
          vertex_ball(base + half, half);
        else
          tb.grow_ball({base + half - 1, base + half}, half - 2, k);
      }
    }
  }
  return StartTree{tb.to_graph(), u, v};
}

EdgeList valid_addable_edges(const Graph& graph, int k, int g, int d, int u,
                             int v) {
  const int n = graph.order();
  const std::vector<int> du = distances(graph, u);
  const std::vector<int> dv = distances(graph, v);
  EdgeList out;
  std::vector<int> row;
  for (int a = 0; a < n; ++a) {
    if (graph.degree(a) >= k) continue;
    row = distances(graph, a);
    for (int b = a + 1; b < n; ++b) {
      if (graph.degree(b) >= k || graph.has_edge(a, b)) continue;
      if (row[b] < g - 1) continue;
      const long long via1 = static_cast<long long>(du[a]) + 1 + dv[b];
      const long long via2 = static_cast<long long>(du[b]) + 1 + dv[a];
      if (std::min(via1, via2) < d) continue;
      out.emplace_back(a, b);
    }
  }
  return out;
}

int choose_active_vertex(const Graph& graph, int k, const EdgeList& e_add) {
  const int n = graph.order();
  std::vector<int> incident(n, 0);
  for (auto [a, b] : e_add) {
    ++incident[a];
    ++incident[b];
  }
  int best = -1;
  for (int w = 0; w < n; ++w) {
    if (graph.degree(w) >= k) continue;
    if (best == -1 || incident[w] < incident[best]) best = w;
  }
  if (best == -1)
    throw std::logic_error("choose_active_vertex: no deficient vertex");
  return best;
}

bool feasibility_prune(const Graph& graph, int k, const EdgeList& e_add,
                       GenerationStats* stats) {
  const int n = graph.order();
  std::vector<int> incident(n, 0);
  for (auto [a, b] : e_add) {
    ++incident[a];
    ++incident[b];
  }
  long long total_deficiency = 0;
  for (int w = 0; w < n; ++w)
    total_deficiency += std::max(0, k - graph.degree(w));
  if (total_deficiency % 2 != 0) {
    if (stats) ++stats->prune_parity;
    return true;
  }
  if (total_deficiency > 2 * static_cast<long long>(e_add.size())) {
    if (stats) ++stats->prune_capacity;
    return true;
  }
  for (int w = 0; w < n; ++w) {
    const int need = k - graph.degree(w);
    if (need > 0 && incident[w] < need) {
      if (stats) ++stats->prune_deficient_vertex;
      return true;
    }
  }
  return false;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Frame {
  Graph graph;
  EdgeList e_add;
  int active;
};

struct Engine {
  int k, g, d, u, v;
  GeneratorOptions opts;
  Clock::time_point deadline;
  bool has_deadline = false;

  GenerationStats stats;
  std::unordered_set<CanonicalKey> seen;
  bool seen_full = false;
  std::map<CanonicalKey, Graph> found;

  bool collecting = false;
  std::vector<Frame>* frontier = nullptr;

  bool over_budget() {
    if (!has_deadline) return false;
    if ((stats.nodes & 255) == 0 && Clock::now() > deadline)
      stats.budget_exhausted = true;
    return stats.budget_exhausted;
  }

  bool complete(const Graph& G) const {
    for (int w = 0; w < G.order(); ++w)
      if (G.degree(w) != k) return false;
    return true;
  }

  // Re-filter prev under the new graph; drops pairs whose insertion would
  // now exceed a degree, close a short cycle, or shorten d(u,v).
  EdgeList refilter(const Graph& G, const EdgeList& prev) {
    const std::vector<int> du = distances(G, u);
    const std::vector<int> dv = distances(G, v);
    std::vector<std::vector<int>> rows(G.order());
    EdgeList out;
    out.reserve(prev.size());
    for (auto [a, b] : prev) {
      if (G.degree(a) >= k || G.degree(b) >= k || G.has_edge(a, b)) continue;
      if (rows[a].empty()) rows[a] = distances(G, a);
      if (rows[a][b] < g - 1) continue;
      const long long via1 = static_cast<long long>(du[a]) + 1 + dv[b];
      const long long via2 = static_cast<long long>(du[b]) + 1 + dv[a];
      if (std::min(via1, via2) < d) continue;
      out.emplace_back(a, b);
    }
    return out;
  }

  void accept(const Graph& G) {
    if (girth(G) != g || diameter(G) != d) return;
    std::vector<int> perm = canonical_labeling(G);
    Graph canon = G.relabeled(perm);
    found.emplace(canonical_key(G), std::move(canon));
  }

  void rec(Graph& G, EdgeList e_add, int x, int depth) {
    ++stats.nodes;
    if (over_budget()) return;
    if (opts.use_seen_set) {
      CanonicalKey key = canonical_key_with_pair(G, u, v);
      if (seen.count(key)) {
        ++stats.prune_seen;
        return;
      }
      if (!seen_full) {
        if (seen.size() < opts.seen_cap)
          seen.insert(std::move(key));
        else
          seen_full = true;
      }
    }
    if (complete(G)) {
      accept(G);
      return;
    }
    if (G.degree(x) >= k) {
      if (e_add.empty()) return;  // deficient vertices but nothing addable
      x = choose_active_vertex(G, k, e_add);
    }
    if (opts.use_feasibility_prune && feasibility_prune(G, k, e_add, &stats))
      return;
    if (collecting && depth >= opts.split_depth) {
      frontier->push_back(Frame{G, std::move(e_add), x});
      return;
    }
    std::vector<int> partners;
    for (auto [a, b] : e_add) {
      if (a == x) partners.push_back(b);
      if (b == x) partners.push_back(a);
    }
    std::sort(partners.begin(), partners.end());
    for (int w : partners) {
      const auto edge = ordered(x, w);
      if (std::find(e_add.begin(), e_add.end(), edge) == e_add.end()) continue;
      G.add_edge(x, w);
      EdgeList child = refilter(G, e_add);
      child.erase(std::remove(child.begin(), child.end(), edge), child.end());
      rec(G, std::move(child), x, depth + 1);
      G.remove_edge(x, w);
      e_add.erase(std::remove(e_add.begin(), e_add.end(), edge), e_add.end());
      if (stats.budget_exhausted) return;
      if (opts.use_feasibility_prune && feasibility_prune(G, k, e_add, &stats))
        return;
    }
  }
};

}  // namespace

GenerationResult generate_all(int k, int g, int d, int n,
                              const GeneratorOptions& opts) {
  if (k < 3 || g < 3 || d < g / 2)
    throw std::invalid_argument("generate_all: parameters out of range");
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("generate_all: order beyond capacity");
  GenerationResult result;
  result.order = n;
  const auto t0 = Clock::now();
  auto finish = [&](GenerationResult r) {
    r.stats.wall_seconds =
        std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
  };
  if ((static_cast<long long>(n) * k) % 2 != 0) {
    result.diagnostic = "odd degree sum: n*k must be even";
    return finish(std::move(result));
  }
  if (n < lower_bound(k, g, d)) {
    result.diagnostic = "below lower bound M(k;g,d)";
    return finish(std::move(result));
  }
  StartTree st = make_start_tree(k, g, d, opts.safe_start_tree);
  if (st.tree.order() > n) {
    result.diagnostic = "below forced start-tree order";
    return finish(std::move(result));
  }

  Graph root = st.tree.with_padding(n - st.tree.order());
  EdgeList e_add = valid_addable_edges(root, k, g, d, st.u, st.v);
  Engine engine;
  engine.k = k;
  engine.g = g;
  engine.d = d;
  engine.u = st.u;
  engine.v = st.v;
  engine.opts = opts;
  if (opts.budget_seconds > 0) {
    engine.has_deadline = true;
    engine.deadline =
        t0 + std::chrono::duration_cast<Clock::duration>(
                 std::chrono::duration<double>(opts.budget_seconds));
  }

  std::map<CanonicalKey, Graph> found;
  GenerationStats stats;
  if (engine.complete(root)) {
    engine.accept(root);
    ++engine.stats.nodes;
    result.stats = engine.stats;
    for (auto& [key, graph] : engine.found)
      result.cages.push_back(std::move(graph));
    return finish(std::move(result));
  }
  int x = choose_active_vertex(root, k, e_add);
  if (opts.workers <= 1) {
    engine.rec(root, std::move(e_add), x, 0);
    found = std::move(engine.found);
    stats = engine.stats;
  } else {
    std::vector<Frame> frontier;
    engine.collecting = true;
    engine.frontier = &frontier;
    engine.rec(root, std::move(e_add), x, 0);
    found = std::move(engine.found);
    stats = engine.stats;
    std::atomic<size_t> next{0};
    std::vector<Engine> workers(opts.workers);
    std::vector<std::thread> threads;
    for (int wi = 0; wi < opts.workers; ++wi) {
      Engine& we = workers[wi];
      we.k = k;
      we.g = g;
      we.d = d;
      we.u = st.u;
      we.v = st.v;
      we.opts = opts;
      we.has_deadline = engine.has_deadline;
      we.deadline = engine.deadline;
      threads.emplace_back([&we, &frontier, &next] {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= frontier.size()) break;
          Frame f = frontier[i];
          we.rec(f.graph, std::move(f.e_add), f.active, 0);
        }
      });
    }
    for (auto& th : threads) th.join();
    for (Engine& we : workers) {
      stats.absorb(we.stats);
      for (auto& [key, graph] : we.found) found.emplace(key, std::move(graph));
    }
  }
  result.stats = stats;
  result.exhaustive = !stats.budget_exhausted;
  for (auto& [key, graph] : found) result.cages.push_back(std::move(graph));
  return finish(std::move(result));
}

std::pair<int, GenerationResult> find_cage(int k, int g, int d,
                                           std::optional<int> n_max,
                                           const GeneratorOptions& opts) {
  const int limit = n_max.value_or(Graph::kMaxVertices);
  long long lb = lower_bound(k, g, d);
  if (lb > limit) {
    GenerationResult empty;
    empty.diagnostic = "lower bound exceeds n_max";
    empty.exhaustive = false;
    return {limit, std::move(empty)};
  }
  int n = static_cast<int>(lb);
  if ((static_cast<long long>(n) * k) % 2 != 0) ++n;
  const int step = (k % 2 != 0) ? 2 : 1;
  for (; n <= limit; n += step) {
    GenerationResult res = generate_all(k, g, d, n, opts);
    if (!res.cages.empty()) return {n, std::move(res)};
    if (res.stats.budget_exhausted) {
      res.diagnostic = "unresolved: budget exhausted at n=" + std::to_string(n);
      return {n, std::move(res)};
    }
  }
  GenerationResult empty;
  empty.diagnostic = "unresolved up to n_max=" + std::to_string(limit);
  empty.exhaustive = false;
  return {limit, std::move(empty)};
}

}  // namespace gdcage
