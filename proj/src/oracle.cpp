#include "gdcage/oracle.hpp"

#include <stdexcept>
#include <unordered_set>

#include "gdcage/metrics.hpp"

namespace gdcage {

namespace {

struct BruteForce {
  int n, k;
  std::vector<std::pair<int, int>> pairs;  // lexicographic
  std::vector<int> deg;
  Graph graph;
  std::unordered_set<CanonicalKey> seen;
  std::vector<Graph> out;

  BruteForce(int n_, int k_) : n(n_), k(k_), deg(n_, 0), graph(n_) {
    // Every k-regular graph has a labeling with N(0) = {1,...,k}, so pin
    // vertex 0 and enumerate only the remaining pairs.
    if (n > k)
      for (int b = 1; b <= k; ++b) {
        graph.add_edge(0, b);
        ++deg[0];
        ++deg[b];
      }
    for (int a = 1; a < n; ++a)
      for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }

  void emit() {
    for (int v = 0; v < n; ++v)
      if (deg[v] != k) return;
    if (!is_connected(graph)) return;
    if (seen.insert(canonical_key(graph)).second) out.push_back(graph);
  }

  void rec(size_t i) {
    if (i == pairs.size()) {
      emit();
      return;
    }
    auto [a, b] = pairs[i];
    // All pairs touching vertices below a are decided once the first
    // component reaches a.
    if (b == a + 1)
      for (int v = 0; v < a; ++v)
        if (deg[v] != k) return;
    // vertex a can only gain edges towards b..n-1 from here on
    if (k - deg[a] > n - b) return;
    if (deg[a] < k && deg[b] < k) {
      graph.add_edge(a, b);
      ++deg[a];
      ++deg[b];
      rec(i + 1);
      --deg[a];
      --deg[b];
      graph.remove_edge(a, b);
    }
    rec(i + 1);
  }
};

}  // namespace

std::vector<Graph> brute_force_regular(int n, int k, int ceiling) {
  if (n < 0 || k < 1) throw std::invalid_argument("brute_force_regular: bad n,k");
  if ((static_cast<long long>(n) * k) % 2 != 0)
    throw std::invalid_argument("brute_force_regular: n*k must be even");
  if (n > ceiling)
    throw std::invalid_argument("brute_force_regular: n exceeds ceiling");
  if (n == 0) return {};
  BruteForce bf(n, k);
  bf.rec(0);
  return std::move(bf.out);
}

OracleReport classify_regular(int n, int k, int ceiling) {
  OracleReport rep;
  rep.k = k;
  rep.n = n;
  for (const Graph& g : brute_force_regular(n, k, ceiling)) {
    const int gi = girth(g);
    const int di = diameter(g);
    rep.graphs_by_gd[{gi, di}].insert(canonical_key(g));
    ++rep.total;
  }
  return rep;
}

CrossValidateReport cross_validate(int k, int n_ceiling,
                                   const GeneratorOptions& opts) {
  CrossValidateReport rep;
  rep.k = k;
  rep.n_ceiling = n_ceiling;
  for (int n = k + 1; n <= n_ceiling; ++n) {
    if ((static_cast<long long>(n) * k) % 2 != 0) continue;
    OracleReport oracle = classify_regular(n, k, n_ceiling);
    for (const auto& [gd, keys] : oracle.graphs_by_gd) {
      const auto [g, d] = gd;
      GenerationResult res = generate_all(k, g, d, n, opts);
      std::set<CanonicalKey> gen_keys;
      for (const Graph& cage : res.cages) gen_keys.insert(canonical_key(cage));
      ++rep.buckets_checked;
      if (gen_keys != keys)
        rep.mismatches.push_back(CrossValidateMismatch{n, g, d, keys, gen_keys});
    }
  }
  return rep;
}

}  // namespace gdcage
