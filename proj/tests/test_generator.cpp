#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gdcage/bounds.hpp"
#include "gdcage/canon.hpp"
#include "gdcage/generator.hpp"
#include "gdcage/graph6.hpp"
#include "gdcage/metrics.hpp"
#include "test_graphs.hpp"

using namespace gdcage;
using namespace gdcage::testdata;

namespace {

std::set<CanonicalKey> key_set(const GenerationResult& r) {
  std::set<CanonicalKey> out;
  for (const Graph& g : r.cages) out.insert(canonical_key(g));
  return out;
}

std::vector<std::string> g6_lines(const GenerationResult& r) {
  std::vector<std::string> out;
  for (const Graph& g : r.cages) out.push_back(graph6_encode(g));
  return out;
}

}  // namespace

TEST_CASE("start tree shape") {
  for (auto [k, g, d] : std::vector<std::tuple<int, int, int>>{
           {3, 5, 2}, {3, 5, 7}, {3, 5, 13}, {3, 4, 9}, {3, 6, 6}, {3, 6, 12},
           {3, 7, 10}, {4, 5, 8}, {4, 6, 7}, {5, 4, 6}, {3, 8, 9}}) {
    CAPTURE(k);
    CAPTURE(g);
    CAPTURE(d);
    StartTree st = make_start_tree(k, g, d);
    const Graph& t = st.tree;
    CHECK(t.order() == lower_bound_m_prime(k, g, d));
    CHECK(t.edge_count() == t.order() - 1);
    CHECK(is_connected(t));
    CHECK(girth(t) == kInfDist);
    const auto du = distances(t, st.u);
    CHECK(du[st.v] == d);
    for (int w = 0; w < t.order(); ++w) CHECK(t.degree(w) <= k);

    StartTree safe = make_start_tree(k, g, d, true);
    CHECK(safe.tree.order() <= t.order());
    CHECK(is_connected(safe.tree));
    CHECK(distances(safe.tree, safe.u)[safe.v] == d);
  }
  // even girth with d = g-1 borrows the odd-girth recipe
  StartTree st = make_start_tree(3, 6, 5);
  CHECK(st.tree.order() == lower_bound_m_prime(3, 5, 5));
  CHECK_THROWS(make_start_tree(2, 5, 3));
  CHECK_THROWS(make_start_tree(3, 7, 2));
}

TEST_CASE("addable edge filter") {
  // path on 4 vertices, looking for girth >= 4, diameter >= 3 between ends
  Graph p = make_path(4);
  EdgeList e = valid_addable_edges(p, 3, 4, 3, 0, 3);
  // (0,3) closes a 4-cycle but drops d(0,3) to 1; (0,2) and (1,3) close
  // triangles; nothing is addable
  CHECK(e.empty());
  // same path, diameter target 2: still nothing (girth)
  CHECK(valid_addable_edges(p, 3, 4, 2, 0, 3).empty());
  // girth target 3 and d=2: chords allowed, end edge still kills d(u,v)
  EdgeList e3 = valid_addable_edges(p, 3, 3, 2, 0, 3);
  CHECK(e3 == EdgeList{{0, 2}, {1, 3}});
  // isolated vertices attach freely
  Graph q = make_path(2).with_padding(1);
  EdgeList eq = valid_addable_edges(q, 3, 3, 1, 0, 1);
  CHECK(eq == EdgeList{{0, 2}, {1, 2}});
}

TEST_CASE("active vertex choice") {
  Graph p = make_path(3).with_padding(1);
  // e_add gives vertex 0 one option, vertex 3 two, vertex 1 none listed
  EdgeList e = {{0, 3}, {2, 3}};
  // all vertices deficient for k=3; vertex 1 has zero incident addable
  CHECK(choose_active_vertex(p, 3, e) == 1);
  // degree-saturated vertices are skipped
  Graph tri = make_cycle(3).with_padding(1);
  CHECK(choose_active_vertex(tri, 2, {{0, 3}}) == 3);
  CHECK_THROWS(choose_active_vertex(make_cycle(3), 2, {}));
}

TEST_CASE("feasibility rules") {
  GenerationStats stats;
  Graph p = make_path(2).with_padding(2);
  // vertices 2,3 deficient, the only listed pair misses both -> rule (a)
  CHECK(feasibility_prune(p, 1, {{0, 1}}, &stats));
  CHECK(stats.prune_deficient_vertex == 1);
  // a pair joining them makes the state feasible again
  CHECK(!feasibility_prune(p, 1, {{2, 3}}, &stats));
  // odd total deficiency -> rule (b)
  Graph q = make_path(2).with_padding(1);
  CHECK(feasibility_prune(q, 1, {{0, 2}}, &stats));
  CHECK(stats.prune_parity == 1);
  // deficiency exceeds edge capacity -> rule (c)
  Graph r(4);
  CHECK(feasibility_prune(r, 3, {{0, 1}, {2, 3}}, &stats));
  CHECK(stats.prune_capacity == 1);
  // feasible state passes
  Graph s = make_path(4);
  CHECK(!feasibility_prune(s, 1, {{0, 3}}, &stats));
}

TEST_CASE("unique cages are reproduced") {
  GenerationResult r1 = generate_all(3, 5, 2, 10);
  REQUIRE(r1.cages.size() == 1);
  CHECK(are_isomorphic(r1.cages[0], make_petersen()));
  CHECK(r1.exhaustive);

  GenerationResult r2 = generate_all(3, 6, 3, 14);
  REQUIRE(r2.cages.size() == 1);
  CHECK(are_isomorphic(r2.cages[0], make_heawood()));

  GenerationResult r3 = generate_all(3, 4, 2, 6);
  REQUIRE(r3.cages.size() == 1);
  CHECK(are_isomorphic(r3.cages[0], make_complete_bipartite(3, 3)));
}

TEST_CASE("counts on small closed rows") {
  struct Row {
    int k, g, d, n;
    size_t count;
  };
  for (Row row : {Row{3, 5, 3, 12, 2}, Row{3, 4, 4, 12, 4}, Row{3, 4, 5, 14, 4},
                  Row{3, 5, 4, 14, 2}, Row{3, 6, 4, 16, 1}, Row{4, 4, 2, 8, 1},
                  Row{4, 4, 3, 10, 1}}) {
    CAPTURE(row.k);
    CAPTURE(row.g);
    CAPTURE(row.d);
    GenerationResult r = generate_all(row.k, row.g, row.d, row.n);
    CHECK(r.cages.size() == row.count);
    CHECK(r.exhaustive);
    for (const Graph& g : r.cages)
      CHECK(is_kgd_graph(g, row.k, row.g, row.d));
  }
}

TEST_CASE("no cage below the true order") {
  GenerationResult r = generate_all(3, 4, 5, 12);  // true order is 14
  CHECK(r.cages.empty());
  CHECK(r.exhaustive);
  CHECK(r.diagnostic.empty());
}

TEST_CASE("front rejections") {
  GenerationResult parity = generate_all(3, 5, 2, 11);
  CHECK(parity.cages.empty());
  CHECK(parity.diagnostic.find("even") != std::string::npos);
  GenerationResult below = generate_all(3, 5, 2, 8);
  CHECK(below.cages.empty());
  CHECK(below.diagnostic.find("bound") != std::string::npos);
  CHECK_THROWS(generate_all(2, 5, 2, 10));
  CHECK_THROWS(generate_all(3, 5, 1, 10));
}

TEST_CASE("toggles do not change the output set") {
  for (auto [k, g, d, n] : std::vector<std::array<int, 4>>{
           {{3, 4, 5, 14}}, {{3, 5, 3, 12}}, {{3, 6, 4, 16}}}) {
    GenerationResult base = generate_all(k, g, d, n);
    GeneratorOptions no_seen;
    no_seen.use_seen_set = false;
    GeneratorOptions no_prune;
    no_prune.use_feasibility_prune = false;
    GeneratorOptions safe;
    safe.safe_start_tree = true;
    CHECK(key_set(generate_all(k, g, d, n, no_seen)) == key_set(base));
    CHECK(key_set(generate_all(k, g, d, n, no_prune)) == key_set(base));
    CHECK(key_set(generate_all(k, g, d, n, safe)) == key_set(base));
  }
}

TEST_CASE("parallel output matches serial byte for byte") {
  GenerationResult serial = generate_all(3, 4, 6, 16);
  CHECK(serial.cages.size() == 7);
  for (int workers : {2, 4}) {
    GeneratorOptions opts;
    opts.workers = workers;
    opts.split_depth = 4;
    GenerationResult par = generate_all(3, 4, 6, 16, opts);
    CHECK(g6_lines(par) == g6_lines(serial));
  }
}

TEST_CASE("budget exhaustion is reported honestly") {
  GeneratorOptions opts;
  opts.budget_seconds = 1e-9;
  GenerationResult r = generate_all(3, 6, 6, 28, opts);
  CHECK(!r.exhaustive);
  CHECK(r.stats.budget_exhausted);
}

TEST_CASE("cage scan finds the minimum order") {
  auto [n1, r1] = find_cage(3, 4, 5);
  CHECK(n1 == 14);
  CHECK(r1.cages.size() == 4);
  auto [n2, r2] = find_cage(3, 5, 3);
  CHECK(n2 == 12);
  CHECK(r2.cages.size() == 2);
  auto [n3, r3] = find_cage(3, 4, 5, 12);  // ceiling below the answer
  CHECK(r3.cages.empty());
  CHECK(!r3.exhaustive);
  CHECK(r3.diagnostic.find("unresolved") != std::string::npos);
}

TEST_CASE("seen set cap only affects speed") {
  GeneratorOptions tiny;
  tiny.seen_cap = 4;
  GenerationResult r = generate_all(3, 4, 5, 14, tiny);
  CHECK(r.cages.size() == 4);
  CHECK(r.exhaustive);
}

TEST_CASE("deterministic repeat runs") {
  GenerationResult a = generate_all(3, 5, 4, 14);
  GenerationResult b = generate_all(3, 5, 4, 14);
  CHECK(g6_lines(a) == g6_lines(b));
  CHECK(a.cages.size() == 2);
}
