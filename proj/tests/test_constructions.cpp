#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gdcage/bounds.hpp"
#include "gdcage/canon.hpp"
#include "gdcage/constructions.hpp"
#include "gdcage/generator.hpp"
#include "gdcage/metrics.hpp"
#include "test_graphs.hpp"

using namespace gdcage;
using namespace gdcage::testdata;

namespace {

// 12-vertex block with layer profile (2,1,1,2,2,1,1,2) from {0,1};
// repeatable for k=3, g=4.
Graph make_block_3_4() {
  Graph g(12);
  for (auto [a, b] : {std::pair<int, int>{0, 2}, {1, 2}, {2, 3}, {3, 4},
                      {3, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 8}, {7, 8},
                      {8, 9}, {9, 10}, {9, 11}})
    g.add_edge(a, b);
  return g;
}

// 20-vertex 3-regular host of depth 9 from its four leftmost vertices;
// layers 1..8 induce the block above.
Graph make_spliceable_host() {
  Graph g(20);
  // left end cap: 4-cycle 0-1-2-3 joined crosswise to {4,5}
  for (auto [a, b] : {std::pair<int, int>{0, 1}, {1, 2}, {2, 3}, {3, 0},
                      {4, 1}, {4, 3}, {5, 0}, {5, 2}})
    g.add_edge(a, b);
  // middle: the block, shifted so 4,5 play the roles of 0,1
  for (auto [a, b] : {std::pair<int, int>{4, 6}, {5, 6}, {6, 7}, {7, 8},
                      {7, 9}, {8, 10}, {8, 11}, {9, 10}, {9, 11}, {10, 12},
                      {11, 12}, {12, 13}, {13, 14}, {13, 15}})
    g.add_edge(a, b);
  // right end cap, mirror image
  for (auto [a, b] : {std::pair<int, int>{16, 17}, {17, 18}, {18, 19},
                      {19, 16}, {14, 17}, {14, 19}, {15, 16}, {15, 18}})
    g.add_edge(a, b);
  return g;
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4).num == -1);
  CHECK(Rational(0, 5) == Rational(0, 7));
  CHECK(Rational(22, 7) < Rational(24, 7));
  CHECK_FALSE(Rational(3, 2) < Rational(3, 2));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("degree sequence realization") {
  Multigraph e = realize_degree_sequence({1, 1});
  CHECK(e.edges == std::vector<std::pair<int, int>>{{0, 1}});

  Multigraph loop = realize_degree_sequence({2});
  CHECK(loop.edges == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(loop.degrees() == std::vector<int>{2});

  Multigraph triple = realize_degree_sequence({3, 3});
  CHECK(triple.edges ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 1}, {0, 1}});

  CHECK(realize_degree_sequence({}).edges.empty());
  CHECK(realize_degree_sequence({0, 0}).edges.empty());
  CHECK_THROWS(realize_degree_sequence({1}));
  CHECK_THROWS(realize_degree_sequence({-1, 1}));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const int len = 1 + static_cast<int>(rng() % 20);
    std::vector<int> seq(len);
    int sum = 0;
    for (int& s : seq) {
      s = static_cast<int>(rng() % 9);
      sum += s;
    }
    if (sum % 2 != 0) {
      ++seq[0];
    }
    CHECK(realize_degree_sequence(seq).degrees() == seq);
  }
}

TEST_CASE("repeatable block recognition") {
  Graph block = make_block_3_4();
  RepeatableBlock b = make_repeatable_block(block, {0, 1}, 3, 4);
  CHECK(b.layers.sizes() == std::vector<int>{2, 1, 1, 2, 2, 1, 1, 2});
  CHECK(is_repeatable(b));
  CHECK(repeatable_ratio(b) == Rational(3, 2));

  // truncating the last layer breaks both depth and interior degrees
  std::vector<int> keep(10);
  std::iota(keep.begin(), keep.end(), 0);
  RepeatableBlock trunc =
      make_repeatable_block(block.induced(keep), {0, 1}, 3, 4);
  CHECK_FALSE(is_repeatable(trunc));
  CHECK_THROWS(repeatable_ratio(trunc));

  RepeatableBlock pet = make_repeatable_block(make_petersen(), {0}, 3, 5);
  CHECK_FALSE(is_repeatable(pet));

  CHECK_THROWS(make_repeatable_block(make_petersen().with_padding(1), {0}, 3, 5));
}

TEST_CASE("doubling a repeatable block") {
  RepeatableBlock b = make_repeatable_block(make_block_3_4(), {0, 1}, 3, 4);
  RepeatableBlock d2 = double_repeatable(b);
  CHECK(d2.graph.order() == 18);  // 2*12 - overlap 6
  CHECK(is_repeatable(d2));
  CHECK(repeatable_ratio(d2) == Rational(3, 2));
  CHECK(d2.layers.sizes() ==
        std::vector<int>{2, 1, 1, 2, 2, 1, 1, 2, 2, 1, 1, 2});

  RepeatableBlock d4 = double_repeatable(d2);
  CHECK(d4.graph.order() == 30);
  CHECK(is_repeatable(d4));
  CHECK(repeatable_ratio(d4) == Rational(3, 2));

  CHECK_THROWS(double_repeatable(
      make_repeatable_block(make_petersen(), {0}, 3, 5)));
}

TEST_CASE("splicing out a repeatable subgraph") {
  RepeatableBlock b = make_repeatable_block(make_block_3_4(), {0, 1}, 3, 4);
  RepeatableBlock d2 = double_repeatable(b);

  // removing one period of the doubled block recovers the original
  Graph back = splice_out_repeatable(d2.graph, d2.layers, 0, 7, 3, 4);
  CHECK(back.order() == d2.graph.order() - (12 - 6));
  CHECK(are_isomorphic(back, b.graph));

  // 20-vertex host, layers 1..8 repeatable: splice down to 14 vertices
  Graph host = make_spliceable_host();
  LayerPartition lp = layers(host, {0, 1, 2, 3});
  CHECK(lp.sizes() == std::vector<int>{4, 2, 1, 1, 2, 2, 1, 1, 2, 4});
  Graph spliced = splice_out_repeatable(host, lp, 1, 8, 3, 4);
  CHECK(spliced.order() == 14);
  for (int v = 0; v < spliced.order(); ++v) CHECK(spliced.degree(v) == 3);
  CHECK(girth(spliced) == 4);
  // expected result: both end caps joined by a two-vertex waist
  Graph expect(14);
  for (auto [a, b2] : {std::pair<int, int>{0, 1}, {1, 2}, {2, 3}, {3, 0},
                       {4, 1}, {4, 3}, {5, 0}, {5, 2}, {4, 6}, {5, 6},
                       {6, 7}, {7, 8}, {7, 9}, {10, 11}, {11, 12}, {12, 13},
                       {13, 10}, {8, 11}, {8, 13}, {9, 10}, {9, 12}})
    expect.add_edge(a, b2);
  CHECK(are_isomorphic(spliced, expect));

  CHECK_THROWS(splice_out_repeatable(host, lp, 1, 6, 3, 4));  // too short
  CHECK_THROWS(splice_out_repeatable(host, lp, 0, 8, 3, 4));  // not repeatable
}

TEST_CASE("girth repair") {
  Multigraph triple;
  triple.n = 2;
  triple.edges = {{0, 1}, {0, 1}, {0, 1}};
  Graph repaired = repair_girth(triple, 3, 5, make_petersen());
  CHECK(repaired.order() == 2 + 3 * 10);
  for (int v = 0; v < repaired.order(); ++v) CHECK(repaired.degree(v) == 3);
  CHECK(girth(repaired) == 5);
  CHECK(is_connected(repaired));

  // an intact graph of the right girth passes through unchanged
  Multigraph pet;
  pet.n = 10;
  pet.edges = make_petersen().edges();
  Graph same = repair_girth(pet, 3, 5, make_petersen());
  CHECK(are_isomorphic(same, make_petersen()));

  // a single loop vertex at k=2 needs the disjoint-copy fallback
  Multigraph loop;
  loop.n = 1;
  loop.edges = {{0, 0}};
  Graph two_reg = repair_girth(loop, 2, 3, make_complete(3));
  CHECK(girth(two_reg) == 3);
  for (int v = 0; v < two_reg.order(); ++v) CHECK(two_reg.degree(v) == 2);

  Multigraph bad;
  bad.n = 2;
  bad.edges = {{0, 1}};
  CHECK_THROWS(repair_girth(bad, 3, 5, make_petersen()));       // not regular
  CHECK_THROWS(repair_girth(triple, 3, 4, make_petersen()));    // girth 5 != 4
  CHECK_THROWS(repair_girth(triple, 3, 5, make_complete(4)));   // not (3,5)
}

TEST_CASE("completing a repeatable block") {
  RepeatableBlock b = make_repeatable_block(make_block_3_4(), {0, 1}, 3, 4);
  Graph done = complete_repeatable_to_kgd(b, make_complete_bipartite(3, 3));
  for (int v = 0; v < done.order(); ++v) CHECK(done.degree(v) == 3);
  CHECK(girth(done) == 4);
  // the block survives with its original labels
  for (auto [x, y] : b.graph.edges()) CHECK(done.has_edge(x, y));

  RepeatableBlock d2 = double_repeatable(b);
  Graph done2 = complete_repeatable_to_kgd(d2, make_complete_bipartite(3, 3));
  for (int v = 0; v < done2.order(); ++v) CHECK(done2.degree(v) == 3);
  CHECK(girth(done2) == 4);

  CHECK_THROWS(complete_repeatable_to_kgd(
      make_repeatable_block(make_petersen(), {0}, 3, 5), make_petersen()));
}

TEST_CASE("chain construction, odd degree") {
  Graph k33 = make_complete_bipartite(3, 3);
  Graph chain3 = chain_construction(3, 4, 3, k33, make_petersen());
  CHECK(chain3.order() == 3 * 6 + 2 * 9);
  for (int v = 0; v < chain3.order(); ++v) CHECK(chain3.degree(v) == 3);
  CHECK(girth(chain3) == 4);
  CHECK(is_connected(chain3));
  CHECK(diameter(chain3) > 4);

  Graph chain1 = chain_construction(3, 4, 1, k33, make_petersen());
  CHECK(chain1.order() == 24);
  CHECK(girth(chain1) == 4);

  // diameter grows with r
  CHECK(diameter(chain3) > diameter(chain1));

  CHECK_THROWS(chain_construction(3, 4, 0, k33, make_petersen()));
  CHECK_THROWS(chain_construction(3, 4, 2, k33, k33));        // aux girth
  CHECK_THROWS(chain_construction(3, 5, 2, k33, make_petersen()));  // cage girth
}

TEST_CASE("chain construction, even degree") {
  GenerationResult res = generate_all(4, 5, 3, 19);
  REQUIRE(res.cages.size() == 1);
  const Graph& aux = res.cages[0];  // the unique 4-regular girth-5 graph on 19

  Graph chain = chain_construction(4, 3, 2, make_complete(5), aux);
  for (int v = 0; v < chain.order(); ++v) CHECK(chain.degree(v) == 4);
  CHECK(girth(chain) == 3);
  CHECK(is_connected(chain));
}

TEST_CASE("degree-3 girth-4 extremal family") {
  CHECK(build_3_4_extremal(9).order() == 20);
  CHECK(build_3_4_extremal(12).order() == 26);
  CHECK(build_3_4_extremal(13).order() == 26);
  for (int d = 9; d <= 40; ++d) {
    Graph g = build_3_4_extremal(d);  // verified internally
    CHECK(g.order() == exact_order_3_4(d));
    CHECK(is_kgd_graph(g, 3, 4, d));
  }
  CHECK_THROWS(build_3_4_extremal(8));
}

TEST_CASE("degree-3 girth-5 extremal family") {
  CHECK(build_3_5_extremal(13).order() == 34);
  CHECK(build_3_5_extremal(10).order() == 30);
  CHECK(build_3_5_extremal(7).order() == 22);
  for (int d = 5; d <= 40; ++d) {
    Graph g = build_3_5_extremal(d);
    CHECK(g.order() == exact_order_3_5(d));
    CHECK(is_kgd_graph(g, 3, 5, d));
  }
  CHECK_THROWS(build_3_5_extremal(4));
}

TEST_CASE("girth-3 diameter-3 family") {
  for (int k = 3; k <= 7; ++k) {
    Graph g = build_k_3_3(k);
    CHECK(g.order() == 2 * (k + 1));
    CHECK(g.order() == exact_order_k_3_3(k));
    CHECK(is_kgd_graph(g, k, 3, 3));
  }
  CHECK_THROWS(build_k_3_3(2));
}

TEST_CASE("order-per-diameter ratio bounds") {
  RatioBound rb = ratio_bounds(3, 7, 24);
  CHECK(rb.lower == Rational(22, 7));
  REQUIRE(rb.upper.has_value());
  CHECK(*rb.upper == Rational(24, 7));
  CHECK(rb.lower < *rb.upper);

  RatioBound tight = ratio_bounds(3, 4, 6);
  CHECK(tight.lower == Rational(3, 2));
  CHECK(*tight.upper == tight.lower);

  RatioBound r47 = ratio_bounds(4, 7, 67);
  CHECK(r47.lower == Rational(53, 7));
  CHECK(*r47.upper == Rational(67, 7));
  CHECK((*r47.upper < Rational(75, 8) || Rational(75, 8) < *r47.upper));

  CHECK_FALSE(ratio_bounds(3, 7).upper.has_value());
  CHECK_THROWS(ratio_bounds(2, 5));
  CHECK_THROWS(ratio_bounds(3, 7, 10));  // below the Moore ratio
}
