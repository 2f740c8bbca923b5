#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdcage/canon.hpp"
#include "gdcage/metrics.hpp"
#include "gdcage/oracle.hpp"
#include "test_graphs.hpp"

using namespace gdcage;
using namespace gdcage::testdata;

TEST_CASE("connected cubic graph counts") {
  CHECK(brute_force_regular(4, 3).size() == 1);
  CHECK(brute_force_regular(6, 3).size() == 2);
  CHECK(brute_force_regular(8, 3).size() == 5);
  CHECK(brute_force_regular(10, 3).size() == 19);
}

TEST_CASE("small known enumerations") {
  auto k4 = brute_force_regular(4, 3);
  REQUIRE(k4.size() == 1);
  CHECK(are_isomorphic(k4[0], make_complete(4)));

  auto sixes = brute_force_regular(6, 3);
  bool saw_k33 = false, saw_prism = false;
  for (const Graph& g : sixes) {
    if (are_isomorphic(g, make_complete_bipartite(3, 3))) saw_k33 = true;
    if (girth(g) == 3) saw_prism = true;
  }
  CHECK(saw_k33);
  CHECK(saw_prism);

  auto cycles = brute_force_regular(5, 2);
  REQUIRE(cycles.size() == 1);
  CHECK(are_isomorphic(cycles[0], make_cycle(5)));

  CHECK(brute_force_regular(0, 3).empty());
}

TEST_CASE("input validation") {
  CHECK_THROWS(brute_force_regular(5, 3));    // parity
  CHECK_THROWS(brute_force_regular(14, 3));   // default ceiling
  CHECK_THROWS(brute_force_regular(10, 3, 8));  // tightened ceiling
  CHECK_THROWS(brute_force_regular(-2, 3));
}

TEST_CASE("classification buckets") {
  OracleReport rep = classify_regular(10, 3);
  CHECK(rep.total == 19);
  std::int64_t sum = 0;
  for (const auto& [gd, keys] : rep.graphs_by_gd) sum += keys.size();
  CHECK(sum == rep.total);
  auto it = rep.graphs_by_gd.find({5, 2});
  REQUIRE(it != rep.graphs_by_gd.end());
  REQUIRE(it->second.size() == 1);
  CHECK(*it->second.begin() == canonical_key(make_petersen()));

  OracleReport r6 = classify_regular(6, 3);
  auto k33 = r6.graphs_by_gd.find({4, 2});
  REQUIRE(k33 != r6.graphs_by_gd.end());
  CHECK(*k33->second.begin() == canonical_key(make_complete_bipartite(3, 3)));
}

TEST_CASE("generator agrees with the oracle") {
  CrossValidateReport rep = cross_validate(3, 8);
  CHECK(rep.ok());
  CHECK(rep.buckets_checked >= 5);
  CrossValidateReport rep4 = cross_validate(4, 7);
  CHECK(rep4.ok());
}
