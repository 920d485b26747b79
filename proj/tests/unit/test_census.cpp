#include "doctest.h"
#include "planar_turan/embedding.hpp"
#include "planar_turan/oracle.hpp"

using namespace planar_turan;

TEST_CASE("census counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 5, 14, 50, 233, 1249};
  for (int n = 4; n <= 11; ++n) {
    const auto census = enumerate_triangulations(n);
    CHECK(census.size() == expected[n - 4]);
    for (const Graph& g : census.graphs) CHECK(is_triangulation(g));
    CHECK(std::is_sorted(census.codes.begin(), census.codes.end()));
  }
}

TEST_CASE("census agrees with independent generators") {
  for (int n = 4; n <= 9; ++n) CHECK(triangulations_by_flips(n) == enumerate_triangulations(n).codes);
  for (int n = 4; n <= 7; ++n) CHECK(triangulations_by_filter(n) == enumerate_triangulations(n).codes);
}

TEST_CASE("census range checks") {
  CHECK_THROWS_AS(enumerate_triangulations(3), OracleError);
  CHECK_THROWS_AS(enumerate_triangulations(13), OracleError);
}
