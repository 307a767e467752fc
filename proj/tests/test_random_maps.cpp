#include <catch_amalgamated.hpp>

#include "taitcw/graph.hpp"
#include "taitcw/random_maps.hpp"

using namespace taitcw;

TEST_CASE("random planar maps are connected, genus 0 and trivalent") {
  for (std::size_t n : {2, 4, 10, 40}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto g = random_planar_map(n, seed);
      CHECK(g.vertex_count() == n);
      CHECK(g.edge_count() == 3 * n / 2);
      const auto r = validate(g);
      CHECK(r.genus == 0);
      CHECK(r.component_count == 1);
    }
  }
}

TEST_CASE("random planar maps are reproducible") {
  CHECK(random_planar_map(20, 5) == random_planar_map(20, 5));
  CHECK(canonical_code(random_planar_map(20, 5)) != canonical_code(random_planar_map(20, 6)));
}

TEST_CASE("forced bridges") {
  PlanarMapOptions options;
  options.force_bridge = true;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_planar_map(4 + 2 * (seed % 4), seed, options);
    CHECK_FALSE(find_bridges(g).empty());
    CHECK(validate(g).genus == 0);
  }
  CHECK_THROWS_AS(random_planar_map(2, 0, options), std::invalid_argument);
  CHECK_THROWS_AS(random_planar_map(7, 0), std::invalid_argument);
}

TEST_CASE("random pairings") {
  const auto g = random_trivalent_map(12, 3);
  CHECK(g.vertex_count() == 12);
  CHECK(g.edge_count() == 18);
  CHECK_NOTHROW(validate(g));
}

TEST_CASE("uniform index stays in range") {
  std::mt19937_64 rng(1);
  for (std::size_t n = 1; n < 50; ++n) CHECK(uniform_index(rng, n) < n);
}
