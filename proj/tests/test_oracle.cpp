#include <catch_amalgamated.hpp>

#include <set>

#include "fixtures.hpp"
#include "taitcw/corpus.hpp"
#include "taitcw/errors.hpp"
#include "taitcw/oracle.hpp"
#include "taitcw/random_maps.hpp"

using namespace taitcw;
using fixtures::word;

TEST_CASE("corpus counts") {
  CHECK(enumerate_colorings(corpus("theta")).size() == 6);
  CHECK(enumerate_colorings(corpus("dumbbell")).empty());
  CHECK(enumerate_colorings(corpus("petersen")).empty());
  CHECK(enumerate_colorings(corpus("k33")).size() == 12);
  CHECK(enumerate_colorings(corpus("tetrahedron")).size() == 6);
  CHECK(enumerate_colorings(corpus("prism")).size() == 6);
  CHECK(enumerate_colorings(corpus("cube")).size() == 24);
}

TEST_CASE("backtracking matches the raw scan") {
  OracleOptions raw;
  raw.raw_scan = true;
  raw.loop_shortcut = false;
  for (const char* name : {"theta", "dumbbell", "tetrahedron", "prism", "cube"}) {
    INFO(name);
    CHECK(enumerate_colorings(corpus(name)) == enumerate_colorings(corpus(name), raw));
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_trivalent_map(2 + 2 * (seed % 4), seed);
    CHECK(enumerate_colorings(g) == enumerate_colorings(g, raw));
  }
  CHECK_THROWS_AS(enumerate_colorings(corpus("petersen"), raw), CapacityExceeded);
}

TEST_CASE("loop shortcut can be disabled") {
  OracleOptions slow;
  slow.loop_shortcut = false;
  CHECK(enumerate_colorings(corpus("dumbbell"), slow).empty());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_trivalent_map(6, seed);
    CHECK(enumerate_colorings(g, slow) == enumerate_colorings(g));
  }
}

TEST_CASE("colorings are admissible, distinct and ordered") {
  const auto g = corpus("cube");
  const auto all = enumerate_colorings(g);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::set<ColorAssignment>(all.begin(), all.end()).size() == all.size());
  for (const auto& col : all) CHECK(is_admissible(g, col));
  CHECK_FALSE(is_admissible(corpus("theta"), {Color::a, Color::a, Color::b}));
}

TEST_CASE("threads do not change the enumeration") {
  OracleOptions many;
  many.threads = 3;
  CHECK(enumerate_colorings(corpus("cube"), many) == enumerate_colorings(corpus("cube")));
  CHECK(enumerate_colorings(corpus("petersen"), many).empty());
}

TEST_CASE("boundary count matrices") {
  const auto cup = count_matrix_oracle(fixtures::theta_cup_graph());
  CHECK(cup.output_width() == 2);
  CHECK(cup.input_width() == 0);
  CHECK(cup.serialize() == "aa - 2\nbb - 2\ncc - 2\n");

  const auto edge = count_matrix_oracle(EmbeddedGraph({}, {{0, 1}}, {0}, {1}));
  CHECK(edge.serialize() == "a a 1\nb b 1\nc c 1\n");

  const auto merge = count_matrix_oracle(EmbeddedGraph({{0, 1, 2}}, {{0, 3}, {1, 4}, {2, 5}}, {3, 4}, {5}));
  CHECK(merge.serialize() == "a bc 1\na cb 1\nb ac 1\nb ca 1\nc ab 1\nc ba 1\n");
}

TEST_CASE("oracle matrices agree with evaluation") {
  int tried = 0;
  for (std::uint64_t seed = 0; tried < 60 && seed < 5000; ++seed) {
    const auto w = fixtures::random_open_word(seed, static_cast<int>(seed % 4), 9);
    if (!w) continue;
    ++tried;
    CHECK(count_matrix_oracle(recompose(*w)) == evaluate_matrix(*w));
  }
  CHECK(tried == 60);
}

TEST_CASE("bridges force zero colorings") {
  PlanarMapOptions options;
  options.force_bridge = true;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_planar_map(4 + 2 * (seed % 4), seed, options);
    CHECK(enumerate_colorings(g).empty());
  }
}

TEST_CASE("theta face coloring") {
  const auto g = corpus("theta");
  const auto faces = tait_face_coloring(g, {Color::a, Color::b, Color::c});
  REQUIRE(faces.size() == 3);
  CHECK(faces[validate(g).face_of[0]].is_identity());
  CHECK(std::set<std::uint8_t>{faces[0].code(), faces[1].code(), faces[2].code()}.size() == 3);
}

TEST_CASE("face colorings are proper") {
  for (const auto& name : planar_corpus_names()) {
    const auto g = corpus(name);
    const auto r = validate(g);
    for (const auto& col : enumerate_colorings(g)) {
      const auto faces = tait_face_coloring(g, col);
      for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
        const auto [x, y] = g.edge(e);
        const K4Element left = faces[r.face_of[static_cast<std::size_t>(x)]];
        const K4Element right = faces[r.face_of[static_cast<std::size_t>(y)]];
        CHECK(left * right == to_k4(col[static_cast<std::size_t>(e)]));
      }
    }
  }
}

TEST_CASE("tetrahedron faces use all four values") {
  const auto g = corpus("tetrahedron");
  for (const auto& col : enumerate_colorings(g)) {
    std::set<std::uint8_t> used;
    for (K4Element f : tait_face_coloring(g, col)) used.insert(f.code());
    CHECK(used.size() == 4);
  }
}

TEST_CASE("face coloring errors") {
  CHECK_THROWS_AS(tait_face_coloring(corpus("theta"), {Color::a, Color::a, Color::a}), InconsistentHolonomy);
  CHECK_THROWS_AS(tait_face_coloring(fixtures::theta_cup_graph(), {Color::a, Color::b, Color::c, Color::c}), NotClosed);
  CHECK_THROWS_AS(tait_face_coloring(corpus("k33"), enumerate_colorings(corpus("k33")).front()), NotPlanar);
}

TEST_CASE("cross-section products") {
  const auto theta = corpus("theta");
  const auto w = slice(theta);
  for (const auto& col : enumerate_colorings(theta)) {
    const auto products = cross_section_products(theta, col, w);
    CHECK(products.size() == w.layers.size() + 1);
    for (K4Element p : products) CHECK(p.is_identity());
  }
  const auto tetra = corpus("tetrahedron");
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto tw = reslice_distinct(tetra, seed);
    for (const auto& col : enumerate_colorings(tetra)) {
      for (K4Element p : cross_section_products(tetra, col, tw)) CHECK(p.is_identity());
    }
  }
}

TEST_CASE("a corrupted coloring breaks some cross-section") {
  const auto theta = corpus("theta");
  auto col = enumerate_colorings(theta).front();
  col[0] = col[0] == Color::a ? Color::b : Color::a;
  bool broken = false;
  for (K4Element p : cross_section_products(theta, col, slice(theta))) broken = broken || !p.is_identity();
  CHECK(broken);
  CHECK_THROWS_AS(cross_section_products(theta, col, slice(corpus("dumbbell"))), WidthMismatch);
}

TEST_CASE("coloring formats") {
  CHECK(format_coloring({Color::a, Color::c, Color::b}) == "edge0=a edge1=c edge2=b");
  CHECK(format_face_coloring({K4Element::identity(), K4Element::c()}) == "face0=1 face1=c");
}
