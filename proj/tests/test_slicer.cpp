#include <catch_amalgamated.hpp>

#include <set>

#include "fixtures.hpp"
#include "taitcw/corpus.hpp"
#include "taitcw/errors.hpp"
#include "taitcw/random_maps.hpp"
#include "taitcw/slicer.hpp"
#include "taitcw/word_io.hpp"

using namespace taitcw;
using fixtures::word;

namespace {

std::size_t vertex_layers(const MorphismWord& w) {
  std::size_t n = 0;
  for (const auto& gen : w.layers) n += gen.kind == GenKind::Merge || gen.kind == GenKind::Split;
  return n;
}

}  // namespace

TEST_CASE("theta slices into cup split merge cap") {
  const auto w = slice(corpus("theta"));
  CHECK(w == word(0, {Generator::cup(0), Generator::split(0), Generator::merge(0), Generator::cap(0)}, 0));
  CHECK(w.widths() == std::vector<int>{0, 2, 3, 2, 0});
  CHECK(canonical_code(recompose(w)) == canonical_code(corpus("theta")));
}

TEST_CASE("identity cylinder") {
  const EmbeddedGraph bare({}, {{0, 1}}, {0}, {1});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto w = reslice_distinct(bare, seed);
    CHECK(w.layers.empty());
    CHECK(w.input_width == 1);
    CHECK(w.output_width == 1);
  }
  const auto back = recompose(word(1, {}, 1));
  CHECK(back.edge_count() == 1);
  CHECK(back.vertex_count() == 0);
  CHECK(canonical_code(back) == canonical_code(bare));
}

TEST_CASE("dumbbell word is frozen") {
  const auto w = slice(corpus("dumbbell"));
  CHECK(w == word(0,
                  {Generator::cup(0), Generator::split(0), Generator::cap(1), Generator::split(0), Generator::cap(0)},
                  0));
  CHECK(canonical_code(recompose(w)) == canonical_code(corpus("dumbbell")));
}

TEST_CASE("dumbbell reslices differ") {
  std::set<std::string> distinct;
  for (std::uint64_t seed = 0; seed < 5; ++seed) distinct.insert(serialize_word(reslice_distinct(corpus("dumbbell"), seed)));
  CHECK(distinct.size() >= 2);
}

TEST_CASE("theta reslices recompose to theta") {
  for (std::uint64_t seed : {0, 1}) {
    CHECK(canonical_code(recompose(reslice_distinct(corpus("theta"), seed))) == canonical_code(corpus("theta")));
  }
}

TEST_CASE("corpus round trips for every seed") {
  for (const auto& name : planar_corpus_names()) {
    const auto g = corpus(name);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      INFO(name << " seed " << seed);
      const auto w = reslice_distinct(g, seed);
      CHECK(canonical_code(recompose(w)) == canonical_code(g));
      CHECK(w.max_width() <= 2 * static_cast<int>(g.edge_count()));
      CHECK(vertex_layers(w) == g.vertex_count());
    }
  }
}

TEST_CASE("random planar maps round trip") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_planar_map(2 + 2 * (seed % 12), seed);
    for (std::uint64_t s : {0, 3}) {
      const auto w = reslice_distinct(g, s);
      CHECK(canonical_code(recompose(w)) == canonical_code(g));
      CHECK(w.max_width() <= 2 * static_cast<int>(g.edge_count()));
      CHECK(vertex_layers(w) == g.vertex_count());
    }
  }
}

TEST_CASE("bridged maps round trip") {
  PlanarMapOptions options;
  options.bridge_probability = 0.4;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_planar_map(4 + 2 * (seed % 8), seed, options);
    CHECK(canonical_code(recompose(slice(g))) == canonical_code(g));
  }
}

TEST_CASE("open graphs round trip") {
  const auto cup = fixtures::theta_cup_graph();
  const auto w = slice(cup);
  CHECK(w.input_width == 0);
  CHECK(w.output_width == 2);
  CHECK(canonical_code(recompose(w)) == canonical_code(cup));

  int tried = 0;
  for (std::uint64_t seed = 0; tried < 150 && seed < 5000; ++seed) {
    const auto drawn = fixtures::random_open_word(seed, static_cast<int>(seed % 4), 10);
    if (!drawn) continue;
    ++tried;
    const auto g = recompose(*drawn);
    INFO("seed " << seed << ": " << serialize_word(*drawn));
    for (std::uint64_t s : {0, 1}) {
      const auto again = reslice_distinct(g, s);
      CHECK(again.input_width == drawn->input_width);
      CHECK(again.output_width == drawn->output_width);
      CHECK(canonical_code(recompose(again)) == canonical_code(g));
    }
  }
  CHECK(tried == 150);
}

TEST_CASE("minimum width slicing") {
  for (const auto& name : planar_corpus_names()) {
    const auto g = corpus(name);
    const auto w = slice_min_width(g);
    CHECK(canonical_code(recompose(w)) == canonical_code(g));
    CHECK(w.max_width() <= slice(g).max_width());
  }
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = random_planar_map(60, seed);
    const auto w = slice_min_width(g);
    CHECK(canonical_code(recompose(w)) == canonical_code(g));
    CHECK(w.max_width() <= slice(g).max_width());
  }
}

TEST_CASE("slicing preconditions") {
  CHECK_THROWS_AS(slice(corpus("k33")), NotPlanar);
  const EmbeddedGraph two({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}},
                          {{0, 5}, {1, 4}, {2, 3}, {6, 11}, {7, 10}, {8, 9}});
  CHECK_THROWS_AS(slice(two), Disconnected);
  CHECK(slice(EmbeddedGraph{}).layers.empty());
}

TEST_CASE("recompose rejects free loops") {
  CHECK_THROWS_AS(recompose(word(0, {Generator::cup(0), Generator::cap(0)}, 0)), MalformedWord);
  CHECK_THROWS_AS(recompose(word(1, {Generator::cup(1), Generator::cap(1)}, 1)), MalformedWord);
}

TEST_CASE("recompose numbering") {
  const auto g = recompose(word(2, {Generator::merge(0)}, 1));
  CHECK(g.vertex_count() == 1);
  CHECK(g.legs_in() == std::vector<HalfEdgeId>{3, 4});
  CHECK(g.legs_out() == std::vector<HalfEdgeId>{5});
  CHECK(g.rotation(0) == EmbeddedGraph::Rotation{0, 1, 2});
  CHECK(g.partner(3) == 0);
  CHECK(g.partner(4) == 1);
  CHECK(g.partner(5) == 2);
}

TEST_CASE("traced recomposition follows strands") {
  const auto traced = recompose_traced(slice(corpus("tetrahedron")));
  const auto widths = slice(corpus("tetrahedron")).widths();
  REQUIRE(traced.strand_edges.size() == widths.size());
  for (std::size_t i = 0; i < widths.size(); ++i)
    CHECK(traced.strand_edges[i].size() == static_cast<std::size_t>(widths[i]));
}

TEST_CASE("word widths and positions") {
  CHECK(width_delta(GenKind::Cup) == 2);
  CHECK(width_delta(GenKind::Cap) == -2);
  CHECK(width_delta(GenKind::Merge) == -1);
  CHECK(width_delta(GenKind::Split) == 1);
  CHECK_NOTHROW(check_position(Generator::cup(3), 3));
  CHECK_THROWS_AS(check_position(Generator::cup(4), 3), InvalidPosition);
  CHECK_THROWS_AS(check_position(Generator::cap(2), 3), InvalidPosition);
  CHECK_NOTHROW(check_position(Generator::merge(1), 3));
  CHECK_THROWS_AS(check_position(Generator::split(3), 3), InvalidPosition);
  CHECK_THROWS_AS(check_position(Generator::split(-1), 3), InvalidPosition);
  CHECK_THROWS_AS(word(0, {Generator::cup(0)}, 0).widths(), MalformedWord);
  CHECK_THROWS_AS(word(0, {Generator::cap(0)}, 0).widths(), InvalidPosition);
  const auto w = word(0, {Generator::cup(0), Generator::split(0), Generator::merge(0), Generator::cap(0)}, 0);
  CHECK(w.max_width() == 3);
  CHECK(w.slice_range(1, 3) == word(2, {Generator::split(0), Generator::merge(0)}, 2));
}

TEST_CASE("word serialization") {
  const auto w = word(0, {Generator::cup(0), Generator::split(1)}, 3);
  CHECK(serialize_word(w) ==
        R"({"input_width": 0, "layers": [{"gen": "cup", "pos": 0}, {"gen": "split", "pos": 1}], "output_width": 3})");
  CHECK(parse_word(serialize_word(w)) == w);
  CHECK(serialize_word(word(1, {}, 1)) == R"({"input_width": 1, "layers": [], "output_width": 1})");
  CHECK(parse_word(R"({"output_width":1,"layers":[],"input_width":1})") == word(1, {}, 1));
  CHECK_THROWS_AS(parse_word("{"), ParseError);
  CHECK_THROWS_AS(parse_word(R"({"input_width": 0, "layers": [{"gen": "twist", "pos": 0}], "output_width": 0})"),
                  UnknownGenerator);
  CHECK_THROWS_AS(parse_word(R"({"input_width": 0, "layers": [{"gen": "cap", "pos": 0}], "output_width": 0})"),
                  InvalidPosition);
  CHECK_THROWS_AS(parse_word(R"({"input_width": 0, "layers": [{"gen": "cup", "pos": 0}], "output_width": 0})"),
                  MalformedWord);
  CHECK_THROWS_AS(parse_word(R"({"input_width": 0, "layers": []})"), ParseError);
  CHECK(gen_from_name("merge") == GenKind::Merge);
  CHECK_THROWS_AS(gen_from_name("Merge"), UnknownGenerator);
}
