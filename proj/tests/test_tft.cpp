#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "taitcw/corpus.hpp"
#include "taitcw/errors.hpp"
#include "taitcw/oracle.hpp"
#include "taitcw/slicer.hpp"
#include "taitcw/tft.hpp"

using namespace taitcw;
using fixtures::word;

namespace {

StateVector state(int width, std::initializer_list<std::pair<const char*, int>> terms) {
  std::vector<StateVector::Term> out;
  for (const auto& [colors, value] : terms) out.push_back({colors_to_key(colors), value});
  return StateVector::from_terms(width, out);
}

CountMatrix identity_matrix(int width) {
  CountMatrix m(width, width);
  for (const auto& s : all_color_strings(width)) m.add(s, s, 1);
  return m;
}

}  // namespace

TEST_CASE("state keys") {
  CHECK(key_to_colors(colors_to_key("abcab"), 5) == "abcab");
  CHECK(colors_to_key("a") < colors_to_key("b"));
  CHECK(colors_to_key("ac") < colors_to_key("ba"));
  CHECK_THROWS_AS(colors_to_key("ad"), ParseError);
  const std::string wide(64, 'c');
  CHECK(key_to_colors(colors_to_key(wide), 64) == wide);
  CHECK_THROWS_AS(colors_to_key(std::string(65, 'a')), CapacityExceeded);
}

TEST_CASE("state vectors combine and sort") {
  const auto s = state(2, {{"ba", 1}, {"ab", 2}, {"ba", 3}});
  CHECK(s.support() == 2);
  CHECK(s.coefficient("ba") == 4);
  CHECK(s.coefficient("cc") == 0);
  CHECK(s.serialize() == "ab 2\nba 4\n");
  CHECK(StateVector::unit().serialize() == " 1\n");
}

TEST_CASE("cap keeps equal pairs") {
  CHECK(apply_generator(state(2, {{"aa", 1}, {"ab", 1}}), Generator::cap(0)) == StateVector::unit());
  CHECK(apply_generator(state(3, {{"abb", 2}, {"bab", 1}}), Generator::cap(1)) == state(1, {{"a", 2}}));
}

TEST_CASE("merge takes the third color") {
  CHECK(apply_generator(state(2, {{"ab", 1}, {"ba", 1}}), Generator::merge(0)) == state(1, {{"c", 2}}));
  CHECK(apply_generator(state(2, {{"aa", 1}}), Generator::merge(0)).is_zero());
}

TEST_CASE("split gives both orders") {
  CHECK(apply_generator(state(1, {{"a", 1}}), Generator::split(0)) == state(2, {{"bc", 1}, {"cb", 1}}));
  CHECK(apply_generator(state(2, {{"ca", 3}}), Generator::split(1)) == state(3, {{"cbc", 3}, {"ccb", 3}}));
}

TEST_CASE("cup inserts diagonal pairs") {
  CHECK(apply_generator(StateVector::unit(), Generator::cup(0)) == state(2, {{"aa", 1}, {"bb", 1}, {"cc", 1}}));
  CHECK(apply_generator(state(1, {{"b", 1}}), Generator::cup(1)) == state(3, {{"baa", 1}, {"bbb", 1}, {"bcc", 1}}));
  CHECK_THROWS_AS(apply_generator(state(1, {{"b", 1}}), Generator::cup(2)), InvalidPosition);
}

TEST_CASE("closed counts") {
  CHECK(evaluate_closed(slice(corpus("theta"))) == 6);
  CHECK(evaluate_closed(slice(corpus("dumbbell"))) == 0);
  CHECK(evaluate_closed(slice(corpus("tetrahedron"))) == enumerate_colorings(corpus("tetrahedron")).size());
  CHECK_THROWS_AS(evaluate_closed(fixtures::theta_cup_word()), NotClosed);
}

TEST_CASE("theta cup and cap states") {
  CHECK(evaluate_state(fixtures::theta_cup_word(), StateVector::unit()) == state(2, {{"aa", 2}, {"bb", 2}, {"cc", 2}}));
  CHECK(evaluate_state(fixtures::theta_cap_word(), state(2, {{"ab", 1}})).is_zero());
  CHECK(evaluate_state(fixtures::theta_cap_word(), state(2, {{"aa", 1}})) == state(0, {{"", 2}}));
}

TEST_CASE("empty word is the identity") {
  const auto s = state(3, {{"abc", 5}, {"ccc", 1}});
  CHECK(evaluate_state(word(3, {}, 3), s) == s);
  CHECK(evaluate_matrix(word(1, {}, 1)) == identity_matrix(1));
  CHECK_THROWS_AS(evaluate_state(word(2, {}, 2), s), WidthMismatch);
}

TEST_CASE("merge matrix") {
  const auto m = evaluate_matrix(word(2, {Generator::merge(0)}, 1));
  CHECK(m.entries().size() == 6);
  CHECK(m.at("c", "ab") == 1);
  CHECK(m.at("c", "ba") == 1);
  CHECK(m.at("a", "bc") == 1);
  CHECK(m.at("a", "aa") == 0);
  for (const auto& z : all_color_strings(1)) {
    for (const auto& x : all_color_strings(1)) {
      for (const auto& y : all_color_strings(1)) CHECK(m.at(z, x + y) == m.at(z, y + x));
    }
  }
}

TEST_CASE("zig-zag is the identity") {
  CHECK(evaluate_matrix(word(1, {Generator::cup(1), Generator::cap(0)}, 1)) == identity_matrix(1));
  CHECK(evaluate_matrix(word(1, {Generator::cup(0), Generator::cap(1)}, 1)) == identity_matrix(1));
}

TEST_CASE("split equals merge after cup") {
  const auto split = evaluate_matrix(word(1, {Generator::split(0)}, 2));
  CHECK(evaluate_matrix(word(1, {Generator::cup(1), Generator::merge(0)}, 2)) == split);
  for (const auto& x : all_color_strings(1))
    CHECK(evaluate_state(word(1, {Generator::split(0)}, 2), StateVector::basis(x)) ==
          evaluate_state(word(1, {Generator::cup(1), Generator::merge(0)}, 2), StateVector::basis(x)));
}

TEST_CASE("gluing on theta") {
  const auto w = slice(corpus("theta"));
  for (std::size_t cut = 0; cut <= w.layers.size(); ++cut) {
    const auto lower = evaluate_matrix(w.slice_range(0, cut));
    const auto upper = evaluate_matrix(w.slice_range(cut, w.layers.size()));
    CHECK(upper * lower == evaluate_matrix(w));
  }
}

TEST_CASE("gluing on random open words") {
  int tried = 0;
  for (std::uint64_t seed = 0; tried < 40 && seed < 3000; ++seed) {
    const auto w = fixtures::random_open_word(seed, static_cast<int>(seed % 3), 8);
    if (!w) continue;
    ++tried;
    const auto whole = evaluate_matrix(*w);
    for (std::size_t cut = 1; cut < w->layers.size(); ++cut)
      CHECK(evaluate_matrix(w->slice_range(cut, w->layers.size())) * evaluate_matrix(w->slice_range(0, cut)) == whole);
  }
  CHECK(tried == 40);
}

TEST_CASE("matrix product checks widths") {
  const auto merge = evaluate_matrix(word(2, {Generator::merge(0)}, 1));
  CHECK_THROWS_AS(merge * merge, WidthMismatch);
  CHECK_NOTHROW(identity_matrix(1) * merge);
}

TEST_CASE("matrix serialization") {
  CountMatrix m(0, 2);
  m.add("", "bb", 1);
  m.add("", "aa", 2);
  m.add("", "aa", 1);
  CHECK(m.serialize() == "- aa 3\n- bb 1\n");
  const auto cup = evaluate_matrix(word(0, {Generator::cup(0)}, 2));
  CHECK(cup.serialize() == "aa - 1\nbb - 1\ncc - 1\n");
}

TEST_CASE("threads do not change matrices") {
  const auto w = word(3, {Generator::merge(1), Generator::split(0), Generator::cap(1)}, 1);
  CHECK(evaluate_matrix(w, 1) == evaluate_matrix(w, 4));
  CHECK_THROWS_AS(evaluate_matrix(word(2, {Generator::cap(1)}, 0), 3), InvalidPosition);
}

TEST_CASE("coefficients stay positive") {
  const auto w = slice(corpus("cube"));
  StateVector s = StateVector::unit();
  for (const auto& gen : w.layers) {
    s = apply_generator(s, gen);
    for (const auto& term : s.terms()) CHECK(term.second > 0);
  }
  CHECK(s == state(0, {{"", 24}}));
}

TEST_CASE("large coefficients switch to big integers") {
  const Count big = Count(1) << 63;
  const auto input = StateVector::from_terms(1, {{colors_to_key("a"), big}});
  const auto out = evaluate_state(word(1, {Generator::split(0), Generator::merge(0)}, 1), input);
  CHECK(out.coefficient("a") == (Count(1) << 64));
  const auto huge = StateVector::from_terms(1, {{colors_to_key("b"), Count(1) << 100}});
  CHECK(evaluate_state(word(1, {}, 1), huge).coefficient("b") == (Count(1) << 100));
}

TEST_CASE("width cap") {
  const StateVector s = StateVector::basis(std::string(63, 'a'));
  CHECK_THROWS_AS(apply_generator(s, Generator::cup(0)), CapacityExceeded);
  CHECK(apply_generator(s, Generator::split(0)).width() == 64);
}

TEST_CASE("eval stats") {
  EvalStats stats;
  evaluate_closed(slice(corpus("theta")), &stats);
  CHECK(stats.peak_width == 3);
  CHECK(stats.peak_support == 6);
}
