#include <catch_amalgamated.hpp>

#include <random>

#include "taitcw/errors.hpp"
#include "taitcw/word_problem.hpp"

using namespace taitcw;

namespace {
const auto kK4 = GroupPresentation::klein_four();
const auto kWorked = GroupPresentation::parse("a b c d | a b^-1 a c");
}  // namespace

TEST_CASE("k4 word equality") {
  CHECK_FALSE(words_equal_k4("c", "aa"));
  CHECK(words_equal_k4("ab", "c"));
  CHECK(words_equal_k4("", "aa"));
  CHECK(words_equal_k4("a^-1 b", "c"));
  CHECK_THROWS_AS(words_equal_k4("d", "a"), UnknownGenerator);
}

TEST_CASE("relator variants") {
  const auto variants = relator_variants(kK4);
  CHECK(variants.size() == 12);
  const auto worked = relator_variants(kWorked);
  CHECK(worked.size() == 8);
  CHECK(kWorked.format(worked[4]) == "c^-1 a^-1 b a^-1");
}

TEST_CASE("worked chain") {
  SearchStats stats;
  const auto cert =
      bounded_cobordism_search(kWorked, kWorked.parse_word("aca"), kWorked.parse_word("b"), 3, 12, &stats);
  REQUIRE(cert.has_value());
  REQUIRE_FALSE(cert->steps.empty());
  const auto& first = cert->steps.front();
  CHECK(first.move.kind == RewriteKind::InsertRelator);
  CHECK(first.move.position == 2);
  CHECK(kWorked.format(first.word) == "a c c^-1 a^-1 b a^-1 a");
  CHECK(kWorked.format(cert->steps.back().word) == "b");
  CHECK(replay_certificate(kWorked, *cert, kWorked.parse_word("b")));
  CHECK(format_certificate(kWorked, *cert) ==
        "insert-relator@2 rel 4 -> a c c^-1 a^-1 b a^-1 a\n"
        "free-delete@1 -> a a^-1 b a^-1 a\n"
        "free-delete@0 -> b a^-1 a\n"
        "free-delete@1 -> b\n");
}

TEST_CASE("equal words need no steps") {
  const auto cert = bounded_cobordism_search(kWorked, kWorked.parse_word("a b"), kWorked.parse_word("a c c^-1 b"), 2, 8);
  REQUIRE(cert.has_value());
  CHECK(cert->steps.empty());
}

TEST_CASE("c and aa stay apart") {
  SearchStats stats;
  CHECK_FALSE(bounded_cobordism_search(kK4, kK4.parse_word("c"), kK4.parse_word("aa"), 4, 12, &stats).has_value());
  CHECK(stats.depth_reached == 4);
  CHECK(stats.visited > 1000);
}

TEST_CASE("certificates respect the k4 obstruction") {
  std::mt19937_64 rng(5);
  int found = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::string w1, w2;
    for (int i = 0, n = 1 + static_cast<int>(rng() % 3); i < n; ++i) w1.push_back("abc"[rng() % 3]);
    for (int i = 0, n = 1 + static_cast<int>(rng() % 3); i < n; ++i) w2.push_back("abc"[rng() % 3]);
    const auto cert = bounded_cobordism_search(kK4, kK4.parse_word(w1), kK4.parse_word(w2), 3, 10);
    if (cert) {
      ++found;
      CHECK(words_equal_k4(w1, w2));
      CHECK(replay_certificate(kK4, *cert, kK4.parse_word(w2)));
    }
  }
  CHECK(found > 0);
}

TEST_CASE("insert then delete is the identity") {
  const auto variants = relator_variants(kWorked);
  const Word w = kWorked.parse_word("a b d^-1 c");
  for (std::size_t v = 0; v < variants.size(); ++v) {
    for (std::size_t pos = 0; pos <= w.size(); ++pos) {
      const Word grown = apply_move(kWorked, w, {RewriteKind::InsertRelator, pos, v});
      CHECK(apply_move(kWorked, grown, {RewriteKind::DeleteRelator, pos, v}) == w);
    }
  }
}

TEST_CASE("free moves") {
  const Word w = kWorked.parse_word("a b");
  const Word grown = apply_move(kWorked, w, {RewriteKind::FreeInsert, 1, 3});
  CHECK(kWorked.format(grown) == "a d d^-1 b");
  CHECK(apply_move(kWorked, grown, {RewriteKind::FreeDelete, 1, 0}) == w);
  CHECK_THROWS_AS(apply_move(kWorked, w, {RewriteKind::FreeDelete, 0, 0}), MalformedWord);
  CHECK_THROWS_AS(apply_move(kWorked, w, {RewriteKind::DeleteRelator, 0, 0}), MalformedWord);
  CHECK_THROWS_AS(apply_move(kWorked, w, {RewriteKind::InsertRelator, 5, 0}), MalformedWord);
  CHECK_THROWS_AS(apply_move(kWorked, w, {RewriteKind::InsertRelator, 0, 99}), MalformedWord);
}

TEST_CASE("search bounds") {
  CHECK(default_max_length(kK4, kK4.parse_word("c"), kK4.parse_word("aa")) == 12);
  CHECK_THROWS_AS(bounded_cobordism_search(kK4, kK4.parse_word("c"), kK4.parse_word("a"), 2, 100), CapacityExceeded);
  const auto short_cap = bounded_cobordism_search(kWorked, kWorked.parse_word("aca"), kWorked.parse_word("b"), 3, 6);
  CHECK_FALSE(short_cap.has_value());
}
