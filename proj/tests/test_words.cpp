#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "twistroot/words.hpp"

using namespace twistroot;

TEST_CASE("reduce cancels adjacent inverse pairs") {
  CHECK(word_from_ints(2, {1, -1}).empty());
  CHECK(word_from_ints(3, {1, 2, -2, 3}) == word_from_ints(3, {1, 3}));
  CHECK(word_from_ints(3, {1, 2, -2, -1}).empty());
  CHECK(word_from_ints(4, {-3, 3, -3}) == word_from_ints(4, {-3}));
}

TEST_CASE("reduce is idempotent and validates indices") {
  Word w = word_from_ints(3, {1, 2, -1, -1, 3, -3, 1});
  CHECK(reduce(3, w.letters()) == w);
  CHECK(is_freely_reduced(3, w.letters()));
  CHECK_THROWS_AS(word_from_ints(2, {3}), RankViolation);
  CHECK_THROWS_AS(reduce(2, {Letter{0, 1}}), RankViolation);
  CHECK_THROWS_AS(reduce(2, {Letter{1, 0}}), RankViolation);
}

TEST_CASE("reduce agrees with the rescan reducer and is confluent") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 1000; ++trial) {
    auto raw = oracles::random_letters(rng, 3, 16);
    Word reduced = reduce(3, raw);
    CHECK(reduced.letters() == oracles::naive_reduce(raw));
    // three random cancellation orders all land on the same word
    for (int order = 0; order < 3; ++order) {
      CHECK(reduced.letters() == oracles::random_order_reduce(raw, rng));
    }
    CHECK(is_freely_reduced(3, reduced.letters()));
  }
}

TEST_CASE("concat handles identities, seams and rank mismatches") {
  Word x1 = generator(2, 1);
  CHECK(concat(x1, Word(2)) == x1);
  CHECK(concat(Word(2), x1) == x1);
  CHECK(concat(word_from_ints(2, {1, 2}), word_from_ints(2, {-2, 1})) ==
        word_from_ints(2, {1, 1}));
  CHECK_THROWS_AS(concat(generator(2, 1), generator(3, 1)), RankMismatch);
}

TEST_CASE("concat is associative and bounded in length") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    Word a = oracles::random_word(rng, 3, 24);
    Word b = oracles::random_word(rng, 3, 24);
    Word c = oracles::random_word(rng, 3, 24);
    CHECK(concat(a, concat(b, c)) == concat(concat(a, b), c));
    CHECK(concat(a, b).length() <= a.length() + b.length());
    CHECK(is_freely_reduced(3, concat(a, b).letters()));
  }
}

TEST_CASE("invert reverses and flips") {
  CHECK(invert(Word(3)).empty());
  CHECK(invert(word_from_ints(3, {-3, 2})) == word_from_ints(3, {-2, 3}));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    Word w = oracles::random_word(rng, 3, 64);
    CHECK(invert(invert(w)) == w);
    CHECK(concat(w, invert(w)).empty());
    CHECK(concat(invert(w), w).empty());
    // the cancellation must also survive the reference reducer
    std::vector<Letter> doubled = w.letters();
    auto inv = invert(w).letters();
    doubled.insert(doubled.end(), inv.begin(), inv.end());
    CHECK(oracles::naive_reduce(doubled).empty());
  }
}

TEST_CASE("render produces the fixture grammar") {
  CHECK(render(Word(3)) == "1");
  CHECK(render(word_from_ints(3, {1, -2, 3})) == "x1*x2^-1*x3");
  CHECK(render(word_from_ints(3, {2, 2, 2})) == "x2^3");
  CHECK(render(word_from_ints(2, {1, -2, -2})) == "x1*x2^-2");
}

TEST_CASE("parse_word accepts the grammar and rejects junk") {
  CHECK(parse_word(3, "x1*x2^-1*x3") == word_from_ints(3, {1, -2, 3}));
  CHECK(parse_word(3, "  x1 x2 ^ -1  x3 ") == word_from_ints(3, {1, -2, 3}));
  CHECK(parse_word(3, "x2^3") == word_from_ints(3, {2, 2, 2}));
  CHECK(parse_word(3, "x1^0").empty());
  CHECK(parse_word(3, "1").empty());
  CHECK(parse_word(3, "").empty());
  CHECK(parse_word(3, "x1^-2") == word_from_ints(3, {-1, -1}));
  CHECK_THROWS_AS(parse_word(3, "y1"), ParseError);
  CHECK_THROWS_AS(parse_word(3, "x"), ParseError);
  CHECK_THROWS_AS(parse_word(3, "x1^"), ParseError);
  CHECK_THROWS_AS(parse_word(3, "x1x"), ParseError);
  CHECK_THROWS_AS(parse_word(3, "2*x1"), ParseError);
  CHECK_THROWS_AS(parse_word(2, "x3"), RankViolation);
}

TEST_CASE("render and parse round-trip random words") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    Word w = oracles::random_word(rng, 4, 40);
    CHECK(parse_word(4, render(w)) == w);
  }
}
