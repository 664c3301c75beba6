#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "twistroot/autos.hpp"

using namespace twistroot;

TEST_CASE("endomorphism construction and accessors") {
  Endomorphism id = Endomorphism::identity(3);
  CHECK(id.rank() == 3);
  CHECK(id.image(2) == generator(3, 2));
  CHECK(id.total_image_length() == 3);
  CHECK_THROWS_AS(id.image(0), RankViolation);
  CHECK_THROWS_AS(id.image(4), RankViolation);
  CHECK_THROWS_AS(Endomorphism(2, {generator(2, 1)}), RankMismatch);
  CHECK_THROWS_AS(Endomorphism(2, {generator(3, 1), generator(3, 2)}), RankMismatch);
}

TEST_CASE("applying the Nielsen square root to single letters") {
  Automorphism root = nielsen_root(3);
  CHECK(apply(root, parse_word(3, "x3")) == parse_word(3, "x3^-1*x2"));
  CHECK(apply(root, parse_word(3, "x3^-1")) == parse_word(3, "x2^-1*x3"));
  CHECK(apply(root, parse_word(3, "x1")) == parse_word(3, "x1*x3"));
  CHECK(apply(root, parse_word(3, "x2")) == parse_word(3, "x3^-1*x2*x3"));
  CHECK(apply(root, Word(3)).empty());
}

TEST_CASE("the square of the root is the basic Nielsen map") {
  for (std::size_t n = 3; n <= 8; ++n) {
    Automorphism square = power(nielsen_root(n), 2);
    CHECK(square == nielsen_transformation(n));
    CHECK(apply(square, generator(n, 1)) == parse_word(n, "x1*x2"));
    for (std::uint32_t i = 2; i <= n; ++i) {
      CHECK(apply(square, generator(n, i)) == generator(n, i));
    }
  }
  CHECK_THROWS_AS(nielsen_root(2), UnsupportedRank);
  CHECK_THROWS_AS(nielsen_transformation(1), UnsupportedRank);
}

TEST_CASE("root on higher rank fixes the extra generators") {
  Automorphism root = nielsen_root(5);
  CHECK(apply(root, generator(5, 4)) == generator(5, 4));
  CHECK(apply(root, generator(5, 5)) == generator(5, 5));
  CHECK(apply(root, parse_word(5, "x4*x1*x5")) == parse_word(5, "x4*x1*x3*x5"));
}

TEST_CASE("apply is a homomorphism") {
  std::mt19937 rng(421);
  for (int trial = 0; trial < 1000; ++trial) {
    Endomorphism f = oracles::random_endomorphism(rng, 4, 6);
    Word u = oracles::random_word(rng, 4, 10);
    Word v = oracles::random_word(rng, 4, 10);
    CHECK(apply(f, concat(u, v)) == concat(apply(f, u), apply(f, v)));
    CHECK(apply(f, invert(u)) == invert(apply(f, u)));
  }
}

TEST_CASE("compose agrees with substitution") {
  std::mt19937 rng(422);
  for (int trial = 0; trial < 400; ++trial) {
    Endomorphism f = oracles::random_endomorphism(rng, 3, 5);
    Endomorphism g = oracles::random_endomorphism(rng, 3, 5);
    Endomorphism fg = compose(f, g);
    Word w = oracles::random_word(rng, 3, 12);
    CHECK(apply(fg, w) == apply(f, apply(g, w)));
  }
  CHECK_THROWS_AS(compose(Endomorphism::identity(2), Endomorphism::identity(3)), RankMismatch);
  CHECK_THROWS_AS(apply(Endomorphism::identity(2), Word(3)), RankMismatch);
}

TEST_CASE("automorphism construction verifies the inverse") {
  // x1 -> x1*x2 with the wrong claimed inverse x1 -> x1*x2.
  Endomorphism fwd(2, {parse_word(2, "x1*x2"), generator(2, 2)});
  CHECK_THROWS_AS(Automorphism(fwd, fwd), ConstructionInconsistency);
  CHECK_THROWS_AS(Automorphism(fwd, Endomorphism::identity(2)), ConstructionInconsistency);
  CHECK_THROWS_AS(Automorphism(fwd, Endomorphism::identity(3)), RankMismatch);
  Automorphism ok(fwd, Endomorphism(2, {parse_word(2, "x1*x2^-1"), generator(2, 2)}));
  CHECK(apply(invert(ok), apply(ok, parse_word(2, "x2*x1"))) == parse_word(2, "x2*x1"));
}

TEST_CASE("power satisfies exponent laws") {
  Automorphism f = nielsen_root(3);
  CHECK(power(f, 0) == Automorphism::identity(3));
  CHECK(power(f, 1) == f);
  CHECK(power(f, -1) == invert(f));
  for (long long a = -3; a <= 3; ++a) {
    for (long long b = -3; b <= 3; ++b) {
      CHECK(power(f, a + b) == compose(power(f, a), power(f, b)));
    }
  }
}

TEST_CASE("abelianization of the root and its square") {
  IntegerMatrix m = abelianize(nielsen_root(3));
  CHECK(m == IntegerMatrix{{1, 0, 0}, {0, 1, 1}, {1, 0, -1}});
  CHECK(determinant(m) == -1);
  IntegerMatrix square = abelianize(power(nielsen_root(3), 2));
  CHECK(square == IntegerMatrix{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}});
  CHECK(m * m == square);
}

TEST_CASE("abelianization is functorial") {
  std::mt19937 rng(423);
  for (int trial = 0; trial < 1000; ++trial) {
    Endomorphism f = oracles::random_endomorphism(rng, 3, 6);
    Endomorphism g = oracles::random_endomorphism(rng, 3, 6);
    CHECK(abelianize(compose(f, g)) == abelianize(f) * abelianize(g));
  }
  CHECK(abelianize(Endomorphism::identity(4)).is_identity());
}

TEST_CASE("render and parse endomorphisms") {
  Automorphism root = nielsen_root(3);
  std::string text = render(root.forward());
  CHECK(parse_endomorphism(3, text) == root.forward());
  CHECK(parse_endomorphism(2, "x1*x2\nx2") ==
        Endomorphism(2, {parse_word(2, "x1*x2"), generator(2, 2)}));
  CHECK_THROWS_AS(parse_endomorphism(3, "x1\nx2"), ParseError);
  CHECK_THROWS_AS(parse_endomorphism(2, "x1\nx2\nx1"), ParseError);
  std::mt19937 rng(424);
  for (int trial = 0; trial < 200; ++trial) {
    Endomorphism f = oracles::random_endomorphism(rng, 4, 8);
    CHECK(parse_endomorphism(4, render(f)) == f);
  }
}
