#include <doctest.h>

#include <numeric>

#include "twistroot/polygon.hpp"
#include "twistroot/rootcalc.hpp"

using namespace twistroot;

TEST_CASE("exponent image of basis elements and the root") {
  CHECK(exponent_image(ExponentPair{1, 0}, 2) == 2);
  CHECK(exponent_image(ExponentPair{0, 1}, 2) == 3);
  CHECK(exponent_image(ExponentPair{0, 1}, 5) == 9);
  CHECK(exponent_image(ExponentPair{3, 2}, 2) == 12);
  // The root w^{1-g} t always maps to 1.
  for (long long g = 2; g <= 20; ++g) {
    CHECK(exponent_image(ExponentPair{1 - g, 1}, g) == 1);
  }
  CHECK(exponent_image(ExponentPair{-4, 1}, 5) == 1);
  CHECK_THROWS_AS(exponent_image(ExponentPair{1, 1}, 1), UnsupportedRank);
}

TEST_CASE("root identity holds for every genus") {
  for (long long g = 2; g <= 50; ++g) CHECK(verify_root_identity(g));
  CHECK_THROWS_AS(verify_root_identity(1), UnsupportedRank);
  CHECK_THROWS_AS(verify_root_identity(0), UnsupportedRank);
}

TEST_CASE("presentation invariants certify an infinite cyclic quotient") {
  for (long long g = 2; g <= 30; ++g) {
    SmithInvariants s = presentation_invariants(g);
    CHECK(s.invariant_factors == std::vector<Int>{1});
    CHECK(s.rank == 1);
    CHECK(s.free_rank == 1);
  }
  // Control: if the twist exponent were even the quotient would gain
  // 2-torsion, which the invariant factors detect.
  IntegerMatrix collapsed(1, 2);
  collapsed.at(0, 0) = 4;
  collapsed.at(0, 1) = -2;
  CHECK(smith_invariants(collapsed).invariant_factors == std::vector<Int>{2});
}

TEST_CASE("ledger arithmetic") {
  TwistLedger separating;
  separating.contributions = {Rational(1, 2)};
  separating.applications = 2;
  separating.target = 1;
  CHECK(ledger_check(separating));

  TwistLedger empty;
  empty.contributions = {};
  empty.applications = 1;
  empty.target = 0;
  CHECK(ledger_check(empty));

  TwistLedger wrong = separating;
  wrong.target = 2;
  CHECK_FALSE(ledger_check(wrong));

  TwistLedger bad = separating;
  bad.applications = 0;
  CHECK_THROWS_AS(ledger_check(bad), ConstructionInconsistency);
  bad.applications = -3;
  CHECK_THROWS_AS(ledger_check(bad), ConstructionInconsistency);
}

TEST_CASE("geometric ledger nets one full twist") {
  TwistLedger g2 = geometric_ledger(2);
  CHECK(g2.contributions == std::vector<Rational>{Rational(2, 3), Rational(-1, 3)});
  CHECK(g2.applications == 3);
  CHECK(g2.target == 1);
  CHECK(ledger_check(g2));
  for (long long g = 2; g <= 20; ++g) {
    TwistLedger ledger = geometric_ledger(g);
    CHECK(ledger.applications == 2 * g - 1);
    CHECK(ledger_check(ledger));
  }
  CHECK_THROWS_AS(geometric_ledger(1), UnsupportedRank);
}

TEST_CASE("half twist witnesses for small point counts") {
  HalfTwistWitness w5 = half_twist_witness(5);
  CHECK(w5.q == 3);
  CHECK(w5.p == 1);
  CHECK(w5.central == 0);
  CHECK(w5.derived);

  HalfTwistWitness w6 = half_twist_witness(6);
  CHECK(w6.q == 3);
  CHECK(w6.p == 1);
  CHECK(w6.central == 1);
  CHECK_FALSE(w6.derived);

  HalfTwistWitness w7 = half_twist_witness(7);
  CHECK(w7.q == 5);
  CHECK(w7.p == 2);
  CHECK(w7.central == 0);

  HalfTwistWitness w8 = half_twist_witness(8);
  CHECK(w8.q == 5);
  CHECK(w8.p == 2);
  CHECK(w8.central == 1);

  CHECK_THROWS_AS(half_twist_witness(4), UnsupportedRank);
}

TEST_CASE("half twist witness properties") {
  for (long long n = 5; n <= 40; ++n) {
    HalfTwistWitness w = half_twist_witness(n);
    CHECK(w.q > 1);
    CHECK(w.q % 2 == 1);
    CHECK(w.q + w.central == n - 2);
    CHECK(w.p == (w.q - 1) / 2);
    CHECK(std::gcd(w.p, w.q) == 1);
    CHECK(w.derived == (w.central == 0));
    CHECK(w.derived == (n % 2 == 1));
  }
}

TEST_CASE("half twist ledger closes at one half") {
  TwistLedger n6 = half_twist_ledger(6);
  CHECK(n6.contributions == std::vector<Rational>{Rational(1, 2), Rational(-1, 3)});
  CHECK(n6.applications == 3);
  CHECK(n6.target == Rational(1, 2));
  CHECK(ledger_check(n6));
  for (long long n = 5; n <= 40; ++n) CHECK(ledger_check(half_twist_ledger(n)));
}

TEST_CASE("ledger fractions match the polygon rotation numbers") {
  for (std::size_t g = 2; g <= 7; ++g) {
    TwistLedger ledger = geometric_ledger(static_cast<long long>(g));
    RotationMap rot = rotation_map(g);
    CHECK(ledger.contributions.size() == 2);
    CHECK(ledger.contributions[0] == rot.fixed_point_rotation_numbers[0]);
    CHECK(ledger.contributions[1] == -rot.fixed_point_rotation_numbers[1]);
    CHECK(static_cast<std::size_t>(ledger.applications) == rot.order_on_surface);
  }
}
