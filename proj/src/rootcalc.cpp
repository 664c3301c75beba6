#include "twistroot/rootcalc.hpp"

#include <numeric>

namespace twistroot {

namespace {

void check_genus(long long g) {
  if (g < 2) throw UnsupportedRank("genus must be at least 2, got " + std::to_string(g));
}

}  // namespace

long long exponent_image(const ExponentPair& p, long long g) {
  check_genus(g);
  return 2 * p.w_exp + (2 * g - 1) * p.t_exp;
}

bool verify_root_identity(long long g) {
  check_genus(g);
  const long long order = 2 * g - 1;
  ExponentPair root{1 - g, 1};
  ExponentPair twist{0, 1};
  // r^{2g-1} versus t, compared through the embedding into Z.
  return order * exponent_image(root, g) == exponent_image(twist, g);
}

SmithInvariants presentation_invariants(long long g) {
  check_genus(g);
  IntegerMatrix relation(1, 2);
  relation.at(0, 0) = 2 * g - 1;
  relation.at(0, 1) = -2;
  return smith_invariants(relation);
}

bool ledger_check(const TwistLedger& ledger) {
  if (ledger.applications <= 0) {
    throw ConstructionInconsistency("ledger applications must be positive");
  }
  Rational sum = 0;
  for (const Rational& c : ledger.contributions) sum += c;
  return Rational(ledger.applications) * sum == ledger.target;
}

TwistLedger geometric_ledger(long long g) {
  check_genus(g);
  const long long q = 2 * g - 1;
  TwistLedger ledger;
  ledger.contributions = {Rational(g, q), Rational(-(g - 1), q)};
  ledger.applications = q;
  ledger.target = 1;
  return ledger;
}

TwistLedger half_twist_ledger(long long n) {
  HalfTwistWitness w = half_twist_witness(n);
  TwistLedger ledger;
  ledger.contributions = {Rational(1, 2), Rational(-w.p, w.q)};
  ledger.applications = w.q;
  ledger.target = Rational(1, 2);
  return ledger;
}

HalfTwistWitness half_twist_witness(long long n) {
  if (n < 5) {
    throw UnsupportedRank("half-twist witnesses need n >= 5 marked points, got " +
                          std::to_string(n));
  }
  // Two of the n points carry the half twist; the rest split into q
  // rotating points plus an optional central fixed point. Only odd q
  // admits a coprime correction p = (q-1)/2 closing the ledger at 1/2.
  for (long long q = 3; q <= n - 2; q += 2) {
    for (int central : {1, 0}) {
      if (q + central != n - 2) continue;
      long long p = (q - 1) / 2;
      if (std::gcd(p, q) != 1) continue;
      TwistLedger ledger;
      ledger.contributions = {Rational(1, 2), Rational(-p, q)};
      ledger.applications = q;
      ledger.target = Rational(1, 2);
      if (!ledger_check(ledger)) continue;
      HalfTwistWitness w;
      w.q = q;
      w.p = p;
      w.central = central;
      w.derived = (central == 0);
      return w;
    }
  }
  throw ConstructionGap("no odd rotation order arranges " + std::to_string(n) +
                        " marked points around a half twist");
}

}  // namespace twistroot
