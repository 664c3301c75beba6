#pragma once

#include <vector>

#include "twistroot/matrix.hpp"

namespace twistroot {

// Formal product w^w_exp * t^t_exp in the abelian quotient <w, t | [w,t]>
// that carries the root identity: w stands for the chain power and t for
// the twist being rooted.
struct ExponentPair {
  long long w_exp = 0;
  long long t_exp = 0;

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

// Image of the pair under w -> 2, t -> 2g-1 in Z (genus g >= 2).
// The map identifies the quotient <w, t | [w,t], w^{2g-1} t^{-2}> with Z.
long long exponent_image(const ExponentPair& p, long long g);

// The root identity at exponent level: the root r = w^{1-g} t satisfies
// r^{2g-1} = t because (2g-1) * ((1-g)*2 + (2g-1)) = 2g-1. The root's
// order over the twist is 2g-1.
bool verify_root_identity(long long g);

// Invariant factors of the relation matrix (2g-1  -2) of the quotient
// group above. A single factor 1 with free rank 1 certifies that the
// quotient is infinite cyclic, i.e. no relation collapses the exponents.
SmithInvariants presentation_invariants(long long g);

// Fractional twisting bookkeeping. Contributions are exact rationals,
// positive for left twisting, negative for right twisting.
struct TwistLedger {
  std::vector<Rational> contributions;
  long long applications = 1;
  Rational target = 0;
};

// applications * sum(contributions) == target, exactly.
bool ledger_check(const TwistLedger& ledger);

// Ledger for the closed-surface root: per application g/(2g-1) left and
// (g-1)/(2g-1) right, repeated 2g-1 times, netting one full left twist.
TwistLedger geometric_ledger(long long g);

// Ledger for the half-twist root on a sphere with n marked points:
// one half twist of 1/2 against a p/q rotation correction, repeated q
// times, netting half a twist.
TwistLedger half_twist_ledger(long long n);

// Arrangement of n marked points on the sphere realizing a root of a half
// twist: q points rotating as a p/q turn, `central` extra fixed points in
// the middle, and two points carrying the half twist.
struct HalfTwistWitness {
  long long q = 0;        // odd rotation order, q > 1
  long long p = 0;        // rotation numerator, gcd(p, q) = 1
  int central = 0;        // 0 or 1 fixed central points
  bool derived = false;   // true when the arrangement is inferred (odd n)
};

// Smallest odd q > 1 with q + central = n - 2 whose ledger closes at 1/2.
// Prefers central = 1 for even n and central = 0 for odd n; throws
// ConstructionGap if no arrangement exists. Requires n >= 5.
HalfTwistWitness half_twist_witness(long long n);

}  // namespace twistroot
