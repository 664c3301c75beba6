#pragma once

#include <optional>
#include <vector>

#include "twistroot/matrix.hpp"

namespace twistroot {

// Integer homology class in the standard symplectic basis
// a1, b1, a2, b2, ..., ag, bg (coordinate 2i-2 is a_i, 2i-1 is b_i).
using HomologyClass = std::vector<Int>;

// Standard symplectic form: block diagonal with ((0,1),(-1,0)) per handle,
// so <a_i, b_i> = 1 and all other basis pairings vanish.
class SymplecticForm {
public:
  explicit SymplecticForm(std::size_t genus);

  std::size_t genus() const { return genus_; }
  std::size_t dimension() const { return 2 * genus_; }
  const IntegerMatrix& matrix() const { return j_; }

  Int pairing(const HomologyClass& x, const HomologyClass& y) const;

private:
  std::size_t genus_;
  IntegerMatrix j_;
};

// Matrix of x -> x + <x, v> v, the homological action of a twist along v.
IntegerMatrix transvection(const SymplecticForm& form, const HomologyClass& v);

// M^T J M == J.
bool is_symplectic(const SymplecticForm& form, const IntegerMatrix& m);

// The 2g-1 classes b_1, a_1+a_2, b_2, a_2+a_3, ..., b_g. Consecutive
// pairings are +-1 and all others vanish (checked by tests).
std::vector<HomologyClass> chain_classes(std::size_t genus);

// If m == transvection(v)^2 for some integral v, returns v (up to sign);
// otherwise nullopt. v = 0 corresponds to the identity.
std::optional<HomologyClass> extract_twist_class(const SymplecticForm& form,
                                                 const IntegerMatrix& m);

Int content_gcd(const HomologyClass& v);
bool is_primitive(const HomologyClass& v);

// Outcome of pushing the chain relation through homology.
struct HomologicalChain {
  IntegerMatrix chain_power;   // W^{2g-1} for W = T_{v1}^2 T_{v2} ... T_{v_{2g-1}}
  HomologyClass d;             // class with chain_power == transvection(d)^2
  bool primitive = false;
};

// Computes W = product of chain-class transvections (first squared),
// raises it to the 2g-1 power and extracts the squared-twist class.
// Throws ConstructionInconsistency if no class exists.
HomologicalChain verify_homological_chain(std::size_t genus);

// (W^{1-g} T_d)^{2g-1} == T_d for the data above.
bool verify_homological_root(std::size_t genus);

// The hand-checkable 4x4 example: cube_root^3 == elementary_target, where
// cube_root is the displayed integer matrix and elementary_target is the
// identity plus a single unit at row 1, column 2.
IntegerMatrix paper_cube_root();
IntegerMatrix paper_cube_target();
bool paper_cube_example();

// Optional diagnostic: an integral antisymmetric J with M^T J M = J for
// the 4x4 cube root, if one exists with |det| = 1.
std::optional<IntegerMatrix> paper_cube_invariant_form();

// block_diag(m, Identity); target_dim must be >= m's dimension.
IntegerMatrix stabilize(const IntegerMatrix& m, std::size_t target_dim);

// Square root of an elementary matrix in SL(n, Z), n >= 3: -1 times the
// abelianized Nielsen square root, padded by the identity; for even n one
// extra -1 diagonal block keeps the determinant at 1.
IntegerMatrix nielsen_sl_root(std::size_t n);

// The elementary matrix the root squares to: identity plus a unit at
// row 2, column 1 (column convention: column i = image of basis vector i).
IntegerMatrix elementary_square(std::size_t n);

// One SL(2, Z) matrix R with R^m = ((1,1),(0,1)) found by exhaustion.
struct Sl2Finding {
  IntegerMatrix root;
  unsigned long long exponent = 0;

  friend bool operator==(const Sl2Finding&, const Sl2Finding&) = default;
};

// Exhaustive scan over |entries| <= entry_bound, 2 <= m <= max_power, for
// R^m == target (default: the elementary matrix ((1,1),(0,1))).
// Returns findings ordered lexicographically by (entries, exponent);
// expected empty for the default target (a bounded corroboration that no
// such root exists, not a proof). Requires entry_bound >= 1, max_power >= 2
// and a 2x2 target.
std::vector<Sl2Finding> sl2_root_search(long long entry_bound, unsigned long long max_power,
                                        const IntegerMatrix& target = IntegerMatrix{{1, 1},
                                                                                    {0, 1}});

}  // namespace twistroot
