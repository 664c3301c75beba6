#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "twistroot/errors.hpp"

namespace twistroot {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense matrix over arbitrary-precision integers. Small and exact; every
// operation either returns the exact result or throws.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_identity() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator-(const IntegerMatrix& a);

// a^k for k >= 0; k = 0 gives the identity. Square matrices only.
IntegerMatrix power(const IntegerMatrix& a, unsigned long long k);

IntegerMatrix transpose(const IntegerMatrix& a);

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntegerMatrix& a);

// Exact inverse; throws ConstructionInconsistency unless det = +-1.
// Only unimodular inverses are needed here, which keeps everything in Z.
IntegerMatrix unimodular_inverse(const IntegerMatrix& a);

// block_diag(a, identity(extra)) utility used by stabilization.
IntegerMatrix extend_by_identity(const IntegerMatrix& a, std::size_t extra);

// Smith normal form summary of an arbitrary integer matrix.
struct SmithInvariants {
  std::vector<Int> invariant_factors;  // nontrivial diagonal, d1 | d2 | ...
  std::size_t rank = 0;                // number of nonzero diagonal entries
  std::size_t free_rank = 0;           // cols - rank (cokernel free rank)
};

SmithInvariants smith_invariants(IntegerMatrix a);

// Fixture grammar: one row per line, whitespace-separated integers.
std::string render(const IntegerMatrix& a);
IntegerMatrix parse_matrix(const std::string& text);

}  // namespace twistroot
