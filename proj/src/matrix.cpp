#include "twistroot/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace twistroot {

namespace {

void require_same_shape(const IntegerMatrix& a, const IntegerMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

}  // namespace

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged initializer rows");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
  require_same_shape(a, b, "add");
  IntegerMatrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c) + b.at(r, c);
  return m;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
  require_same_shape(a, b, "subtract");
  IntegerMatrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c) - b.at(r, c);
  return m;
}

IntegerMatrix operator-(const IntegerMatrix& a) {
  IntegerMatrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = -a.at(r, c);
  return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("multiply: " + std::to_string(a.cols()) + " columns vs " +
                            std::to_string(b.rows()) + " rows");
  }
  IntegerMatrix m(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& av = a.at(r, k);
      if (av == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) m.at(r, c) += av * b.at(k, c);
    }
  }
  return m;
}

IntegerMatrix power(const IntegerMatrix& a, unsigned long long k) {
  if (!a.is_square()) throw DimensionMismatch("power of a non-square matrix");
  IntegerMatrix result = IntegerMatrix::identity(a.rows());
  IntegerMatrix base = a;
  while (k > 0) {
    if (k & 1ull) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

IntegerMatrix transpose(const IntegerMatrix& a) {
  IntegerMatrix m(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m.at(c, r) = a.at(r, c);
  return m;
}

Int determinant(const IntegerMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(pivot, c));
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        // Bareiss update: exact division keeps entries polynomial in size.
        m.at(r, c) = (m.at(r, c) * m.at(k, k) - m.at(r, k) * m.at(k, c)) / prev;
      }
      m.at(r, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  Int det = determinant(a);
  if (det != 1 && det != -1) {
    throw ConstructionInconsistency("matrix is not unimodular (det = " + det.str() + ")");
  }
  // Integer Gauss-Jordan on [a | I] over Q would need fractions; instead run
  // unimodular row reduction: with det = +-1 the reduced form is diagonal
  // with +-1 entries, reachable by gcd row operations.
  std::size_t n = a.rows();
  IntegerMatrix m = a;
  IntegerMatrix inv = IntegerMatrix::identity(n);
  auto row_op = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t c = 0; c < n; ++c) {
      m.at(dst, c) -= f * m.at(src, c);
      inv.at(dst, c) -= f * inv.at(src, c);
    }
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(m.at(i, c), m.at(j, c));
      std::swap(inv.at(i, c), inv.at(j, c));
    }
  };
  for (std::size_t k = 0; k < n; ++k) {
    // Euclidean algorithm down column k until one pivot survives.
    for (;;) {
      std::size_t best = n;
      for (std::size_t r = k; r < n; ++r) {
        if (m.at(r, k) == 0) continue;
        if (best == n || abs(m.at(r, k)) < abs(m.at(best, k))) best = r;
      }
      if (best == n) throw ConstructionInconsistency("unimodular matrix lost rank");
      if (best != k) row_swap(k, best);
      bool done = true;
      for (std::size_t r = k + 1; r < n; ++r) {
        if (m.at(r, k) == 0) continue;
        Int q = m.at(r, k) / m.at(k, k);
        row_op(r, k, q);
        if (m.at(r, k) != 0) done = false;
      }
      if (done) break;
    }
    // Clear above the pivot; pivot must be +-1 once elimination finishes.
    for (std::size_t r = 0; r < k; ++r) {
      if (m.at(r, k) == 0) continue;
      Int q = m.at(r, k) / m.at(k, k);
      row_op(r, k, q);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (m.at(k, k) == -1) {
      for (std::size_t c = 0; c < n; ++c) {
        m.at(k, c) = -m.at(k, c);
        inv.at(k, c) = -inv.at(k, c);
      }
    }
    if (m.at(k, k) != 1) throw ConstructionInconsistency("unimodular reduction failed");
    for (std::size_t r = 0; r < k; ++r) {
      if (m.at(r, k) != 0) {
        Int q = m.at(r, k);
        row_op(r, k, q);
      }
    }
  }
  return inv;
}

IntegerMatrix extend_by_identity(const IntegerMatrix& a, std::size_t extra) {
  if (!a.is_square()) throw DimensionMismatch("extend_by_identity needs a square matrix");
  IntegerMatrix m(a.rows() + extra, a.cols() + extra);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
  for (std::size_t i = 0; i < extra; ++i) m.at(a.rows() + i, a.cols() + i) = 1;
  return m;
}

SmithInvariants smith_invariants(IntegerMatrix a) {
  std::size_t rows = a.rows(), cols = a.cols();
  SmithInvariants out;
  out.free_rank = cols;
  std::size_t t = 0;  // current pivot position
  while (t < rows && t < cols) {
    // Find a nonzero entry in the remaining block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows && pr == rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (a.at(r, c) != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == rows) break;
    for (std::size_t c = 0; c < cols; ++c) std::swap(a.at(t, c), a.at(pr, c));
    for (std::size_t r = 0; r < rows; ++r) std::swap(a.at(r, t), a.at(r, pc));
    // Kill row and column t with Euclidean steps until both are clear.
    for (;;) {
      bool dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a.at(r, t) == 0) continue;
        Int q = a.at(r, t) / a.at(t, t);
        for (std::size_t c = t; c < cols; ++c) a.at(r, c) -= q * a.at(t, c);
        if (a.at(r, t) != 0) {
          for (std::size_t c = t; c < cols; ++c) std::swap(a.at(r, c), a.at(t, c));
          dirty = true;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a.at(t, c) == 0) continue;
        Int q = a.at(t, c) / a.at(t, t);
        for (std::size_t r = t; r < rows; ++r) a.at(r, c) -= q * a.at(r, t);
        if (a.at(t, c) != 0) {
          for (std::size_t r = t; r < rows; ++r) std::swap(a.at(r, c), a.at(r, t));
          dirty = true;
        }
      }
      if (!dirty) break;
    }
    ++t;
  }
  out.rank = t;
  out.free_rank = cols - t;
  std::vector<Int> diag;
  for (std::size_t i = 0; i < t; ++i) diag.push_back(abs(a.at(i, i)));
  // Enforce the divisibility chain d1 | d2 | ... by gcd/lcm swaps.
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] != 0) {
        Int g = gcd(diag[i], diag[j]);
        Int l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
    }
  }
  out.invariant_factors = std::move(diag);
  return out;
}

std::string render(const IntegerMatrix& a) {
  std::ostringstream out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c > 0) out << ' ';
      out << a.at(r, c);
    }
    out << '\n';
  }
  return out.str();
}

IntegerMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Int>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::vector<Int> row;
    std::string tok;
    while (fields >> tok) {
      try {
        row.emplace_back(tok);
      } catch (const std::exception&) {
        throw ParseError("bad integer '" + tok + "' in matrix");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  IntegerMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) throw ParseError("ragged matrix rows");
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace twistroot
