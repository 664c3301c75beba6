#include "twistroot/symplectic.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "twistroot/autos.hpp"

namespace twistroot {

namespace {

void check_class(const SymplecticForm& form, const HomologyClass& v, const char* op) {
  if (v.size() != form.dimension()) {
    throw DimensionMismatch(std::string(op) + ": class of size " + std::to_string(v.size()) +
                            " against dimension " + std::to_string(form.dimension()));
  }
}

}  // namespace

SymplecticForm::SymplecticForm(std::size_t genus) : genus_(genus), j_(2 * genus, 2 * genus) {
  if (genus < 1) throw UnsupportedRank("symplectic forms need genus >= 1");
  for (std::size_t i = 0; i < genus; ++i) {
    j_.at(2 * i, 2 * i + 1) = 1;
    j_.at(2 * i + 1, 2 * i) = -1;
  }
}

Int SymplecticForm::pairing(const HomologyClass& x, const HomologyClass& y) const {
  check_class(*this, x, "pairing");
  check_class(*this, y, "pairing");
  // <x, y> = x^T J y; J is sparse with one entry per row.
  Int sum = 0;
  for (std::size_t i = 0; i < genus_; ++i) {
    sum += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i];
  }
  return sum;
}

IntegerMatrix transvection(const SymplecticForm& form, const HomologyClass& v) {
  check_class(form, v, "transvection");
  const std::size_t n = form.dimension();
  IntegerMatrix m = IntegerMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    HomologyClass e(n, 0);
    e[j] = 1;
    Int c = form.pairing(e, v);
    if (c == 0) continue;
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) += c * v[i];
  }
  return m;
}

bool is_symplectic(const SymplecticForm& form, const IntegerMatrix& m) {
  if (m.rows() != form.dimension() || m.cols() != form.dimension()) return false;
  return transpose(m) * form.matrix() * m == form.matrix();
}

std::vector<HomologyClass> chain_classes(std::size_t genus) {
  if (genus < 2) throw UnsupportedRank("chain classes need genus >= 2");
  const std::size_t n = 2 * genus;
  std::vector<HomologyClass> classes;
  classes.reserve(2 * genus - 1);
  for (std::size_t i = 1; i <= genus; ++i) {
    HomologyClass b(n, 0);
    b[2 * i - 1] = 1;  // b_i
    classes.push_back(std::move(b));
    if (i < genus) {
      HomologyClass a(n, 0);
      a[2 * i - 2] = 1;  // a_i
      a[2 * i] = 1;      // a_{i+1}
      classes.push_back(std::move(a));
    }
  }
  return classes;
}

Int content_gcd(const HomologyClass& v) {
  Int g = 0;
  for (const Int& c : v) g = gcd(g, c);
  return g;
}

bool is_primitive(const HomologyClass& v) { return content_gcd(v) == 1; }

std::optional<HomologyClass> extract_twist_class(const SymplecticForm& form,
                                                 const IntegerMatrix& m) {
  const std::size_t n = form.dimension();
  if (m.rows() != n || m.cols() != n) {
    throw DimensionMismatch("extract_twist_class: matrix does not match the form");
  }
  // transvection(v)^2 = I + 2 v (Jv)^T, so (m - I)/2 must be an integral
  // rank-one matrix of that exact shape.
  IntegerMatrix h = m - IntegerMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (h.at(r, c) % 2 != 0) return std::nullopt;
      h.at(r, c) /= 2;
    }
  std::size_t pivot_col = n;
  for (std::size_t c = 0; c < n && pivot_col == n; ++c)
    for (std::size_t r = 0; r < n; ++r)
      if (h.at(r, c) != 0) {
        pivot_col = c;
        break;
      }
  if (pivot_col == n) return HomologyClass(n, 0);  // identity: trivial class
  // Every nonzero column of h is an integer multiple of v; recover the
  // primitive direction, then the scale lambda from h = lambda^2 v0 (J v0)^T.
  HomologyClass v0(n);
  for (std::size_t r = 0; r < n; ++r) v0[r] = h.at(r, pivot_col);
  Int content = content_gcd(v0);
  for (Int& c : v0) c /= content;
  IntegerMatrix h0(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    HomologyClass e(n, 0);
    e[j] = 1;
    Int c = form.pairing(e, v0);
    for (std::size_t i = 0; i < n; ++i) h0.at(i, j) = c * v0[i];
  }
  Int ratio = 0;
  for (std::size_t r = 0; r < n && ratio == 0; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (h0.at(r, c) != 0) {
        if (h.at(r, c) % h0.at(r, c) != 0) return std::nullopt;
        ratio = h.at(r, c) / h0.at(r, c);
        break;
      }
  if (ratio <= 0) return std::nullopt;
  Int lambda = sqrt(ratio);
  if (lambda * lambda != ratio) return std::nullopt;
  HomologyClass v(n);
  for (std::size_t r = 0; r < n; ++r) v[r] = lambda * v0[r];
  IntegerMatrix t = transvection(form, v);
  if (t * t != m) return std::nullopt;
  return v;
}

namespace {

IntegerMatrix chain_product(const SymplecticForm& form, std::size_t genus) {
  const auto classes = chain_classes(genus);
  IntegerMatrix w = transvection(form, classes[0]);
  w = w * w;  // first factor squared
  for (std::size_t i = 1; i < classes.size(); ++i) w = w * transvection(form, classes[i]);
  return w;
}

// T_v^-1 = 2I - T_v because (T_v - I)^2 = 0.
IntegerMatrix transvection_inverse(const SymplecticForm& form, const HomologyClass& v) {
  IntegerMatrix t = transvection(form, v);
  IntegerMatrix two_i = IntegerMatrix::identity(form.dimension());
  for (std::size_t i = 0; i < form.dimension(); ++i) two_i.at(i, i) = 2;
  return two_i - t;
}

IntegerMatrix chain_product_inverse(const SymplecticForm& form, std::size_t genus) {
  const auto classes = chain_classes(genus);
  IntegerMatrix w = IntegerMatrix::identity(form.dimension());
  for (std::size_t i = classes.size(); i-- > 1;) w = w * transvection_inverse(form, classes[i]);
  IntegerMatrix t_inv = transvection_inverse(form, classes[0]);
  return w * t_inv * t_inv;
}

}  // namespace

HomologicalChain verify_homological_chain(std::size_t genus) {
  SymplecticForm form(genus);
  const std::size_t q = 2 * genus - 1;
  HomologicalChain out{power(chain_product(form, genus), q), {}, false};
  auto extracted = extract_twist_class(form, out.chain_power);
  if (!extracted) {
    throw ConstructionInconsistency("chain power of genus " + std::to_string(genus) +
                                    " is not the square of a transvection");
  }
  out.d = *extracted;
  out.primitive = is_primitive(out.d);
  return out;
}

bool verify_homological_root(std::size_t genus) {
  SymplecticForm form(genus);
  HomologicalChain chain = verify_homological_chain(genus);
  IntegerMatrix w_inv = chain_product_inverse(form, genus);
  // Sanity: the two chain products really are inverse to each other.
  if (!(chain_product(form, genus) * w_inv).is_identity()) {
    throw ConstructionInconsistency("chain product inverse failed");
  }
  IntegerMatrix t_d = transvection(form, chain.d);
  IntegerMatrix root = power(w_inv, genus - 1) * t_d;  // W^{1-g} T_d
  return power(root, 2 * genus - 1) == t_d;
}

IntegerMatrix paper_cube_root() {
  return IntegerMatrix{{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 1, -1, 1}, {0, 1, -1, 0}};
}

IntegerMatrix paper_cube_target() {
  IntegerMatrix m = IntegerMatrix::identity(4);
  m.at(0, 1) = 1;
  return m;
}

bool paper_cube_example() {
  IntegerMatrix a = paper_cube_root();
  return a * a * a == paper_cube_target();
}

std::optional<IntegerMatrix> paper_cube_invariant_form() {
  // Solve M^T J M = J over antisymmetric integral J. Parametrize J by its
  // strict upper triangle u = (J01, J02, J03, J12, J13, J23) and reduce the
  // linear system exactly over Q.
  const IntegerMatrix m = paper_cube_root();
  const std::array<std::pair<int, int>, 6> slots = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  auto build = [&](const std::array<Rational, 6>& u) {
    std::array<std::array<Rational, 4>, 4> j{};
    for (std::size_t s = 0; s < 6; ++s) {
      j[slots[s].first][slots[s].second] = u[s];
      j[slots[s].second][slots[s].first] = -u[s];
    }
    return j;
  };
  // Equation rows: entry (r,c), r < c, of M^T J M - J as a function of u.
  std::vector<std::array<Rational, 6>> rows;
  for (std::size_t s = 0; s < 6; ++s) {
    std::array<Rational, 6> unit{};
    unit[s] = 1;
    auto j = build(unit);
    std::size_t row_index = 0;
    for (const auto& [r, c] : slots) {
      if (rows.size() <= row_index) rows.push_back({});
      Rational value = 0;
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) {
          value += Rational(m.at(p, r)) * j[p][q] * Rational(m.at(q, c));
        }
      value -= j[r][c];
      rows[row_index][s] = value;
      ++row_index;
    }
  }
  // Gaussian elimination to a kernel basis.
  std::vector<int> pivot_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 6 && rank < rows.size(); ++col) {
    std::size_t sel = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    Rational inv = rows[rank][col];
    for (auto& x : rows[rank]) x /= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (std::size_t c = 0; c < 6; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivot_of_row.push_back(static_cast<int>(col));
    ++rank;
  }
  std::vector<std::array<Rational, 6>> kernel;
  std::array<bool, 6> is_pivot{};
  for (int p : pivot_of_row) is_pivot[p] = true;
  for (std::size_t free_col = 0; free_col < 6; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::array<Rational, 6> vec{};
    vec[free_col] = 1;
    for (std::size_t r = 0; r < rank; ++r) vec[pivot_of_row[r]] = -rows[r][free_col];
    kernel.push_back(vec);
  }
  // Search small integer combinations of the kernel basis for |det| = 1.
  std::vector<std::array<Int, 6>> integral;
  for (const auto& vec : kernel) {
    Int lcm_den = 1;
    for (const auto& x : vec) lcm_den = lcm(lcm_den, denominator(x));
    std::array<Int, 6> iv{};
    for (std::size_t s = 0; s < 6; ++s) iv[s] = numerator(vec[s]) * (lcm_den / denominator(vec[s]));
    integral.push_back(iv);
  }
  if (integral.empty()) return std::nullopt;
  std::vector<int> coeff(integral.size(), -3);
  for (;;) {
    std::array<Int, 6> u{};
    for (std::size_t i = 0; i < integral.size(); ++i)
      for (std::size_t s = 0; s < 6; ++s) u[s] += coeff[i] * integral[i][s];
    IntegerMatrix j(4, 4);
    for (std::size_t s = 0; s < 6; ++s) {
      j.at(slots[s].first, slots[s].second) = u[s];
      j.at(slots[s].second, slots[s].first) = -u[s];
    }
    Int det = determinant(j);
    if ((det == 1 || det == -1) && transpose(m) * j * m == j) return j;
    std::size_t i = 0;
    while (i < coeff.size() && coeff[i] == 3) coeff[i++] = -3;
    if (i == coeff.size()) break;
    ++coeff[i];
  }
  return std::nullopt;
}

IntegerMatrix stabilize(const IntegerMatrix& m, std::size_t target_dim) {
  if (!m.is_square()) throw DimensionMismatch("stabilize needs a square matrix");
  if (target_dim < m.rows()) {
    throw DimensionMismatch("stabilize: target dimension " + std::to_string(target_dim) +
                            " below matrix dimension " + std::to_string(m.rows()));
  }
  return extend_by_identity(m, target_dim - m.rows());
}

IntegerMatrix nielsen_sl_root(std::size_t n) {
  if (n < 3) throw UnsupportedRank("nielsen_sl_root needs n >= 3");
  IntegerMatrix base = abelianize(nielsen_root(3));
  IntegerMatrix padded = extend_by_identity(base, n - 3);
  if (n % 2 == 0) padded.at(n - 1, n - 1) = -1;  // keeps det(-padded) = 1
  return -padded;
}

IntegerMatrix elementary_square(std::size_t n) {
  IntegerMatrix m = IntegerMatrix::identity(n);
  m.at(1, 0) = 1;
  return m;
}

std::vector<Sl2Finding> sl2_root_search(long long entry_bound, unsigned long long max_power,
                                        const IntegerMatrix& target) {
  if (entry_bound < 1) throw UnsupportedRank("entry bound must be >= 1");
  if (max_power < 2) throw UnsupportedRank("max power must be >= 2");
  if (target.rows() != 2 || target.cols() != 2) {
    throw DimensionMismatch("root search target must be 2x2");
  }
  std::vector<Sl2Finding> findings;
  auto try_candidate = [&](long long a, long long b, long long c, long long d) {
    IntegerMatrix r{{a, b}, {c, d}};
    IntegerMatrix acc = r;
    for (unsigned long long m = 2; m <= max_power; ++m) {
      acc = acc * r;
      if (acc == target) findings.push_back(Sl2Finding{r, m});
    }
  };
  const long long bound = entry_bound;
  for (long long a = -bound; a <= bound; ++a) {
    for (long long b = -bound; b <= bound; ++b) {
      for (long long c = -bound; c <= bound; ++c) {
        if (a == 0) {
          // det = -bc = 1; d is unconstrained.
          if (b * c != -1) continue;
          for (long long d = -bound; d <= bound; ++d) try_candidate(a, b, c, d);
        } else {
          long long num = 1 + b * c;
          if (num % a != 0) continue;
          long long d = num / a;
          if (d < -bound || d > bound) continue;
          try_candidate(a, b, c, d);
        }
      }
    }
  }
  // Deterministic order regardless of scan strategy.
  auto key = [](const Sl2Finding& f) {
    return std::array<Int, 5>{f.root.at(0, 0), f.root.at(0, 1), f.root.at(1, 0), f.root.at(1, 1),
                              Int(f.exponent)};
  };
  std::sort(findings.begin(), findings.end(),
            [&](const Sl2Finding& x, const Sl2Finding& y) { return key(x) < key(y); });
  return findings;
}

}  // namespace twistroot
