#pragma once

// Exact integer normal forms: row Hermite form, Smith form, integral linear
// solving and kernel lattices. Pivots are always the entry of least nonzero
// absolute value, ties broken by lowest (row, col), so every transform is
// reproducible.

#include "redinv/error.hpp"
#include "redinv/integer.hpp"
#include "redinv/matrix.hpp"

#include <optional>
#include <vector>

namespace redinv {

struct HermiteForm {
  IntMatrix H;  ///< row Hermite normal form of the input
  IntMatrix U;  ///< unimodular, H = U * M
  std::vector<std::size_t> pivotColumns;
  std::size_t rank() const { return pivotColumns.size(); }
};

struct SmithForm {
  IntMatrix U;  ///< unimodular, D = U * M * V
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;
  IntVector invariantFactors() const {
    IntVector d;
    for (std::size_t i = 0; i < rank; ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

inline HermiteForm hermite(const IntMatrix& m, bool trackTransform) {
  HermiteForm out;
  out.H = m;
  IntMatrix& h = out.H;
  if (trackTransform) out.U = IntMatrix::identity(m.rows());
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    bool havePivot = false;
    for (;;) {
      std::size_t p = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (h(i, j) != 0 && (p == rows || abs(h(i, j)) < abs(h(p, j)))) p = i;
      if (p == rows) break;
      havePivot = true;
      h.swapRows(p, r);
      if (trackTransform) out.U.swapRows(p, r);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, j) == 0) continue;
        Integer q = h(i, j) / h(r, j);
        h.addRowMultiple(i, r, -q);
        if (trackTransform) out.U.addRowMultiple(i, r, -q);
        if (h(i, j) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!havePivot) continue;
    if (h(r, j) < 0) {
      h.negateRow(r);
      if (trackTransform) out.U.negateRow(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floorDiv(h(i, j), h(r, j));
      h.addRowMultiple(i, r, -q);
      if (trackTransform) out.U.addRowMultiple(i, r, -q);
    }
    out.pivotColumns.push_back(j);
    ++r;
  }
  return out;
}

struct SmithWithInverses {
  SmithForm form;
  IntMatrix Uinv;
  IntMatrix Vinv;
};

inline SmithWithInverses smith(const IntMatrix& m, bool trackInverses) {
  SmithWithInverses out;
  IntMatrix& d = out.form.D;
  IntMatrix& u = out.form.U;
  IntMatrix& v = out.form.V;
  d = m;
  const std::size_t rows = m.rows(), cols = m.cols();
  u = IntMatrix::identity(rows);
  v = IntMatrix::identity(cols);
  if (trackInverses) {
    out.Uinv = IntMatrix::identity(rows);
    out.Vinv = IntMatrix::identity(cols);
  }
  auto rowOp = [&](std::size_t dst, std::size_t src, const Integer& q) {
    d.addRowMultiple(dst, src, q);
    u.addRowMultiple(dst, src, q);
    if (trackInverses) out.Uinv.addColumnMultiple(src, dst, -q);
  };
  auto colOp = [&](std::size_t dst, std::size_t src, const Integer& q) {
    d.addColumnMultiple(dst, src, q);
    v.addColumnMultiple(dst, src, q);
    if (trackInverses) out.Vinv.addRowMultiple(src, dst, -q);
  };
  auto swapR = [&](std::size_t a, std::size_t b) {
    d.swapRows(a, b);
    u.swapRows(a, b);
    if (trackInverses) out.Uinv.swapColumns(a, b);
  };
  auto swapC = [&](std::size_t a, std::size_t b) {
    d.swapColumns(a, b);
    v.swapColumns(a, b);
    if (trackInverses) out.Vinv.swapRows(a, b);
  };

  std::size_t t = 0;
  for (; t < rows && t < cols; ++t) {
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pi == rows || abs(d(i, j)) < abs(d(pi, pj)))) pi = i, pj = j;
      if (pi == rows) goto done;
      swapR(t, pi);
      swapC(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        rowOp(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        colOp(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            rowOp(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negateRow(t);
      u.negateRow(t);
      if (trackInverses) out.Uinv.negateColumn(t);
    }
  }
done:
  out.form.rank = t;
  return out;
}

}  // namespace detail

/// Row Hermite normal form: H = U*M, U unimodular, positive pivots, entries
/// above each pivot reduced into [0, pivot).
inline HermiteForm hnf(const IntMatrix& m) { return detail::hermite(m, true); }

/// Smith normal form: D = U*M*V with d1 | d2 | ... >= 0.
inline SmithForm snf(const IntMatrix& m) { return detail::smith(m, false).form; }

inline std::size_t rank(const IntMatrix& m) { return detail::hermite(m, false).rank(); }

/// Rows form the canonical (Hermite-reduced) basis of {x : M x = 0}.
inline IntMatrix kernelBasis(const IntMatrix& m) {
  // U * M^T = H; the rows of U that hit zero rows of H span the kernel.
  HermiteForm h = detail::hermite(m.transpose(), true);
  const std::size_t n = m.cols(), r = h.rank();
  IntMatrix k = h.U.submatrix(r, 0, n - r, n);
  IntMatrix kh = detail::hermite(k, false).H;
  return kh.submatrix(0, 0, n - r, n);
}

struct LinearSolution {
  std::optional<IntVector> particular;  ///< empty when M x = b has no integral solution
  IntMatrix kernel;                     ///< rows span {x : M x = 0}
  bool solvable() const { return particular.has_value(); }
};

/// Integral solution of M x = b via the Smith form.
inline LinearSolution solveLinear(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows())
    throw DimensionMismatch("solveLinear: right-hand side has length " + std::to_string(b.size()) +
                            ", matrix has " + std::to_string(m.rows()) + " rows");
  LinearSolution out;
  out.kernel = kernelBasis(m);
  SmithForm s = snf(m);
  IntVector ub = s.U.apply(b);
  IntVector y(m.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.D(i, i) != 0) return out;
      y[i] = ub[i] / s.D(i, i);
    } else if (ub[i] != 0) {
      return out;
    }
  }
  out.particular = s.V.apply(y);
  return out;
}

/// A sublattice of Z^n held by its Hermite basis. Supports canonical
/// reduction modulo the lattice and exact coordinates of members.
class Lattice {
 public:
  explicit Lattice(std::size_t ambientRank = 0) : basis_(0, ambientRank) {}

  /// Lattice spanned by the rows of `generators`.
  static Lattice spannedBy(const IntMatrix& generators) {
    HermiteForm h = detail::hermite(generators, false);
    Lattice l;
    l.basis_ = h.H.submatrix(0, 0, h.rank(), generators.cols());
    l.pivots_ = h.pivotColumns;
    return l;
  }

  std::size_t ambientRank() const { return basis_.cols(); }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivotColumns() const { return pivots_; }

  IntVector reduce(IntVector v) const {
    check(v);
    for (std::size_t i = 0; i < rank(); ++i) {
      const Integer& h = basis_(i, pivots_[i]);
      Integer q = floorDiv(v[pivots_[i]], h);
      if (q != 0) subtractRow(v, i, q);
    }
    return v;
  }

  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }

  /// c with sum_i c_i * basis_i == v, if v lies in the lattice.
  std::optional<IntVector> coordinates(IntVector v) const {
    check(v);
    IntVector c(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      const Integer& x = v[pivots_[i]];
      if (x == 0) continue;
      const Integer& h = basis_(i, pivots_[i]);
      if (x % h != 0) return std::nullopt;
      c[i] = x / h;
      Integer q = c[i];
      subtractRow(v, i, q);
    }
    if (!isZeroVector(v)) return std::nullopt;
    return c;
  }

  bool containsLattice(const Lattice& other) const {
    for (std::size_t i = 0; i < other.rank(); ++i)
      if (!contains(other.basis_.rowVector(i))) return false;
    return true;
  }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

 private:
  void check(const IntVector& v) const {
    if (v.size() != ambientRank()) throw DimensionMismatch("Lattice: vector length mismatch");
  }
  void subtractRow(IntVector& v, std::size_t i, const Integer& q) const {
    auto r = basis_.row(i);
    for (std::size_t j = pivots_[i]; j < r.size(); ++j)
      if (r[j] != 0) v[j] -= q * r[j];
  }

  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Expresses vectors as integer combinations of a fixed generating set
/// (the rows of `generators`). One Hermite reduction is shared by all
/// queries.
class GeneratorSolver {
 public:
  explicit GeneratorSolver(const IntMatrix& generators)
      : count_(generators.rows()), form_(detail::hermite(generators, true)) {
    span_ = Lattice::spannedBy(form_.H.submatrix(0, 0, form_.rank(), generators.cols()));
  }

  std::size_t generatorCount() const { return count_; }
  const Lattice& span() const { return span_; }

  /// Coefficients x (one per generator) with sum_i x_i g_i == y.
  std::optional<IntVector> solve(const IntVector& y) const {
    auto c = span_.coordinates(y);
    if (!c) return std::nullopt;
    IntVector x(count_);
    for (std::size_t i = 0; i < c->size(); ++i) {
      if ((*c)[i] == 0) continue;
      auto u = form_.U.row(i);
      for (std::size_t j = 0; j < count_; ++j)
        if (u[j] != 0) x[j] += (*c)[i] * u[j];
    }
    return x;
  }

 private:
  std::size_t count_;
  HermiteForm form_;
  Lattice span_;
};

/// {x : k x in L} for some k != 0, as a lattice.
inline Lattice saturation(const Lattice& l) {
  IntMatrix perp = kernelBasis(l.basis());
  if (perp.rows() == 0) return Lattice::spannedBy(IntMatrix::identity(l.ambientRank()));
  return Lattice::spannedBy(kernelBasis(perp));
}

}  // namespace redinv
