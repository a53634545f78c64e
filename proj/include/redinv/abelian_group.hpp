#pragma once

// Finitely generated abelian groups presented as Z^n / (row span of the
// relations), homomorphisms given by matrices on ambient coordinates, and
// the kernel / cokernel / image calculus built on top of them.

#include "redinv/error.hpp"
#include "redinv/integer.hpp"
#include "redinv/matrix.hpp"
#include "redinv/normal_form.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace redinv {

class FgAbelianGroup {
 public:
  /// The zero group.
  FgAbelianGroup() : FgAbelianGroup(0) {}
  /// Free group Z^n.
  explicit FgAbelianGroup(std::size_t ambientRank) : FgAbelianGroup(ambientRank, IntMatrix(0, ambientRank)) {}
  FgAbelianGroup(std::size_t ambientRank, const IntMatrix& relations) {
    if (relations.cols() != ambientRank)
      throw DimensionMismatch("FgAbelianGroup: relations have " + std::to_string(relations.cols()) +
                              " columns, ambient rank is " + std::to_string(ambientRank));
    auto impl = std::make_shared<Impl>();
    impl->relations = relations;
    impl->lattice = Lattice::spannedBy(relations);
    const IntMatrix& basis = impl->lattice.basis();
    if (basis.rows() == 0 || isDiagonalish(basis)) {
      for (std::size_t i = 0; i < basis.rows(); ++i) {
        Integer d = basis(i, impl->lattice.pivotColumns()[i]);
        if (d > 1) impl->torsion.push_back(d);
      }
      std::sort(impl->torsion.begin(), impl->torsion.end());
      normalizeChain(impl->torsion);
    } else {
      SmithForm s = snf(basis);
      for (const auto& d : s.invariantFactors())
        if (d > 1) impl->torsion.push_back(d);
    }
    impl->freeRank = ambientRank - impl->lattice.rank();
    impl_ = std::move(impl);
  }

  static FgAbelianGroup free(std::size_t n) { return FgAbelianGroup(n); }
  /// Z/d, or Z when d == 0.
  static FgAbelianGroup cyclic(const Integer& d) {
    if (d == 0) return FgAbelianGroup(1);
    return FgAbelianGroup(1, IntMatrix(1, 1, {abs(d)}));
  }
  /// Z/d1 + ... + Z/dk + Z^r in the ambient order given.
  static FgAbelianGroup fromInvariants(std::size_t freeRank, const IntVector& torsion) {
    const std::size_t n = torsion.size() + freeRank;
    IntMatrix rel(torsion.size(), n);
    for (std::size_t i = 0; i < torsion.size(); ++i) rel(i, i) = torsion[i];
    return FgAbelianGroup(n, rel);
  }

  std::size_t ambientRank() const { return impl_->lattice.ambientRank(); }
  const IntMatrix& relations() const { return impl_->relations; }
  const Lattice& relationLattice() const { return impl_->lattice; }
  std::size_t freeRank() const { return impl_->freeRank; }
  /// Invariant factors d1 | d2 | ..., each > 1.
  const IntVector& torsion() const { return impl_->torsion; }
  bool isTrivial() const { return freeRank() == 0 && torsion().empty(); }
  bool isFinite() const { return freeRank() == 0; }
  std::optional<Integer> order() const {
    if (!isFinite()) return std::nullopt;
    Integer o = 1;
    for (const auto& d : torsion()) o *= d;
    return o;
  }

  IntVector reduce(const IntVector& v) const { return impl_->lattice.reduce(v); }
  bool isZero(const IntVector& v) const { return impl_->lattice.contains(v); }
  bool equalElements(const IntVector& a, const IntVector& b) const {
    IntVector d = a;
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b[i];
    return isZero(d);
  }
  IntVector generator(std::size_t i) const {
    IntVector e(ambientRank());
    e[i] = 1;
    return e;
  }

  /// "0", "Z^2", "Z/2 + Z/4 + Z" ...
  std::string describe() const {
    if (isTrivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& d : torsion()) {
      os << (first ? "" : " + ") << "Z/" << d;
      first = false;
    }
    if (freeRank() > 0) {
      os << (first ? "" : " + ") << "Z";
      if (freeRank() > 1) os << '^' << freeRank();
    }
    return os.str();
  }

  /// Same ambient rank and same relation lattice.
  friend bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return a.impl_ == b.impl_ || (a.ambientRank() == b.ambientRank() && a.relationLattice() == b.relationLattice());
  }

 private:
  struct Impl {
    IntMatrix relations;
    Lattice lattice;
    std::size_t freeRank = 0;
    IntVector torsion;
  };

  static bool isDiagonalish(const IntMatrix& hnfBasis) {
    // Each basis row has a single nonzero entry.
    for (std::size_t i = 0; i < hnfBasis.rows(); ++i) {
      int nz = 0;
      for (const auto& x : hnfBasis.row(i)) nz += (x != 0);
      if (nz != 1) return false;
    }
    return true;
  }

  // Turn a sorted list of cyclic orders into the invariant-factor chain.
  static void normalizeChain(IntVector& t) {
    if (t.size() < 2) return;
    SmithForm s = snf(IntMatrix::diagonal(t));
    t.clear();
    for (const auto& d : s.invariantFactors())
      if (d > 1) t.push_back(d);
  }

  std::shared_ptr<const Impl> impl_;
};

/// Isomorphism of plain abelian groups: equal rank and invariant factors.
inline bool isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  return a.freeRank() == b.freeRank() && a.torsion() == b.torsion();
}

/// An element kept in canonical form (reduced against the Hermite basis of
/// the relations), so equality is coordinate equality.
class GroupElement {
 public:
  GroupElement(FgAbelianGroup group, const IntVector& coords) : group_(std::move(group)) {
    if (coords.size() != group_.ambientRank()) throw DimensionMismatch("GroupElement: coordinate count");
    coords_ = group_.reduce(coords);
  }
  const FgAbelianGroup& group() const { return group_; }
  const IntVector& coordinates() const { return coords_; }
  bool isZero() const { return isZeroVector(coords_); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.group_ == b.group_ && a.coords_ == b.coords_;
  }
  friend GroupElement operator+(const GroupElement& a, const GroupElement& b) {
    if (!(a.group_ == b.group_)) throw DimensionMismatch("adding elements of different groups");
    IntVector s = a.coords_;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += b.coords_[i];
    return GroupElement(a.group_, s);
  }
  friend GroupElement operator-(const GroupElement& a) {
    IntVector s = a.coords_;
    for (auto& x : s) x = -x;
    return GroupElement(a.group_, s);
  }

 private:
  FgAbelianGroup group_;
  IntVector coords_;
};

class AbHom {
 public:
  struct Trusted {};

  AbHom() = default;
  /// Validates dimensions and that relations of `source` land in the
  /// relation lattice of `target`.
  AbHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix)
      : AbHom(std::move(source), std::move(target), std::move(matrix), Trusted{}) {
    for (std::size_t i = 0; i < source_.relationLattice().rank(); ++i) {
      IntVector img = matrix_.apply(source_.relationLattice().basis().rowVector(i));
      if (!target_.isZero(img)) {
        std::ostringstream os;
        os << "homomorphism is not well defined: relation " << i << " maps to a nonzero element";
        throw IllDefinedHom(os.str());
      }
    }
  }
  /// Skips the well-definedness check (for maps correct by construction).
  AbHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix, Trusted)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.ambientRank() || matrix_.cols() != source_.ambientRank())
      throw DimensionMismatch("AbHom: matrix is " + std::to_string(matrix_.rows()) + "x" +
                              std::to_string(matrix_.cols()) + ", expected " +
                              std::to_string(target_.ambientRank()) + "x" + std::to_string(source_.ambientRank()));
  }

  static AbHom identity(const FgAbelianGroup& g) {
    return AbHom(g, g, IntMatrix::identity(g.ambientRank()), Trusted{});
  }
  static AbHom zero(const FgAbelianGroup& s, const FgAbelianGroup& t) {
    return AbHom(s, t, IntMatrix(t.ambientRank(), s.ambientRank()), Trusted{});
  }

  const FgAbelianGroup& source() const { return source_; }
  const FgAbelianGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector apply(const IntVector& x) const { return target_.reduce(matrix_.apply(x)); }

  bool isZero() const {
    for (std::size_t j = 0; j < matrix_.cols(); ++j)
      if (!target_.isZero(matrix_.columnVector(j))) return false;
    return true;
  }

 private:
  FgAbelianGroup source_;
  FgAbelianGroup target_;
  IntMatrix matrix_;
};

/// g after f.
inline AbHom compose(const AbHom& g, const AbHom& f) {
  if (!(f.target() == g.source())) throw DimensionMismatch("compose: target of f is not the source of g");
  return AbHom(f.source(), g.target(), g.matrix() * f.matrix(), AbHom::Trusted{});
}

/// Equal as homomorphisms (matrices may differ by maps into the relations).
inline bool equalHoms(const AbHom& f, const AbHom& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) return false;
  for (std::size_t j = 0; j < f.matrix().cols(); ++j) {
    IntVector d = f.matrix().columnVector(j);
    IntVector e = g.matrix().columnVector(j);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= e[i];
    if (!f.target().isZero(d)) return false;
  }
  return true;
}

inline AbHom operator+(const AbHom& f, const AbHom& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) throw DimensionMismatch("sum of homs");
  return AbHom(f.source(), f.target(), f.matrix() + g.matrix(), AbHom::Trusted{});
}
inline AbHom operator-(const AbHom& f) { return AbHom(f.source(), f.target(), -f.matrix(), AbHom::Trusted{}); }
inline AbHom operator-(const AbHom& f, const AbHom& g) { return f + (-g); }

/// A subgroup of `parent` given by a lattice L containing the parent's
/// relations; `group` is presented in coordinates on the basis of L.
struct Subgroup {
  FgAbelianGroup group;
  Lattice lattice;
  AbHom inclusion;  ///< group -> parent

  /// Coordinates (in `group`) of a parent vector lying in the subgroup.
  std::optional<IntVector> coordinatesOf(const IntVector& v) const { return lattice.coordinates(v); }
};

namespace detail {

inline Subgroup subgroupFromLattice(const FgAbelianGroup& parent, Lattice l) {
  IntMatrix rel(parent.relationLattice().rank(), l.rank());
  for (std::size_t i = 0; i < rel.rows(); ++i) {
    auto c = l.coordinates(parent.relationLattice().basis().rowVector(i));
    if (!c) throw Error("internal: subgroup lattice does not contain the parent relations");
    for (std::size_t j = 0; j < c->size(); ++j) rel(i, j) = (*c)[j];
  }
  FgAbelianGroup g(l.rank(), rel);
  AbHom inc(g, parent, l.basis().transpose(), AbHom::Trusted{});
  return Subgroup{std::move(g), std::move(l), std::move(inc)};
}

}  // namespace detail

/// Subgroup generated by the given vectors (rows) of `parent`.
inline Subgroup subgroupGeneratedBy(const FgAbelianGroup& parent, const IntMatrix& generators) {
  return detail::subgroupFromLattice(parent,
                                     Lattice::spannedBy(vstack(generators, parent.relationLattice().basis())));
}

/// The lattice {x : f(x) = 0 in target} in the source ambient.
inline Lattice kernelLattice(const AbHom& f) {
  const IntMatrix& rel = f.target().relationLattice().basis();
  IntMatrix system = hstack(f.matrix(), -rel.transpose());
  IntMatrix k = kernelBasis(system);
  return Lattice::spannedBy(k.submatrix(0, 0, k.rows(), f.source().ambientRank()));
}

inline Subgroup kernel(const AbHom& f) { return detail::subgroupFromLattice(f.source(), kernelLattice(f)); }

struct Quotient {
  FgAbelianGroup group;
  AbHom projection;  ///< parent -> group
};

inline Quotient cokernel(const AbHom& f) {
  const FgAbelianGroup& t = f.target();
  FgAbelianGroup q(t.ambientRank(), vstack(t.relationLattice().basis(), f.matrix().transpose()));
  AbHom proj(t, q, IntMatrix::identity(t.ambientRank()), AbHom::Trusted{});
  return Quotient{std::move(q), std::move(proj)};
}

/// Quotient of `g` by the subgroup generated by the rows of `generators`.
inline Quotient quotientBy(const FgAbelianGroup& g, const IntMatrix& generators) {
  return cokernel(AbHom(FgAbelianGroup(generators.rows()), g, generators.transpose(), AbHom::Trusted{}));
}

struct Image {
  Subgroup subgroup;   ///< image as a subgroup of the target
  AbHom corestriction;  ///< source -> image
};

inline Image image(const AbHom& f) {
  Subgroup s = subgroupGeneratedBy(f.target(), f.matrix().transpose());
  IntMatrix m(s.group.ambientRank(), f.source().ambientRank());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto c = s.coordinatesOf(f.matrix().columnVector(j));
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = (*c)[i];
  }
  AbHom co(f.source(), s.group, std::move(m), AbHom::Trusted{});
  return Image{std::move(s), std::move(co)};
}

/// Some x with f(x) = y in the target, if one exists.
inline std::optional<IntVector> preimageElement(const AbHom& f, const IntVector& y) {
  GeneratorSolver solver(vstack(f.matrix().transpose(), f.target().relationLattice().basis()));
  auto c = solver.solve(y);
  if (!c) return std::nullopt;
  return IntVector(c->begin(), c->begin() + static_cast<std::ptrdiff_t>(f.source().ambientRank()));
}

/// Lifts every column of `ys` through f at once (nullopt if any fails).
inline std::optional<IntMatrix> preimageColumns(const AbHom& f, const IntMatrix& ys) {
  GeneratorSolver solver(vstack(f.matrix().transpose(), f.target().relationLattice().basis()));
  IntMatrix x(f.source().ambientRank(), ys.cols());
  for (std::size_t j = 0; j < ys.cols(); ++j) {
    auto c = solver.solve(ys.columnVector(j));
    if (!c) return std::nullopt;
    for (std::size_t i = 0; i < x.rows(); ++i) x(i, j) = (*c)[i];
  }
  return x;
}

/// The map source(f) -> sub.group through which f factors, if it does.
inline std::optional<AbHom> factorThrough(const AbHom& f, const Subgroup& sub) {
  if (!(sub.inclusion.target() == f.target())) throw DimensionMismatch("factorThrough: different targets");
  IntMatrix m(sub.group.ambientRank(), f.source().ambientRank());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto c = sub.coordinatesOf(f.matrix().columnVector(j));
    if (!c) return std::nullopt;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = (*c)[i];
  }
  return AbHom(f.source(), sub.group, std::move(m), AbHom::Trusted{});
}

inline bool isInjective(const AbHom& f) { return kernel(f).group.isTrivial(); }
inline bool isSurjective(const AbHom& f) { return cokernel(f).group.isTrivial(); }
inline bool isIsomorphism(const AbHom& f) { return isInjective(f) && isSurjective(f); }

struct ExactnessVerdict {
  bool exact = true;
  std::string reason;           ///< empty when exact
  std::optional<IntVector> witness;  ///< offending element of the middle group
};

/// Exactness of A --f--> B --g--> C at B: im f == ker g.
inline ExactnessVerdict checkExactAt(const AbHom& f, const AbHom& g) {
  if (!(f.target() == g.source())) throw DimensionMismatch("isExactAt: maps are not composable");
  ExactnessVerdict v;
  for (std::size_t j = 0; j < f.matrix().cols(); ++j) {
    IntVector fx = f.matrix().columnVector(j);
    if (!g.target().isZero(g.matrix().apply(fx))) {
      v.exact = false;
      v.reason = "g o f != 0";
      v.witness = f.target().reduce(fx);
      return v;
    }
  }
  Lattice ker = kernelLattice(g);
  Lattice im = Lattice::spannedBy(vstack(f.matrix().transpose(), f.target().relationLattice().basis()));
  for (std::size_t i = 0; i < ker.rank(); ++i) {
    IntVector k = ker.basis().rowVector(i);
    if (!im.contains(k)) {
      v.exact = false;
      v.reason = "ker g not contained in im f";
      v.witness = f.target().reduce(k);
      return v;
    }
  }
  return v;
}

inline bool isExactAt(const AbHom& f, const AbHom& g) { return checkExactAt(f, g).exact; }

/// ker(out) / im(in) for A --in--> B --out--> C, presented on the basis of
/// the cycle lattice.
struct Subquotient {
  FgAbelianGroup group;
  Lattice cycles;  ///< ker out, in the ambient coordinates of B

  /// Class of a cycle, or nullopt when z is not a cycle.
  std::optional<IntVector> classOf(const IntVector& z) const { return cycles.coordinates(z); }
  /// A cycle representing the class with coordinates c.
  IntVector representative(const IntVector& c) const { return cycles.basis().transpose().apply(c); }
};

inline Subquotient subquotient(const AbHom& in, const AbHom& out) {
  if (!(in.target() == out.source())) throw DimensionMismatch("subquotient: maps are not composable");
  if (!compose(out, in).isZero()) throw InvalidComplex("subquotient: composite of consecutive maps is nonzero");
  Subgroup z = kernel(out);
  IntMatrix bnd(in.matrix().cols(), z.group.ambientRank());
  for (std::size_t j = 0; j < bnd.rows(); ++j) {
    auto c = z.coordinatesOf(in.matrix().columnVector(j));
    if (!c) throw Error("internal: boundary is not a cycle");
    for (std::size_t i = 0; i < bnd.cols(); ++i) bnd(j, i) = (*c)[i];
  }
  FgAbelianGroup h(z.group.ambientRank(), vstack(z.group.relationLattice().basis(), bnd));
  return Subquotient{std::move(h), std::move(z.lattice)};
}

/// Direct sum with canonical injections and projections.
struct DirectSum {
  FgAbelianGroup group;
  std::vector<AbHom> injections;
  std::vector<AbHom> projections;
};

inline DirectSum directSum(const std::vector<FgAbelianGroup>& parts) {
  std::vector<IntMatrix> rels;
  std::size_t n = 0;
  for (const auto& p : parts) {
    rels.push_back(p.relationLattice().basis());
    n += p.ambientRank();
  }
  DirectSum s{FgAbelianGroup(n, blockDiagonal(rels)), {}, {}};
  std::size_t off = 0;
  for (const auto& p : parts) {
    IntMatrix inj(n, p.ambientRank()), proj(p.ambientRank(), n);
    for (std::size_t i = 0; i < p.ambientRank(); ++i) inj(off + i, i) = 1, proj(i, off + i) = 1;
    s.injections.emplace_back(p, s.group, std::move(inj), AbHom::Trusted{});
    s.projections.emplace_back(s.group, p, std::move(proj), AbHom::Trusted{});
    off += p.ambientRank();
  }
  return s;
}

inline FgAbelianGroup directSumGroup(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  return directSum({a, b}).group;
}

/// An isomorphic presentation Z/d1 + ... + Z/dk + Z^r with mutually
/// inverse isomorphisms.
struct SmithPresentation {
  FgAbelianGroup group;
  AbHom to;    ///< original -> normalized
  AbHom from;  ///< normalized -> original
};

inline SmithPresentation smithPresentation(const FgAbelianGroup& g) {
  const IntMatrix& basis = g.relationLattice().basis();
  const std::size_t n = g.ambientRank();
  auto s = detail::smith(basis, true);
  // Row convention: x -> x V sends the relation lattice onto span(D).
  IntMatrix toAll = s.form.V.transpose();
  IntMatrix fromAll = s.Vinv.transpose();
  std::vector<std::size_t> keep;
  IntVector torsion;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < s.form.rank) {
      if (s.form.D(i, i) == 1) continue;
      torsion.push_back(s.form.D(i, i));
    }
    keep.push_back(i);
  }
  FgAbelianGroup norm = FgAbelianGroup::fromInvariants(n - s.form.rank, torsion);
  AbHom to(g, norm, toAll.selectRows(keep), AbHom::Trusted{});
  AbHom from(norm, g, fromAll.selectColumns(keep), AbHom::Trusted{});
  return SmithPresentation{std::move(norm), std::move(to), std::move(from)};
}

/// 0 -> ker u -> ker vu -> ker v -> coker u -> coker vu -> coker v -> 0
struct SixTermSequence {
  std::vector<FgAbelianGroup> groups;  ///< six terms
  std::vector<AbHom> maps;             ///< five maps between consecutive terms
  std::vector<ExactnessVerdict> exactness;  ///< one per term
  bool exact() const {
    for (const auto& e : exactness)
      if (!e.exact) return false;
    return true;
  }
};

inline SixTermSequence sixTermSequence(const AbHom& u, const AbHom& v) {
  if (!(u.target() == v.source())) throw DimensionMismatch("sixTermSequence: u and v are not composable");
  AbHom vu = compose(v, u);
  Subgroup ku = kernel(u), kvu = kernel(vu), kv = kernel(v);
  Quotient cu = cokernel(u), cvu = cokernel(vu), cv = cokernel(v);

  SixTermSequence s;
  s.groups = {ku.group, kvu.group, kv.group, cu.group, cvu.group, cv.group};
  s.maps.push_back(*factorThrough(ku.inclusion, kvu));
  s.maps.push_back(*factorThrough(compose(u, kvu.inclusion), kv));
  s.maps.push_back(AbHom(kv.group, cu.group, kv.inclusion.matrix()));
  s.maps.push_back(AbHom(cu.group, cvu.group, v.matrix()));
  s.maps.push_back(AbHom(cvu.group, cv.group, IntMatrix::identity(cv.group.ambientRank())));

  AbHom zeroIn = AbHom::zero(FgAbelianGroup(), s.groups.front());
  AbHom zeroOut = AbHom::zero(s.groups.back(), FgAbelianGroup());
  s.exactness.push_back(checkExactAt(zeroIn, s.maps[0]));
  for (std::size_t i = 0; i + 1 < s.maps.size(); ++i) s.exactness.push_back(checkExactAt(s.maps[i], s.maps[i + 1]));
  s.exactness.push_back(checkExactAt(s.maps.back(), zeroOut));
  return s;
}

}  // namespace redinv
