#pragma once

// Bounded cochain complexes of Γ-modules, chain maps, cohomology with the
// induced action, shifts, truncations, mapping cones and the long exact
// sequences they produce.

#include "redinv/abelian_group.hpp"
#include "redinv/error.hpp"
#include "redinv/gamma_module.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace redinv {

/// Terms C^lo .. C^hi with d^n : C^n -> C^{n+1}. Outside the range every
/// term is the zero module. An empty complex has hi == lo - 1.
class BoundedComplex {
 public:
  struct Trusted {};

  BoundedComplex() : BoundedComplex(FiniteGroup()) {}
  explicit BoundedComplex(FiniteGroup gamma) : gamma_(std::move(gamma)), lo_(0) {}

  /// terms[k] sits in degree lo + k; diffs[k] : terms[k] -> terms[k+1].
  BoundedComplex(int lo, std::vector<GammaModule> terms, std::vector<GammaHom> diffs)
      : BoundedComplex(lo, std::move(terms), std::move(diffs), Trusted{}) {
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
      if (!compose(diffs_[k + 1], diffs_[k]).isZero())
        throw InvalidComplex("d o d != 0 at degree " + std::to_string(lo_ + static_cast<int>(k)));
  }
  BoundedComplex(int lo, std::vector<GammaModule> terms, std::vector<GammaHom> diffs, Trusted)
      : lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)) {
    if (terms_.empty()) throw InvalidComplex("complex with no terms; use the Γ constructor");
    gamma_ = terms_.front().gamma();
    if (diffs_.size() + 1 != terms_.size())
      throw InvalidComplex("a complex with " + std::to_string(terms_.size()) + " terms needs " +
                           std::to_string(terms_.size() - 1) + " differentials");
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
      if (!(diffs_[k].source().group() == terms_[k].group()) || !(diffs_[k].target().group() == terms_[k + 1].group()))
        throw InvalidComplex("differential at degree " + std::to_string(lo_ + static_cast<int>(k)) +
                             " does not match the terms");
      if (!(terms_[k].gamma() == gamma_)) throw InvalidComplex("terms over different groups");
    }
  }

  /// M placed in a single degree.
  static BoundedComplex single(const GammaModule& m, int degree) {
    return BoundedComplex(degree, {m}, {}, Trusted{});
  }
  /// [source --d--> target] in degrees lo, lo + 1.
  static BoundedComplex twoTerm(const GammaHom& d, int lo) {
    return BoundedComplex(lo, {d.source(), d.target()}, {d}, Trusted{});
  }

  const FiniteGroup& gamma() const { return gamma_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
  bool empty() const { return terms_.empty(); }
  bool inRange(int n) const { return n >= lo() && n <= hi(); }

  GammaModule term(int n) const {
    if (!inRange(n)) return GammaModule(gamma_, FgAbelianGroup());
    return terms_[static_cast<std::size_t>(n - lo_)];
  }
  GammaHom differential(int n) const {
    if (inRange(n) && inRange(n + 1)) return diffs_[static_cast<std::size_t>(n - lo_)];
    return GammaHom::zero(term(n), term(n + 1));
  }

 private:
  FiniteGroup gamma_;
  int lo_ = 0;
  std::vector<GammaModule> terms_;
  std::vector<GammaHom> diffs_;
};

/// Degreewise maps f^n : A^n -> B^n; degrees without an entry are zero.
class ChainMap {
 public:
  struct Trusted {};

  ChainMap() = default;
  ChainMap(BoundedComplex source, BoundedComplex target, std::map<int, GammaHom> components)
      : ChainMap(std::move(source), std::move(target), std::move(components), Trusted{}) {
    for (int n = lowest() - 1; n <= highest(); ++n) {
      GammaHom lhs = compose(component(n + 1), source_.differential(n));
      GammaHom rhs = compose(target_.differential(n), component(n));
      if (!equalHoms(lhs, rhs)) throw InvalidComplex("chain map square does not commute at degree " + std::to_string(n));
    }
  }
  ChainMap(BoundedComplex source, BoundedComplex target, std::map<int, GammaHom> components, Trusted)
      : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
    for (const auto& [n, f] : components_)
      if (!(f.source().group() == source_.term(n).group()) || !(f.target().group() == target_.term(n).group()))
        throw DimensionMismatch("chain map component at degree " + std::to_string(n) + " has the wrong shape");
  }

  static ChainMap identity(const BoundedComplex& c) {
    std::map<int, GammaHom> comp;
    for (int n = c.lo(); n <= c.hi(); ++n) comp.emplace(n, GammaHom::identity(c.term(n)));
    return ChainMap(c, c, std::move(comp), Trusted{});
  }
  static ChainMap zero(const BoundedComplex& a, const BoundedComplex& b) { return ChainMap(a, b, {}, Trusted{}); }

  const BoundedComplex& source() const { return source_; }
  const BoundedComplex& target() const { return target_; }
  GammaHom component(int n) const {
    auto it = components_.find(n);
    if (it != components_.end()) return it->second;
    return GammaHom::zero(source_.term(n), target_.term(n));
  }
  int lowest() const { return std::min(source_.lo(), target_.lo()); }
  int highest() const { return std::max(source_.hi(), target_.hi()); }

 private:
  BoundedComplex source_;
  BoundedComplex target_;
  std::map<int, GammaHom> components_;
};

inline ChainMap compose(const ChainMap& g, const ChainMap& f) {
  std::map<int, GammaHom> comp;
  for (int n = std::min(f.lowest(), g.lowest()); n <= std::max(f.highest(), g.highest()); ++n)
    comp.emplace(n, compose(g.component(n), f.component(n)));
  return ChainMap(f.source(), g.target(), std::move(comp), ChainMap::Trusted{});
}

inline bool equalChainMaps(const ChainMap& f, const ChainMap& g) {
  for (int n = std::min(f.lowest(), g.lowest()); n <= std::max(f.highest(), g.highest()); ++n)
    if (!equalHoms(f.component(n), g.component(n))) return false;
  return true;
}

/// H^n with its Γ-action; classes are coordinates on the cycle lattice basis.
struct CohomologyGroup {
  GammaModule module;
  Lattice cycles;

  std::optional<IntVector> classOf(const IntVector& z) const { return cycles.coordinates(z); }
  IntVector representative(std::size_t generator) const { return cycles.basis().rowVector(generator); }
};

inline CohomologyGroup cohomology(const BoundedComplex& c, int n) {
  GammaModule here = c.term(n);
  Subquotient sq = subquotient(c.differential(n - 1).hom(), c.differential(n).hom());
  const IntMatrix& basis = sq.cycles.basis();
  std::vector<IntMatrix> act;
  for (std::size_t g = 0; g < c.gamma().order(); ++g) {
    IntMatrix a(basis.rows(), basis.rows());
    for (std::size_t j = 0; j < basis.rows(); ++j) {
      auto v = sq.cycles.coordinates(here.action(g).apply(basis.rowVector(j)));
      if (!v) throw InvalidComplex("differential is not equivariant at degree " + std::to_string(n));
      for (std::size_t i = 0; i < basis.rows(); ++i) a(i, j) = (*v)[i];
    }
    act.push_back(std::move(a));
  }
  return {GammaModule(c.gamma(), sq.group, std::move(act), GammaModule::Trusted{}), sq.cycles};
}

inline bool isAcyclic(const BoundedComplex& c) {
  for (int n = c.lo(); n <= c.hi(); ++n)
    if (!cohomology(c, n).module.group().isTrivial()) return false;
  return true;
}

/// H^n(f) : H^n(A) -> H^n(B).
inline GammaHom inducedOnCohomology(const ChainMap& f, int n, const CohomologyGroup& ha, const CohomologyGroup& hb) {
  const std::size_t cols = ha.module.ambientRank();
  IntMatrix m(hb.module.ambientRank(), cols);
  GammaHom fn = f.component(n);
  for (std::size_t j = 0; j < cols; ++j) {
    auto c = hb.classOf(fn.matrix().apply(ha.representative(j)));
    if (!c) throw InvalidComplex("chain map does not send cycles to cycles at degree " + std::to_string(n));
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = (*c)[i];
  }
  return GammaHom(ha.module, hb.module, AbHom(ha.module.group(), hb.module.group(), std::move(m)));
}

inline GammaHom inducedOnCohomology(const ChainMap& f, int n) {
  return inducedOnCohomology(f, n, cohomology(f.source(), n), cohomology(f.target(), n));
}

/// C[k]^n = C^{n+k}, with differential (-1)^k d.
inline BoundedComplex shift(const BoundedComplex& c, int k) {
  if (c.empty()) return c;
  std::vector<GammaModule> terms;
  std::vector<GammaHom> diffs;
  for (int n = c.lo(); n <= c.hi(); ++n) terms.push_back(c.term(n));
  for (int n = c.lo(); n < c.hi(); ++n) diffs.push_back(k % 2 ? -c.differential(n) : c.differential(n));
  return BoundedComplex(c.lo() - k, std::move(terms), std::move(diffs), BoundedComplex::Trusted{});
}

inline ChainMap shift(const ChainMap& f, int k) {
  std::map<int, GammaHom> comp;
  for (int n = f.lowest(); n <= f.highest(); ++n) comp.emplace(n - k, f.component(n));
  return ChainMap(shift(f.source(), k), shift(f.target(), k), std::move(comp), ChainMap::Trusted{});
}

/// tau_{<= n}: ... -> C^{n-1} -> ker d^n -> 0, with its inclusion into C.
struct Truncation {
  BoundedComplex complex;
  ChainMap inclusion;
};

inline Truncation truncateWithInclusion(const BoundedComplex& c, int n) {
  if (c.empty() || n < c.lo()) {
    BoundedComplex z(c.gamma());
    return {z, ChainMap::zero(z, c)};
  }
  if (n >= c.hi()) return {c, ChainMap::identity(c)};
  Subgroup ker = kernel(c.differential(n).hom());
  GammaModule kerMod = restrictToSubgroup(c.term(n), ker);
  std::vector<GammaModule> terms;
  std::vector<GammaHom> diffs;
  std::map<int, GammaHom> inc;
  for (int i = c.lo(); i < n; ++i) {
    terms.push_back(c.term(i));
    inc.emplace(i, GammaHom::identity(c.term(i)));
  }
  terms.push_back(kerMod);
  inc.emplace(n, GammaHom(kerMod, c.term(n), ker.inclusion, GammaHom::Trusted{}));
  for (int i = c.lo(); i + 1 < n; ++i) diffs.push_back(c.differential(i));
  if (n > c.lo()) {
    auto co = factorThrough(c.differential(n - 1).hom(), ker);
    if (!co) throw InvalidComplex("d o d != 0 at degree " + std::to_string(n - 1));
    diffs.push_back(GammaHom(c.term(n - 1), kerMod, *co, GammaHom::Trusted{}));
  }
  BoundedComplex t(c.lo(), std::move(terms), std::move(diffs), BoundedComplex::Trusted{});
  return {t, ChainMap(t, c, std::move(inc), ChainMap::Trusted{})};
}

inline BoundedComplex truncate(const BoundedComplex& c, int n) { return truncateWithInclusion(c, n).complex; }

/// cone(u)^n = A^{n+1} + B^n, d(a, b) = (-d a, u(a) + d b).
inline BoundedComplex cone(const ChainMap& u) {
  const BoundedComplex& a = u.source();
  const BoundedComplex& b = u.target();
  if (a.empty() && b.empty()) return BoundedComplex(a.gamma());
  int lo = a.empty() ? b.lo() : (b.empty() ? a.lo() - 1 : std::min(a.lo() - 1, b.lo()));
  int hi = a.empty() ? b.hi() : (b.empty() ? a.hi() - 1 : std::max(a.hi() - 1, b.hi()));
  std::vector<ModuleDirectSum> sums;
  for (int n = lo; n <= hi; ++n) sums.push_back(directSum({a.term(n + 1), b.term(n)}));
  std::vector<GammaModule> terms;
  for (const auto& s : sums) terms.push_back(s.module);
  std::vector<GammaHom> diffs;
  for (int n = lo; n < hi; ++n) {
    const auto& src = sums[static_cast<std::size_t>(n - lo)];
    const auto& dst = sums[static_cast<std::size_t>(n + 1 - lo)];
    const IntMatrix da = a.differential(n + 1).matrix();
    const IntMatrix db = b.differential(n).matrix();
    const IntMatrix un = u.component(n + 1).matrix();
    IntMatrix d(dst.module.ambientRank(), src.module.ambientRank());
    d.setBlock(0, 0, -da);
    d.setBlock(da.rows(), 0, un);
    d.setBlock(da.rows(), da.cols(), db);
    diffs.emplace_back(src.module, dst.module, AbHom(src.module.group(), dst.module.group(), std::move(d), AbHom::Trusted{}),
                       GammaHom::Trusted{});
  }
  return BoundedComplex(lo, std::move(terms), std::move(diffs), BoundedComplex::Trusted{});
}

/// The maps B -> cone(u) -> A[1] of the triangle; the second is minus the
/// projection.
struct ConeMaps {
  BoundedComplex cone;
  ChainMap intoCone;
  ChainMap toShift;
};

inline ConeMaps coneWithMaps(const ChainMap& u) {
  BoundedComplex c = cone(u);
  BoundedComplex a1 = shift(u.source(), 1);
  std::map<int, GammaHom> in, out;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    GammaModule cn = c.term(n), an = u.source().term(n + 1), bn = u.target().term(n);
    const std::size_t ra = an.ambientRank(), rb = bn.ambientRank();
    IntMatrix i(ra + rb, rb), p(ra, ra + rb);
    for (std::size_t k = 0; k < rb; ++k) i(ra + k, k) = 1;
    for (std::size_t k = 0; k < ra; ++k) p(k, k) = -1;
    in.emplace(n, GammaHom(bn, cn, AbHom(bn.group(), cn.group(), std::move(i), AbHom::Trusted{}), GammaHom::Trusted{}));
    out.emplace(n, GammaHom(cn, a1.term(n), AbHom(cn.group(), a1.term(n).group(), std::move(p), AbHom::Trusted{}),
                            GammaHom::Trusted{}));
  }
  return {c, ChainMap(u.target(), c, std::move(in)), ChainMap(c, a1, std::move(out))};
}

/// Cohomology quasi-isomorphism test: the cone is acyclic.
inline bool isQuasiIso(const ChainMap& u) { return isAcyclic(cone(u)); }

/// Same question answered degree by degree through H^n(u).
inline bool inducesIsomorphisms(const ChainMap& u) {
  for (int n = u.lowest(); n <= u.highest(); ++n)
    if (!isIsomorphism(inducedOnCohomology(u, n).hom())) return false;
  return true;
}

/// A finite sequence of Γ-maps with an exactness verdict at every term,
/// counting implicit zeros before the first and after the last term.
struct LongSequence {
  std::vector<std::string> labels;
  std::vector<GammaModule> terms;
  std::vector<GammaHom> maps;  ///< maps[k] : terms[k] -> terms[k + 1]
  std::vector<std::string> mapLabels;
  std::vector<ExactnessVerdict> exactness;

  bool exact() const {
    return std::all_of(exactness.begin(), exactness.end(), [](const ExactnessVerdict& v) { return v.exact; });
  }
};

inline void computeExactness(LongSequence& s) {
  s.exactness.clear();
  for (std::size_t k = 0; k < s.terms.size(); ++k) {
    AbHom in = k == 0 ? AbHom::zero(FgAbelianGroup(), s.terms[k].group()) : s.maps[k - 1].hom();
    AbHom out = k + 1 == s.terms.size() ? AbHom::zero(s.terms[k].group(), FgAbelianGroup()) : s.maps[k].hom();
    s.exactness.push_back(checkExactAt(in, out));
  }
}

struct TriangleReport {
  std::vector<BoundedComplex> complexes;  ///< X, Y, Z, X[1]
  LongSequence sequence;                   ///< ... H^n X -> H^n Y -> H^n Z -> H^{n+1} X ...
  bool exact() const { return sequence.exact(); }
};

namespace detail {

inline TriangleReport triangleReport(const ChainMap& f, const ChainMap& g, const std::vector<GammaHom>& third, int lo,
                                     int hi, const BoundedComplex& x1) {
  TriangleReport r;
  r.complexes = {f.source(), f.target(), g.target(), x1};
  for (int n = lo; n <= hi; ++n) {
    auto hx = cohomology(f.source(), n), hy = cohomology(f.target(), n), hz = cohomology(g.target(), n);
    r.sequence.labels.push_back("H^" + std::to_string(n) + "(X)");
    r.sequence.labels.push_back("H^" + std::to_string(n) + "(Y)");
    r.sequence.labels.push_back("H^" + std::to_string(n) + "(Z)");
    r.sequence.terms.push_back(hx.module);
    r.sequence.terms.push_back(hy.module);
    r.sequence.terms.push_back(hz.module);
    r.sequence.maps.push_back(inducedOnCohomology(f, n, hx, hy));
    r.sequence.maps.push_back(inducedOnCohomology(g, n, hy, hz));
    r.sequence.mapLabels.insert(r.sequence.mapLabels.end(), {"f", "g", "h"});
    if (n < hi) r.sequence.maps.push_back(third[static_cast<std::size_t>(n - lo)]);
  }
  r.sequence.mapLabels.pop_back();
  computeExactness(r.sequence);
  return r;
}

}  // namespace detail

/// A --u--> B --> cone(u) --v--> A[1] and the long sequence it induces.
inline TriangleReport coneTriangleCheck(const ChainMap& u) {
  ConeMaps cm = coneWithMaps(u);
  int lo = std::min(u.lowest(), cm.cone.lo()), hi = std::max(u.highest(), cm.cone.hi());
  std::vector<GammaHom> third;
  for (int n = lo; n < hi; ++n) {
    // H^n(cone) -> H^n(A[1]) = H^{n+1}(A)
    auto hc = cohomology(cm.cone, n);
    auto ha1 = cohomology(shift(u.source(), 1), n);
    GammaHom v = inducedOnCohomology(cm.toShift, n, hc, ha1);
    // identify H^n(A[1]) with H^{n+1}(A): same cycles up to sign, same lattice
    auto ha = cohomology(u.source(), n + 1);
    third.emplace_back(hc.module, ha.module, AbHom(hc.module.group(), ha.module.group(), v.matrix()));
  }
  return detail::triangleReport(u, cm.intoCone, third, lo, hi, shift(u.source(), 1));
}

/// tau<=n-1 A -> tau<=n A -> H^n(A)[-n] -> (tau<=n-1 A)[1]; the induced
/// connecting maps all vanish.
inline TriangleReport truncationTriangleCheck(const BoundedComplex& a, int n) {
  Truncation lower = truncateWithInclusion(a, n - 1);
  Truncation upper = truncateWithInclusion(a, n);
  // lower -> upper: below degree n the upper truncation agrees with A, so
  // the inclusion of the lower one into A already lands there.
  std::map<int, GammaHom> f;
  for (int i = lower.complex.lo(); i <= lower.complex.hi(); ++i)
    f.emplace(i, GammaHom(lower.complex.term(i), upper.complex.term(i), lower.inclusion.component(i).hom(),
                          GammaHom::Trusted{}));
  ChainMap fm(lower.complex, upper.complex, std::move(f));
  // upper -> H^n(A)[-n]
  CohomologyGroup hn = cohomology(a, n);
  BoundedComplex hcx = BoundedComplex::single(hn.module, n);
  std::map<int, GammaHom> g;
  if (upper.complex.inRange(n)) {
    GammaModule kn = upper.complex.term(n);
    // kn is presented on a basis of ker d^n; express through the cycle lattice of a
    IntMatrix m(hn.module.ambientRank(), kn.ambientRank());
    IntMatrix incl = upper.inclusion.component(n).matrix();
    for (std::size_t j = 0; j < kn.ambientRank(); ++j) {
      auto c = hn.classOf(incl.columnVector(j));
      if (!c) throw InvalidComplex("truncation: kernel element is not a cycle");
      for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = (*c)[i];
    }
    g.emplace(n, GammaHom(kn, hn.module, AbHom(kn.group(), hn.module.group(), std::move(m))));
  }
  ChainMap gm(upper.complex, hcx, std::move(g));
  int lo = std::min({a.lo(), n}) - 1, hi = std::max(a.hi(), n) + 1;
  std::vector<GammaHom> third;
  for (int i = lo; i < hi; ++i)
    third.push_back(GammaHom::zero(cohomology(hcx, i).module, cohomology(lower.complex, i + 1).module));
  return detail::triangleReport(fm, gm, third, lo, hi, shift(lower.complex, 1));
}

/// Long exact cohomology sequence of 0 -> A --i--> B --p--> C -> 0.
struct LesReport {
  LongSequence sequence;
  std::map<int, GammaHom> connecting;  ///< degree n: H^n(C) -> H^{n+1}(A)
  bool exact() const { return sequence.exact(); }
};

/// Degreewise exactness of 0 -> A^n -> B^n -> C^n -> 0; empty when fine,
/// otherwise a description of the first failure.
inline std::string levelwiseProblem(const ChainMap& i, const ChainMap& p) {
  int lo = std::min(i.lowest(), p.lowest()), hi = std::max(i.highest(), p.highest());
  for (int n = lo; n <= hi; ++n) {
    AbHom in = i.component(n).hom(), pr = p.component(n).hom();
    if (!isInjective(in)) return "A -> B is not injective in degree " + std::to_string(n);
    if (!isExactAt(in, pr)) return "not exact at B in degree " + std::to_string(n);
    if (!isSurjective(pr)) return "B -> C is not surjective in degree " + std::to_string(n);
  }
  return {};
}

inline LesReport lesOfSES(const ChainMap& i, const ChainMap& p) {
  if (!(i.target().gamma() == p.source().gamma())) throw InvalidComplex("lesOfSES: maps over different groups");
  std::string problem = levelwiseProblem(i, p);
  if (!problem.empty()) throw InvalidComplex("sequence of complexes is not levelwise exact: " + problem);
  const BoundedComplex& a = i.source();
  const BoundedComplex& b = i.target();
  const BoundedComplex& c = p.target();
  int lo = std::min({a.lo(), b.lo(), c.lo()}), hi = std::max({a.hi(), b.hi(), c.hi()});

  LesReport r;
  std::vector<CohomologyGroup> ha, hb, hc;
  for (int n = lo; n <= hi + 1; ++n) {
    ha.push_back(cohomology(a, n));
    hb.push_back(cohomology(b, n));
    hc.push_back(cohomology(c, n));
  }
  for (int n = lo; n <= hi; ++n) {
    const std::size_t k = static_cast<std::size_t>(n - lo);
    r.sequence.labels.push_back("H^" + std::to_string(n) + "(A)");
    r.sequence.labels.push_back("H^" + std::to_string(n) + "(B)");
    r.sequence.labels.push_back("H^" + std::to_string(n) + "(C)");
    r.sequence.terms.insert(r.sequence.terms.end(), {ha[k].module, hb[k].module, hc[k].module});
    r.sequence.maps.push_back(inducedOnCohomology(i, n, ha[k], hb[k]));
    r.sequence.maps.push_back(inducedOnCohomology(p, n, hb[k], hc[k]));
    r.sequence.mapLabels.insert(r.sequence.mapLabels.end(), {"i", "p"});
    if (n == hi) break;

    // zig-zag: lift through p, apply d_B, pull back through i
    AbHom pn = p.component(n).hom(), dB = b.differential(n).hom(), in1 = i.component(n + 1).hom();
    const CohomologyGroup& from = hc[k];
    const CohomologyGroup& to = ha[k + 1];
    IntMatrix m(to.module.ambientRank(), from.module.ambientRank());
    for (std::size_t j = 0; j < from.module.ambientRank(); ++j) {
      auto lift = preimageElement(pn, from.representative(j));
      if (!lift) throw InvalidComplex("connecting map: cycle does not lift");
      auto back = preimageElement(in1, dB.matrix().apply(*lift));
      if (!back) throw InvalidComplex("connecting map: boundary does not come from A");
      auto cls = to.classOf(*back);
      if (!cls) throw InvalidComplex("connecting map: pulled-back element is not a cycle");
      for (std::size_t q = 0; q < m.rows(); ++q) m(q, j) = (*cls)[q];
    }
    GammaHom delta(from.module, to.module, AbHom(from.module.group(), to.module.group(), std::move(m)));
    r.connecting.emplace(n, delta);
    r.sequence.maps.push_back(delta);
    r.sequence.mapLabels.push_back("delta");
  }
  computeExactness(r.sequence);
  return r;
}

}  // namespace redinv
