#pragma once

// Modules over a finite group: an abelian group with one automorphism per
// group element. Group cohomology uses inhomogeneous bar cochains.

#include "redinv/abelian_group.hpp"
#include "redinv/error.hpp"
#include "redinv/finite_group.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace redinv {

class GammaModule {
 public:
  struct Trusted {};

  /// The zero module over the trivial group.
  GammaModule() : GammaModule(FiniteGroup(), FgAbelianGroup()) {}
  /// Trivial action.
  GammaModule(FiniteGroup gamma, FgAbelianGroup group) : gamma_(std::move(gamma)), group_(std::move(group)) {
    action_.assign(gamma_.order(), IntMatrix::identity(group_.ambientRank()));
  }
  /// action[g] is the matrix of g on ambient coordinates. Checks that each
  /// matrix is well defined and that g -> action[g] is a homomorphism.
  GammaModule(FiniteGroup gamma, FgAbelianGroup group, std::vector<IntMatrix> action)
      : GammaModule(std::move(gamma), std::move(group), std::move(action), Trusted{}) {
    std::vector<AbHom> h;
    for (std::size_t g = 0; g < gamma_.order(); ++g) {
      try {
        h.emplace_back(group_, group_, action_[g]);
      } catch (const IllDefinedHom&) {
        throw InvalidAction("action of element " + std::to_string(g) + " does not preserve the relations");
      }
    }
    if (!equalHoms(h[gamma_.identity()], AbHom::identity(group_)))
      throw InvalidAction("identity element does not act trivially");
    for (std::size_t a = 0; a < gamma_.order(); ++a)
      for (std::size_t b = 0; b < gamma_.order(); ++b)
        if (!equalHoms(compose(h[a], h[b]), h[gamma_.multiply(a, b)]))
          throw InvalidAction("action is not multiplicative at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  GammaModule(FiniteGroup gamma, FgAbelianGroup group, std::vector<IntMatrix> action, Trusted)
      : gamma_(std::move(gamma)), group_(std::move(group)), action_(std::move(action)) {
    if (action_.size() != gamma_.order())
      throw InvalidAction("expected " + std::to_string(gamma_.order()) + " action matrices, got " +
                          std::to_string(action_.size()));
    for (const auto& m : action_)
      if (m.rows() != group_.ambientRank() || m.cols() != group_.ambientRank())
        throw DimensionMismatch("action matrix has the wrong size");
  }

  /// Extends matrices given on generating elements to the whole group (by
  /// closure under products), then validates.
  static GammaModule fromGenerators(const FiniteGroup& gamma, const FgAbelianGroup& group,
                                    const std::map<std::size_t, IntMatrix>& gens) {
    const std::size_t n = group.ambientRank();
    std::vector<std::optional<IntMatrix>> act(gamma.order());
    act[gamma.identity()] = IntMatrix::identity(n);
    std::vector<std::size_t> frontier{gamma.identity()};
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t x : frontier)
        for (const auto& [g, m] : gens) {
          std::size_t y = gamma.multiply(g, x);
          if (act[y]) continue;
          act[y] = m * *act[x];
          next.push_back(y);
        }
      frontier = std::move(next);
    }
    std::vector<IntMatrix> all;
    for (std::size_t g = 0; g < gamma.order(); ++g) {
      if (!act[g]) throw InvalidAction("given elements do not generate the group");
      all.push_back(*act[g]);
    }
    return GammaModule(gamma, group, std::move(all));
  }

  const FiniteGroup& gamma() const { return gamma_; }
  const FgAbelianGroup& group() const { return group_; }
  std::size_t ambientRank() const { return group_.ambientRank(); }
  const IntMatrix& action(std::size_t g) const { return action_.at(g); }
  const std::vector<IntMatrix>& actions() const { return action_; }
  AbHom actionHom(std::size_t g) const { return AbHom(group_, group_, action_.at(g), AbHom::Trusted{}); }

  bool hasTrivialAction() const {
    for (std::size_t g = 0; g < gamma_.order(); ++g)
      if (!equalHoms(actionHom(g), AbHom::identity(group_))) return false;
    return true;
  }

  /// Same group, same presentation, same action (as homomorphisms).
  friend bool operator==(const GammaModule& a, const GammaModule& b) {
    if (!(a.gamma_ == b.gamma_) || !(a.group_ == b.group_)) return false;
    for (std::size_t g = 0; g < a.gamma_.order(); ++g)
      if (!equalHoms(a.actionHom(g), b.actionHom(g))) return false;
    return true;
  }

 private:
  FiniteGroup gamma_;
  FgAbelianGroup group_;
  std::vector<IntMatrix> action_;
};

class GammaHom {
 public:
  struct Trusted {};

  GammaHom() = default;
  /// Checks equivariance against every group element.
  GammaHom(GammaModule source, GammaModule target, AbHom hom)
      : GammaHom(std::move(source), std::move(target), std::move(hom), Trusted{}) {
    for (std::size_t g = 0; g < source_.gamma().order(); ++g)
      if (!equalHoms(compose(hom_, source_.actionHom(g)), compose(target_.actionHom(g), hom_)))
        throw InvalidAction("map is not equivariant for element " + std::to_string(g));
  }
  GammaHom(GammaModule source, GammaModule target, AbHom hom, Trusted)
      : source_(std::move(source)), target_(std::move(target)), hom_(std::move(hom)) {
    if (!(source_.gamma() == target_.gamma())) throw InvalidAction("GammaHom: different acting groups");
    if (!(hom_.source() == source_.group()) || !(hom_.target() == target_.group()))
      throw DimensionMismatch("GammaHom: underlying map does not match the modules");
  }
  /// Convenience: builds and validates the underlying AbHom as well.
  GammaHom(const GammaModule& source, const GammaModule& target, const IntMatrix& m)
      : GammaHom(source, target, AbHom(source.group(), target.group(), m)) {}

  static GammaHom identity(const GammaModule& m) {
    return GammaHom(m, m, AbHom::identity(m.group()), Trusted{});
  }
  static GammaHom zero(const GammaModule& s, const GammaModule& t) {
    return GammaHom(s, t, AbHom::zero(s.group(), t.group()), Trusted{});
  }

  const GammaModule& source() const { return source_; }
  const GammaModule& target() const { return target_; }
  const AbHom& hom() const { return hom_; }
  const IntMatrix& matrix() const { return hom_.matrix(); }
  bool isZero() const { return hom_.isZero(); }

 private:
  GammaModule source_;
  GammaModule target_;
  AbHom hom_;
};

inline GammaHom compose(const GammaHom& g, const GammaHom& f) {
  return GammaHom(f.source(), g.target(), compose(g.hom(), f.hom()), GammaHom::Trusted{});
}
inline GammaHom operator+(const GammaHom& f, const GammaHom& g) {
  return GammaHom(f.source(), f.target(), f.hom() + g.hom(), GammaHom::Trusted{});
}
inline GammaHom operator-(const GammaHom& f) {
  return GammaHom(f.source(), f.target(), -f.hom(), GammaHom::Trusted{});
}
inline GammaHom operator-(const GammaHom& f, const GammaHom& g) { return f + (-g); }
inline bool equalHoms(const GammaHom& f, const GammaHom& g) { return equalHoms(f.hom(), g.hom()); }

/// The module structure on a Γ-stable subgroup.
inline GammaModule restrictToSubgroup(const GammaModule& m, const Subgroup& sub) {
  std::vector<IntMatrix> act;
  const IntMatrix& basis = sub.lattice.basis();
  for (std::size_t g = 0; g < m.gamma().order(); ++g) {
    IntMatrix a(basis.rows(), basis.rows());
    for (std::size_t j = 0; j < basis.rows(); ++j) {
      auto c = sub.coordinatesOf(m.action(g).apply(basis.rowVector(j)));
      if (!c) throw InvalidAction("subgroup is not stable under element " + std::to_string(g));
      for (std::size_t i = 0; i < basis.rows(); ++i) a(i, j) = (*c)[i];
    }
    act.push_back(std::move(a));
  }
  return GammaModule(m.gamma(), sub.group, std::move(act), GammaModule::Trusted{});
}

/// Same matrices acting on a quotient presentation of the same ambient.
inline GammaModule onQuotient(const GammaModule& m, const FgAbelianGroup& q) {
  return GammaModule(m.gamma(), q, m.actions());
}

struct SubmoduleResult {
  GammaModule module;
  GammaHom inclusion;
};

struct QuotientModuleResult {
  GammaModule module;
  GammaHom projection;
};

inline SubmoduleResult equivariantKernel(const GammaHom& f) {
  Subgroup k = kernel(f.hom());
  GammaModule km = restrictToSubgroup(f.source(), k);
  return {km, GammaHom(km, f.source(), k.inclusion, GammaHom::Trusted{})};
}

inline QuotientModuleResult equivariantCokernel(const GammaHom& f) {
  Quotient c = cokernel(f.hom());
  GammaModule cm(f.target().gamma(), c.group, f.target().actions(), GammaModule::Trusted{});
  return {cm, GammaHom(f.target(), cm, c.projection, GammaHom::Trusted{})};
}

inline SubmoduleResult equivariantImage(const GammaHom& f) {
  Image im = image(f.hom());
  GammaModule m = restrictToSubgroup(f.target(), im.subgroup);
  return {m, GammaHom(m, f.target(), im.subgroup.inclusion, GammaHom::Trusted{})};
}

struct ModuleDirectSum {
  GammaModule module;
  std::vector<GammaHom> injections;
  std::vector<GammaHom> projections;
};

inline ModuleDirectSum directSum(const std::vector<GammaModule>& parts) {
  if (parts.empty()) return {GammaModule(), {}, {}};
  const FiniteGroup& gamma = parts.front().gamma();
  std::vector<FgAbelianGroup> groups;
  for (const auto& p : parts) {
    if (!(p.gamma() == gamma)) throw InvalidAction("direct sum of modules over different groups");
    groups.push_back(p.group());
  }
  DirectSum s = directSum(groups);
  std::vector<IntMatrix> act;
  for (std::size_t g = 0; g < gamma.order(); ++g) {
    std::vector<IntMatrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.action(g));
    act.push_back(blockDiagonal(blocks));
  }
  ModuleDirectSum out{GammaModule(gamma, s.group, std::move(act), GammaModule::Trusted{}), {}, {}};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    out.injections.emplace_back(parts[k], out.module, s.injections[k], GammaHom::Trusted{});
    out.projections.emplace_back(out.module, parts[k], s.projections[k], GammaHom::Trusted{});
  }
  return out;
}

/// Z[Γ]^k; basis vector (c, h) sits at index c*|Γ| + h and g sends it to (c, gh).
inline GammaModule inducedModule(const FiniteGroup& gamma, std::size_t k) {
  const std::size_t n = gamma.order();
  std::vector<IntMatrix> act;
  for (std::size_t g = 0; g < n; ++g) {
    IntMatrix a(n * k, n * k);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t h = 0; h < n; ++h) a(c * n + gamma.multiply(g, h), c * n + h) = 1;
    act.push_back(std::move(a));
  }
  return GammaModule(gamma, FgAbelianGroup(n * k), std::move(act), GammaModule::Trusted{});
}

/// An isomorphic module on the Smith presentation of the underlying group.
struct SimplifiedModule {
  GammaModule module;
  GammaHom to;
  GammaHom from;
};

inline SimplifiedModule simplify(const GammaModule& m) {
  SmithPresentation sp = smithPresentation(m.group());
  std::vector<IntMatrix> act;
  for (std::size_t g = 0; g < m.gamma().order(); ++g)
    act.push_back(sp.to.matrix() * m.action(g) * sp.from.matrix());
  GammaModule s(m.gamma(), sp.group, std::move(act), GammaModule::Trusted{});
  return {s, GammaHom(m, s, sp.to, GammaHom::Trusted{}), GammaHom(s, m, sp.from, GammaHom::Trusted{})};
}

/// {m : g m = m for all g} as a subgroup of the underlying group.
inline Subgroup fixedPoints(const GammaModule& m) {
  const std::size_t n = m.ambientRank(), order = m.gamma().order();
  std::vector<FgAbelianGroup> copies(order, m.group());
  FgAbelianGroup big = directSum(copies).group;
  IntMatrix stacked(n * order, n);
  for (std::size_t g = 0; g < order; ++g) stacked.setBlock(g * n, 0, m.action(g) - IntMatrix::identity(n));
  return kernel(AbHom(m.group(), big, std::move(stacked), AbHom::Trusted{}));
}

/// Differential Map(Γ^i, M) -> Map(Γ^{i+1}, M) of the inhomogeneous bar
/// complex. A cochain is a block vector indexed by tuples (g1..gi) written
/// in base |Γ| with g1 most significant.
inline AbHom barDifferential(const GammaModule& m, std::size_t i) {
  const std::size_t n = m.ambientRank(), order = m.gamma().order();
  std::size_t srcTuples = 1;
  for (std::size_t k = 0; k < i; ++k) srcTuples *= order;
  const std::size_t dstTuples = srcTuples * order;

  std::vector<FgAbelianGroup> srcParts(srcTuples, m.group()), dstParts(dstTuples, m.group());
  FgAbelianGroup src = directSum(srcParts).group, dst = directSum(dstParts).group;
  IntMatrix d(dstTuples * n, srcTuples * n);
  auto addBlock = [&](std::size_t row, std::size_t col, const IntMatrix* a, int sign) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (a) {
          if ((*a)(r, c) != 0) d(row * n + r, col * n + c) += sign * (*a)(r, c);
        } else if (r == c) {
          d(row * n + r, col * n + c) += sign;
        }
      }
  };
  std::vector<std::size_t> g(i + 1);
  for (std::size_t t = 0; t < dstTuples; ++t) {
    std::size_t x = t;
    for (std::size_t k = i + 1; k-- > 0;) {
      g[k] = x % order;
      x /= order;
    }
    auto encode = [&](const std::vector<std::size_t>& v) {
      std::size_t e = 0;
      for (std::size_t y : v) e = e * order + y;
      return e;
    };
    // g1 . f(g2, ..., g_{i+1})
    addBlock(t, encode(std::vector<std::size_t>(g.begin() + 1, g.end())), &m.action(g[0]), 1);
    for (std::size_t j = 1; j <= i; ++j) {
      std::vector<std::size_t> merged;
      for (std::size_t k = 0; k <= i; ++k) {
        if (k == j - 1) {
          merged.push_back(m.gamma().multiply(g[k], g[k + 1]));
          ++k;
        } else {
          merged.push_back(g[k]);
        }
      }
      addBlock(t, encode(merged), nullptr, j % 2 ? -1 : 1);
    }
    addBlock(t, encode(std::vector<std::size_t>(g.begin(), g.end() - 1)), nullptr, (i + 1) % 2 ? -1 : 1);
  }
  return AbHom(src, dst, std::move(d), AbHom::Trusted{});
}

/// H^i(Γ, M) for i in {0, 1, 2}.
inline FgAbelianGroup groupCohomology(const GammaModule& m, std::size_t i) {
  if (i > 2) throw DegreeOutOfRange("group cohomology is only available in degrees 0, 1, 2");
  AbHom out = barDifferential(m, i);
  AbHom in = i == 0 ? AbHom::zero(FgAbelianGroup(), out.source()) : barDifferential(m, i - 1);
  return subquotient(in, out).group;
}

/// Isomorphism-invariant data used when no explicit comparison map exists.
struct ModuleEvidence {
  FgAbelianGroup plain;
  FgAbelianGroup fixed;
  FgAbelianGroup h1;
  FgAbelianGroup h2;

  friend bool operator==(const ModuleEvidence& a, const ModuleEvidence& b) {
    return isomorphic(a.plain, b.plain) && isomorphic(a.fixed, b.fixed) && isomorphic(a.h1, b.h1) &&
           isomorphic(a.h2, b.h2);
  }
};

inline ModuleEvidence evidence(const GammaModule& m) {
  GammaModule s = simplify(m).module;
  return {s.group(), fixedPoints(s).group, groupCohomology(s, 1), groupCohomology(s, 2)};
}

}  // namespace redinv
