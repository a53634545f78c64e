#pragma once

// The cochain complex C^i = F(X) + F(G)^i attached to a map phi: F(X) -> F(G),
// with the closed-form differentials, the coface description they come from,
// and the contracting homotopy that kills cohomology in degrees >= 2.

#include "redinv/complex.hpp"

#include <string>
#include <utility>
#include <vector>

namespace redinv {

struct CechInput {
  FgAbelianGroup FX;
  FgAbelianGroup FG;
  AbHom phi;  ///< FX -> FG

  CechInput(FgAbelianGroup fx, FgAbelianGroup fg, const IntMatrix& m)
      : FX(std::move(fx)), FG(std::move(fg)), phi(FX, FG, m) {}
  explicit CechInput(AbHom f) : FX(f.source()), FG(f.target()), phi(std::move(f)) {}
};

inline constexpr int kMaxCechDegree = 8;

enum class CechRoute { ClosedForm, Cofaces };

struct CechComplex {
  CechInput input;
  int maxDegree = 0;
  std::vector<FgAbelianGroup> cochains;  ///< C^0 .. C^maxDegree
  std::vector<AbHom> differentials;      ///< delta^0 .. delta^{maxDegree-1}

  BoundedComplex complex() const {
    std::vector<GammaModule> terms;
    for (const auto& c : cochains) terms.emplace_back(FiniteGroup(), c);
    std::vector<GammaHom> diffs;
    for (std::size_t i = 0; i < differentials.size(); ++i)
      diffs.emplace_back(terms[i], terms[i + 1], differentials[i], GammaHom::Trusted{});
    return BoundedComplex(0, std::move(terms), std::move(diffs));
  }
};

namespace detail {

// Block (k, l) of a map between FX + FG^i and FX + FG^j; block 0 is FX.
struct BlockMatrix {
  std::size_t nx, ng;
  IntMatrix m;
  BlockMatrix(std::size_t nx_, std::size_t ng_, std::size_t rowsBlocks, std::size_t colBlocks)
      : nx(nx_), ng(ng_), m(nx_ + ng_ * rowsBlocks, nx_ + ng_ * colBlocks) {}
  std::size_t off(std::size_t block) const { return block == 0 ? 0 : nx + ng * (block - 1); }
  void add(std::size_t row, std::size_t col, const IntMatrix& b, const Integer& sign) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(off(row) + i, off(col) + j) += sign * b(i, j);
  }
};

inline FgAbelianGroup cochainGroup(const CechInput& in, std::size_t i) {
  std::vector<FgAbelianGroup> parts{in.FX};
  for (std::size_t k = 0; k < i; ++k) parts.push_back(in.FG);
  return directSum(parts).group;
}

/// delta^i from the closed formulas; coordinates (a, b_1, ..., b_i).
inline IntMatrix closedDifferential(const CechInput& in, std::size_t i) {
  const std::size_t nx = in.FX.ambientRank(), ng = in.FG.ambientRank();
  const IntMatrix ix = IntMatrix::identity(nx), ig = IntMatrix::identity(ng), phi = in.phi.matrix();
  BlockMatrix d(nx, ng, i + 1, i);
  if (i == 0) {
    d.add(1, 0, phi, 1);
  } else if (i % 2 == 1) {
    // (a, phi(a), b_2, b_2, ..., b_{i-1}, b_{i-1}, 0)
    d.add(0, 0, ix, 1);
    d.add(1, 0, phi, 1);
    for (std::size_t k = 2; k + 1 <= i; k += 2) {
      d.add(k, k, ig, 1);
      d.add(k + 1, k, ig, 1);
    }
  } else {
    // (0, phi(a) - b_1, 0, b_2 - b_3, 0, ..., b_{i-2} - b_{i-1}, 0, b_i)
    d.add(1, 0, phi, 1);
    d.add(1, 1, ig, -1);
    for (std::size_t k = 3; k + 1 <= i; k += 2) {
      d.add(k, k - 1, ig, 1);
      d.add(k, k, ig, -1);
    }
    d.add(i + 1, i, ig, 1);
  }
  return std::move(d.m);
}

/// The j-th coface delta_j^{i+1}: (a, b) -> (a, c_1, ..., c_{i+1}).
inline IntMatrix coface(const CechInput& in, std::size_t i, std::size_t j) {
  const std::size_t nx = in.FX.ambientRank(), ng = in.FG.ambientRank();
  BlockMatrix d(nx, ng, i + 1, i);
  d.add(0, 0, IntMatrix::identity(nx), 1);
  const IntMatrix ig = IntMatrix::identity(ng);
  for (std::size_t k = 1; k <= i + 1; ++k) {
    if (k == 1 && j == 0)
      d.add(k, 0, in.phi.matrix(), 1);
    else if ((i == 0 && j == 1) || (k == j && j == i + 1 && k >= 2))
      continue;
    else if (k >= 2 && j <= k - 1)
      d.add(k, k - 1, ig, 1);
    else if (k <= i && j >= k)
      d.add(k, k, ig, 1);
  }
  return std::move(d.m);
}

inline IntMatrix cofaceDifferential(const CechInput& in, std::size_t i) {
  IntMatrix total = coface(in, i, 0);
  for (std::size_t j = 1; j <= i + 1; ++j) {
    IntMatrix c = coface(in, i, j);
    total = j % 2 ? total - c : total + c;
  }
  return total;
}

}  // namespace detail

inline CechComplex buildComplex(const CechInput& in, int maxDegree, CechRoute route = CechRoute::ClosedForm) {
  if (maxDegree < 1 || maxDegree > kMaxCechDegree)
    throw DegreeOutOfRange("maxDegree must lie in 1.." + std::to_string(kMaxCechDegree) + ", got " +
                           std::to_string(maxDegree));
  CechComplex c{in, maxDegree, {}, {}};
  for (int i = 0; i <= maxDegree; ++i) c.cochains.push_back(detail::cochainGroup(in, static_cast<std::size_t>(i)));
  for (int i = 0; i < maxDegree; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    IntMatrix m = route == CechRoute::ClosedForm ? detail::closedDifferential(in, k) : detail::cofaceDifferential(in, k);
    c.differentials.emplace_back(c.cochains[k], c.cochains[k + 1], std::move(m), AbHom::Trusted{});
  }
  return c;
}

/// lambda_i(a, b_1, ..., b_i) = (a, -b_1, b_3, ..., b_i), i >= 2.
inline AbHom homotopy(const CechComplex& c, int i) {
  if (i < 2 || i > c.maxDegree) throw DegreeOutOfRange("lambda_" + std::to_string(i) + " is not defined here");
  const std::size_t k = static_cast<std::size_t>(i);
  const std::size_t nx = c.input.FX.ambientRank(), ng = c.input.FG.ambientRank();
  detail::BlockMatrix l(nx, ng, k - 1, k);
  l.add(0, 0, IntMatrix::identity(nx), 1);
  l.add(1, 1, IntMatrix::identity(ng), -1);
  for (std::size_t t = 3; t <= k; ++t) l.add(t - 1, t, IntMatrix::identity(ng), 1);
  return AbHom(c.cochains[k], c.cochains[k - 1], std::move(l.m), AbHom::Trusted{});
}

struct CechCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct ContractionReport {
  std::vector<CechCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

/// delta^{i+1} delta^i = 0 everywhere, and delta^{i-1} lambda_i + lambda_{i+1} delta^i = 1
/// for 2 <= i <= maxDegree - 1.
inline ContractionReport contractionCheck(const CechComplex& c) {
  if (c.maxDegree < 3) throw DegreeOutOfRange("contractionCheck needs maxDegree >= 3");
  ContractionReport rep;
  for (int i = 0; i + 1 < c.maxDegree; ++i) {
    const auto k = static_cast<std::size_t>(i);
    bool ok = compose(c.differentials[k + 1], c.differentials[k]).isZero();
    rep.checks.push_back({"d^" + std::to_string(i + 1) + " d^" + std::to_string(i) + " = 0", ok, ok ? "" : "nonzero composite"});
  }
  for (int i = 2; i < c.maxDegree; ++i) {
    const auto k = static_cast<std::size_t>(i);
    AbHom h = compose(c.differentials[k - 1], homotopy(c, i)) + compose(homotopy(c, i + 1), c.differentials[k]);
    std::string witness;
    const AbHom id = AbHom::identity(c.cochains[k]);
    for (std::size_t j = 0; j < h.matrix().cols() && witness.empty(); ++j)
      if (!c.cochains[k].equalElements(h.matrix().columnVector(j), id.matrix().columnVector(j)))
        witness = "fails on generator " + std::to_string(j);
    rep.checks.push_back({"homotopy identity in degree " + std::to_string(i), witness.empty(), witness});
  }
  return rep;
}

/// H^0 is ker delta^0 itself; higher degrees go through the complex.
inline FgAbelianGroup cechCohomology(const CechComplex& c, int i) {
  if (i < 0 || i > c.maxDegree - 1)
    throw DegreeOutOfRange("Cech cohomology in degree " + std::to_string(i) + " needs maxDegree > " + std::to_string(i));
  if (i == 0) return kernel(c.differentials[0]).group;
  return cohomology(c.complex(), i).module.group();
}

/// 0 -> H^0 -> F(X) --phi--> F(G) -> H^1 -> 0, the last map b -> [(0, b)].
inline LongSequence cechFourTerm(const CechComplex& c) {
  if (c.maxDegree < 2) throw DegreeOutOfRange("the four-term sequence needs maxDegree >= 2");
  const CechInput& in = c.input;
  Subgroup h0 = kernel(c.differentials[0]);
  Subquotient h1 = subquotient(c.differentials[0], c.differentials[1]);
  const std::size_t nx = in.FX.ambientRank(), ng = in.FG.ambientRank();
  IntMatrix toH1(h1.group.ambientRank(), ng);
  for (std::size_t j = 0; j < ng; ++j) {
    IntVector v(nx + ng);
    v[nx + j] = 1;
    auto cls = h1.classOf(v);
    if (!cls) throw Error("internal: (0, b) is not a cocycle");
    for (std::size_t i = 0; i < toH1.rows(); ++i) toH1(i, j) = (*cls)[i];
  }
  FiniteGroup one;
  auto mod = [&](const FgAbelianGroup& g) { return GammaModule(one, g); };
  LongSequence s;
  s.labels = {"H^0", "F(X)", "F(G)", "H^1"};
  s.terms = {mod(h0.group), mod(in.FX), mod(in.FG), mod(h1.group)};
  // ker delta^0 sits in FX + FG^0 = FX
  s.maps = {GammaHom(s.terms[0], s.terms[1], h0.inclusion, GammaHom::Trusted{}),
            GammaHom(s.terms[1], s.terms[2], in.phi, GammaHom::Trusted{}),
            GammaHom(s.terms[2], s.terms[3], AbHom(in.FG, h1.group, std::move(toH1)), GammaHom::Trusted{})};
  s.mapLabels = {"inc", "phi", "b -> [(0,b)]"};
  computeExactness(s);
  return s;
}

}  // namespace redinv
