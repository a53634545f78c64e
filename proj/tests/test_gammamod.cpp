#include "oracles.hpp"
#include "redinv/gamma_module.hpp"

#include <catch_amalgamated.hpp>

#include <functional>
#include <set>

using namespace redinv;

namespace {

bool hasInvariants(const FgAbelianGroup& g, std::size_t rank, IntVector torsion) {
  return g.freeRank() == rank && g.torsion() == torsion;
}

FgAbelianGroup Z(std::size_t n = 1) { return FgAbelianGroup(n); }

GammaModule signModule(const FiniteGroup& gamma, const std::vector<int>& chi, const FgAbelianGroup& base) {
  std::vector<IntMatrix> act;
  for (std::size_t g = 0; g < gamma.order(); ++g) act.push_back(Integer(chi[g]) * IntMatrix::identity(1));
  return GammaModule(gamma, base, act);
}

// all homomorphisms Γ -> {±1}, by brute force over sign assignments
std::vector<std::vector<int>> signCharacters(const FiniteGroup& gamma) {
  std::vector<std::vector<int>> out;
  const std::size_t n = gamma.order();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> chi(n);
    for (std::size_t g = 0; g < n; ++g) chi[g] = (mask >> g) & 1 ? -1 : 1;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) ok = chi[gamma.multiply(a, b)] == chi[a] * chi[b];
    if (ok) out.push_back(chi);
  }
  return out;
}

// a module of rank <= 3 assembled from one-dimensional pieces
GammaModule randomModule(oracle::Rng& rng, const FiniteGroup& gamma) {
  auto chars = signCharacters(gamma);
  std::vector<GammaModule> parts;
  std::size_t rank = 1 + rng.below(3);
  for (std::size_t k = 0; k < rank; ++k) {
    const auto& chi = chars[rng.below(chars.size())];
    FgAbelianGroup base = rng.coin() ? Z() : FgAbelianGroup::cyclic(rng.between(2, 6));
    parts.push_back(signModule(gamma, chi, base));
  }
  GammaModule m = directSum(parts).module;
  // conjugate by a unimodular change of basis to hide the splitting
  const std::size_t n = m.ambientRank();
  IntMatrix p = IntMatrix::identity(n), pinv = IntMatrix::identity(n);
  for (int k = 0; k < 3 && n > 1; ++k) {
    std::size_t a = rng.below(n), b = rng.below(n);
    if (a == b) continue;
    long long q = rng.between(-2, 2);
    p.addRowMultiple(a, b, q);
    pinv.addColumnMultiple(b, a, -q);
  }
  REQUIRE(p * pinv == IntMatrix::identity(n));
  // new coordinates y = p x, so a relation row r becomes r p^T
  FgAbelianGroup g(n, m.group().relations() * p.transpose());
  std::vector<IntMatrix> act;
  for (const auto& a : m.actions()) act.push_back(p * a * pinv);
  return GammaModule(gamma, g, act);
}

// |H^1| by enumerating crossed homomorphisms into a finite module
Integer h1OrderByEnumeration(const GammaModule& m) {
  // enumerate M = product of Z/t_i on the Smith presentation
  GammaModule s = simplify(m).module;
  const FgAbelianGroup& g = s.group();
  REQUIRE(g.isFinite());
  std::vector<IntVector> elements;
  std::function<void(std::size_t, IntVector&)> rec = [&](std::size_t i, IntVector& v) {
    if (i == g.ambientRank()) {
      elements.push_back(v);
      return;
    }
    long long t = static_cast<long long>(g.torsion()[i]);
    for (long long x = 0; x < t; ++x) {
      v[i] = x;
      rec(i + 1, v);
    }
  };
  IntVector v(g.ambientRank());
  rec(0, v);
  const std::size_t order = s.gamma().order();
  auto add = [&](IntVector a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return g.reduce(a);
  };
  std::size_t cocycles = 0;
  std::vector<std::size_t> idx(order, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t a = 0; a < order && ok; ++a)
      for (std::size_t b = 0; b < order && ok; ++b) {
        IntVector lhs = elements[idx[s.gamma().multiply(a, b)]];
        IntVector rhs = add(elements[idx[a]], s.action(a).apply(elements[idx[b]]));
        ok = lhs == rhs;
      }
    cocycles += ok;
    std::size_t k = 0;
    while (k < order && ++idx[k] == elements.size()) idx[k++] = 0;
    if (k == order) break;
  }
  std::set<std::vector<IntVector>> boundaries;
  for (const auto& x : elements) {
    std::vector<IntVector> c;
    for (std::size_t a = 0; a < order; ++a) {
      IntVector gx = s.action(a).apply(x);
      for (std::size_t i = 0; i < gx.size(); ++i) gx[i] -= x[i];
      c.push_back(g.reduce(gx));
    }
    boundaries.insert(c);
  }
  return Integer(cocycles) / Integer(boundaries.size());
}

Integer orderOf(const FgAbelianGroup& g) {
  REQUIRE(g.isFinite());
  return *g.order();
}

}  // namespace

TEST_CASE("finite groups") {
  auto groups = smallGroups(8);
  CHECK(groups.size() == 14);
  std::size_t total = 0;
  for (const auto& g : groups) {
    CHECK(FiniteGroup::validate(g.table()).empty());
    total += g.order();
    for (std::size_t a = 0; a < g.order(); ++a) CHECK(g.multiply(a, g.inverse(a)) == g.identity());
  }
  CHECK(total == 1 + 2 + 3 + 4 * 2 + 5 + 6 * 2 + 7 + 8 * 5);
  // D4 and Q8 are not abelian, the others of order 8 are
  auto abelian = [](const FiniteGroup& g) {
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t b = 0; b < g.order(); ++b)
        if (g.multiply(a, b) != g.multiply(b, a)) return false;
    return true;
  };
  CHECK_FALSE(abelian(FiniteGroup::dihedral(4)));
  CHECK_FALSE(abelian(FiniteGroup::quaternion()));
  CHECK(abelian(FiniteGroup::directProduct(FiniteGroup::cyclic(4), FiniteGroup::cyclic(2))));
  // Q8 has a single element of order 2, D4 has five
  auto involutions = [](const FiniteGroup& g) {
    int n = 0;
    for (std::size_t a = 0; a < g.order(); ++a) n += a != g.identity() && g.multiply(a, a) == g.identity();
    return n;
  };
  CHECK(involutions(FiniteGroup::quaternion()) == 1);
  CHECK(involutions(FiniteGroup::dihedral(4)) == 5);

  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {0, 1}}), InvalidAction);
  CHECK_FALSE(FiniteGroup::validate({{1, 0}, {0, 0}}).empty());
}

TEST_CASE("module validation") {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  CHECK_NOTHROW(GammaModule(c2, Z(), {IntMatrix{{1}}, IntMatrix{{-1}}}));
  CHECK_THROWS_AS(GammaModule(c2, Z(), {IntMatrix{{1}}, IntMatrix{{2}}}), InvalidAction);
  CHECK_THROWS_AS(GammaModule(c2, Z(), {IntMatrix{{-1}}, IntMatrix{{-1}}}), InvalidAction);
  // x -> 2x on Z/3 squares to the identity
  CHECK_NOTHROW(GammaModule(c2, FgAbelianGroup::cyclic(3), {IntMatrix{{1}}, IntMatrix{{2}}}));
  CHECK_THROWS_AS(GammaModule(c2, Z(2), {IntMatrix::identity(2)}), InvalidAction);

  auto m = GammaModule::fromGenerators(FiniteGroup::cyclic(3), Z(3), {{1, IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}});
  CHECK(m.action(2) == IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  CHECK_THROWS_AS(GammaModule::fromGenerators(FiniteGroup::cyclic(2), Z(), {{1, IntMatrix{{2}}}}), InvalidAction);
}

TEST_CASE("fixed points") {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  GammaModule triv(c2, FgAbelianGroup::fromInvariants(1, {4}));
  CHECK(isomorphic(fixedPoints(triv).group, triv.group()));

  GammaModule swap(c2, Z(2), {IntMatrix::identity(2), IntMatrix{{0, 1}, {1, 0}}});
  auto f = fixedPoints(swap);
  CHECK(hasInvariants(f.group, 1, {}));
  CHECK(f.inclusion.matrix() == IntMatrix{{1}, {1}});

  GammaModule sign(c2, Z(), {IntMatrix{{1}}, IntMatrix{{-1}}});
  CHECK(fixedPoints(sign).group.isTrivial());

  // on Z/4 with sign action the fixed points are {0, 2}
  GammaModule sign4(c2, FgAbelianGroup::cyclic(4), {IntMatrix{{1}}, IntMatrix{{-1}}});
  CHECK(hasInvariants(fixedPoints(sign4).group, 0, {2}));
}

TEST_CASE("induced modules") {
  CHECK(inducedModule(FiniteGroup::cyclic(3), 0).group().isTrivial());
  auto m = inducedModule(FiniteGroup(), 2);
  CHECK(m.group() == Z(2));
  CHECK(m.hasTrivialAction());
  auto r = inducedModule(FiniteGroup::cyclic(2), 1);
  CHECK(r.action(1) == IntMatrix{{0, 1}, {1, 0}});
  // it validates as a module
  for (const auto& g : smallGroups(6)) CHECK_NOTHROW(GammaModule(g, inducedModule(g, 1).group(), inducedModule(g, 1).actions()));
}

TEST_CASE("bar differentials square to zero") {
  oracle::Rng rng(17);
  for (const auto& g : smallGroups(4)) {
    for (int trial = 0; trial < 3; ++trial) {
      GammaModule m = randomModule(rng, g);
      for (std::size_t i = 0; i < 3; ++i) {
        AbHom d0 = barDifferential(m, i), d1 = barDifferential(m, i + 1);
        CHECK(compose(d1, d0).isZero());
      }
    }
  }
}

TEST_CASE("H^1 of trivial free modules vanishes") {
  for (const auto& g : smallGroups(8))
    for (std::size_t n = 1; n <= 3; ++n) {
      INFO(g.name() << " n=" << n);
      CHECK(groupCohomology(GammaModule(g, Z(n)), 1).isTrivial());
    }
}

TEST_CASE("small cohomology values") {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  GammaModule sign(c2, Z(), {IntMatrix{{1}}, IntMatrix{{-1}}});
  CHECK(hasInvariants(groupCohomology(sign, 1), 0, {2}));
  CHECK(groupCohomology(sign, 0).isTrivial());
  CHECK(groupCohomology(sign, 2).isTrivial());

  for (long long n = 1; n <= 6; ++n) {
    auto h2 = groupCohomology(GammaModule(FiniteGroup::cyclic(n), Z()), 2);
    CHECK(h2.freeRank() == 0);
    CHECK(orderOf(h2) == n);
    CHECK(h2.torsion().size() == (n > 1 ? 1u : 0u));
  }
  CHECK_THROWS_AS(groupCohomology(sign, 3), DegreeOutOfRange);
}

TEST_CASE("induced modules are acyclic") {
  for (const auto& g : smallGroups(6)) {
    INFO(g.name());
    GammaModule m = inducedModule(g, 1);
    CHECK(groupCohomology(m, 1).isTrivial());
    CHECK(groupCohomology(m, 2).isTrivial());
    CHECK(hasInvariants(groupCohomology(m, 0), 1, {}));
  }
}

TEST_CASE("cyclic groups against the periodic formulas") {
  oracle::Rng rng(23);
  for (std::size_t n = 2; n <= 6; ++n) {
    FiniteGroup c = FiniteGroup::cyclic(n);
    for (int trial = 0; trial < 4; ++trial) {
      GammaModule m = randomModule(rng, c);
      const std::size_t r = m.ambientRank();
      IntMatrix sigma = m.action(1);
      IntMatrix norm(r, r);
      for (std::size_t g = 0; g < n; ++g) norm = norm + m.action(g);
      IntMatrix sm1 = sigma - IntMatrix::identity(r);
      AbHom N(m.group(), m.group(), norm), D(m.group(), m.group(), sm1);
      // H^1 = ker N / (sigma - 1) M ; H^2 = ker(sigma - 1) / N M
      auto h1 = subquotient(D, N).group;
      auto h2 = subquotient(N, D).group;
      CHECK(isomorphic(groupCohomology(m, 1), h1));
      CHECK(isomorphic(groupCohomology(m, 2), h2));
    }
  }
}

TEST_CASE("H^0 equals fixed points, H^1 by enumeration") {
  oracle::Rng rng(31);
  for (const auto& g : smallGroups(6)) {
    for (int trial = 0; trial < 3; ++trial) {
      GammaModule m = randomModule(rng, g);
      CHECK(isomorphic(groupCohomology(m, 0), fixedPoints(m).group));
    }
  }
  for (const auto& g : smallGroups(4)) {
    for (int trial = 0; trial < 3; ++trial) {
      // finite modules only: Z/m pieces with sign actions
      auto chars = signCharacters(g);
      std::vector<GammaModule> parts;
      for (int k = 0; k < 2; ++k)
        parts.push_back(signModule(g, chars[rng.below(chars.size())], FgAbelianGroup::cyclic(rng.between(2, 4))));
      GammaModule m = directSum(parts).module;
      auto h1 = groupCohomology(m, 1);
      CHECK(orderOf(h1) == h1OrderByEnumeration(m));
    }
  }
}

TEST_CASE("equivariant kernel and cokernel") {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  GammaModule swap(c2, Z(2), {IntMatrix::identity(2), IntMatrix{{0, 1}, {1, 0}}});
  GammaModule triv(c2, Z());
  GammaHom sum(swap, triv, IntMatrix{{1, 1}});
  auto k = equivariantKernel(sum);
  CHECK(hasInvariants(k.module.group(), 1, {}));
  CHECK(k.module.action(1) == IntMatrix{{-1}});
  auto q = equivariantCokernel(sum);
  CHECK(q.module.group().isTrivial());

  // the norm map Z -> Z[C2] (trivial -> regular) has cokernel Z with sign action
  GammaHom nm(triv, swap, IntMatrix{{1}, {1}});
  auto c = equivariantCokernel(nm);
  CHECK(hasInvariants(c.module.group(), 1, {}));
  auto cs = simplify(c.module).module;
  CHECK(cs.action(1) == IntMatrix{{-1}});

  CHECK_THROWS_AS(GammaHom(swap, triv, IntMatrix{{1, 0}}), InvalidAction);

  oracle::Rng rng(5);
  for (const auto& g : smallGroups(4)) {
    GammaModule a = randomModule(rng, g);
    GammaHom mult(a, a, AbHom(a.group(), a.group(), Integer(2) * IntMatrix::identity(a.ambientRank())));
    auto kk = equivariantKernel(mult);
    auto cc = equivariantCokernel(mult);
    CHECK(isomorphic(kk.module.group(), kernel(mult.hom()).group));
    CHECK(isomorphic(cc.module.group(), cokernel(mult.hom()).group));
    CHECK_NOTHROW(GammaModule(g, kk.module.group(), kk.module.actions()));
    CHECK_NOTHROW(GammaModule(g, cc.module.group(), cc.module.actions()));
  }
}
