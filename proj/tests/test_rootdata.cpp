#include "oracles.hpp"
#include "redinv/catalog.hpp"

#include <catch_amalgamated.hpp>

using namespace redinv;

namespace {

bool hasInvariants(const FgAbelianGroup& g, std::size_t rank, IntVector torsion) {
  return g.freeRank() == rank && g.torsion() == torsion;
}

Integer finiteOrder(const FgAbelianGroup& g) {
  REQUIRE(g.isFinite());
  return *g.order();
}

// |det| of the Cartan matrix from the classification tables
long long expectedDet(const CartanType& t) {
  switch (t.letter) {
    case 'A': return static_cast<long long>(t.rank) + 1;
    case 'B':
    case 'C': return 2;
    case 'D': return 4;
    case 'E': return t.rank == 6 ? 3 : (t.rank == 7 ? 2 : 1);
    default: return 1;
  }
}

}  // namespace

TEST_CASE("Cartan matrices") {
  CHECK(cartanMatrix({'A', 2}) == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(cartanMatrix({'B', 2}) == IntMatrix{{2, -2}, {-1, 2}});
  CHECK(cartanMatrix({'C', 2}) == IntMatrix{{2, -1}, {-2, 2}});
  CHECK(cartanMatrix({'G', 2}) == IntMatrix{{2, -1}, {-3, 2}});
  CHECK_THROWS_AS(cartanMatrix({'E', 5}), InvalidDatum);
  CHECK_THROWS_AS(cartanMatrix({'F', 3}), InvalidDatum);
  for (const auto& t : irreducibleTypes(8)) {
    INFO(t.str());
    IntMatrix a = cartanMatrix(t);
    CHECK(abs(oracle::leibniz(a)) == expectedDet(t));
  }
}

TEST_CASE("validation") {
  CHECK(validate(parseGroupSpec("SL(3)")).valid());
  RootDatum bad(1, IntMatrix{{3}}, IntMatrix{{1}});
  auto rep = validate(ReductiveDatum("bad", bad));
  CHECK_FALSE(rep.valid());
  REQUIRE(rep.firstFailure());
  CHECK(rep.firstFailure()->name == "pairing-two");

  // affine A1: a generalized Cartan matrix that is not of finite type
  RootDatum affine(2, IntMatrix{{2, -2}, {-2, 2}}, IntMatrix::identity(2));
  rep = validate(ReductiveDatum("affine", affine));
  CHECK_FALSE(rep.valid());
  CHECK(rep.firstFailure()->name == "cartan-finite-type");

  RootDatum positive(2, IntMatrix{{2, 1}, {1, 2}}, IntMatrix::identity(2));
  CHECK(validate(ReductiveDatum("p", positive)).firstFailure()->name == "cartan-off-diagonal");
  RootDatum pattern(2, IntMatrix{{2, -1}, {0, 2}}, IntMatrix::identity(2));
  CHECK(validate(ReductiveDatum("q", pattern)).firstFailure()->name == "cartan-zero-pattern");

  // outer automorphism of A2 on the simply connected lattice
  auto twisted = parseGroupSpec("SL(3)xC2:outer");
  CHECK(twisted.gamma().order() == 2);
  CHECK(twisted.characters.action(1) == IntMatrix{{0, 1}, {1, 0}});
  auto sigma = rootPermutation(twisted, 1);
  REQUIRE(sigma);
  CHECK(*sigma == std::vector<std::size_t>{1, 0});

  // an action that does not permute the roots
  ReductiveDatum wrong("wrong", simplyConnectedDatum({'A', 2}),
                       GammaModule(FiniteGroup::cyclic(2), FgAbelianGroup(2), {IntMatrix::identity(2), -IntMatrix::identity(2)}));
  CHECK(validate(wrong).firstFailure()->name == "gamma-based-automorphisms");
  CHECK_THROWS_AS(pairingMap(wrong), InvalidDatum);
}

TEST_CASE("pairing map") {
  CHECK(pairingMap(parseGroupSpec("T(3)")).target().group().ambientRank() == 0);
  CHECK(pairingMap(parseGroupSpec("GL(2)")).matrix() == IntMatrix{{1, -1}});
  CHECK(pairingMap(parseGroupSpec("PGL(2)")).matrix() == IntMatrix{{2}});
}

TEST_CASE("character group") {
  CHECK(characterGroup(parseGroupSpec("SL(2)")).module.group().isTrivial());
  auto gl2 = characterGroup(parseGroupSpec("GL(2)"));
  CHECK(hasInvariants(gl2.module.group(), 1, {}));
  CHECK(gl2.inclusion.matrix() == IntMatrix{{1}, {1}});
  CHECK(hasInvariants(characterGroup(parseGroupSpec("T(3)")).module.group(), 3, {}));
}

TEST_CASE("mu dual") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(muDual(parseGroupSpec("SL(" + std::to_string(n) + ")")).module.group().isTrivial());
    auto pgl = muDual(parseGroupSpec("PGL(" + std::to_string(n) + ")")).module.group();
    if (n == 1)
      CHECK(pgl.isTrivial());
    else
      CHECK(hasInvariants(pgl, 0, {static_cast<long long>(n)}));
  }
  CHECK(hasInvariants(muDual(parseGroupSpec("SO(5)")).module.group(), 0, {2}));
  CHECK(muDual(parseGroupSpec("Sp(4)")).module.group().isTrivial());
  CHECK(hasInvariants(muDual(parseGroupSpec("SO(8)")).module.group(), 0, {2}));
  CHECK(hasInvariants(muDual(parseGroupSpec("PSO(8)")).module.group(), 0, {2, 2}));
  CHECK(hasInvariants(muDual(parseGroupSpec("GL(3)")).module.group(), 0, {}));
}

TEST_CASE("fundamental group and radical") {
  CHECK(pi1(parseGroupSpec("SL(4)")).group().isTrivial());
  CHECK(hasInvariants(pi1(parseGroupSpec("PGL(2)")).group(), 0, {2}));
  for (std::size_t n = 1; n <= 5; ++n) {
    auto gl = parseGroupSpec("GL(" + std::to_string(n) + ")");
    CHECK(hasInvariants(pi1(gl).group(), 1, {}));
    CHECK(hasInvariants(radicalCharacters(gl).module.group(), 1, {}));
  }
  CHECK(hasInvariants(pi1(parseGroupSpec("SO(5)")).group(), 0, {2}));
  CHECK(hasInvariants(pi1(parseGroupSpec("SO(8)")).group(), 0, {2}));
  CHECK(radicalCharacters(parseGroupSpec("E7ad")).module.group().isTrivial());
  CHECK(hasInvariants(radicalCharacters(parseGroupSpec("T(2)")).module.group(), 2, {}));
  CHECK(hasInvariants(radicalCharacters(parseGroupSpec("SL(2)*T(1)")).module.group(), 1, {}));
}

TEST_CASE("adjoint and simply connected forms of every type up to rank 8") {
  for (const auto& t : irreducibleTypes(8)) {
    INFO(t.str());
    ReductiveDatum sc(t.str() + "sc", simplyConnectedDatum(t)), ad(t.str() + "ad", adjointDatum(t));
    REQUIRE(validate(sc).valid());
    REQUIRE(validate(ad).valid());
    FgAbelianGroup muAd = muDual(ad).module.group();
    CHECK(finiteOrder(muAd) == expectedDet(t));
    CHECK(muDual(sc).module.group().isTrivial());
    CHECK(finiteOrder(pi1(ad).group()) == finiteOrder(muAd));
    CHECK(pi1(sc).group().isTrivial());
    if (t.letter == 'D') CHECK(muAd.torsion() == (t.rank % 2 ? IntVector{4} : IntVector{2, 2}));
    if (t.rank <= 6) {
      // gcd-of-minors oracle on the Cartan matrix
      IntVector expect;
      for (const auto& d : oracle::invariantFactorsByMinors(cartanMatrix(t)))
        if (d > 1) expect.push_back(d);
      CHECK(muAd.torsion() == expect);
    }
  }
}

TEST_CASE("intermediate isogeny lattices") {
  oracle::Rng rng(17);
  for (const auto& t : irreducibleTypes(5)) {
    IntMatrix a = cartanMatrix(t);
    Integer det = abs(oracle::leibniz(a));
    for (int trial = 0; trial < 4; ++trial) {
      // Q plus a few random weights, reduced to a square basis
      IntMatrix gens = a;
      int extra = static_cast<int>(rng.below(3));
      for (int k = 0; k < extra; ++k) gens = vstack(gens, oracle::randomMatrix(rng, 1, t.rank, -3, 3));
      IntMatrix basis = Lattice::spannedBy(gens).basis();
      REQUIRE(basis.rows() == t.rank);
      ReductiveDatum d(t.str(), semisimpleDatum(a, basis));
      INFO(t.str() << " lattice " << basis);
      REQUIRE(validate(d).valid());
      CHECK(d.datum.cartan() == a);
      // mu* = P / X and pi_1 are dual finite groups; [P : X] [X : Q] = [P : Q]
      Integer mu = finiteOrder(muDual(d).module.group());
      CHECK(mu == finiteOrder(pi1(d).group()));
      CHECK(mu * abs(oracle::leibniz(d.datum.roots)) == det);
    }
  }
  CHECK_THROWS_AS(semisimpleDatum(IntMatrix{{2}}, IntMatrix{{4}}), InvalidDatum);
  // SO(8) as a lattice between Q and P: same invariants as the standard realization
  IntMatrix d4 = cartanMatrix({'D', 4});
  IntMatrix so8 = Lattice::spannedBy(vstack(d4, IntMatrix{{1, 0, 0, 0}})).basis();
  ReductiveDatum viaLattice("SO8", semisimpleDatum(d4, so8));
  CHECK(isomorphic(muDual(viaLattice).module.group(), muDual(parseGroupSpec("SO(8)")).module.group()));
  CHECK(isomorphic(pi1(viaLattice).group(), pi1(parseGroupSpec("SO(8)")).group()));
}

TEST_CASE("four-term sequence on the catalog") {
  for (const auto& spec : standardCatalogSpecs()) {
    INFO(spec);
    ReductiveDatum d = parseGroupSpec(spec);
    REQUIRE(validate(d).valid());
    GammaHom beta = pairingMap(d);
    auto x0 = characterGroup(d);
    auto mu = muDual(d);
    CHECK(isInjective(x0.inclusion.hom()));
    CHECK(isExactAt(x0.inclusion.hom(), beta.hom()));
    CHECK(isExactAt(beta.hom(), mu.projection.hom()));
    CHECK(isSurjective(mu.projection.hom()));
    // equivariance of beta, element by element
    GammaModule p = weightModule(d);
    for (std::size_t g = 0; g < d.gamma().order(); ++g)
      CHECK(beta.matrix() * d.characters.action(g) == p.action(g) * beta.matrix());
  }
}

TEST_CASE("twisted invariants") {
  // the outer form of PGL3 acts on mu* = Z/3 by -1
  auto mu = simplify(muDual(parseGroupSpec("PGL(3)xC2:outer")).module).module;
  REQUIRE(hasInvariants(mu.group(), 0, {3}));
  CHECK(mu.group().isZero({mu.action(1)(0, 0) + 1}));
  CHECK(fixedPoints(mu).group.isTrivial());
  // Spin(8) with triality: mu* = (Z/2)^2 with no nonzero fixed points
  auto spin = simplify(muDual(parseGroupSpec("PSO(8)xC3:triality")).module).module;
  CHECK(hasInvariants(spin.group(), 0, {2, 2}));
  CHECK(fixedPoints(spin).group.isTrivial());
  // unitary group: characters are Z with the sign action
  auto u3 = characterGroup(parseGroupSpec("GL(3)xC2:outer")).module;
  CHECK(hasInvariants(u3.group(), 1, {}));
  CHECK(u3.action(1) == IntMatrix{{-1}});
  // norm torus pieces
  auto rt = parseGroupSpec("T(2)xC2:swap");
  CHECK(rt.characters.action(1) == IntMatrix{{0, 1}, {1, 0}});
  CHECK(hasInvariants(groupCohomology(rt.characters, 1), 0, {}));
  auto sign = parseGroupSpec("T(1)xC2:sign");
  CHECK(hasInvariants(groupCohomology(sign.characters, 1), 0, {2}));
}

TEST_CASE("group specs") {
  CHECK(parseGroupSpec("SL(2)").datum == simplyConnectedDatum({'A', 1}));
  CHECK(validate(parseGroupSpec("GL(3)")).valid());
  CHECK(validate(parseGroupSpec("Sp(4)")).valid());
  CHECK(parseGroupSpec("Sp(4)").datum.cartan() == cartanMatrix({'C', 2}));
  CHECK(parseGroupSpec("SO(7)").datum.cartan() == cartanMatrix({'B', 3}));
  CHECK(parseGroupSpec("SO(10)").datum.cartan() == cartanMatrix({'D', 5}));
  CHECK(parseGroupSpec("Gm").rank() == 1);
  CHECK(parseGroupSpec("SL(2)*PGL(3)").rank() == 3);
  CHECK(parseGroupSpec("E8").rank() == 8);
  CHECK(parseGroupSpec("SL(4)xC4:outer").gamma().order() == 4);
  CHECK_THROWS_AS(parseGroupSpec("SL(2)xC2:outer"), InvalidDatum);
  CHECK_THROWS_AS(parseGroupSpec("SO(8)xC3:triality"), InvalidDatum);
  CHECK_THROWS_AS(parseGroupSpec("SL(3)xC3:outer"), InvalidDatum);
  CHECK_THROWS_AS(parseGroupSpec("Sp(3)"), InvalidDatum);
  CHECK_THROWS_AS(parseGroupSpec("A2"), InvalidDatum);
  CHECK_THROWS_AS(parseGroupSpec("Foo(2)"), InvalidDatum);
  CHECK_THROWS_AS(parseGroupSpec("SL(2"), InvalidDatum);
  CHECK_THROWS_AS(parseGroupSpec("SL(3)xC2:bogus"), InvalidDatum);
  CHECK_THROWS_AS(parseGroupSpec(""), InvalidDatum);
  for (const auto& spec : standardCatalogSpecs()) CHECK_NOTHROW(parseGroupSpec(spec));
}
