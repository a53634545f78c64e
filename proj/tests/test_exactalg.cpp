#include "oracles.hpp"
#include "redinv/normal_form.hpp"

#include <catch_amalgamated.hpp>

using namespace redinv;

namespace {

bool isRowHermite(const HermiteForm& h) {
  const IntMatrix& H = h.H;
  std::size_t r = h.rank();
  for (std::size_t i = r; i < H.rows(); ++i)
    if (!H.rowIsZero(i)) return false;
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t p = h.pivotColumns[i];
    if (i > 0 && p <= h.pivotColumns[i - 1]) return false;
    if (H(i, p) <= 0) return false;
    for (std::size_t j = 0; j < p; ++j)
      if (H(i, j) != 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (H(k, p) < 0 || H(k, p) >= H(i, p)) return false;
    for (std::size_t k = i + 1; k < H.rows(); ++k)
      if (H(k, p) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("hnf of small matrices") {
  auto id = IntMatrix::identity(3);
  auto h = hnf(id);
  CHECK(h.H == id);
  CHECK(h.U == id);

  IntMatrix swap{{0, 1}, {1, 0}};
  h = hnf(swap);
  CHECK(h.H == IntMatrix::identity(2));
  CHECK(h.U == swap);

  IntMatrix m{{2, 4}, {6, 8}};
  h = hnf(m);
  CHECK(h.H(0, 0) == 2);
  CHECK(h.U * m == h.H);
  CHECK(oracle::isUnimodular(h.U));
  CHECK(isRowHermite(h));
}

TEST_CASE("snf of small matrices") {
  CHECK(snf(IntMatrix::identity(2)).D == IntMatrix::identity(2));

  IntMatrix m{{2, 4}, {6, 8}};
  auto s = snf(m);
  CHECK(s.D == IntMatrix{{2, 0}, {0, 4}});
  CHECK(s.U * m * s.V == s.D);

  IntMatrix a2{{2, -1}, {-1, 2}};
  CHECK(snf(a2).D == IntMatrix{{1, 0}, {0, 3}});
  CHECK(oracle::invariantFactorsByMinors(a2) == IntVector{1, 3});
}

TEST_CASE("solveLinear") {
  auto s = solveLinear(IntMatrix{{2}}, {4});
  REQUIRE(s.solvable());
  CHECK(*s.particular == IntVector{2});
  CHECK(s.kernel.rows() == 0);

  CHECK_FALSE(solveLinear(IntMatrix{{2}}, {3}).solvable());

  s = solveLinear(IntMatrix{{1, 1}}, {0});
  REQUIRE(s.solvable());
  CHECK(*s.particular == IntVector{0, 0});
  REQUIRE(s.kernel.rows() == 1);
  CHECK(s.kernel == IntMatrix{{1, -1}});

  CHECK_THROWS_AS(solveLinear(IntMatrix{{1, 1}}, {1, 2}), DimensionMismatch);
}

TEST_CASE("solveLinear agrees with a small search") {
  oracle::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m = oracle::randomMatrix(rng, 2, 2, -3, 3);
    IntVector b{rng.between(-4, 4), rng.between(-4, 4)};
    bool found = false;
    // Any solution has a representative of bounded size only when M is
    // invertible over Q; restrict the search claim to that case.
    if (determinant(m) == 0) continue;
    for (long long x = -40; x <= 40 && !found; ++x)
      for (long long y = -40; y <= 40 && !found; ++y)
        found = m.apply({x, y}) == b;
    auto s = solveLinear(m, b);
    CHECK(s.solvable() == found);
    if (s.solvable()) CHECK(m.apply(*s.particular) == b);
  }
}

TEST_CASE("kernelBasis") {
  CHECK(kernelBasis(IntMatrix(2, 2)) == IntMatrix::identity(2));
  CHECK(kernelBasis(IntMatrix{{1, -1}}) == IntMatrix{{1, 1}});
  CHECK(kernelBasis(IntMatrix{{2}}).rows() == 0);
  // (2, 4) x = 0 -> generated by (2, -1), not (4, -2)
  CHECK(kernelBasis(IntMatrix{{2, 4}}) == IntMatrix{{2, -1}});
}

TEST_CASE("random normal forms") {
  oracle::Rng rng(20261016);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
    IntMatrix m = oracle::randomMatrix(rng, r, c, -10, 10);
    if (rng.below(4) == 0) m.setBlock(0, 0, IntMatrix(1, c));  // force some rank deficiency

    auto s = snf(m);
    REQUIRE(s.U * m * s.V == s.D);
    CHECK(oracle::isUnimodular(s.U));
    CHECK(oracle::isUnimodular(s.V));
    IntVector d = s.invariantFactors();
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(d[i] > 0);
      if (i + 1 < d.size()) CHECK(d[i + 1] % d[i] == 0);
    }
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j || i >= s.rank) CHECK(s.D(i, j) == 0);
    CHECK(d == oracle::invariantFactorsByMinors(m));

    auto h = hnf(m);
    CHECK(h.U * m == h.H);
    CHECK(oracle::isUnimodular(h.U));
    CHECK(isRowHermite(h));
    CHECK(hnf(h.H).H == h.H);
    CHECK(h.rank() == oracle::rationalRank(m));

    IntMatrix k = kernelBasis(m);
    CHECK(k.rows() + oracle::rationalRank(m) == c);
    CHECK(oracle::rationalRank(k) == k.rows());
    CHECK((m * k.transpose()).isZero());
  }
}

TEST_CASE("kernel is saturated") {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m = oracle::randomMatrix(rng, 2, 4, -4, 4);
    IntMatrix k = kernelBasis(m);
    Lattice l = Lattice::spannedBy(k);
    // every small integer vector in ker M lies in the returned lattice
    for (long long a = -2; a <= 2; ++a)
      for (long long b = -2; b <= 2; ++b)
        for (long long c = -2; c <= 2; ++c)
          for (long long e = -2; e <= 2; ++e) {
            IntVector v{a, b, c, e};
            if (isZeroVector(m.apply(v))) CHECK(l.contains(v));
          }
  }
}

TEST_CASE("Lattice reduce and coordinates") {
  Lattice l = Lattice::spannedBy(IntMatrix{{2, 0}, {0, 3}, {2, 3}});
  CHECK(l.rank() == 2);
  CHECK(l.reduce({5, 7}) == IntVector{1, 1});
  CHECK(l.reduce({-1, -1}) == IntVector{1, 2});
  CHECK(l.contains({4, -3}));
  CHECK_FALSE(l.contains({1, 0}));
  auto c = l.coordinates({4, -3});
  REQUIRE(c);
  CHECK(l.basis().transpose().apply(*c) == IntVector{4, -3});

  oracle::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix g = oracle::randomMatrix(rng, 3, 3, -5, 5);
    Lattice lat = Lattice::spannedBy(g);
    IntVector v{rng.between(-20, 20), rng.between(-20, 20), rng.between(-20, 20)};
    IntVector w = v;
    for (std::size_t i = 0; i < 3; ++i) {
      long long q = rng.between(-3, 3);
      for (std::size_t j = 0; j < 3; ++j) w[j] += q * g(i, j);
    }
    CHECK(lat.reduce(v) == lat.reduce(w));
  }
}

TEST_CASE("GeneratorSolver and saturation") {
  IntMatrix gens{{2, 0}, {0, 2}, {2, 2}};
  GeneratorSolver s(gens);
  auto x = s.solve({4, 6});
  REQUIRE(x);
  CHECK(gens.transpose().apply(*x) == IntVector{4, 6});
  CHECK_FALSE(s.solve({1, 0}));

  Lattice l = Lattice::spannedBy(IntMatrix{{2, 2, 0}});
  CHECK(saturation(l) == Lattice::spannedBy(IntMatrix{{1, 1, 0}}));
  CHECK(saturation(Lattice(3)).rank() == 0);
}

TEST_CASE("determinant against permutation expansion") {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng.below(5);
    IntMatrix m = oracle::randomMatrix(rng, n, n, -9, 9);
    CHECK(determinant(m) == oracle::leibniz(m));
  }
}
