#pragma once

// Seeded generators of small well-defined inputs for property checks.

#include "redinv/abelian_group.hpp"
#include "redinv/complex.hpp"

#include <cstdint>
#include <map>
#include <random>

namespace redinv {

class RandomInputs {
 public:
  explicit RandomInputs(std::uint64_t seed) : eng_(seed) {}

  long long between(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(eng_); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(between(0, static_cast<long long>(n) - 1)); }

  IntMatrix matrix(std::size_t rows, std::size_t cols, long long bound) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = between(-bound, bound);
    return m;
  }

  /// Ambient rank in [1, maxRank], up to maxRank random relations.
  FgAbelianGroup group(std::size_t maxRank, long long bound) {
    std::size_t n = 1 + below(maxRank);
    return FgAbelianGroup(n, matrix(below(n + 1), n, bound));
  }

  /// Direct sum of cyclic groups with orders in [2, maxTorsion] and some Z's.
  FgAbelianGroup smallGroup(std::size_t maxRank, long long maxTorsion) {
    std::size_t n = 1 + below(maxRank);
    IntMatrix rel(0, n);
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < n; ++i) {
      if (between(0, 1) == 0) continue;
      IntVector r(n);
      r[i] = between(2, maxTorsion);
      rows.push_back(r);
    }
    return FgAbelianGroup(n, IntMatrix::fromRows(rows, n));
  }

  /// A random homomorphism s -> t. Built on the Smith presentation of s so
  /// every cyclic generator of order d lands in the d-torsion of t.
  AbHom hom(const FgAbelianGroup& s, const FgAbelianGroup& t, long long bound) {
    SmithPresentation sp = smithPresentation(s);
    const FgAbelianGroup& norm = sp.group;
    IntMatrix m = matrix(t.ambientRank(), norm.ambientRank(), bound);
    for (std::size_t j = 0; j < norm.torsion().size(); ++j) {
      const Integer& d = norm.torsion()[j];
      Lattice tors = kernelLattice(AbHom(t, t, d * IntMatrix::identity(t.ambientRank()), AbHom::Trusted{}));
      for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = 0;
      for (std::size_t k = 0; k < tors.rank(); ++k) {
        long long c = between(-2, 2);
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) += c * tors.basis()(k, i);
      }
    }
    return compose(AbHom(norm, t, std::move(m)), sp.to);
  }

  /// Free complex over the trivial group in degrees lo .. lo + length - 1
  /// with ranks <= maxRank; each differential is a random map that kills
  /// the image of the previous one.
  BoundedComplex freeComplex(int lo, std::size_t length, std::size_t maxRank, long long bound) {
    std::vector<std::size_t> ranks;
    for (std::size_t k = 0; k < length; ++k) ranks.push_back(below(maxRank + 1));
    return freeComplexWithRanks(lo, ranks, bound);
  }

  BoundedComplex freeComplexWithRanks(int lo, const std::vector<std::size_t>& ranks, long long bound) {
    std::vector<GammaModule> terms;
    for (std::size_t r : ranks) terms.emplace_back(FiniteGroup(), FgAbelianGroup(r));
    std::vector<GammaHom> diffs;
    IntMatrix prev;
    for (std::size_t k = 0; k + 1 < ranks.size(); ++k) {
      IntMatrix d;
      if (k == 0) {
        d = matrix(ranks[1], ranks[0], bound);
      } else {
        IntMatrix left = kernelBasis(prev.transpose());  // rows k with k * prev = 0
        d = matrix(ranks[k + 1], left.rows(), 2) * left;
      }
      diffs.emplace_back(terms[k], terms[k + 1], AbHom(terms[k].group(), terms[k + 1].group(), d, AbHom::Trusted{}),
                         GammaHom::Trusted{});
      prev = d;
    }
    return BoundedComplex(lo, std::move(terms), std::move(diffs));
  }

  /// A random chain map between free complexes over the trivial group,
  /// built degree by degree by solving f^{n+1} d_A = d_B f^n.
  ChainMap chainMap(const BoundedComplex& a, const BoundedComplex& b, long long bound) {
    std::map<int, GammaHom> comp;
    const int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
    IntMatrix f = matrix(b.term(lo).ambientRank(), a.term(lo).ambientRank(), bound);
    for (int n = lo;; ++n) {
      comp.emplace(n, GammaHom(a.term(n), b.term(n), AbHom(a.term(n).group(), b.term(n).group(), f, AbHom::Trusted{}),
                               GammaHom::Trusted{}));
      if (n == hi) break;
      const IntMatrix da = a.differential(n).matrix();
      IntMatrix rhs = b.differential(n).matrix() * f;
      const std::size_t rb = b.term(n + 1).ambientRank(), ra = a.term(n + 1).ambientRank(), r0 = da.cols();
      // unknown X (rb x ra) row-major; equations (X da)(i, j) = rhs(i, j)
      IntMatrix sys(rb * r0, rb * ra);
      IntVector y(rb * r0);
      for (std::size_t i = 0; i < rb; ++i)
        for (std::size_t j = 0; j < r0; ++j) {
          y[i * r0 + j] = rhs(i, j);
          for (std::size_t k = 0; k < ra; ++k) sys(i * r0 + j, i * ra + k) = da(k, j);
        }
      LinearSolution sol = solveLinear(sys, y);
      IntVector x(rb * ra);
      if (sol.solvable()) {
        x = *sol.particular;
      } else {
        // no extension exists: drop everything built so far and continue
        // from the zero map, which always extends
        comp.clear();
        sol = solveLinear(sys, IntVector(rb * r0));
      }
      for (std::size_t k = 0; k < sol.kernel.rows(); ++k) {
        long long c = between(-bound, bound);
        for (std::size_t t = 0; t < x.size(); ++t) x[t] += c * sol.kernel(k, t);
      }
      f = IntMatrix(rb, ra, x);
    }
    return ChainMap(a, b, std::move(comp));
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace redinv
