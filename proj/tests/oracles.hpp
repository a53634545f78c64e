#pragma once

// Small independent oracles and generators shared by the test binaries.
// Nothing here calls into the normal-form code.

#include "redinv/integer.hpp"
#include "redinv/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using redinv::IntMatrix;
using redinv::Integer;
using redinv::IntVector;

struct Rng {
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  long long between(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(eng); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(between(0, static_cast<long long>(n) - 1)); }
  bool coin() { return between(0, 1) == 1; }
  std::mt19937_64 eng;
};

inline IntMatrix randomMatrix(Rng& rng, std::size_t r, std::size_t c, long long lo, long long hi) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.between(lo, hi);
  return m;
}

/// Permutation expansion; fine for n <= 6.
inline Integer leibniz(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    Integer t = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && t != 0; ++i) t *= m(i, p[i]);
    total += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Fraction-free elimination; exact division at every step.
inline Integer bareiss(IntMatrix a) {
  const std::size_t n = a.rows();
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swapRows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return n == 0 ? Integer(1) : sign * a(n - 1, n - 1);
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

/// d_k = g_k / g_{k-1} with g_k the gcd of all k x k minors; stops at the rank.
inline IntVector invariantFactorsByMinors(const IntMatrix& m) {
  IntVector d;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(m.rows(), k, rs);
    subsets(m.cols(), k, cs);
    Integer g = 0;
    // g_{k-1} divides g_k, so reaching prev means we are done
    for (std::size_t a = 0; a < rs.size() && g != prev; ++a)
      for (std::size_t b = 0; b < cs.size() && g != prev; ++b) {
        IntMatrix minor = m.selectRows(rs[a]).selectColumns(cs[b]);
        g = redinv::gcd(g, k <= 4 ? leibniz(minor) : bareiss(minor));
      }
    if (g == 0) break;
    d.push_back(g / prev);
    prev = g;
  }
  return d;
}

/// Rank over Q by plain fraction-free elimination on a copy.
inline std::size_t rationalRank(IntMatrix a) {
  std::size_t r = 0;
  for (std::size_t j = 0; j < a.cols() && r < a.rows(); ++j) {
    std::size_t p = r;
    while (p < a.rows() && a(p, j) == 0) ++p;
    if (p == a.rows()) continue;
    a.swapRows(p, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      Integer x = a(i, j), y = a(r, j);
      for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) = a(i, k) * y - a(r, k) * x;
    }
    ++r;
  }
  return r;
}

inline bool isUnimodular(const IntMatrix& u) {
  Integer d = redinv::determinant(u);
  return d == 1 || d == -1;
}

}  // namespace oracle
