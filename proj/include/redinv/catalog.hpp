#pragma once

// Standard groups: Cartan matrices of the irreducible types, semisimple
// data for any lattice between the root and weight lattices, the usual
// matrix-group realizations, diagram twists and the group-spec language
//   SL(3), GL(2)*T(1), E6sc, Spin(8)xC3:triality, T(2)xC2:swap ...

#include "redinv/root_datum.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace redinv {

/// An irreducible Cartan type such as ('B', 3).
struct CartanType {
  char letter = 'A';
  std::size_t rank = 1;
  std::string str() const { return std::string(1, letter) + std::to_string(rank); }
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Bourbaki numbering, A_ij = <alpha_i, alpha_j^v>.
inline IntMatrix cartanMatrix(const CartanType& t) {
  const std::size_t n = t.rank;
  auto bad = [&]() { return InvalidDatum("no Cartan type " + t.str()); };
  if (n == 0) throw bad();
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) {  // 1-based, simply laced edge
    a(i - 1, j - 1) = -1;
    a(j - 1, i - 1) = -1;
  };
  switch (t.letter) {
    case 'A':
      for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':
    case 'C':
      for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
      if (n >= 2) {
        link(n - 1, n);
        // B: alpha_n short, <alpha_{n-1}, alpha_n^v> = -2. C: the transpose.
        if (t.letter == 'B')
          a(n - 2, n - 1) = -2;
        else
          a(n - 1, n - 2) = -2;
      }
      break;
    case 'D':
      if (n < 2) throw bad();
      if (n == 2) break;  // A1 x A1
      for (std::size_t i = 1; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1);
      link(n - 2, n);
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad();
      link(1, 3);
      link(2, 4);
      link(3, 4);
      for (std::size_t i = 4; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) throw bad();
      link(1, 2);
      link(2, 3);
      link(3, 4);
      a(1, 2) = -2;  // alpha_2 long, alpha_3 short
      break;
    case 'G':
      if (n != 2) throw bad();
      link(1, 2);
      a(1, 0) = -3;  // alpha_1 short, alpha_2 long
      break;
    default:
      throw bad();
  }
  return a;
}

/// Every irreducible type of rank <= maxRank, one per isomorphism class
/// (B_n and C_n for n >= 2, D_n for n >= 4).
inline std::vector<CartanType> irreducibleTypes(std::size_t maxRank) {
  std::vector<CartanType> out;
  for (std::size_t n = 1; n <= maxRank; ++n) {
    out.push_back({'A', n});
    if (n >= 2) out.push_back({'B', n});
    if (n >= 2) out.push_back({'C', n});
    if (n >= 4) out.push_back({'D', n});
    if (n >= 6 && n <= 8) out.push_back({'E', n});
    if (n == 4) out.push_back({'F', 4});
    if (n == 2) out.push_back({'G', 2});
  }
  return out;
}

/// Semisimple datum with X the lattice spanned by the rows of `lattice`,
/// written in fundamental-weight coordinates. Requires Q <= X <= P.
inline RootDatum semisimpleDatum(const IntMatrix& a, const IntMatrix& lattice) {
  const std::size_t r = a.rows();
  if (lattice.rows() != r || lattice.cols() != r)
    throw InvalidDatum("isogeny lattice must be given by a square basis of size " + std::to_string(r));
  if (determinant(lattice) == 0) throw InvalidDatum("isogeny lattice basis is degenerate");
  // roots in lattice coordinates: c with c * L = A_i
  IntMatrix roots(r, r);
  const IntMatrix lt = lattice.transpose();
  for (std::size_t i = 0; i < r; ++i) {
    LinearSolution s = solveLinear(lt, a.rowVector(i));
    if (!s.solvable()) throw InvalidDatum("isogeny lattice does not contain the root lattice");
    for (std::size_t j = 0; j < r; ++j) roots(i, j) = (*s.particular)[j];
  }
  // <sum c_k L_k, alpha_j^v> = sum c_k L_kj, so coroot j is column j of L
  return RootDatum(r, std::move(roots), lt);
}

inline RootDatum simplyConnectedDatum(const CartanType& t) {
  IntMatrix a = cartanMatrix(t);
  return RootDatum(t.rank, a, IntMatrix::identity(t.rank));
}

inline RootDatum adjointDatum(const CartanType& t) {
  IntMatrix a = cartanMatrix(t);
  return RootDatum(t.rank, IntMatrix::identity(t.rank), a.transpose());
}

inline RootDatum torusDatum(std::size_t n) { return RootDatum(n, IntMatrix(0, n), IntMatrix(0, n)); }

/// GL_n on X = Z^n: alpha_i = e_i - e_{i+1} = alpha_i^v.
inline RootDatum glDatum(std::size_t n) {
  if (n == 0) throw InvalidDatum("GL(0)");
  IntMatrix r(n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    r(i, i) = 1;
    r(i, i + 1) = -1;
  }
  return RootDatum(n, r, r);
}

/// Sp_2n on Z^n: e_i - e_{i+1}, 2e_n; coroots e_i - e_{i+1}, e_n.
inline RootDatum spDatum(std::size_t n) {
  IntMatrix r(n, n), c(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    r(i, i) = c(i, i) = 1;
    r(i, i + 1) = c(i, i + 1) = -1;
  }
  r(n - 1, n - 1) = 2;
  c(n - 1, n - 1) = 1;
  return RootDatum(n, r, c);
}

/// SO_2n+1 on Z^n: e_i - e_{i+1}, e_n; coroots e_i - e_{i+1}, 2e_n.
inline RootDatum soOddDatum(std::size_t n) {
  RootDatum sp = spDatum(n);
  return RootDatum(n, sp.coroots, sp.roots);
}

/// SO_2n on Z^n: e_i - e_{i+1}, e_{n-1} + e_n, self-dual.
inline RootDatum soEvenDatum(std::size_t n) {
  if (n == 1) return torusDatum(1);
  IntMatrix r(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    r(i, i) = 1;
    r(i, i + 1) = -1;
  }
  r(n - 1, n - 2) = 1;
  r(n - 1, n - 1) = 1;
  return RootDatum(n, r, r);
}

inline RootDatum productDatum(const RootDatum& a, const RootDatum& b) {
  return RootDatum(a.rank + b.rank, blockDiagonal(a.roots, b.roots), blockDiagonal(a.coroots, b.coroots));
}

/// Diagram automorphisms (0-based permutations of the simple roots).
inline std::optional<std::vector<std::size_t>> outerPermutation(const CartanType& t) {
  const std::size_t n = t.rank;
  std::vector<std::size_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i;
  if (t.letter == 'A' && n >= 2) {
    for (std::size_t i = 0; i < n; ++i) s[i] = n - 1 - i;
    return s;
  }
  if (t.letter == 'D' && n >= 3) {
    std::swap(s[n - 2], s[n - 1]);
    return s;
  }
  if (t.letter == 'E' && n == 6) {
    std::swap(s[0], s[5]);
    std::swap(s[2], s[4]);
    return s;
  }
  return std::nullopt;
}

inline std::vector<std::size_t> trialityPermutation() { return {2, 1, 3, 0}; }

/// The automorphism of X acting on simple roots by sigma and on the
/// radical directions (the common kernel of the coroots, in the basis
/// returned by kernelBasis) by `radical`.
inline IntMatrix diagramAutomorphism(const RootDatum& d, const std::vector<std::size_t>& sigma, const IntMatrix& radical) {
  const std::size_t n = d.rank, r = d.semisimpleRank();
  IntMatrix k = kernelBasis(d.coroots);  // rows
  if (k.rows() != n - r) throw InvalidDatum("coroots are not independent");
  if (radical.rows() != n - r || radical.cols() != n - r)
    throw InvalidDatum("radical action must be " + std::to_string(n - r) + "x" + std::to_string(n - r));
  if (sigma.size() != r) throw InvalidDatum("diagram permutation has the wrong length");
  IntMatrix b(n, n), c(n, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t x = 0; x < n; ++x) {
      b(x, i) = d.roots(i, x);
      c(x, i) = d.roots(sigma[i], x);
    }
  IntMatrix kc = k.transpose(), kImage = kc * radical;
  b.setBlock(0, r, kc);
  c.setBlock(0, r, kImage);
  // M b = c, row by row: b^T m_k^T = c_k^T
  IntMatrix m(n, n);
  const IntMatrix bt = b.transpose();
  for (std::size_t row = 0; row < n; ++row) {
    LinearSolution s = solveLinear(bt, c.rowVector(row));
    if (!s.solvable() || s.kernel.rows() != 0) throw InvalidDatum("twist does not preserve the character lattice");
    for (std::size_t j = 0; j < n; ++j) m(row, j) = (*s.particular)[j];
  }
  return m;
}

/// Cyclic Γ of order m acting through its generator by `gen`.
inline ReductiveDatum withCyclicAction(ReductiveDatum d, std::size_t m, const IntMatrix& gen, const std::string& suffix) {
  FiniteGroup c = FiniteGroup::cyclic(m);
  IntMatrix p = IntMatrix::identity(d.rank());
  for (std::size_t k = 0; k < m; ++k) p = gen * p;
  if (!(p == IntMatrix::identity(d.rank())))
    throw InvalidDatum("twist order does not divide " + std::to_string(m));
  std::map<std::size_t, IntMatrix> gens;
  if (m > 1) gens.emplace(1, gen);
  d.characters = GammaModule::fromGenerators(c, FgAbelianGroup(d.rank()), gens);
  d.name += suffix;
  requireValid(d);
  return d;
}

// ---------------------------------------------------------------------------
// group-spec language

struct ParsedFactor {
  ReductiveDatum datum;
  std::optional<CartanType> type;  ///< set for almost simple factors
  bool glLike = false;             ///< GL(n): the outer twist also inverts the center
};

namespace detail {

inline std::size_t parseCount(const std::string& s, const std::string& where) {
  if (s.empty() || s.size() > 4) throw InvalidDatum("bad number in '" + where + "'");
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw InvalidDatum("bad number in '" + where + "'");
  return static_cast<std::size_t>(std::stoul(s));
}

inline ParsedFactor parseFactor(const std::string& f) {
  auto mk = [&](RootDatum rd, std::optional<CartanType> t = std::nullopt, bool gl = false) {
    return ParsedFactor{ReductiveDatum(f, std::move(rd)), t, gl};
  };
  auto open = f.find('(');
  if (open != std::string::npos) {
    if (f.back() != ')') throw InvalidDatum("unbalanced parenthesis in '" + f + "'");
    std::string head = f.substr(0, open);
    std::size_t n = parseCount(f.substr(open + 1, f.size() - open - 2), f);
    if (head == "T") return mk(torusDatum(n));
    if (n == 0) throw InvalidDatum("'" + f + "': size must be positive");
    if (head == "GL") return mk(glDatum(n), n >= 2 ? std::optional<CartanType>({'A', n - 1}) : std::nullopt, true);
    if (head == "SL" || head == "PGL") {
      if (n == 1) return mk(torusDatum(0));
      CartanType t{'A', n - 1};
      return mk(head == "SL" ? simplyConnectedDatum(t) : adjointDatum(t), t);
    }
    if (head == "Sp" || head == "PSp") {
      if (n % 2) throw InvalidDatum("'" + f + "': symplectic groups need even size");
      CartanType t{'C', n / 2};
      return mk(head == "Sp" ? spDatum(n / 2) : adjointDatum(t), t);
    }
    if (head == "SO") {
      if (n == 1) return mk(torusDatum(0));
      if (n % 2) return mk(soOddDatum(n / 2), CartanType{'B', n / 2});
      return mk(soEvenDatum(n / 2), n >= 4 ? std::optional<CartanType>({'D', n / 2}) : std::nullopt);
    }
    if (head == "Spin" || head == "PSO") {
      if (n < 3) throw InvalidDatum("'" + f + "': need size at least 3");
      CartanType t{n % 2 ? 'B' : 'D', n / 2};
      if (head == "PSO") return mk(adjointDatum(t), t);
      return mk(simplyConnectedDatum(t), t);
    }
    throw InvalidDatum("unknown group '" + head + "'");
  }
  if (f == "Gm") return mk(torusDatum(1));
  // G2, F4, E8, E6sc, A3ad, D4sc ...
  if (f.size() >= 2 && std::string("ABCDEFG").find(f[0]) != std::string::npos) {
    std::size_t end = 1;
    while (end < f.size() && std::isdigit(static_cast<unsigned char>(f[end]))) ++end;
    if (end == 1) throw InvalidDatum("unknown group '" + f + "'");
    CartanType t{f[0], parseCount(f.substr(1, end - 1), f)};
    std::string form = f.substr(end);
    IntMatrix a = cartanMatrix(t);  // validates the type
    if (form == "sc") return mk(simplyConnectedDatum(t), t);
    if (form == "ad") return mk(adjointDatum(t), t);
    if (form.empty()) {
      if (determinant(a) != 1) throw InvalidDatum("'" + f + "' is ambiguous; add sc or ad");
      return mk(simplyConnectedDatum(t), t);
    }
  }
  throw InvalidDatum("unknown group '" + f + "'");
}

}  // namespace detail

/// Parses a group spec: factors joined by '*', optionally followed by
/// "xCm:twist" with twist one of outer, triality, sign, swap.
inline ReductiveDatum parseGroupSpec(const std::string& spec) {
  std::string body = spec, gammaPart;
  if (auto pos = spec.find("xC"); pos != std::string::npos) {
    body = spec.substr(0, pos);
    gammaPart = spec.substr(pos + 1);
  }
  if (body.empty()) throw InvalidDatum("empty group spec");
  std::vector<ParsedFactor> factors;
  std::size_t start = 0;
  while (true) {
    std::size_t star = body.find('*', start);
    factors.push_back(detail::parseFactor(body.substr(start, star == std::string::npos ? std::string::npos : star - start)));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  RootDatum rd = factors.front().datum.datum;
  for (std::size_t k = 1; k < factors.size(); ++k) rd = productDatum(rd, factors[k].datum.datum);
  ReductiveDatum d(body, std::move(rd));
  if (gammaPart.empty()) {
    requireValid(d);
    return d;
  }

  auto colon = gammaPart.find(':');
  if (colon == std::string::npos) throw InvalidDatum("twist needs a name: '" + spec + "'");
  std::size_t m = detail::parseCount(gammaPart.substr(1, colon - 1), spec);
  if (m == 0) throw InvalidDatum("cyclic group of order 0");
  std::string twist = gammaPart.substr(colon + 1);
  if (factors.size() != 1) throw InvalidDatum("twists apply to a single factor");
  const ParsedFactor& f = factors.front();
  const std::size_t r = d.semisimpleRank(), radRank = d.rank() - r;
  std::vector<std::size_t> id(r);
  for (std::size_t i = 0; i < r; ++i) id[i] = i;

  IntMatrix gen;
  std::size_t order = 2;
  if (twist == "outer") {
    std::optional<std::vector<std::size_t>> sigma;
    if (f.type) sigma = outerPermutation(*f.type);
    if (f.glLike && !sigma) sigma = id;  // GL(1), GL(2): only the center moves
    if (!sigma) throw InvalidDatum("'" + body + "' has no outer diagram automorphism");
    IntMatrix rad = IntMatrix::identity(radRank);
    if (f.glLike) rad = -rad;
    gen = diagramAutomorphism(d.datum, *sigma, rad);
  } else if (twist == "triality") {
    if (!f.type || !(*f.type == CartanType{'D', 4})) throw InvalidDatum("triality needs type D4");
    gen = diagramAutomorphism(d.datum, trialityPermutation(), IntMatrix::identity(radRank));
    order = 3;
  } else if (twist == "sign") {
    if (radRank == 0) throw InvalidDatum("sign twist needs a central torus");
    gen = diagramAutomorphism(d.datum, id, -IntMatrix::identity(radRank));
  } else if (twist == "swap") {
    if (r != 0 || radRank < 2) throw InvalidDatum("swap twist needs a torus of rank at least 2");
    IntMatrix rev(radRank, radRank);
    for (std::size_t i = 0; i < radRank; ++i) rev(i, radRank - 1 - i) = 1;
    gen = diagramAutomorphism(d.datum, id, rev);
  } else {
    throw InvalidDatum("unknown twist '" + twist + "'");
  }
  if (m % order) throw InvalidDatum("twist '" + twist + "' has order " + std::to_string(order) + ", which does not divide " + std::to_string(m));
  return withCyclicAction(d, m, gen, "x" + gammaPart);
}

/// Specs of the shipped catalog.
inline std::vector<std::string> standardCatalogSpecs() {
  return {"T(1)",          "T(2)",          "T(2)xC2:swap",   "T(1)xC2:sign",        "GL(1)",
          "GL(2)",         "GL(3)",         "GL(4)",          "GL(3)xC2:outer",      "SL(2)",
          "SL(3)",         "SL(4)",         "SL(3)xC2:outer", "PGL(2)",              "PGL(3)",
          "PGL(4)",        "PGL(3)xC2:outer", "Sp(4)",        "Sp(6)",               "PSp(4)",
          "SO(3)",         "SO(5)",         "SO(7)",          "SO(8)",               "SO(10)",
          "SO(8)xC2:outer", "Spin(5)",      "Spin(7)",        "Spin(8)",             "Spin(10)",
          "PSO(8)",        "Spin(8)xC3:triality", "PSO(8)xC3:triality", "G2",        "F4",
          "E6sc",          "E6ad",          "E6scxC2:outer",  "E7sc",                "E7ad",
          "E8",            "SL(2)*T(1)",    "SL(2)*PGL(3)"};
}

}  // namespace redinv
