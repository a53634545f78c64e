#pragma once

// Root data with a finite group acting through based automorphisms, and
// the lattice invariants attached to them: the pairing map X -> P, the
// character group ker(beta), mu* = coker(beta), pi_1 and the radical
// characters.

#include "redinv/abelian_group.hpp"
#include "redinv/error.hpp"
#include "redinv/gamma_module.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace redinv {

/// X = Z^n. Row i of `roots` is the simple root alpha_i in X, row i of
/// `coroots` is alpha_i^v in the dual lattice; the pairing is the dot product.
struct RootDatum {
  std::size_t rank = 0;
  IntMatrix roots;
  IntMatrix coroots;

  RootDatum() : roots(0, 0), coroots(0, 0) {}
  RootDatum(std::size_t n, IntMatrix r, IntMatrix c) : rank(n), roots(std::move(r)), coroots(std::move(c)) {
    if (roots.cols() != rank || coroots.cols() != rank)
      throw DimensionMismatch("root datum: roots and coroots must have " + std::to_string(rank) + " columns");
    if (roots.rows() != coroots.rows())
      throw DimensionMismatch("root datum: " + std::to_string(roots.rows()) + " roots but " +
                              std::to_string(coroots.rows()) + " coroots");
  }

  std::size_t semisimpleRank() const { return roots.rows(); }
  /// A_ij = <alpha_i, alpha_j^v>.
  IntMatrix cartan() const { return roots * coroots.transpose(); }

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.rank == b.rank && a.roots == b.roots && a.coroots == b.coroots;
  }
};

/// A root datum together with a Γ-module structure on X.
struct ReductiveDatum {
  std::string name;
  RootDatum datum;
  GammaModule characters;

  ReductiveDatum() = default;
  ReductiveDatum(std::string n, RootDatum d)
      : name(std::move(n)), datum(std::move(d)), characters(FiniteGroup(), FgAbelianGroup(datum.rank)) {}
  ReductiveDatum(std::string n, RootDatum d, GammaModule x)
      : name(std::move(n)), datum(std::move(d)), characters(std::move(x)) {}

  const FiniteGroup& gamma() const { return characters.gamma(); }
  std::size_t rank() const { return datum.rank; }
  std::size_t semisimpleRank() const { return datum.semisimpleRank(); }
};

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<Check> checks;

  bool valid() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  const Check* firstFailure() const {
    for (const auto& c : checks)
      if (!c.ok) return &c;
    return nullptr;
  }
};

namespace detail {

inline bool allPrincipalMinorsPositive(const IntMatrix& a, std::string& witness) {
  const std::size_t r = a.rows();
  for (unsigned long mask = 1; mask < (1UL << r); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (1UL << i)) idx.push_back(i);
    Integer d = determinant(a.selectRows(idx).selectColumns(idx));
    if (d <= 0) {
      witness = "principal minor on {";
      for (std::size_t k = 0; k < idx.size(); ++k) witness += (k ? "," : "") + std::to_string(idx[k] + 1);
      witness += "} is " + d.str();
      return false;
    }
  }
  return true;
}

inline std::size_t findRow(const IntMatrix& m, const IntVector& v) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m.rowVector(i) == v) return i;
  return m.rows();
}

}  // namespace detail

/// sigma with g(alpha_i) = alpha_sigma(i) and g(alpha_i^v) = alpha_sigma(i)^v,
/// where g acts on coroots contragrediently (c -> c * M_{g^-1}).
inline std::optional<std::vector<std::size_t>> rootPermutation(const ReductiveDatum& d, std::size_t g) {
  const RootDatum& rd = d.datum;
  const IntMatrix& m = d.characters.action(g);
  const IntMatrix& minv = d.characters.action(d.gamma().inverse(g));
  const IntMatrix corootImages = rd.coroots * minv;
  std::vector<std::size_t> sigma(rd.semisimpleRank());
  std::vector<bool> hit(rd.semisimpleRank(), false);
  for (std::size_t i = 0; i < rd.semisimpleRank(); ++i) {
    std::size_t j = detail::findRow(rd.roots, m.apply(rd.roots.rowVector(i)));
    if (j == rd.semisimpleRank() || hit[j]) return std::nullopt;
    if (corootImages.rowVector(i) != rd.coroots.rowVector(j)) return std::nullopt;
    sigma[i] = j;
    hit[j] = true;
  }
  return sigma;
}

inline ValidationReport validate(const ReductiveDatum& d) {
  ValidationReport rep;
  const RootDatum& rd = d.datum;
  const std::size_t r = rd.semisimpleRank();
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
  };

  bool shapes = rd.roots.cols() == rd.rank && rd.coroots.cols() == rd.rank && rd.coroots.rows() == r;
  add("shapes", shapes, "roots/coroots do not match the rank");
  if (!shapes) return rep;

  IntMatrix a = rd.cartan();
  std::string diag;
  for (std::size_t i = 0; i < r && diag.empty(); ++i)
    if (a(i, i) != 2) diag = "<alpha_" + std::to_string(i + 1) + ", alpha_" + std::to_string(i + 1) + "^v> = " + a(i, i).str();
  add("pairing-two", diag.empty(), diag);

  std::string off, pattern;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0 && off.empty())
        off = "A(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + a(i, j).str() + " > 0";
      if ((a(i, j) == 0) != (a(j, i) == 0) && pattern.empty())
        pattern = "A(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") and A(" + std::to_string(j + 1) +
                  "," + std::to_string(i + 1) + ") are not both zero or both nonzero";
    }
  add("cartan-off-diagonal", off.empty(), off);
  add("cartan-zero-pattern", pattern.empty(), pattern);

  std::string minor;
  bool finite = diag.empty() && off.empty() && pattern.empty() && detail::allPrincipalMinorsPositive(a, minor);
  add("cartan-finite-type", finite, minor.empty() ? "not a generalized Cartan matrix" : minor);

  add("roots-independent", rank(rd.roots) == r, "simple roots are linearly dependent");
  add("coroots-independent", rank(rd.coroots) == r, "simple coroots are linearly dependent");

  const GammaModule& x = d.characters;
  bool freeX = x.ambientRank() == rd.rank && x.group().relationLattice().rank() == 0;
  add("character-lattice", freeX, "the Γ-module is not Z^" + std::to_string(rd.rank));
  if (!freeX) return rep;

  std::string perm;
  for (std::size_t g = 0; g < d.gamma().order() && perm.empty(); ++g)
    if (!rootPermutation(d, g)) perm = "element " + std::to_string(g) + " does not permute the simple roots and coroots compatibly";
  add("gamma-based-automorphisms", perm.empty(), perm);
  return rep;
}

inline void requireValid(const ReductiveDatum& d) {
  ValidationReport rep = validate(d);
  if (const Check* c = rep.firstFailure())
    throw InvalidDatum((d.name.empty() ? std::string("datum") : d.name) + ": " + c->name + ": " + c->detail);
}

/// P = Hom(Z Phi^v, Z) on the basis dual to the simple coroots; Γ permutes
/// the basis the way it permutes the simple coroots.
inline GammaModule weightModule(const ReductiveDatum& d) {
  const std::size_t r = d.semisimpleRank();
  std::vector<IntMatrix> act;
  for (std::size_t g = 0; g < d.gamma().order(); ++g) {
    auto sigma = rootPermutation(d, g);
    if (!sigma) throw InvalidDatum("weightModule: action is not by based automorphisms");
    IntMatrix p(r, r);
    for (std::size_t j = 0; j < r; ++j) p((*sigma)[j], j) = 1;
    act.push_back(std::move(p));
  }
  return GammaModule(d.gamma(), FgAbelianGroup(r), std::move(act), GammaModule::Trusted{});
}

/// beta(chi) = (<chi, alpha_i^v>)_i.
inline GammaHom pairingMap(const ReductiveDatum& d) {
  requireValid(d);
  GammaModule p = weightModule(d);
  return GammaHom(d.characters, p, AbHom(d.characters.group(), p.group(), d.datum.coroots));
}

/// X_0 = ker(beta), the characters of G.
inline SubmoduleResult characterGroup(const ReductiveDatum& d) { return equivariantKernel(pairingMap(d)); }

/// mu* = coker(beta).
inline QuotientModuleResult muDual(const ReductiveDatum& d) { return equivariantCokernel(pairingMap(d)); }

/// Cocharacters Z^n with the contragredient action g -> (M_{g^-1})^T.
inline GammaModule cocharacterModule(const ReductiveDatum& d) {
  std::vector<IntMatrix> act;
  for (std::size_t g = 0; g < d.gamma().order(); ++g)
    act.push_back(d.characters.action(d.gamma().inverse(g)).transpose());
  return GammaModule(d.gamma(), FgAbelianGroup(d.rank()), std::move(act), GammaModule::Trusted{});
}

/// pi_1 = X^v / Z Phi^v.
inline GammaModule pi1(const ReductiveDatum& d) {
  requireValid(d);
  GammaModule cochar = cocharacterModule(d);
  return GammaModule(d.gamma(), FgAbelianGroup(d.rank(), d.datum.coroots), cochar.actions(), GammaModule::Trusted{});
}

/// X_rad = X / saturation(Z Phi), the characters of the radical.
inline QuotientModuleResult radicalCharacters(const ReductiveDatum& d) {
  requireValid(d);
  Lattice sat = saturation(Lattice::spannedBy(d.datum.roots));
  FgAbelianGroup q(d.rank(), sat.basis());
  GammaModule m(d.gamma(), q, d.characters.actions(), GammaModule::Trusted{});
  return {m, GammaHom(d.characters, m, AbHom(d.characters.group(), q, IntMatrix::identity(d.rank()), AbHom::Trusted{}),
                      GammaHom::Trusted{})};
}

}  // namespace redinv
