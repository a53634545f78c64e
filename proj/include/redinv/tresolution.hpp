#pragma once

// t-resolutions at the level of character lattices and the dual algebraic
// fundamental complex [R* -> T*] in degrees -1, 0.
//
// Besides the two resolutions, every TResolutionData carries a roof
//   canonical --a--> K <--b-- [R* -> T*]
// of levelwise injective quasi-isomorphisms. For the pushout resolution K is
// the complex [X_H -> P + T*] built from the maximal torus of H. Comparing
// two resolutions then means composing through the canonical complex.

#include "redinv/complex.hpp"
#include "redinv/root_datum.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace redinv {

enum class Provenance { Canonical, Pushout };

inline std::string toString(Provenance p) { return p == Provenance::Canonical ? "canonical" : "pushout"; }

struct ResolutionRoof {
  BoundedComplex common;
  ChainMap fromCanonical;   ///< canonicalPi1D(D) -> common
  ChainMap fromResolution;  ///< pi1dFromResolution(R) -> common
};

struct TResolutionData {
  ReductiveDatum datum;
  Provenance provenance = Provenance::Canonical;
  GammaModule Tstar;
  GammaModule Rstar;
  GammaHom rhoStar;  ///< R* -> T*
  GammaHom lStar;    ///< T* -> mu*
  GammaHom charactersToR;  ///< (G^tor)* = ker(beta) -> R*
  std::optional<ResolutionRoof> roof;
};

/// [X --beta--> P] in degrees -1, 0.
inline BoundedComplex canonicalPi1D(const ReductiveDatum& d) { return BoundedComplex::twoTerm(pairingMap(d), -1); }

inline BoundedComplex pi1dFromResolution(const TResolutionData& r) { return BoundedComplex::twoTerm(r.rhoStar, -1); }

inline TResolutionData canonicalResolution(const ReductiveDatum& d) {
  GammaHom beta = pairingMap(d);
  QuotientModuleResult mu = equivariantCokernel(beta);
  SubmoduleResult chars = equivariantKernel(beta);
  TResolutionData r{d, Provenance::Canonical, beta.target(), beta.source(), beta, mu.projection, chars.inclusion,
                    std::nullopt};
  BoundedComplex c = canonicalPi1D(d);
  r.roof = ResolutionRoof{c, ChainMap::identity(c), ChainMap::identity(c)};
  return r;
}

namespace detail {

/// Orbit-wise free cover Z[Γ]^k ->> M: walks the Smith generators of M and
/// keeps those not already in the Γ-span of the ones kept.
inline std::pair<GammaModule, GammaHom> freeCover(const GammaModule& m) {
  const FiniteGroup& gamma = m.gamma();
  SimplifiedModule sm = simplify(m);
  const FgAbelianGroup& g = m.group();
  std::vector<IntVector> chosen;
  IntMatrix span(0, g.ambientRank());
  for (std::size_t j = 0; j < sm.module.ambientRank(); ++j) {
    IntVector v = g.reduce(sm.from.matrix().columnVector(j));
    if (g.isZero(v)) continue;
    Subgroup s = subgroupGeneratedBy(g, span);
    if (s.coordinatesOf(v)) continue;
    chosen.push_back(v);
    for (std::size_t h = 0; h < gamma.order(); ++h) span = vstack(span, IntMatrix::fromRows({m.action(h).apply(v)}, g.ambientRank()));
  }
  const std::size_t n = gamma.order();
  GammaModule free = inducedModule(gamma, chosen.size());
  IntMatrix s(g.ambientRank(), n * chosen.size());
  for (std::size_t c = 0; c < chosen.size(); ++c)
    for (std::size_t h = 0; h < n; ++h) {
      IntVector img = m.action(h).apply(chosen[c]);
      for (std::size_t i = 0; i < img.size(); ++i) s(i, c * n + h) = img[i];
    }
  return {free, GammaHom(free, m, AbHom(free.group(), m.group(), std::move(s)))};
}

inline SubmoduleResult kernelModule(const GammaHom& f, const Subgroup& k) {
  GammaModule km = restrictToSubgroup(f.source(), k);
  return {km, GammaHom(km, f.source(), k.inclusion, GammaHom::Trusted{})};
}

inline GammaHom gammaHom(const GammaModule& s, const GammaModule& t, IntMatrix m) {
  return GammaHom(s, t, AbHom(s.group(), t.group(), std::move(m)));
}

}  // namespace detail

/// The pushout construction: H = (rad x G~ x T) / mu' with mu' = ker(rad x G~ -> G)
/// embedded in an induced torus T; R = H / G~.
inline TResolutionData pushoutTResolution(const ReductiveDatum& d) {
  GammaHom beta = pairingMap(d);
  const GammaModule& p = beta.target();
  QuotientModuleResult rad = radicalCharacters(d);
  // X_rad is presented as X modulo the saturated root span; pass to a free basis
  SimplifiedModule radFree = simplify(rad.module);
  const GammaModule& xr = radFree.module;
  const std::size_t nr = xr.ambientRank(), np = p.ambientRank();
  GammaHom toRad = compose(radFree.to, rad.projection);

  // (mu')* = coker[X -> X_rad + P]
  ModuleDirectSum rp = directSum({xr, p});
  GammaHom embed = compose(rp.injections[0], toRad) + compose(rp.injections[1], beta);
  if (!isInjective(embed.hom()))
    throw InvalidDatum(d.name + ": X -> X_rad + P is not injective");
  QuotientModuleResult muPrime = equivariantCokernel(embed);

  // T* ->> (mu')*
  auto [tstar, s] = detail::freeCover(muPrime.module);
  const std::size_t nt = tstar.ambientRank();

  // R* = ker[X_rad + T* -> (mu')*], (a, b) -> q(a, 0) + s(b)
  ModuleDirectSum rt = directSum({xr, tstar});
  GammaHom qa = compose(muPrime.projection, rp.injections[0]);
  GammaHom total = compose(qa, rt.projections[0]) + compose(s, rt.projections[1]);
  Subgroup rsub = kernel(total.hom());
  SubmoduleResult rstar = detail::kernelModule(total, rsub);
  GammaHom rho = compose(rt.projections[1], rstar.inclusion);

  // T* -> (mu')* -> mu*, the second map induced by X_rad + P -> P
  QuotientModuleResult mu = equivariantCokernel(beta);
  IntMatrix restr(np, nr + np);
  restr.setBlock(0, nr, IntMatrix::identity(np));
  GammaHom muPrimeToMu = detail::gammaHom(muPrime.module, mu.module, restr);
  GammaHom l = compose(muPrimeToMu, s);

  // characters of G: chi in ker(beta) goes to (res chi, 0)
  SubmoduleResult chars = equivariantKernel(beta);
  GammaHom toRst = compose(rt.injections[0], compose(toRad, chars.inclusion));
  auto lifted = factorThrough(toRst.hom(), rsub);
  if (!lifted) throw Error("internal: characters of G do not land in R*");
  GammaHom charsToR(chars.module, rstar.module, *lifted, GammaHom::Trusted{});

  TResolutionData r{d, Provenance::Pushout, tstar, rstar.module, rho, l, charsToR, std::nullopt};

  // roof through K = [X_H -> P + T*], X_H = ker[X_rad + P + T* -> (mu')*]
  ModuleDirectSum all = directSum({xr, p, tstar});
  GammaHom toMuPrime = compose(compose(muPrime.projection, rp.injections[0]), all.projections[0]) +
              compose(compose(muPrime.projection, rp.injections[1]), all.projections[1]) +
              compose(s, all.projections[2]);
  Subgroup xsub = kernel(toMuPrime.hom());
  SubmoduleResult xh = detail::kernelModule(toMuPrime, xsub);
  ModuleDirectSum pt = directSum({p, tstar});
  IntMatrix dk(np + nt, nr + np + nt);
  dk.setBlock(0, nr, IntMatrix::identity(np + nt));
  GammaHom allToPt = detail::gammaHom(all.module, pt.module, dk);
  BoundedComplex k = BoundedComplex::twoTerm(compose(allToPt, xh.inclusion), -1);

  auto intoXh = [&](const GammaHom& f) {
    auto m = factorThrough(f.hom(), xsub);
    if (!m) throw Error("internal: map does not land in X_H");
    return GammaHom(f.source(), xh.module, *m, GammaHom::Trusted{});
  };
  // X -> X_H: chi -> (res chi, beta chi, 0)
  GammaHom xToAll = compose(all.injections[0], toRad) + compose(all.injections[1], beta);
  BoundedComplex can = canonicalPi1D(d);
  ChainMap a(can, k, {{-1, intoXh(xToAll)}, {0, pt.injections[0]}});
  // R* -> X_H: (a, b) -> (a, 0, b)
  GammaHom rToAll = compose(all.injections[0], compose(rt.projections[0], rstar.inclusion)) +
                    compose(all.injections[2], compose(rt.projections[1], rstar.inclusion));
  ChainMap b(pi1dFromResolution(r), k, {{-1, intoXh(rToAll)}, {0, pt.injections[1]}});
  r.roof = ResolutionRoof{k, std::move(a), std::move(b)};
  return r;
}

// ---------------------------------------------------------------------------
// checks

struct NamedCheck {
  std::string name;
  bool ok = true;
  std::string detail;  ///< reason and witness when failed
};

inline std::string witnessText(const ExactnessVerdict& v) {
  std::string s = v.reason;
  if (v.witness) {
    s += "; witness (";
    for (std::size_t i = 0; i < v.witness->size(); ++i) s += (i ? "," : "") + (*v.witness)[i].str();
    s += ")";
  }
  return s;
}

struct FourTermReport {
  LongSequence sequence;                    ///< (G^tor)* -> R* -> T* -> mu*
  std::optional<LongSequence> derivedPart;  ///< R1* -> T* -> mu*, pushout only
  std::vector<NamedCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

inline FourTermReport fourTermCheck(const TResolutionData& r) {
  FourTermReport rep;
  LongSequence& s = rep.sequence;
  s.labels = {"(G^tor)*", "R*", "T*", "mu*"};
  s.terms = {r.charactersToR.source(), r.Rstar, r.Tstar, r.lStar.target()};
  s.maps = {r.charactersToR, r.rhoStar, r.lStar};
  s.mapLabels = {"inc", "rho*", "l*"};
  computeExactness(s);
  for (std::size_t k = 0; k < s.terms.size(); ++k)
    rep.checks.push_back({"exact at " + s.labels[k], s.exactness[k].exact, witnessText(s.exactness[k])});
  // l* agrees with the canonical mu* = coker(beta)
  QuotientModuleResult mu = muDual(r.datum);
  rep.checks.push_back({"mu* matches coker(beta)", r.lStar.target().group() == mu.module.group(),
                        "target of l* is not coker(beta)"});
  if (r.provenance == Provenance::Pushout) {
    SubmoduleResult r1 = equivariantImage(r.rhoStar);
    LongSequence t;
    t.labels = {"R1*", "T*", "mu*"};
    t.terms = {r1.module, r.Tstar, r.lStar.target()};
    t.maps = {r1.inclusion, r.lStar};
    t.mapLabels = {"rho1*", "l*"};
    computeExactness(t);
    for (std::size_t k = 0; k < t.terms.size(); ++k)
      rep.checks.push_back({"derived: exact at " + t.labels[k], t.exactness[k].exact, witnessText(t.exactness[k])});
    rep.derivedPart = std::move(t);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// independence of the resolution

enum class Verdict { Certified, EvidenceOnly, Mismatch };

inline std::string toString(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::EvidenceOnly: return "evidence-only";
    default: return "mismatch";
  }
}

struct ComparisonReport {
  Verdict verdict = Verdict::Mismatch;
  std::map<int, GammaHom> isomorphisms;  ///< degree -> H^n(R1) -> H^n(R2) when certified
  std::vector<NamedCheck> checks;
};

namespace detail {

/// The inverse of an isomorphism of f.g. abelian groups, as a Γ-map.
inline GammaHom inverseIso(const GammaHom& f) {
  auto m = preimageColumns(f.hom(), IntMatrix::identity(f.target().ambientRank()));
  if (!m) throw Error("internal: not surjective");
  return GammaHom(f.target(), f.source(), AbHom(f.target().group(), f.source().group(), *m, AbHom::Trusted{}),
                  GammaHom::Trusted{});
}

/// H^n(resolution) -> H^n(canonical) through the roof, if the roof is a
/// pair of quasi-isomorphisms.
inline std::optional<GammaHom> toCanonical(const TResolutionData& r, int n) {
  if (!r.roof) return std::nullopt;
  const ResolutionRoof& roof = *r.roof;
  auto hc = cohomology(roof.fromCanonical.source(), n);
  auto hr = cohomology(roof.fromResolution.source(), n);
  auto hk = cohomology(roof.common, n);
  GammaHom a = inducedOnCohomology(roof.fromCanonical, n, hc, hk);
  GammaHom b = inducedOnCohomology(roof.fromResolution, n, hr, hk);
  if (!isIsomorphism(a.hom()) || !isIsomorphism(b.hom())) return std::nullopt;
  return compose(inverseIso(a), b);
}

}  // namespace detail

inline ComparisonReport compareResolutions(const ReductiveDatum& d, const TResolutionData& r1, const TResolutionData& r2) {
  if (!(r1.datum.datum == d.datum) || !(r2.datum.datum == d.datum) || !(r1.datum.characters == d.characters) ||
      !(r2.datum.characters == d.characters))
    throw InvalidDatum("compareResolutions: resolutions of different data");
  ComparisonReport rep;
  BoundedComplex c1 = pi1dFromResolution(r1), c2 = pi1dFromResolution(r2);
  bool plain = true;
  for (int n = -1; n <= 0; ++n) {
    FgAbelianGroup h1 = cohomology(c1, n).module.group(), h2 = cohomology(c2, n).module.group();
    bool same = isomorphic(h1, h2);
    plain = plain && same;
    rep.checks.push_back({"H^" + std::to_string(n) + " invariants", same, h1.describe() + " vs " + h2.describe()});
  }
  if (!plain) return rep;

  bool certified = true;
  for (int n = -1; n <= 0 && certified; ++n) {
    auto f1 = detail::toCanonical(r1, n), f2 = detail::toCanonical(r2, n);
    if (!f1 || !f2) {
      certified = false;
      break;
    }
    GammaHom iso = compose(detail::inverseIso(*f2), *f1);
    bool ok = isIsomorphism(iso.hom());
    rep.checks.push_back({"H^" + std::to_string(n) + " comparison map", ok, "comparison map is not an isomorphism"});
    certified = ok;
    if (ok) rep.isomorphisms.emplace(n, iso);
  }
  if (certified) {
    rep.verdict = Verdict::Certified;
    return rep;
  }
  if (d.gamma().isTrivial()) {
    // plain invariants are a complete invariant without an action
    rep.verdict = Verdict::Certified;
    return rep;
  }
  rep.isomorphisms.clear();
  bool same = true;
  for (int n = -1; n <= 0; ++n) {
    bool e = evidence(cohomology(c1, n).module) == evidence(cohomology(c2, n).module);
    rep.checks.push_back({"H^" + std::to_string(n) + " evidence", e, "fixed points or group cohomology differ"});
    same = same && e;
  }
  rep.verdict = same ? Verdict::EvidenceOnly : Verdict::Mismatch;
  return rep;
}

// ---------------------------------------------------------------------------
// short exact sequences 1 -> G1 -> G2 -> G3 -> 1

struct RootAssignment {
  int factor = 1;         ///< 1 or 3
  std::size_t index = 0;  ///< simple root of that factor
};

struct SESData {
  ReductiveDatum g1, g2, g3;
  IntMatrix x3to2;  ///< rank2 x rank3: characters of G3 pulled back to G2
  IntMatrix x2to1;  ///< rank1 x rank2: restriction of characters to G1
  std::vector<RootAssignment> partition;  ///< one entry per simple root of G2
};

struct SESReport {
  std::vector<NamedCheck> checks;
  std::optional<ChainMap> into;  ///< canonical(G3) -> canonical(G2)
  std::optional<ChainMap> onto;  ///< canonical(G2) -> canonical(G1)
  std::optional<LesReport> les;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return les && les->exact();
  }
  const NamedCheck* firstFailure() const {
    for (const auto& c : checks)
      if (!c.ok) return &c;
    return nullptr;
  }
};

inline SESReport sesToComplexSES(const SESData& s) {
  SESReport rep;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
    return ok;
  };
  for (const ReductiveDatum* g : {&s.g1, &s.g2, &s.g3}) {
    auto v = validate(*g);
    const Check* c = v.firstFailure();
    if (!add("valid " + g->name, c == nullptr, c ? c->name + ": " + c->detail : "")) return rep;
  }
  const std::size_t n1 = s.g1.rank(), n2 = s.g2.rank(), n3 = s.g3.rank();
  const std::size_t r1 = s.g1.semisimpleRank(), r2 = s.g2.semisimpleRank(), r3 = s.g3.semisimpleRank();
  if (!add("same Galois group", s.g1.gamma() == s.g2.gamma() && s.g2.gamma() == s.g3.gamma(),
           "the three data use different acting groups"))
    return rep;
  if (!add("lattice map shapes",
           s.x3to2.rows() == n2 && s.x3to2.cols() == n3 && s.x2to1.rows() == n1 && s.x2to1.cols() == n2,
           "expected X3 -> X2 of size " + std::to_string(n2) + "x" + std::to_string(n3) + " and X2 -> X1 of size " +
               std::to_string(n1) + "x" + std::to_string(n2)))
    return rep;

  // 0 -> X3 -> X2 -> X1 -> 0
  AbHom i(s.g3.characters.group(), s.g2.characters.group(), s.x3to2, AbHom::Trusted{});
  AbHom p(s.g2.characters.group(), s.g1.characters.group(), s.x2to1, AbHom::Trusted{});
  auto inj = kernel(i);
  add("X3 -> X2 injective", inj.group.isTrivial(), "kernel " + inj.group.describe());
  ExactnessVerdict mid = checkExactAt(i, p);
  add("exact at X2", mid.exact, witnessText(mid));
  add("X2 -> X1 surjective", isSurjective(p), "cokernel " + cokernel(p).group.describe());

  std::string eq;
  for (std::size_t g = 0; g < s.g2.gamma().order() && eq.empty(); ++g) {
    if (!(s.x3to2 * s.g3.characters.action(g) == s.g2.characters.action(g) * s.x3to2) ||
        !(s.x2to1 * s.g2.characters.action(g) == s.g1.characters.action(g) * s.x2to1))
      eq = "lattice maps do not commute with element " + std::to_string(g);
  }
  add("Galois equivariance", eq.empty(), eq);

  // partition of the simple roots of G2
  std::string part;
  std::vector<int> hit1(r1, 0), hit3(r3, 0);
  if (s.partition.size() != r2) part = "partition has " + std::to_string(s.partition.size()) + " entries, G2 has " +
                                       std::to_string(r2) + " simple roots";
  for (std::size_t j = 0; j < s.partition.size() && part.empty(); ++j) {
    const auto& a = s.partition[j];
    if (a.factor == 1 && a.index < r1)
      ++hit1[a.index];
    else if (a.factor == 3 && a.index < r3)
      ++hit3[a.index];
    else
      part = "root " + std::to_string(j) + " assigned to a nonexistent root";
  }
  for (std::size_t k = 0; k < r1 && part.empty(); ++k)
    if (hit1[k] != 1) part = "simple root " + std::to_string(k) + " of G1 is hit " + std::to_string(hit1[k]) + " times";
  for (std::size_t k = 0; k < r3 && part.empty(); ++k)
    if (hit3[k] != 1) part = "simple root " + std::to_string(k) + " of G3 is hit " + std::to_string(hit3[k]) + " times";
  if (!add("coroot partition", part.empty(), part)) return rep;

  // P3 -> P2 and P2 -> P1 on the partitioned bases
  IntMatrix q3(r2, r3), q1(r1, r2);
  for (std::size_t j = 0; j < r2; ++j) {
    const auto& a = s.partition[j];
    if (a.factor == 3)
      q3(j, a.index) = 1;
    else
      q1(a.index, j) = 1;
  }
  // beta2 o i = q3 o beta3 and beta1 o p = q1 o beta2
  IntMatrix lhs3 = s.g2.datum.coroots * s.x3to2, rhs3 = q3 * s.g3.datum.coroots;
  IntMatrix lhs1 = s.g1.datum.coroots * s.x2to1, rhs1 = q1 * s.g2.datum.coroots;
  std::string sq;
  for (std::size_t j = 0; j < r2 && sq.empty(); ++j)
    if (lhs3.rowVector(j) != rhs3.rowVector(j))
      sq = "coroot " + std::to_string(j) + " of G2 pairs with characters of G3 inconsistently with the partition";
  for (std::size_t k = 0; k < r1 && sq.empty(); ++k)
    if (lhs1.rowVector(k) != rhs1.rowVector(k))
      sq = "coroot " + std::to_string(k) + " of G1 does not match its partner in G2";
  if (!add("coroot identifications", sq.empty(), sq)) return rep;
  if (!rep.checks.empty() && rep.firstFailure()) return rep;

  GammaHom b1 = pairingMap(s.g1), b2 = pairingMap(s.g2), b3 = pairingMap(s.g3);
  BoundedComplex c1 = canonicalPi1D(s.g1), c2 = canonicalPi1D(s.g2), c3 = canonicalPi1D(s.g3);
  try {
    ChainMap into(c3, c2, {{-1, GammaHom(s.g3.characters, s.g2.characters, i)},
                           {0, detail::gammaHom(b3.target(), b2.target(), q3)}});
    ChainMap onto(c2, c1, {{-1, GammaHom(s.g2.characters, s.g1.characters, p)},
                           {0, detail::gammaHom(b2.target(), b1.target(), q1)}});
    std::string lw = levelwiseProblem(into, onto);
    if (!add("levelwise exactness", lw.empty(), lw)) return rep;
    rep.les = lesOfSES(into, onto);
    rep.into = std::move(into);
    rep.onto = std::move(onto);
  } catch (const Error& e) {
    add("chain maps", false, e.what());
    return rep;
  }
  const LongSequence& seq = rep.les->sequence;
  for (std::size_t k = 0; k < seq.terms.size(); ++k)
    add("LES exact at " + seq.labels[k], seq.exactness[k].exact, witnessText(seq.exactness[k]));
  return rep;
}

/// 1 -> Gm -> GL(n) -> PGL(n) -> 1.
inline SESData centerGlPglSES(std::size_t n) {
  SESData s;
  s.g1 = ReductiveDatum("Gm", RootDatum(1, IntMatrix(0, 1), IntMatrix(0, 1)));
  s.g2 = ReductiveDatum("GL(" + std::to_string(n) + ")", [&] {
    IntMatrix r(n - 1, n);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      r(k, k) = 1;
      r(k, k + 1) = -1;
    }
    return RootDatum(n, r, r);
  }());
  IntMatrix a = s.g2.datum.cartan();
  s.g3 = ReductiveDatum("PGL(" + std::to_string(n) + ")", RootDatum(n - 1, IntMatrix::identity(n - 1), a.transpose()));
  s.x3to2 = s.g2.datum.roots.transpose();
  s.x2to1 = IntMatrix(1, n);
  for (std::size_t k = 0; k < n; ++k) s.x2to1(0, k) = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) s.partition.push_back({3, k});
  return s;
}

/// 1 -> SL(n) -> GL(n) -> Gm -> 1, the last map being det.
inline SESData slGlDetSES(std::size_t n) {
  SESData s;
  IntMatrix r(n - 1, n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    r(k, k) = 1;
    r(k, k + 1) = -1;
  }
  s.g2 = ReductiveDatum("GL(" + std::to_string(n) + ")", RootDatum(n, r, r));
  IntMatrix a = s.g2.datum.cartan();
  s.g1 = ReductiveDatum("SL(" + std::to_string(n) + ")", RootDatum(n - 1, a, IntMatrix::identity(n - 1)));
  s.g3 = ReductiveDatum("Gm", RootDatum(1, IntMatrix(0, 1), IntMatrix(0, 1)));
  s.x3to2 = IntMatrix(n, 1);
  for (std::size_t k = 0; k < n; ++k) s.x3to2(k, 0) = 1;
  // e_k restricted to the torus of SL(n), in fundamental weights: e_k = w_k - w_{k-1}
  s.x2to1 = IntMatrix(n - 1, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k < n - 1) s.x2to1(k, k) = 1;
    if (k > 0) s.x2to1(k - 1, k) = -1;
  }
  for (std::size_t k = 0; k + 1 < n; ++k) s.partition.push_back({1, k});
  return s;
}

// ---------------------------------------------------------------------------
// functoriality

/// A morphism G -> G' given on lattices. `characterMap` pulls characters of
/// G' back to G (rank(G) x rank(G')); the image of the j-th simple coroot of
/// G is sum_k corootMap(k, j) alpha'_k^v.
struct ReductiveMorphism {
  ReductiveDatum source, target;
  IntMatrix characterMap;
  std::optional<IntMatrix> corootMap;
};

/// Coroot map forced by the character map: phi_* = characterMap^T on
/// cocharacters, then read off in the coroots of the target.
inline IntMatrix inferCorootMap(const ReductiveMorphism& f) {
  const RootDatum& g = f.source.datum;
  const RootDatum& h = f.target.datum;
  IntMatrix c(h.semisimpleRank(), g.semisimpleRank());
  const IntMatrix pushed = g.coroots * f.characterMap;  // row j: phi_* alpha_j^v as a cocharacter of G'
  for (std::size_t j = 0; j < g.semisimpleRank(); ++j) {
    LinearSolution sol = solveLinear(h.coroots.transpose(), pushed.rowVector(j));
    if (!sol.solvable())
      throw InvalidDatum("morphism: image of coroot " + std::to_string(j) + " is not in the coroot lattice of the target");
    for (std::size_t k = 0; k < c.rows(); ++k) c(k, j) = (*sol.particular)[k];
  }
  return c;
}

/// Characters pull back, so the chain map runs canonical(G') -> canonical(G):
/// degree -1 is characterMap and degree 0 is corootMap^T on weight lattices.
inline ChainMap inducedMap(const ReductiveMorphism& f) {
  const ReductiveDatum& g = f.source;
  const ReductiveDatum& h = f.target;
  if (f.characterMap.rows() != g.rank() || f.characterMap.cols() != h.rank())
    throw DimensionMismatch("morphism: character map must be " + std::to_string(g.rank()) + "x" + std::to_string(h.rank()));
  IntMatrix cm = f.corootMap ? *f.corootMap : inferCorootMap(f);
  if (cm.rows() != h.semisimpleRank() || cm.cols() != g.semisimpleRank())
    throw DimensionMismatch("morphism: coroot map has the wrong shape");
  if (!(g.datum.coroots * f.characterMap == cm.transpose() * h.datum.coroots))
    throw IllDefinedHom("morphism is not compatible with the pairings");
  GammaHom bg = pairingMap(g), bh = pairingMap(h);
  try {
    return ChainMap(canonicalPi1D(h), canonicalPi1D(g),
                    {{-1, GammaHom(h.characters, g.characters, f.characterMap)},
                     {0, GammaHom(bh.target(), bg.target(), cm.transpose())}});
  } catch (const InvalidAction& e) {
    throw IllDefinedHom(std::string("morphism is not Galois equivariant: ") + e.what());
  }
}

inline ReductiveMorphism compose(const ReductiveMorphism& g, const ReductiveMorphism& f) {
  if (!(f.target.datum == g.source.datum)) throw DimensionMismatch("morphisms are not composable");
  std::optional<IntMatrix> c;
  if (f.corootMap && g.corootMap) c = *g.corootMap * *f.corootMap;
  return {f.source, g.target, f.characterMap * g.characterMap, c};
}

}  // namespace redinv
