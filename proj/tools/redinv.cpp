// redinv: invariants of reductive data from the command line.
// Exit codes: 0 all checks pass, 1 some check failed, 2 bad input.

#include "redinv/cech.hpp"
#include "redinv/json_io.hpp"
#include "redinv/random_inputs.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

using namespace redinv;

namespace {

struct Outcome {
  ResultRecord record;
  std::vector<std::string> lines;  // human-readable body

  void say(const std::string& s) { lines.push_back(s); }
  void verdict(const std::string& name, bool ok, const std::string& detail = "") {
    record.verdicts[name] = ok;
    if (!ok && !record.outputs.contains("witness")) record.outputs["witness"] = Json{{"check", name}, {"detail", detail}};
  }
};

std::string matrixText(const IntMatrix& m, const std::string& indent) {
  if (m.rows() == 0) return indent + "(no rows, " + std::to_string(m.cols()) + " columns)";
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "\n" : "") << indent << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]";
  }
  return os.str();
}

std::string groupText(const GammaModule& m) {
  std::string s = m.group().describe();
  if (!m.gamma().isTrivial() && !m.hasTrivialAction()) s += "  (nontrivial action of " + m.gamma().name() + ")";
  return s;
}

std::string catalogPath(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("REDINV_CATALOG"); env && *env) return env;
  return REDINV_DEFAULT_CATALOG;
}

const CatalogEntry* findEntry(const CatalogFile& c, const std::string& spec) {
  for (const auto& e : c.entries)
    if (e.spec == spec) return &e;
  return nullptr;
}

// ---------------------------------------------------------------------------

Outcome cmdInvariants(const std::string& spec, const std::string& catalog, bool useCatalog) {
  ReductiveDatum d = parseGroupSpec(spec);
  Outcome o{makeRecord("invariants", spec), {}};
  auto gstar = characterGroup(d).module, mu = muDual(d).module, p1 = pi1(d), xrad = simplify(radicalCharacters(d).module).module;
  o.record.outputs["characterGroup"] = json::invariants(gstar.group());
  o.record.outputs["muDual"] = json::invariants(mu.group());
  o.record.outputs["pic"] = json::invariants(mu.group());
  o.record.outputs["pi1"] = json::invariants(p1.group());
  o.record.outputs["radicalCharacters"] = json::invariants(xrad.group());
  o.record.outputs["datum"] = json::toJson(d);
  o.say("group          " + d.name + (d.gamma().isTrivial() ? "" : "  (Galois group " + d.gamma().name() + ")"));
  o.say("rank           " + std::to_string(d.rank()) + ", semisimple rank " + std::to_string(d.semisimpleRank()));
  o.say("G*             " + groupText(gstar));
  o.say("Pic = mu*      " + groupText(mu));
  o.say("pi1            " + groupText(p1));
  o.say("X_rad          " + groupText(xrad));

  auto v = validate(d);
  const Check* bad = v.firstFailure();
  o.verdict("valid datum", !bad, bad ? bad->name + ": " + bad->detail : "");
  bool orders = true;
  if (auto m = mu.group().order(); m && p1.group().order()) orders = *m == *p1.group().order();
  o.verdict("|mu*| = |pi1 torsion|", mu.group().isFinite() ? orders : true, "orders differ");
  if (useCatalog) {
    CatalogFile c = loadCatalog(catalog);
    if (const CatalogEntry* e = findEntry(c, spec)) {
      bool ok = e->characterGroup == expectedFrom(gstar.group(), "") && e->muDual == expectedFrom(mu.group(), "") &&
                e->pi1 == expectedFrom(p1.group(), "");
      o.verdict("agrees with catalog", ok, "stored invariants differ for " + spec);
      o.say("catalog        entry found, " + std::string(ok ? "agrees" : "DISAGREES"));
    } else {
      o.say("catalog        no entry for " + spec);
    }
  }
  return o;
}

void describeResolution(Outcome& o, const TResolutionData& r, const std::string& key) {
  BoundedComplex c = pi1dFromResolution(r);
  o.record.outputs[key] = Json{{"provenance", toString(r.provenance)},
                               {"terms", Json{{"-1", json::invariants(r.Rstar.group())}, {"0", json::invariants(r.Tstar.group())}}},
                               {"rhoStar", json::toJson(r.rhoStar.matrix())},
                               {"cohomology", json::cohomologyJson(c)}};
  o.say(toString(r.provenance) + " resolution:");
  o.say("  R* (degree -1)  " + groupText(r.Rstar));
  o.say("  T* (degree 0)   " + groupText(r.Tstar));
  o.say("  rho*:");
  o.say(matrixText(r.rhoStar.matrix(), "    "));
  o.say("  H^-1            " + groupText(cohomology(c, -1).module));
  o.say("  H^0             " + groupText(cohomology(c, 0).module));
}

void resolutionVerdicts(Outcome& o, const ReductiveDatum& d, const TResolutionData& r) {
  const std::string p = toString(r.provenance) + ": ";
  BoundedComplex c = pi1dFromResolution(r);
  o.verdict(p + "H^-1 = G*", isomorphic(cohomology(c, -1).module.group(), characterGroup(d).module.group()),
            "H^-1 is " + cohomology(c, -1).module.group().describe());
  o.verdict(p + "H^0 = mu*", isomorphic(cohomology(c, 0).module.group(), muDual(d).module.group()),
            "H^0 is " + cohomology(c, 0).module.group().describe());
  for (const auto& k : fourTermCheck(r).checks) o.verdict(p + "four-term " + k.name, k.ok, k.detail);
}

Outcome cmdPi1D(const std::string& spec, const std::string& which) {
  ReductiveDatum d = parseGroupSpec(spec);
  Outcome o{makeRecord("pi1d", spec + " --resolution " + which), {}};
  o.say("group " + d.name);
  std::vector<TResolutionData> rs;
  if (which != "pushout") rs.push_back(canonicalResolution(d));
  if (which != "canonical") rs.push_back(pushoutTResolution(d));
  for (const auto& r : rs) {
    describeResolution(o, r, toString(r.provenance));
    resolutionVerdicts(o, d, r);
  }
  if (rs.size() == 2) {
    ComparisonReport cmp = compareResolutions(d, rs[0], rs[1]);
    o.record.outputs["comparison"] = toString(cmp.verdict);
    o.say("comparison: " + toString(cmp.verdict));
    for (const auto& k : cmp.checks) o.say("  " + k.name + (k.ok ? "" : "  FAILED " + k.detail));
    o.verdict("resolutions agree", cmp.verdict != Verdict::Mismatch, "comparison verdict mismatch");
    if (d.gamma().isTrivial()) o.verdict("certified", cmp.verdict == Verdict::Certified, toString(cmp.verdict));
  }
  return o;
}

Outcome cmdCheckSES(const std::string& path) {
  std::string text = readTextFile(path);
  SESData s = json::sesFrom(parseJsonText(text, path));
  Outcome o{makeRecord("check-ses", text), {}};
  o.say("1 -> " + s.g1.name + " -> " + s.g2.name + " -> " + s.g3.name + " -> 1");
  SESReport rep = sesToComplexSES(s);
  for (const auto& k : rep.checks) o.verdict(k.name, k.ok, k.detail);
  if (rep.les) {
    const LongSequence& seq = rep.les->sequence;
    Json terms = Json::array();
    for (std::size_t k = 0; k < seq.terms.size(); ++k) {
      terms.push_back(Json{{"label", seq.labels[k]}, {"group", json::invariants(seq.terms[k].group())}});
      std::string mark;
      if (k < seq.exactness.size()) mark = seq.exactness[k].exact ? "exact" : "NOT EXACT";
      o.say("  " + seq.labels[k] + " = " + groupText(seq.terms[k]) + (mark.empty() ? "" : "   [" + mark + "]"));
      if (k < seq.maps.size()) {
        const IntMatrix& m = seq.maps[k].matrix();
        std::string shown = m.rows() == 1 && m.cols() == 1 ? "  (x" + m(0, 0).str() + ")" : "";
        o.say("    | " + (k < seq.mapLabels.size() ? seq.mapLabels[k] : std::string()) + shown);
      }
    }
    Json maps = Json::array();
    for (std::size_t k = 0; k < seq.maps.size(); ++k)
      maps.push_back(Json{{"label", k < seq.mapLabels.size() ? seq.mapLabels[k] : std::string()},
                          {"matrix", json::toJson(seq.maps[k].matrix())}});
    o.record.outputs["maps"] = maps;
    Json conn = Json::object();
    for (const auto& [n, h] : rep.les->connecting) conn[std::to_string(n)] = json::toJson(h.matrix());
    o.record.outputs["les"] = terms;
    o.record.outputs["connecting"] = conn;
  } else {
    o.say("no long exact sequence (input checks failed)");
  }
  o.verdict("long exact sequence", rep.ok(), rep.firstFailure() ? rep.firstFailure()->name : "sequence not exact");
  return o;
}

void cechOne(Outcome& o, const CechInput& in, int maxDegree, Json& out, bool verbose) {
  CechComplex c = buildComplex(in, maxDegree);
  Json h = Json::object();
  for (int i = 0; i < maxDegree; ++i) {
    FgAbelianGroup g = cechCohomology(c, i);
    h[std::to_string(i)] = json::invariants(g);
    if (verbose) o.say("  H^" + std::to_string(i) + " = " + g.describe());
  }
  out = Json{{"cohomology", h}};
  auto record = [&](const std::string& name, bool ok, const std::string& detail) {
    bool prev = !o.record.verdicts.count(name) || o.record.verdicts[name];
    o.verdict(name, prev && ok, detail);
  };
  if (maxDegree >= 3)
    for (const auto& k : contractionCheck(c).checks) record(k.name, k.ok, k.detail);
  record("H^0 = ker phi", kernel(c.differentials[0]).lattice == kernel(in.phi).lattice, "kernels differ");
  record("H^1 = coker phi", isomorphic(cechCohomology(c, 1), cokernel(in.phi).group), "H^1 differs");
  bool high = true;
  for (int i = 2; i < maxDegree; ++i) high = high && cechCohomology(c, i).isTrivial();
  record("H^i = 0 for i >= 2", high, "nonzero higher cohomology");
  if (maxDegree >= 2) record("four-term sequence exact", cechFourTerm(c).exact(), "not exact");
}

Outcome cmdCech(const std::string& path, int maxDegree, std::size_t randomCount, std::uint64_t seed) {
  if (maxDegree < 2 || maxDegree > kMaxCechDegree)
    throw DegreeOutOfRange("--max-degree must lie in 2.." + std::to_string(kMaxCechDegree));
  if (!path.empty()) {
    std::string text = readTextFile(path);
    Json in = parseJsonText(text, path);
    FgAbelianGroup fx = json::groupFrom(json::field(in, "FX", ""), "/FX");
    FgAbelianGroup fg = json::groupFrom(json::field(in, "FG", ""), "/FG");
    IntMatrix m = json::matrixFrom(json::field(in, "phi", ""), fg.ambientRank(), fx.ambientRank(), "/phi");
    AbHom phi;
    try {
      phi = AbHom(fx, fg, m);
    } catch (const IllDefinedHom& e) {
      json::fail("/phi", e.what());
    }
    Outcome o{makeRecord("cech", text + "\nmax-degree " + std::to_string(maxDegree)), {}};
    o.say("phi: " + phi.source().describe() + " -> " + phi.target().describe());
    Json out;
    cechOne(o, CechInput(phi), maxDegree, out, true);
    o.record.outputs["input"] = out;
    return o;
  }
  std::ostringstream key;
  key << "random " << randomCount << " seed " << seed << " max-degree " << maxDegree;
  Outcome o{makeRecord("cech", key.str()), {}};
  RandomInputs gen(seed);
  Json all = Json::array();
  for (std::size_t t = 0; t < randomCount; ++t) {
    auto fx = gen.smallGroup(3, 6), fg = gen.smallGroup(3, 6);
    CechInput in(gen.hom(fx, fg, 5));
    Json out;
    cechOne(o, in, maxDegree, out, false);
    all.push_back(out);
  }
  o.record.outputs["random"] = Json{{"count", randomCount}, {"seed", std::to_string(seed)}, {"results", all}};
  o.say(std::to_string(randomCount) + " random inputs, seed " + std::to_string(seed) + ", max degree " +
        std::to_string(maxDegree));
  return o;
}

Outcome cmdMatrix(const std::string& op, const std::string& path) {
  std::string text = readTextFile(path);
  IntMatrix m = json::anyMatrixFrom(parseJsonText(text, path), "");
  Outcome o{makeRecord("matrix " + op, text), {}};
  if (op == "snf") {
    SmithForm s = snf(m);
    o.record.outputs = Json{{"D", json::toJson(s.D)}, {"U", json::toJson(s.U)}, {"V", json::toJson(s.V)},
                            {"invariantFactors", json::toJson(s.invariantFactors())}, {"rank", s.rank}};
    o.say("D:");
    o.say(matrixText(s.D, "  "));
    o.say("U:");
    o.say(matrixText(s.U, "  "));
    o.say("V:");
    o.say(matrixText(s.V, "  "));
    o.verdict("D = U M V", s.U * m * s.V == s.D, "product differs");
    bool chain = true;
    auto f = s.invariantFactors();
    for (std::size_t i = 0; i + 1 < f.size(); ++i) chain = chain && f[i] > 0 && f[i + 1] % f[i] == 0;
    o.verdict("divisibility chain", chain, "invariant factors do not divide each other");
    o.verdict("U, V unimodular", abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1, "not unimodular");
  } else {
    HermiteForm h = hnf(m);
    Json piv = Json::array();
    for (auto p : h.pivotColumns) piv.push_back(p);
    o.record.outputs = Json{{"H", json::toJson(h.H)}, {"U", json::toJson(h.U)}, {"pivotColumns", piv}, {"rank", h.rank()}};
    o.say("H:");
    o.say(matrixText(h.H, "  "));
    o.say("U:");
    o.say(matrixText(h.U, "  "));
    o.verdict("H = U M", h.U * m == h.H, "product differs");
    o.verdict("U unimodular", abs(determinant(h.U)) == 1, "not unimodular");
  }
  return o;
}

Outcome cmdCatalogBuild(const std::string& out, const std::string& sesDir) {
  Outcome o{makeRecord("catalog-build", out), {}};
  CatalogFile c = buildCatalog(standardCatalogSpecs());
  saveCatalog(c, out);
  o.say("wrote " + std::to_string(c.entries.size()) + " entries to " + out);
  o.verdict("self-test", loadCatalog(out).entries.size() == c.entries.size(), "reload differs");
  o.record.outputs["entries"] = c.entries.size();
  if (!sesDir.empty()) {
    std::filesystem::create_directories(sesDir);
    std::size_t files = 0;
    for (std::size_t n = 2; n <= 6; ++n) {
      writeTextFile(sesDir + "/gm_gl" + std::to_string(n) + "_pgl" + std::to_string(n) + ".json",
                    canonicalText(json::toJson(centerGlPglSES(n))));
      writeTextFile(sesDir + "/sl" + std::to_string(n) + "_gl" + std::to_string(n) + "_gm.json",
                    canonicalText(json::toJson(slGlDetSES(n))));
      files += 2;
    }
    // the same sequence with one coroot assigned to the wrong end
    SESData bad = centerGlPglSES(2);
    bad.partition.front().factor = 1;
    writeTextFile(sesDir + "/bad_partition.json", canonicalText(json::toJson(bad)));
    o.say("wrote " + std::to_string(files + 1) + " sequence files to " + sesDir);
  }
  return o;
}

Outcome cmdCatalogCheck(const std::string& path) {
  std::string text = readTextFile(path);
  CatalogFile c = catalogFromJson(parseJsonText(text, path));
  Outcome o{makeRecord("catalog-check", text), {}};
  auto failures = catalogSelfTest(c);
  Json rows = Json::array();
  for (const auto& e : c.entries) {
    rows.push_back(Json{{"spec", e.spec}, {"muDual", json::toJson(e.muDual)}});
    std::string t;
    for (const auto& x : e.muDual.torsion) t += (t.empty() ? "Z/" : " + Z/") + x.str();
    o.say(e.spec + "  mu* = " + (t.empty() ? "0" : t));
  }
  o.record.outputs["entries"] = rows;
  std::string detail = failures.empty() ? "" : failures.front().spec + ": " + failures.front().what;
  o.verdict("self-test", failures.empty(), detail);
  return o;
}

void emit(const Outcome& o, bool asJson, bool quiet) {
  if (asJson) {
    std::cout << writeResult(o.record);
    return;
  }
  if (!quiet)
    for (const auto& l : o.lines) std::cout << l << "\n";
  std::size_t passed = 0;
  for (const auto& [name, ok] : o.record.verdicts) {
    passed += ok;
    if (!quiet || !ok) std::cout << (ok ? "PASS  " : "FAIL  ") << name << "\n";
  }
  if (quiet) std::cout << passed << "/" << o.record.verdicts.size() << " checks pass\n";
  if (!o.record.allPass() && o.record.outputs.contains("witness"))
    std::cout << "witness: " << o.record.outputs["witness"].dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"redinv: invariants and exact sequences of reductive root data"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human", catalog;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"human", "json"}));
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "human format: print only failing checks and a count");
  app.add_option("--catalog", catalog, "catalog path (default: $REDINV_CATALOG or the shipped one)");

  std::string spec, resolution = "canonical", file, op, out, sesDir;
  int maxDegree = 6;
  std::size_t randomCount = 0;
  std::uint64_t seed = 1;
  bool noCatalog = false;

  auto* inv = app.add_subcommand("invariants", "G*, Pic = mu*, pi1 and X_rad of a group spec");
  inv->add_option("spec", spec, "group spec, e.g. PGL(4) or SL(3)xC2:outer")->required();
  inv->add_flag("--no-catalog", noCatalog, "skip the catalog cross-check");

  auto* p1d = app.add_subcommand("pi1d", "the complex [R* -> T*] and its cohomology");
  p1d->add_option("spec", spec, "group spec")->required();
  p1d->add_option("--resolution", resolution, "canonical, pushout or both")
      ->check(CLI::IsMember({"canonical", "pushout", "both"}));

  auto* ses = app.add_subcommand("check-ses", "long exact sequence of a short exact sequence of groups");
  ses->add_option("file", file, "SES JSON file")->required();

  auto* cech = app.add_subcommand("cech", "cohomology of the cochain complex of phi: F(X) -> F(G)");
  cech->add_option("file", file, "JSON {FX, FG, phi}");
  cech->add_option("--max-degree", maxDegree, "top degree of the complex");
  cech->add_option("--random", randomCount, "check this many random inputs instead of a file");
  cech->add_option("--seed", seed, "seed for --random");

  auto* mat = app.add_subcommand("matrix", "Smith or Hermite normal form of a JSON matrix");
  mat->add_option("op", op, "snf or hnf")->required()->check(CLI::IsMember({"snf", "hnf"}));
  mat->add_option("file", file, "JSON array of rows of decimal strings")->required();

  auto* build = app.add_subcommand("catalog-build", "recompute the catalog (and SES fixtures)");
  build->add_option("--out", out, "output path")->required();
  build->add_option("--ses-dir", sesDir, "also write SES fixture files here");

  auto* check = app.add_subcommand("catalog-check", "load a catalog and run its self-test");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const bool asJson = format == "json";
  try {
    Outcome o;
    if (*inv) {
      std::string path = catalogPath(catalog);
      o = cmdInvariants(spec, path, !noCatalog && std::filesystem::exists(path));
    } else if (*p1d) {
      o = cmdPi1D(spec, resolution);
    } else if (*ses) {
      o = cmdCheckSES(file);
    } else if (*cech) {
      if (file.empty() == (randomCount == 0)) throw SchemaError("cech: give either a file or --random N");
      o = cmdCech(file, maxDegree, randomCount, seed);
    } else if (*mat) {
      o = cmdMatrix(op, file);
    } else if (*build) {
      o = cmdCatalogBuild(out, sesDir);
    } else if (*check) {
      o = cmdCatalogCheck(catalogPath(catalog));
    }
    emit(o, asJson, quiet);
    return o.record.allPass() ? 0 : 1;
  } catch (const Error& e) {
    if (asJson)
      std::cout << canonicalText(Json{{"error", e.what()}});
    else
      std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
