#pragma once

// JSON persistence: matrices as arrays of decimal strings, the shipped
// catalog with its self-test, SES fixtures, resolutions and result records.
// Objects are written with sorted keys so identical inputs give identical
// bytes. Needs OpenSSL for the record digest.

#include "redinv/catalog.hpp"
#include "redinv/tresolution.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace redinv {

using Json = nlohmann::json;

inline constexpr const char* kCatalogSchema = "redinv-catalog/1";
inline constexpr const char* kResultSchema = "redinv-result/1";
inline constexpr const char* kSesSchema = "redinv-ses/1";

namespace json {

/// Field-level failures carry the JSON pointer of the offending value.
[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw SchemaError((where.empty() ? std::string("/") : where) + ": " + what);
}

inline const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

inline std::size_t count(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

inline std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

inline Json toJson(const Integer& x) { return x.str(); }

inline Integer integerFrom(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "integers are written as decimal strings");
  const std::string s = j.get<std::string>();
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start) fail(where, "empty integer");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') fail(where, "'" + s + "' is not a decimal integer");
  return Integer(s);
}

inline Json toJson(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(toJson(x));
  return a;
}

inline IntVector vectorFrom(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(integerFrom(j[i], where + "/" + std::to_string(i)));
  return v;
}

inline Json toJson(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(toJson(m.rowVector(i)));
  return a;
}

/// A matrix with `cols` columns (needed when there are no rows).
inline IntMatrix matrixFrom(const Json& j, std::size_t cols, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    IntVector r = vectorFrom(j[i], where + "/" + std::to_string(i));
    if (r.size() != cols) fail(where + "/" + std::to_string(i), "expected " + std::to_string(cols) + " entries");
    rows.push_back(std::move(r));
  }
  return IntMatrix::fromRows(rows, cols);
}

inline IntMatrix matrixFrom(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  IntMatrix m = matrixFrom(j, cols, where);
  if (m.rows() != rows) fail(where, "expected " + std::to_string(rows) + " rows");
  return m;
}

/// An arbitrary matrix: rows and cols read from the data, empty means 0x0.
inline IntMatrix anyMatrixFrom(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  std::size_t cols = j.empty() ? 0 : (j[0].is_array() ? j[0].size() : 0);
  return matrixFrom(j, cols, where);
}

inline Json toJson(const FgAbelianGroup& g) {
  return Json{{"ambientRank", g.ambientRank()}, {"relations", toJson(g.relations())}};
}

inline FgAbelianGroup groupFrom(const Json& j, const std::string& where) {
  std::size_t n = count(field(j, "ambientRank", where), where + "/ambientRank");
  return FgAbelianGroup(n, matrixFrom(field(j, "relations", where), n, where + "/relations"));
}

/// Normalized invariants, the form used in outputs.
inline Json invariants(const FgAbelianGroup& g) {
  return Json{{"rank", g.freeRank()}, {"torsion", toJson(g.torsion())}};
}

inline Json toJson(const AbHom& f) {
  return Json{{"source", toJson(f.source())}, {"target", toJson(f.target())}, {"matrix", toJson(f.matrix())}};
}

inline AbHom homFrom(const Json& j, const std::string& where) {
  FgAbelianGroup s = groupFrom(field(j, "source", where), where + "/source");
  FgAbelianGroup t = groupFrom(field(j, "target", where), where + "/target");
  IntMatrix m = matrixFrom(field(j, "matrix", where), t.ambientRank(), s.ambientRank(), where + "/matrix");
  try {
    return AbHom(s, t, m);
  } catch (const IllDefinedHom& e) {
    fail(where, e.what());
  }
}

inline Json toJson(const FiniteGroup& g) {
  Json t = Json::array();
  for (const auto& row : g.table()) t.push_back(row);
  return Json{{"name", g.name()}, {"order", g.order()}, {"table", t}};
}

inline FiniteGroup finiteGroupFrom(const Json& j, const std::string& where) {
  const Json& t = field(j, "table", where);
  if (!t.is_array() || t.empty()) fail(where + "/table", "expected a non-empty square table");
  FiniteGroup::Table table;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!t[i].is_array() || t[i].size() != t.size()) fail(where + "/table/" + std::to_string(i), "table is not square");
    std::vector<std::size_t> row;
    for (std::size_t k = 0; k < t[i].size(); ++k) row.push_back(count(t[i][k], where + "/table/" + std::to_string(i)));
    table.push_back(std::move(row));
  }
  if (j.contains("order") && count(j["order"], where + "/order") != table.size())
    fail(where + "/order", "order does not match the table");
  std::string name = j.contains("name") ? text(j["name"], where + "/name") : std::string();
  try {
    return FiniteGroup(std::move(table), name);
  } catch (const InvalidAction& e) {
    fail(where + "/table", e.what());
  }
}

/// Action matrices keyed by element index.
inline Json actionJson(const std::vector<IntMatrix>& act) {
  Json j = Json::object();
  for (std::size_t g = 0; g < act.size(); ++g) j[std::to_string(g)] = toJson(act[g]);
  return j;
}

inline std::vector<IntMatrix> actionFrom(const Json& j, const FiniteGroup& gamma, std::size_t n, const std::string& where) {
  if (!j.is_object() || j.size() != gamma.order())
    fail(where, "expected one matrix per group element (" + std::to_string(gamma.order()) + "), keyed by index");
  std::vector<IntMatrix> act;
  for (std::size_t g = 0; g < gamma.order(); ++g) {
    const std::string k = std::to_string(g);
    act.push_back(matrixFrom(field(j, k, where), n, n, where + "/" + k));
  }
  return act;
}

inline Json toJson(const GammaModule& m) {
  return Json{{"gamma", toJson(m.gamma())}, {"group", toJson(m.group())}, {"action", actionJson(m.actions())}};
}

inline GammaModule moduleFrom(const Json& j, const std::string& where) {
  FiniteGroup gamma = finiteGroupFrom(field(j, "gamma", where), where + "/gamma");
  FgAbelianGroup g = groupFrom(field(j, "group", where), where + "/group");
  std::vector<IntMatrix> act = actionFrom(field(j, "action", where), gamma, g.ambientRank(), where + "/action");
  try {
    return GammaModule(gamma, g, std::move(act));
  } catch (const Error& e) {
    fail(where + "/action", e.what());
  }
}

inline Json toJson(const GammaHom& f) {
  return Json{{"source", toJson(f.source())}, {"target", toJson(f.target())}, {"matrix", toJson(f.matrix())}};
}

inline GammaHom gammaHomFrom(const Json& j, const std::string& where) {
  GammaModule s = moduleFrom(field(j, "source", where), where + "/source");
  GammaModule t = moduleFrom(field(j, "target", where), where + "/target");
  IntMatrix m = matrixFrom(field(j, "matrix", where), t.ambientRank(), s.ambientRank(), where + "/matrix");
  try {
    return GammaHom(s, t, m);
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

/// Root datum plus Γ-action; Γ and the action are omitted when trivial.
inline Json toJson(const ReductiveDatum& d) {
  Json j{{"name", d.name},
         {"rank", d.rank()},
         {"simpleRoots", toJson(d.datum.roots)},
         {"simpleCoroots", toJson(d.datum.coroots)}};
  if (!d.gamma().isTrivial()) {
    j["gamma"] = toJson(d.gamma());
    j["action"] = actionJson(d.characters.actions());
  }
  return j;
}

/// A datum object, or a group-spec string.
inline ReductiveDatum datumFrom(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parseGroupSpec(j.get<std::string>());
    } catch (const InvalidDatum& e) {
      fail(where, e.what());
    }
  }
  std::string name = text(field(j, "name", where), where + "/name");
  std::size_t n = count(field(j, "rank", where), where + "/rank");
  IntMatrix roots = matrixFrom(field(j, "simpleRoots", where), n, where + "/simpleRoots");
  IntMatrix coroots = matrixFrom(field(j, "simpleCoroots", where), n, where + "/simpleCoroots");
  if (roots.rows() != coroots.rows()) fail(where + "/simpleCoroots", "number of coroots differs from number of roots");
  ReductiveDatum d(name, RootDatum(n, std::move(roots), std::move(coroots)));
  if (j.contains("gamma")) {
    FiniteGroup gamma = finiteGroupFrom(j["gamma"], where + "/gamma");
    std::vector<IntMatrix> act = actionFrom(field(j, "action", where), gamma, n, where + "/action");
    try {
      d.characters = GammaModule(gamma, FgAbelianGroup(n), std::move(act));
    } catch (const Error& e) {
      fail(where + "/action", e.what());
    }
  }
  auto rep = validate(d);
  if (const Check* c = rep.firstFailure()) fail(where, "invalid root datum: " + c->name + ": " + c->detail);
  return d;
}

/// Per-degree cohomology of a complex, keyed by degree.
inline Json cohomologyJson(const BoundedComplex& c) {
  Json j = Json::object();
  if (c.empty()) return j;
  for (int n = c.lo(); n <= c.hi(); ++n) j[std::to_string(n)] = invariants(cohomology(c, n).module.group());
  return j;
}

/// Terms and differentials keyed by degree; differential n leaves degree n.
inline Json toJson(const BoundedComplex& c) {
  Json terms = Json::object(), diffs = Json::object();
  if (!c.empty()) {
    for (int n = c.lo(); n <= c.hi(); ++n) terms[std::to_string(n)] = toJson(c.term(n));
    for (int n = c.lo(); n < c.hi(); ++n) diffs[std::to_string(n)] = toJson(c.differential(n).matrix());
  }
  return Json{{"lo", c.empty() ? 0 : c.lo()}, {"hi", c.empty() ? -1 : c.hi()}, {"terms", terms}, {"differentials", diffs}};
}

inline BoundedComplex complexFrom(const Json& j, const std::string& where) {
  const Json& lo = field(j, "lo", where);
  const Json& hi = field(j, "hi", where);
  if (!lo.is_number_integer() || !hi.is_number_integer()) fail(where, "lo and hi must be integers");
  const int a = lo.get<int>(), b = hi.get<int>();
  if (b < a) fail(where + "/hi", "empty complexes are not stored");
  std::vector<GammaModule> terms;
  std::vector<GammaHom> diffs;
  const Json& ts = field(j, "terms", where);
  const Json& ds = field(j, "differentials", where);
  for (int n = a; n <= b; ++n) terms.push_back(moduleFrom(field(ts, std::to_string(n), where + "/terms"), where + "/terms/" + std::to_string(n)));
  for (int n = a; n < b; ++n) {
    const std::size_t k = static_cast<std::size_t>(n - a);
    const std::string w = where + "/differentials/" + std::to_string(n);
    IntMatrix m = matrixFrom(field(ds, std::to_string(n), where + "/differentials"), terms[k + 1].ambientRank(),
                             terms[k].ambientRank(), w);
    try {
      diffs.emplace_back(terms[k], terms[k + 1], m);
    } catch (const Error& e) {
      fail(w, e.what());
    }
  }
  try {
    return BoundedComplex(a, std::move(terms), std::move(diffs));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

inline Json toJson(const TResolutionData& r) {
  return Json{{"datum", toJson(r.datum)},
              {"provenance", toString(r.provenance)},
              {"Tstar", toJson(r.Tstar)},
              {"Rstar", toJson(r.Rstar)},
              {"rhoStar", toJson(r.rhoStar.matrix())},
              {"lStar", toJson(r.lStar)},
              {"charactersToR", toJson(r.charactersToR)}};
}

/// Reading back drops the comparison roof; only the data fields return.
inline TResolutionData resolutionFrom(const Json& j, const std::string& where) {
  TResolutionData r;
  r.datum = datumFrom(field(j, "datum", where), where + "/datum");
  std::string prov = text(field(j, "provenance", where), where + "/provenance");
  if (prov != "canonical" && prov != "pushout") fail(where + "/provenance", "expected canonical or pushout");
  r.provenance = prov == "canonical" ? Provenance::Canonical : Provenance::Pushout;
  r.Tstar = moduleFrom(field(j, "Tstar", where), where + "/Tstar");
  r.Rstar = moduleFrom(field(j, "Rstar", where), where + "/Rstar");
  IntMatrix rho = matrixFrom(field(j, "rhoStar", where), r.Rstar.ambientRank(), where + "/rhoStar");
  if (rho.rows() != r.Tstar.ambientRank()) fail(where + "/rhoStar", "wrong number of rows");
  try {
    r.rhoStar = GammaHom(r.Rstar, r.Tstar, rho);
  } catch (const Error& e) {
    fail(where + "/rhoStar", e.what());
  }
  r.lStar = gammaHomFrom(field(j, "lStar", where), where + "/lStar");
  r.charactersToR = gammaHomFrom(field(j, "charactersToR", where), where + "/charactersToR");
  return r;
}

inline Json toJson(const SESData& s) {
  Json part = Json::array();
  for (const auto& a : s.partition) part.push_back(Json{{"factor", a.factor}, {"index", a.index}});
  return Json{{"schema", kSesSchema}, {"g1", toJson(s.g1)}, {"g2", toJson(s.g2)},  {"g3", toJson(s.g3)},
              {"x3to2", toJson(s.x3to2)}, {"x2to1", toJson(s.x2to1)}, {"partition", part}};
}

inline SESData sesFrom(const Json& j) {
  if (j.contains("schema") && j["schema"] != kSesSchema) fail("/schema", "unsupported schema " + j["schema"].dump());
  SESData s;
  s.g1 = datumFrom(field(j, "g1", ""), "/g1");
  s.g2 = datumFrom(field(j, "g2", ""), "/g2");
  s.g3 = datumFrom(field(j, "g3", ""), "/g3");
  s.x3to2 = matrixFrom(field(j, "x3to2", ""), s.g3.rank(), "/x3to2");
  s.x2to1 = matrixFrom(field(j, "x2to1", ""), s.g2.rank(), "/x2to1");
  const Json& p = field(j, "partition", "");
  if (!p.is_array()) fail("/partition", "expected an array");
  for (std::size_t k = 0; k < p.size(); ++k) {
    const std::string w = "/partition/" + std::to_string(k);
    const Json& f = field(p[k], "factor", w);
    if (!f.is_number_integer() || (f.get<int>() != 1 && f.get<int>() != 3)) fail(w + "/factor", "factor must be 1 or 3");
    s.partition.push_back({f.get<int>(), count(field(p[k], "index", w), w + "/index")});
  }
  return s;
}

}  // namespace json

// ---------------------------------------------------------------------------
// files

/// Parses text, turning syntax errors into SchemaError with line and column.
inline Json parseJsonText(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SchemaError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": JSON syntax error");
  }
}

inline std::string readTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void writeTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path + ": cannot write file");
  out << text;
}

/// Canonical text: two-space indent, sorted keys, trailing newline.
inline std::string canonicalText(const Json& j) { return j.dump(2) + "\n"; }

inline std::string sha256Hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

// ---------------------------------------------------------------------------
// catalog

struct ExpectedGroup {
  std::size_t rank = 0;
  IntVector torsion;
  std::string provenance;

  friend bool operator==(const ExpectedGroup& a, const ExpectedGroup& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
  }
};

struct CatalogEntry {
  std::string spec;
  ReductiveDatum datum;
  ExpectedGroup characterGroup, muDual, pi1;
};

struct CatalogFile {
  std::string schema = kCatalogSchema;
  std::vector<CatalogEntry> entries;
};

namespace json {

inline Json toJson(const ExpectedGroup& e) {
  return Json{{"rank", e.rank}, {"torsion", toJson(e.torsion)}, {"provenance", e.provenance}};
}

inline ExpectedGroup expectedFrom(const Json& j, const std::string& where) {
  ExpectedGroup e;
  e.rank = count(field(j, "rank", where), where + "/rank");
  e.torsion = vectorFrom(field(j, "torsion", where), where + "/torsion");
  e.provenance = text(field(j, "provenance", where), where + "/provenance");
  return e;
}

}  // namespace json

inline ExpectedGroup expectedFrom(const FgAbelianGroup& g, std::string provenance) {
  return {g.freeRank(), g.torsion(), std::move(provenance)};
}

/// Computes the expected invariants with the Smith normal form.
inline CatalogEntry makeCatalogEntry(const std::string& spec) {
  CatalogEntry e{spec, parseGroupSpec(spec), {}, {}, {}};
  e.characterGroup = expectedFrom(characterGroup(e.datum).module.group(), "snf: kernel of the coroot pairing X -> P");
  e.muDual = expectedFrom(muDual(e.datum).module.group(), "snf: cokernel of the coroot pairing X -> P");
  e.pi1 = expectedFrom(pi1(e.datum).group(), "snf: cocharacters modulo the coroot lattice");
  return e;
}

inline CatalogFile buildCatalog(const std::vector<std::string>& specs) {
  CatalogFile c;
  for (const auto& s : specs) c.entries.push_back(makeCatalogEntry(s));
  return c;
}

inline Json catalogToJson(const CatalogFile& c) {
  Json entries = Json::array();
  for (const auto& e : c.entries)
    entries.push_back(Json{{"spec", e.spec},
                           {"datum", json::toJson(e.datum)},
                           {"expected",
                            Json{{"characterGroup", json::toJson(e.characterGroup)},
                                 {"muDual", json::toJson(e.muDual)},
                                 {"pi1", json::toJson(e.pi1)}}}});
  return Json{{"schema", c.schema}, {"entries", entries}};
}

inline CatalogFile catalogFromJson(const Json& j) {
  CatalogFile c;
  c.schema = json::text(json::field(j, "schema", ""), "/schema");
  if (c.schema != kCatalogSchema) json::fail("/schema", "unsupported schema '" + c.schema + "'");
  const Json& es = json::field(j, "entries", "");
  if (!es.is_array()) json::fail("/entries", "expected an array");
  for (std::size_t k = 0; k < es.size(); ++k) {
    const std::string w = "/entries/" + std::to_string(k);
    CatalogEntry e;
    e.spec = json::text(json::field(es[k], "spec", w), w + "/spec");
    e.datum = json::datumFrom(json::field(es[k], "datum", w), w + "/datum");
    const Json& ex = json::field(es[k], "expected", w);
    e.characterGroup = json::expectedFrom(json::field(ex, "characterGroup", w + "/expected"), w + "/expected/characterGroup");
    e.muDual = json::expectedFrom(json::field(ex, "muDual", w + "/expected"), w + "/expected/muDual");
    e.pi1 = json::expectedFrom(json::field(ex, "pi1", w + "/expected"), w + "/expected/pi1");
    c.entries.push_back(std::move(e));
  }
  return c;
}

struct SelfTestFailure {
  std::string spec;
  std::string what;
};

/// Recomputes every stored invariant; also checks that the stored datum is
/// the one the spec string describes.
inline std::vector<SelfTestFailure> catalogSelfTest(const CatalogFile& c) {
  std::vector<SelfTestFailure> out;
  for (const auto& e : c.entries) {
    try {
      CatalogEntry fresh = makeCatalogEntry(e.spec);
      if (!(fresh.datum.datum == e.datum.datum) || !(fresh.datum.characters == e.datum.characters))
        out.push_back({e.spec, "stored datum differs from the spec"});
      auto cmp = [&](const char* what, const ExpectedGroup& stored, const FgAbelianGroup& g) {
        if (!(stored == expectedFrom(g, ""))) out.push_back({e.spec, std::string(what) + " is " + g.describe()});
      };
      cmp("characterGroup", e.characterGroup, characterGroup(e.datum).module.group());
      cmp("muDual", e.muDual, muDual(e.datum).module.group());
      cmp("pi1", e.pi1, pi1(e.datum).group());
    } catch (const Error& ex) {
      out.push_back({e.spec, ex.what()});
    }
  }
  return out;
}

/// Loads, validates every entry and runs the self-test.
inline CatalogFile loadCatalog(const std::string& path) {
  CatalogFile c = catalogFromJson(parseJsonText(readTextFile(path), path));
  auto failures = catalogSelfTest(c);
  if (!failures.empty()) throw SchemaError(path + ": self-test failed for " + failures.front().spec + ": " + failures.front().what);
  return c;
}

inline void saveCatalog(const CatalogFile& c, const std::string& path) { writeTextFile(path, canonicalText(catalogToJson(c))); }

// ---------------------------------------------------------------------------
// result records

struct ResultRecord {
  std::string command;
  std::string inputDigest;
  Json outputs = Json::object();
  std::map<std::string, bool> verdicts;

  bool allPass() const {
    for (const auto& [k, v] : verdicts)
      if (!v) return false;
    return true;
  }
  friend bool operator==(const ResultRecord& a, const ResultRecord& b) {
    return a.command == b.command && a.inputDigest == b.inputDigest && a.outputs == b.outputs && a.verdicts == b.verdicts;
  }
};

inline ResultRecord makeRecord(const std::string& command, const std::string& input) {
  return ResultRecord{command, sha256Hex(input), Json::object(), {}};
}

inline Json recordToJson(const ResultRecord& r) {
  Json v = Json::object();
  for (const auto& [k, ok] : r.verdicts) v[k] = ok;
  return Json{{"schema", kResultSchema},
              {"command", r.command},
              {"inputDigest", r.inputDigest},
              {"outputs", r.outputs},
              {"verdicts", v},
              {"pass", r.allPass()}};
}

inline ResultRecord recordFromJson(const Json& j) {
  if (json::text(json::field(j, "schema", ""), "/schema") != kResultSchema) json::fail("/schema", "unsupported schema");
  ResultRecord r;
  r.command = json::text(json::field(j, "command", ""), "/command");
  r.inputDigest = json::text(json::field(j, "inputDigest", ""), "/inputDigest");
  r.outputs = json::field(j, "outputs", "");
  if (!r.outputs.is_object()) json::fail("/outputs", "expected an object");
  const Json& v = json::field(j, "verdicts", "");
  if (!v.is_object()) json::fail("/verdicts", "expected an object");
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (!it.value().is_boolean()) json::fail("/verdicts/" + it.key(), "expected a boolean");
    r.verdicts[it.key()] = it.value().get<bool>();
  }
  return r;
}

inline std::string writeResult(const ResultRecord& r) { return canonicalText(recordToJson(r)); }
inline ResultRecord readResult(const std::string& text) { return recordFromJson(parseJsonText(text, "<result>")); }

}  // namespace redinv
