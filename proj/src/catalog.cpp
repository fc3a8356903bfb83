#include "degen/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "degen/invariants.hpp"
#include "degen/pipeline.hpp"
#include "degen/report.hpp"

namespace fs = std::filesystem;

namespace degen {

const char* to_string(Pi1Status s) {
  switch (s) {
    case Pi1Status::Trivial: return "Trivial";
    case Pi1Status::NonTrivial: return "NonTrivial";
    case Pi1Status::Undecided: return "Undecided";
  }
  return "?";
}

Pi1Status pi1_from(const std::string& s) {
  for (auto x : {Pi1Status::Trivial, Pi1Status::NonTrivial, Pi1Status::Undecided})
    if (s == to_string(x)) return x;
  throw std::invalid_argument("unknown pi1 status '" + s + "'");
}

std::string catalog_dir() {
  if (const char* env = std::getenv("DEGEN_CATALOG_DIR"); env && *env) return env;
  return DEGEN_DATA_DIR;
}

std::string normalize_name(const std::string& name) {
  std::string s;
  for (char ch : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (const std::string cup : {"\\cup", "\xe2\x88\xaa"}) {
    for (auto p = s.find(cup); p != std::string::npos; p = s.find(cup)) s.replace(p, cup.size(), "cup");
  }
  std::string t;
  for (char ch : s)
    if (ch != '_' && ch != '{' && ch != '}' && ch != ' ' && ch != '$') t += ch == ',' ? '-' : ch;
  if (t.size() >= 2 && t[0] == 'u' && t[1] != '-') t.insert(1, "-");
  return t;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) out += hex[md[i] >> 4], out += hex[md[i] & 15];
  return out;
}

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw CatalogError("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json manifest(const std::string& dir) {
  fs::path p = fs::path(dir) / "manifest.json";
  if (!fs::exists(p)) throw CatalogError("no manifest.json in catalog directory " + dir);
  json m;
  try {
    m = json::parse(slurp(p));
  } catch (const json::exception& e) {
    throw CatalogError("malformed manifest: " + std::string(e.what()));
  }
  if (m.value("format", "") != "degen-catalog/1") throw CatalogError("manifest format must be degen-catalog/1");
  if (!m.contains("cases") || m["cases"].empty()) throw CatalogError("catalog " + dir + " lists no cases");
  return m;
}

CaseRecord parse_checked(const fs::path& p, const std::string& bytes) {
  CaseRecord c;
  try {
    c = case_from_json(json::parse(bytes));
  } catch (const std::exception& e) {
    throw CatalogError("malformed case file " + p.string() + ": " + e.what());
  }
  auto rep = validate(c.complex);
  if (!rep.ok()) throw CatalogError("case file " + p.string() + " does not validate: " + rep.summary());
  return c;
}

CaseRecord load_entry(const std::string& dir, const json& entry) {
  fs::path p = fs::path(dir) / entry.at("file").get<std::string>();
  auto bytes = slurp(p);
  if (sha256_hex(bytes) != entry.at("sha256").get<std::string>()) throw CatalogError("checksum mismatch for " + p.string());
  auto c = parse_checked(p, bytes);
  if (!c.expected) throw CatalogError("catalog case " + c.name + " has no expected block");
  return c;
}

}  // namespace

CaseRecord load_file(const std::string& path) { return parse_checked(path, slurp(path)); }

CaseRecord load(const std::string& name, const std::string& dir) {
  auto key = normalize_name(name);
  auto m = manifest(dir);
  for (auto& e : m["cases"])
    if (normalize_name(e.at("name").get<std::string>()) == key) return load_entry(dir, e);
  throw CatalogError("unknown case '" + name + "'");
}

std::vector<CaseRecord> all(const std::string& dir) {
  auto m = manifest(dir);
  std::vector<CaseRecord> out;
  for (auto& e : m["cases"]) out.push_back(load_entry(dir, e));
  return out;
}

CatalogReport verify_catalog(const std::vector<CaseRecord>& cases, const VerifyOptions& opt) {
  CatalogReport rep;
  for (auto& c : cases) {
    auto issue = [&](const std::string& field, const std::string& detail) { rep.issues.push_back({c.name, field, detail}); };
    auto v = validate(c.complex);
    if (!v.ok()) {
      issue("complex", v.summary());
      continue;
    }
    if (!c.expected) {
      issue("expected", "missing");
      continue;
    }
    auto& e = *c.expected;
    auto points = classify_vertices(c.complex);
    std::vector<ExpectedPoint> got;
    for (auto& p : points) {
      auto l = p.lines_cyclic;
      std::sort(l.begin(), l.end());
      got.push_back({p.vertex, p.kind, l});
    }
    auto want = e.points;
    auto by_vertex = [](const ExpectedPoint& a, const ExpectedPoint& b) { return a.vertex < b.vertex; };
    std::sort(got.begin(), got.end(), by_vertex);
    std::sort(want.begin(), want.end(), by_vertex);
    if (got != want) issue("points", "classified vertices differ from the recorded vertex list");
    auto s = branch_stats(c.complex, points);
    if (s.mu != e.mu) issue("mu", std::to_string(s.mu) + " != " + std::to_string(e.mu));
    if (s.d != e.d) issue("d", std::to_string(s.d) + " != " + std::to_string(e.d));
    if (s.rho != e.rho) issue("rho", std::to_string(s.rho) + " != " + std::to_string(e.rho));
    if (s.m != e.m) issue("m", std::to_string(s.m) + " != " + std::to_string(e.m));
    try {
      auto ch = chern(s);
      if (ch.c1_sq_coeff != e.c1_sq_coeff) issue("c1_sq_coeff", ch.c1_sq_coeff.get_str() + " != " + e.c1_sq_coeff.get_str());
      if (ch.c2_coeff != e.c2_coeff) issue("c2_coeff", ch.c2_coeff.get_str() + " != " + e.c2_coeff.get_str());
      if (ch.chi_coeff != e.chi_coeff) issue("chi_coeff", ch.chi_coeff.get_str() + " != " + e.chi_coeff.get_str());
    } catch (const ArithmeticError& ex) {
      issue("chern", ex.what());
    }
    auto verdict = decide(c, {opt.hints, false, opt.limits});
    if (opt.hints) {
      if (verdict.status != e.pi1) issue("pi1", std::string(to_string(verdict.status)) + " != " + to_string(e.pi1));
    } else if (verdict.status == Pi1Status::Undecided && e.pi1 != Pi1Status::Undecided) {
      rep.requires_hints.push_back(c.name);
    } else if (verdict.status != e.pi1 && verdict.status != Pi1Status::Undecided) {
      issue("pi1", std::string(to_string(verdict.status)) + " contradicts " + to_string(e.pi1));
    }
    for (auto& h : verdict.facts.stale)
      if (opt.hints) issue("hints", "hint for line " + std::to_string(h.line) + " never applied");
  }
  return rep;
}

}  // namespace degen
