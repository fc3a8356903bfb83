#include "degen/report.hpp"

#include <sstream>

#include "degen/catalog.hpp"

namespace degen {

namespace {

long to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("coordinate " + z.get_str() + " does not fit the interchange format");
  return z.get_si();
}

mpq_class ratio(const json& p, const json& q) {
  mpq_class r(mpz_class(p.get<long>()), mpz_class(q.get<long>()));
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator in coordinate");
  r.canonicalize();
  return r;
}

mpq_class rational_from(const json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  mpq_class q(j.get<std::string>());
  q.canonicalize();
  return q;
}

PointKind kind_from(const std::string& s) {
  if (s == "inner") return PointKind::Inner;
  if (s == "outer") return PointKind::Outer;
  throw std::invalid_argument("unknown point kind '" + s + "'");
}

json hint_to_json(const CaseHint& h) {
  return {{"line", h.line}, {"preconditions", h.preconditions}, {"citation", h.citation}};
}

CaseHint hint_from_json(const json& j) {
  CaseHint h{j.at("line").get<int>(), j.at("preconditions").get<std::vector<int>>(), j.at("citation").get<std::string>()};
  if (h.citation.empty()) throw std::invalid_argument("hint for line " + std::to_string(h.line) + " has no citation");
  return h;
}

json point_to_json(const SingularPoint& p) {
  return {{"vertex", p.vertex}, {"multiplicity", p.multiplicity}, {"kind", to_string(p.kind)}, {"lines", p.lines_cyclic}};
}

SingularPoint point_from_json(const json& j) {
  return {j.at("vertex").get<int>(), j.at("multiplicity").get<int>(), kind_from(j.at("kind").get<std::string>()),
          j.at("lines").get<std::vector<int>>()};
}

json stats_to_json(const EnumStats& s) {
  return {{"defined", s.defined}, {"max_live", s.max_live}, {"coincidences", s.coincidences}};
}

EnumStats stats_from_json(const json& j) {
  return {j.at("defined").get<std::size_t>(), j.at("max_live").get<std::size_t>(),
          j.at("coincidences").get<std::size_t>()};
}

}  // namespace

json complex_to_json(const PlanarComplex& c) {
  json vs = json::array(), ts = json::array(), ln = json::array();
  for (auto& v : c.vertices())
    vs.push_back({v.id,
                  {to_long(v.p.x.get_num()), to_long(v.p.y.get_num()), to_long(v.p.x.get_den()),
                   to_long(v.p.y.get_den())}});
  for (auto& t : c.triangles()) ts.push_back({t.plane, t.v});
  for (auto& [i, e] : c.numbering()) ln.push_back({i, e});
  return {{"format", "degen-complex/1"}, {"vertices", vs}, {"triangles", ts}, {"line_numbering", ln}};
}

PlanarComplex complex_from_json(const json& j) {
  if (j.value("format", "") != "degen-complex/1")
    throw std::invalid_argument("expected format \"degen-complex/1\"");
  std::vector<Vertex> vs;
  for (auto& v : j.at("vertices")) {
    auto& c = v.at(1);
    if (c.size() != 4) throw std::invalid_argument("vertex coordinates must be [px,py,qx,qy]");
    vs.push_back({v.at(0).get<int>(), {ratio(c[0], c[2]), ratio(c[1], c[3])}});
  }
  std::vector<Triangle> ts;
  for (auto& t : j.at("triangles")) ts.push_back({t.at(0).get<int>(), t.at(1).get<std::array<int, 3>>()});
  PlanarComplex::Numbering num;
  if (j.contains("line_numbering"))
    for (auto& l : j.at("line_numbering")) num.emplace_back(l.at(0).get<int>(), l.at(1).get<std::array<int, 2>>());
  return PlanarComplex(std::move(vs), std::move(ts), std::move(num));
}

json case_to_json(const CaseRecord& c) {
  json j = complex_to_json(c.complex);
  j["name"] = c.name;
  j["alias"] = c.alias;
  j["hints"] = json::array();
  for (auto& h : c.hints) j["hints"].push_back(hint_to_json(h));
  if (c.expected) {
    auto& e = *c.expected;
    json pts = json::array();
    for (auto& p : e.points) pts.push_back({{"vertex", p.vertex}, {"kind", to_string(p.kind)}, {"lines", p.lines}});
    j["expected"] = {{"mu", e.mu},
                     {"d", e.d},
                     {"rho", e.rho},
                     {"m", e.m},
                     {"c1_sq_coeff", e.c1_sq_coeff.get_str()},
                     {"c2_coeff", e.c2_coeff.get_str()},
                     {"chi_coeff", e.chi_coeff.get_str()},
                     {"pi1", to_string(e.pi1)},
                     {"points", pts}};
  }
  j["notes"] = c.notes;
  if (!c.extra_relators.empty()) {
    json ex = json::array();
    for (auto& e : c.extra_relators) {
      std::vector<int> l, r;
      for (auto& x : e.lhs) l.push_back(x.gen);
      for (auto& x : e.rhs) r.push_back(x.gen);
      ex.push_back({{"lhs", l}, {"rhs", r}, {"tag", "inner-point"}});
    }
    j["extra_relators"] = ex;
  }
  if (c.external_result) j["external_result"] = true;
  return j;
}

CaseRecord case_from_json(const json& j) {
  CaseRecord c;
  c.complex = complex_from_json(j);
  c.name = j.value("name", "");
  c.alias = j.value("alias", c.name.empty() ? std::string() : normalize_name(c.name));
  for (auto& h : j.value("hints", json::array())) c.hints.push_back(hint_from_json(h));
  if (j.contains("expected")) {
    auto& e = j.at("expected");
    Expected x;
    x.mu = e.at("mu").get<int>();
    x.d = e.at("d").get<int>();
    x.rho = e.at("rho").get<int>();
    x.m = e.at("m").get<int>();
    x.c1_sq_coeff = rational_from(e.at("c1_sq_coeff"));
    x.c2_coeff = rational_from(e.at("c2_coeff"));
    x.chi_coeff = rational_from(e.at("chi_coeff"));
    x.pi1 = pi1_from(e.at("pi1").get<std::string>());
    for (auto& p : e.value("points", json::array()))
      x.points.push_back({p.at("vertex").get<int>(), kind_from(p.at("kind").get<std::string>()),
                          p.at("lines").get<std::vector<int>>()});
    c.expected = std::move(x);
  }
  c.notes = j.value("notes", std::vector<std::string>{});
  for (auto& e : j.value("extra_relators", json::array())) {
    if (e.value("tag", "inner-point") != "inner-point") throw std::invalid_argument("extra relators must be inner-point");
    c.extra_relators.push_back({word_of(e.at("lhs").get<std::vector<int>>()), word_of(e.at("rhs").get<std::vector<int>>())});
  }
  c.external_result = j.value("external_result", false);
  return c;
}

json presentation_to_json(const Presentation& p) {
  json rs = json::array();
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    rs.push_back({{"word", word_to_text(p.relators[i])}, {"tag", to_string(p.tags[i])}});
  return {{"generators", p.generators}, {"relators", rs}};
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  p.generators = j.at("generators").get<std::vector<int>>();
  for (auto& r : j.at("relators"))
    p.add(word_from_text(r.at("word").get<std::string>()), relator_tag_from(r.at("tag").get<std::string>()));
  p.check();
  return p;
}

json verdict_to_json(const Verdict& v) {
  json cert;
  if (auto* c = std::get_if<CosetOrder>(&v.certificate))
    cert = {{"type", "coset-order"}, {"order", c->order}};
  else if (auto* f = std::get_if<ForkVertex>(&v.certificate))
    cert = {{"type", "fork-vertex"}, {"plane", f->plane}, {"lines", f->lines}};
  else
    cert = {{"type", "none"}};
  json log = json::array(), stale = json::array();
  for (auto& d : v.facts.log)
    log.push_back({{"rule", to_string(d.rule)}, {"line", d.line}, {"vertex", d.vertex}, {"citation", d.citation}});
  for (auto& h : v.facts.stale) stale.push_back(hint_to_json(h));
  return {{"status", to_string(v.status)},
          {"mode", to_string(v.mode)},
          {"certificate", cert},
          {"facts", {{"lines", v.facts.lines}, {"log", log}, {"stale_hints", stale}}},
          {"enumeration", v.enumeration ? stats_to_json(*v.enumeration) : json(nullptr)},
          {"reason", v.reason}};
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  v.status = pi1_from(j.at("status").get<std::string>());
  v.mode = engine_mode_from(j.at("mode").get<std::string>());
  auto& c = j.at("certificate");
  auto type = c.at("type").get<std::string>();
  if (type == "coset-order")
    v.certificate = CosetOrder{c.at("order").get<std::size_t>()};
  else if (type == "fork-vertex")
    v.certificate = ForkVertex{c.at("plane").get<int>(), c.at("lines").get<std::array<int, 3>>()};
  else if (type != "none")
    throw std::invalid_argument("unknown certificate type '" + type + "'");
  auto& f = j.at("facts");
  v.facts.lines = f.at("lines").get<std::set<int>>();
  for (auto& d : f.at("log"))
    v.facts.log.push_back({rule_from(d.at("rule").get<std::string>()), d.at("line").get<int>(), d.at("vertex").get<int>(),
                           d.at("citation").get<std::string>()});
  for (auto& h : f.at("stale_hints")) v.facts.stale.push_back(hint_from_json(h));
  if (!j.at("enumeration").is_null()) v.enumeration = stats_from_json(j.at("enumeration"));
  v.reason = j.at("reason").get<std::string>();
  return v;
}

json chern_to_json(const ChernData& c) {
  return {{"c1_sq", c.c1_sq.get_str()},        {"c2", c.c2.get_str()},           {"chi", c.chi.get_str()},
          {"c1_sq_coeff", c.c1_sq_coeff.get_str()}, {"c2_coeff", c.c2_coeff.get_str()}, {"chi_coeff", c.chi_coeff.get_str()}};
}

ChernData chern_from_json(const json& j) {
  ChernData c;
  c.c1_sq = mpz_class(j.at("c1_sq").get<std::string>());
  c.c2 = mpz_class(j.at("c2").get<std::string>());
  c.chi = rational_from(j.at("chi"));
  c.c1_sq_coeff = rational_from(j.at("c1_sq_coeff"));
  c.c2_coeff = rational_from(j.at("c2_coeff"));
  c.chi_coeff = rational_from(j.at("chi_coeff"));
  return c;
}

AnalysisReport analyze(const CaseRecord& c, const DecideOptions& opt) {
  AnalysisReport r;
  r.name = c.name.empty() ? std::string("(unnamed)") : c.name;
  r.points = classify_vertices(c.complex);
  auto p = reduced_presentation(c.complex, {opt.forks, c.extra_relators});
  r.generators = p.generators;
  for (auto t : p.tags) ++r.relator_counts[to_string(t)];
  r.verdict = decide(c, opt);
  r.stats = branch_stats(c.complex, r.points);
  r.chern = chern(r.stats);
  if (!c.expected) return r;
  auto& e = *c.expected;
  r.expected = e.pi1;
  auto miss = [&](const std::string& field, const std::string& want, const std::string& got) {
    r.mismatches.push_back(field + ": expected " + want + ", got " + got);
  };
  Pi1Status got = r.verdict.status;
  if (opt.hints) {
    if (got != e.pi1) miss("pi1", to_string(e.pi1), to_string(got));
  } else if (got != Pi1Status::Undecided && got != e.pi1) {
    miss("pi1", to_string(e.pi1), to_string(got));
  }
  if (r.stats.mu != e.mu) miss("mu", std::to_string(e.mu), std::to_string(r.stats.mu));
  if (r.stats.d != e.d) miss("d", std::to_string(e.d), std::to_string(r.stats.d));
  if (r.stats.rho != e.rho) miss("rho", std::to_string(e.rho), std::to_string(r.stats.rho));
  if (r.stats.m != e.m) miss("m", std::to_string(e.m), std::to_string(r.stats.m));
  if (r.chern.c1_sq_coeff != e.c1_sq_coeff) miss("c1_sq_coeff", e.c1_sq_coeff.get_str(), r.chern.c1_sq_coeff.get_str());
  if (r.chern.c2_coeff != e.c2_coeff) miss("c2_coeff", e.c2_coeff.get_str(), r.chern.c2_coeff.get_str());
  if (r.chern.chi_coeff != e.chi_coeff) miss("chi_coeff", e.chi_coeff.get_str(), r.chern.chi_coeff.get_str());
  return r;
}

json report_to_json(const AnalysisReport& r) {
  json pts = json::array();
  for (auto& p : r.points) pts.push_back(point_to_json(p));
  return {{"name", r.name},
          {"points", pts},
          {"presentation", {{"generators", r.generators}, {"relator_counts", r.relator_counts}}},
          {"verdict", verdict_to_json(r.verdict)},
          {"branch_stats", {{"n", r.stats.n}, {"m", r.stats.m}, {"mu", r.stats.mu}, {"d", r.stats.d}, {"rho", r.stats.rho}}},
          {"chern", chern_to_json(r.chern)},
          {"expected_pi1", r.expected ? json(to_string(*r.expected)) : json(nullptr)},
          {"mismatches", r.mismatches}};
}

AnalysisReport report_from_json(const json& j) {
  AnalysisReport r;
  r.name = j.at("name").get<std::string>();
  for (auto& p : j.at("points")) r.points.push_back(point_from_json(p));
  r.generators = j.at("presentation").at("generators").get<std::vector<int>>();
  r.relator_counts = j.at("presentation").at("relator_counts").get<std::map<std::string, std::size_t>>();
  r.verdict = verdict_from_json(j.at("verdict"));
  auto& s = j.at("branch_stats");
  r.stats = {s.at("n").get<int>(), s.at("m").get<int>(), s.at("mu").get<int>(), s.at("d").get<int>(),
             s.at("rho").get<int>()};
  r.chern = chern_from_json(j.at("chern"));
  if (!j.at("expected_pi1").is_null()) r.expected = pi1_from(j.at("expected_pi1").get<std::string>());
  r.mismatches = j.at("mismatches").get<std::vector<std::string>>();
  return r;
}

std::string coeff_text(const mpq_class& q, int n) {
  return q.get_str() + "·" + std::to_string(n) + "!";
}

std::string report_markdown(const AnalysisReport& r) {
  std::ostringstream os;
  os << "## " << r.name << "\n\n";
  os << "| vertex | kind | k | lines (rotational) |\n|---|---|---|---|\n";
  for (auto& p : r.points) {
    os << "| " << p.vertex << " | " << to_string(p.kind) << " | " << p.multiplicity << " |";
    for (auto l : p.lines_cyclic) os << ' ' << l;
    os << " |\n";
  }
  os << "\nPresentation: " << r.generators.size() << " generators;";
  for (auto& [t, n] : r.relator_counts) os << ' ' << n << ' ' << t;
  os << "\n\nVerdict: **" << to_string(r.verdict.status) << "** (" << to_string(r.verdict.mode) << ")";
  if (auto* c = std::get_if<CosetOrder>(&r.verdict.certificate)) os << ", coset order " << c->order;
  if (auto* f = std::get_if<ForkVertex>(&r.verdict.certificate))
    os << ", fork at plane " << f->plane << " on lines " << f->lines[0] << ',' << f->lines[1] << ',' << f->lines[2];
  os << "\n" << r.verdict.reason << "\n";
  for (auto& d : r.verdict.facts.log) {
    os << "- Γ" << d.line << " = Γ" << d.line << "' by " << to_string(d.rule);
    if (d.vertex >= 0) os << " at vertex " << d.vertex;
    if (!d.citation.empty()) os << " (" << d.citation << ")";
    os << '\n';
  }
  for (auto& h : r.verdict.facts.stale) os << "- stale hint for line " << h.line << ": " << h.citation << '\n';
  int n = r.stats.n;
  os << "\nn=" << n << " m=" << r.stats.m << " mu=" << r.stats.mu << " d=" << r.stats.d << " rho=" << r.stats.rho << "\n";
  os << "c1^2 = " << coeff_text(r.chern.c1_sq_coeff, n) << ", c2 = " << coeff_text(r.chern.c2_coeff, n)
     << ", chi = " << coeff_text(r.chern.chi_coeff, n) << "\n";
  if (r.expected) os << "expected pi1: " << to_string(*r.expected) << "\n";
  for (auto& m : r.mismatches) os << "MISMATCH " << m << '\n';
  return os.str();
}

std::string table_markdown(const std::vector<TableRow>& rows, int n) {
  std::ostringstream os;
  os << "| case | c1^2 | c2 | chi | pi1 |\n|---|---|---|---|---|\n";
  for (auto& r : rows)
    os << "| " << r.name << " | " << coeff_text(r.chern.c1_sq_coeff, n) << " | " << coeff_text(r.chern.c2_coeff, n)
       << " | " << coeff_text(r.chern.chi_coeff, n) << " | " << to_string(r.status) << " |\n";
  return os.str();
}

json table_json(const std::vector<TableRow>& rows) {
  json out = json::array();
  for (auto& r : rows) {
    json row = chern_to_json(r.chern);
    row["name"] = r.name;
    row["pi1"] = to_string(r.status);
    out.push_back(row);
  }
  return out;
}

}  // namespace degen
