#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "degen/catalog.hpp"
#include "degen/enumerator.hpp"
#include "degen/fpgroup.hpp"
#include "degen/invariants.hpp"
#include "degen/pipeline.hpp"
#include "degen/relations.hpp"
#include "degen/report.hpp"

namespace fs = std::filesystem;
using namespace degen;

namespace {

constexpr int kOk = 0, kError = 1, kMismatch = 2;

struct Config {
  std::string format = "markdown";
  std::size_t max_cosets = 1'000'000;
  std::string strategy = "relator-first";
  bool no_hints = false;
  bool forks = false;
  unsigned jobs = 1;
  bool trace = false;
};

DecideOptions decide_options(const Config& cfg) {
  DecideOptions o;
  o.hints = !cfg.no_hints;
  o.forks = cfg.forks;
  o.limits.max_cosets = cfg.max_cosets;
  o.limits.strategy = strategy_from(cfg.strategy);
  if (cfg.trace) o.limits.trace = &std::cerr;
  return o;
}

CaseRecord select(const std::string& s) {
  if (!fs::is_regular_file(s)) return load(s);
  auto c = load_file(s);
  if (c.name.empty()) c.name = fs::path(s).stem().string();
  return c;
}

// Runs f over items on `jobs` threads; results come back in input order.
template <class T, class F>
auto fan_out(const std::vector<T>& items, unsigned jobs, F f) {
  using R = decltype(f(items[0]));
  std::vector<R> out(items.size());
  std::vector<std::future<void>> pool;
  std::size_t stride = std::max(1u, jobs);
  for (std::size_t j = 0; j < stride; ++j)
    pool.push_back(std::async(std::launch::async, [&, j] {
      for (std::size_t i = j; i < items.size(); i += stride) out[i] = f(items[i]);
    }));
  for (auto& p : pool) p.get();
  return out;
}

int cmd_list(const Config& cfg) {
  auto cases = all();
  if (cfg.format == "json") {
    json out = json::array();
    for (auto& c : cases)
      out.push_back({{"name", c.name}, {"alias", c.alias}, {"pi1", to_string(c.expected->pi1)},
                     {"chi_coeff", c.expected->chi_coeff.get_str()}, {"external_result", c.external_result}});
    std::cout << out.dump(1) << '\n';
    return kOk;
  }
  std::cout << "| case | alias | pi1 | chi |\n|---|---|---|---|\n";
  for (auto& c : cases)
    std::cout << "| " << c.name << " | " << c.alias << " | " << to_string(c.expected->pi1) << " | "
              << coeff_text(c.expected->chi_coeff, 6) << " |\n";
  return kOk;
}

int cmd_analyze(const Config& cfg, const std::vector<std::string>& selectors, bool every) {
  std::vector<CaseRecord> cases;
  if (every) cases = all();
  for (auto& s : selectors) cases.push_back(select(s));
  if (cases.empty()) throw std::invalid_argument("nothing to analyze (give a case name, a file, or --all)");
  auto opt = decide_options(cfg);
  auto reports = fan_out(cases, cfg.jobs, [&](const CaseRecord& c) { return analyze(c, opt); });
  bool mismatch = false;
  json arr = json::array();
  for (auto& r : reports) {
    mismatch = mismatch || !r.mismatches.empty();
    if (cfg.format == "json")
      arr.push_back(report_to_json(r));
    else
      std::cout << report_markdown(r) << '\n';
  }
  if (cfg.format == "json") std::cout << (arr.size() == 1 ? arr[0] : arr).dump(1) << '\n';
  return mismatch ? kMismatch : kOk;
}

int cmd_table(const Config& cfg) {
  auto cases = all();
  auto opt = decide_options(cfg);
  auto rows = fan_out(cases, cfg.jobs, [&](const CaseRecord& c) {
    auto s = branch_stats(c.complex, classify_vertices(c.complex));
    return TableRow{c.name, chern(s), decide(c, opt).status};
  });
  std::vector<std::string> diffs;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& e = *cases[i].expected;
    auto& r = rows[i];
    auto diff = [&](const std::string& col, const mpq_class& want, const mpq_class& got) {
      if (want != got) diffs.push_back(r.name + " " + col + ": " + want.get_str() + " != " + got.get_str());
    };
    diff("c1^2", e.c1_sq_coeff, r.chern.c1_sq_coeff);
    diff("c2", e.c2_coeff, r.chern.c2_coeff);
    diff("chi", e.chi_coeff, r.chern.chi_coeff);
    bool ok = opt.hints ? r.status == e.pi1 : (r.status == e.pi1 || r.status == Pi1Status::Undecided);
    if (!ok) diffs.push_back(r.name + " pi1: " + to_string(e.pi1) + " != " + to_string(r.status));
  }
  if (cfg.format == "json") {
    std::cout << json{{"rows", table_json(rows)}, {"diffs", diffs}}.dump(1) << '\n';
  } else {
    std::cout << table_markdown(rows) << "\n" << diffs.size() << " diffs against the catalog\n";
    for (auto& d : diffs) std::cout << "DIFF " << d << '\n';
  }
  return diffs.empty() ? kOk : kMismatch;
}

int cmd_enumerate(const Config& cfg, int triangles, bool count_only, const std::string& out_dir, bool match) {
  auto maps = enumerate(triangles, {8, cfg.jobs});
  if (count_only) {
    std::cout << maps.size() << '\n';
    return kOk;
  }
  if (!out_dir.empty()) fs::create_directories(out_dir);
  json listing = json::array();
  for (std::size_t i = 0; i < maps.size(); ++i) {
    auto c = embed(maps[i]);
    auto form = to_string(canonical_form(maps[i]));
    listing.push_back({{"index", i + 1}, {"canonical_form", form}});
    if (!out_dir.empty()) {
      std::ofstream f(fs::path(out_dir) / ("map-" + std::to_string(triangles) + "-" + std::to_string(i + 1) + ".json"));
      f << complex_to_json(c).dump(1) << '\n';
    }
  }
  int rc = kOk;
  json m;
  if (match) {
    auto r = match_catalog(maps, all());
    m = {{"pairs", json::array()}, {"unmatched_maps", r.unmatched_maps}, {"unmatched_cases", r.unmatched_cases},
         {"shared_forms", r.shared_forms}, {"bijection", r.bijection()}};
    for (auto& [i, n] : r.pairs) m["pairs"].push_back({i + 1, n});
    if (!r.bijection()) rc = kMismatch;
  }
  if (cfg.format == "json") {
    json out{{"triangles", triangles}, {"count", maps.size()}, {"maps", listing}};
    if (match) out["catalog"] = m;
    std::cout << out.dump(1) << '\n';
  } else {
    std::cout << maps.size() << " classes of triangulated disks with " << triangles << " triangles\n";
    for (auto& l : listing) std::cout << l["index"] << ": " << l["canonical_form"].get<std::string>() << '\n';
    if (match) {
      std::cout << "catalog bijection: " << (m["bijection"].get<bool>() ? "yes" : "no") << '\n';
      for (auto& s : m["shared_forms"]) std::cout << "same class: " << s.dump() << '\n';
      for (auto& u : m["unmatched_cases"]) std::cout << "unmatched case: " << u.get<std::string>() << '\n';
      for (auto& u : m["unmatched_maps"]) std::cout << "unmatched map: " << u.get<std::size_t>() + 1 << '\n';
    }
  }
  return rc;
}

int cmd_export(const Config& cfg, const std::string& sel, const std::string& out_dir) {
  auto c = select(sel);
  auto p = reduced_presentation(c.complex, {cfg.forks, c.extra_relators});
  std::string text = cfg.format == "json" ? presentation_to_json(p).dump(1) + "\n" : to_text(p);
  if (out_dir.empty()) {
    std::cout << text;
  } else {
    fs::create_directories(out_dir);
    auto path = fs::path(out_dir) / ((c.alias.empty() ? "presentation" : c.alias) + (cfg.format == "json" ? ".json" : ".txt"));
    std::ofstream(path) << text;
    std::cout << path.string() << '\n';
  }
  return kOk;
}

int cmd_verify(const Config& cfg) {
  auto rep = verify_catalog(all(), {!cfg.no_hints, decide_options(cfg).limits});
  for (auto& i : rep.issues) std::cout << "ISSUE " << i.case_name << " " << i.field << ": " << i.detail << '\n';
  for (auto& n : rep.requires_hints) std::cout << "requires hints: " << n << '\n';
  std::cout << (rep.clean() ? "catalog verified" : "catalog has issues") << '\n';
  return rep.clean() ? kOk : kMismatch;
}

int cmd_abelianize(const Config& cfg, const std::string& sel) {
  auto c = select(sel);
  auto p = reduced_presentation(c.complex, {cfg.forks, c.extra_relators});
  auto r = kernel_abelianization(p, permutation_assignment(c.complex));
  std::vector<std::string> tor;
  for (auto& t : r.torsion) tor.push_back(t.get_str());
  if (cfg.format == "json") {
    std::cout << json{{"name", c.name}, {"free_rank", r.free_rank}, {"torsion", tor}}.dump(1) << '\n';
  } else {
    std::cout << c.name << ": kernel abelianization Z^" << r.free_rank;
    for (auto& t : tor) std::cout << " + Z/" << t;
    std::cout << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar degenerations of surfaces: fundamental groups of Galois covers and Chern numbers"};
  app.require_subcommand(1);
  Config cfg;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "markdown or json")->check(CLI::IsMember({"markdown", "json"}));
  };
  auto engine = [&](CLI::App* sub) {
    sub->add_option("--max-cosets", cfg.max_cosets, "coset limit for Todd-Coxeter")->check(CLI::PositiveNumber);
    sub->add_option("--strategy", cfg.strategy, "relator-first or coincidence-first")
        ->check(CLI::IsMember({"relator-first", "coincidence-first", "hlt", "felsch"}));
    sub->add_flag("--no-hints", cfg.no_hints, "use the lemmas only");
    sub->add_flag("--forks", cfg.forks, "append fork relators to presentations");
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--trace", cfg.trace, "print coset definitions and coincidences to stderr");
  };

  auto* list = app.add_subcommand("list", "list catalogued cases");
  common(list);

  std::vector<std::string> selectors;
  bool every = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze catalogued cases or complex files");
  analyze_cmd->add_option("case", selectors, "case name, alias, or path to a degen-complex/1 file");
  analyze_cmd->add_flag("--all", every, "every catalogued case");
  common(analyze_cmd);
  engine(analyze_cmd);

  auto* table = app.add_subcommand("table", "reproduce the invariants table and diff it against the catalog");
  common(table);
  engine(table);

  int triangles = 6;
  bool count_only = false, match = false;
  std::string out_dir;
  auto* en = app.add_subcommand("enumerate", "enumerate triangulated disks up to isomorphism");
  en->add_option("--triangles", triangles, "number of triangles")->check(CLI::Range(1, 8));
  en->add_flag("--count-only", count_only, "print the number of classes only");
  en->add_flag("--match", match, "match the classes against the catalog");
  en->add_option("--out-dir", out_dir, "write one degen-complex/1 file per class");
  en->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  common(en);

  std::string sel;
  auto* ex = app.add_subcommand("export", "write the reduced presentation");
  ex->add_option("case", sel, "case name, alias, or file")->required();
  ex->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json", "markdown"}));
  ex->add_flag("--forks", cfg.forks, "append fork relators");
  ex->add_option("--out-dir", out_dir, "directory for the output file");

  auto* ver = app.add_subcommand("verify", "cross-check every catalog record");
  engine(ver);

  auto* ab = app.add_subcommand("abelianize", "abelianization of the kernel onto S_n");
  ab->add_option("case", sel, "case name, alias, or file")->required();
  ab->add_flag("--forks", cfg.forks, "append fork relators");
  common(ab);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kError;
  }

  try {
    if (*list) return cmd_list(cfg);
    if (*analyze_cmd) return cmd_analyze(cfg, selectors, every);
    if (*table) return cmd_table(cfg);
    if (*en) return cmd_enumerate(cfg, triangles, count_only, out_dir, match);
    if (*ex) return cmd_export(cfg, sel, out_dir);
    if (*ver) return cmd_verify(cfg);
    if (*ab) return cmd_abelianize(cfg, sel);
  } catch (const std::exception& e) {
    std::cerr << "degen: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
