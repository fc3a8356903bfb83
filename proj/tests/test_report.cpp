#include "doctest.h"

#include "degen/report.hpp"
#include "support.hpp"

using namespace degen;
using fixtures::by_name;
using fixtures::catalog;

TEST_SUITE("report") {
  TEST_CASE("complex JSON round trip") {
    for (auto& c : catalog()) {
      CAPTURE(c.name);
      auto j = complex_to_json(c.complex);
      CHECK(j["format"] == "degen-complex/1");
      auto back = complex_from_json(j);
      CHECK(classify_vertices(back) == classify_vertices(c.complex));
      CHECK(complex_to_json(back) == j);
    }
    auto f = fixtures::figure_one();
    auto j = complex_to_json(f);
    // Coordinates are stored as [px, py, qx, qy] with x = px/qx and y = py/qy.
    CHECK(j["vertices"][0][1] == json::array({3, 103, 5, 100}));
  }

  TEST_CASE("malformed complex JSON") {
    CHECK_THROWS(complex_from_json(json::parse(R"({"format": "degen-complex/1"})")));
    CHECK_THROWS(complex_from_json(json::parse(R"({"format": "x", "vertices": [], "triangles": []})")));
  }

  TEST_CASE("case JSON round trip") {
    for (auto& c : catalog()) {
      CAPTURE(c.name);
      auto back = case_from_json(case_to_json(c));
      CHECK(back.name == c.name);
      CHECK(back.hints == c.hints);
      CHECK(back.notes == c.notes);
      CHECK(back.external_result == c.external_result);
      REQUIRE(back.expected);
      CHECK(back.expected->points == c.expected->points);
      CHECK(back.expected->chi_coeff == c.expected->chi_coeff);
      CHECK(back.expected->pi1 == c.expected->pi1);
      CHECK(case_to_json(back) == case_to_json(c));
    }
  }

  TEST_CASE("presentation, verdict and chern round trips") {
    for (auto& c : catalog()) {
      CAPTURE(c.name);
      auto p = reduced_presentation(c.complex, {.forks = true, .supplied = c.extra_relators});
      auto q = presentation_from_json(presentation_to_json(p));
      CHECK(q.relators == p.relators);
      CHECK(q.tags == p.tags);
      auto v = decide(c);
      CHECK(verdict_from_json(verdict_to_json(v)) == v);
      auto ch = chern(branch_stats(c.complex, classify_vertices(c.complex)));
      CHECK(chern_from_json(chern_to_json(ch)) == ch);
    }
    Verdict undecided;
    undecided.reason = "nothing";
    CHECK(verdict_from_json(verdict_to_json(undecided)) == undecided);
    CHECK(verdict_to_json(undecided)["certificate"]["type"] == "none");
  }

  TEST_CASE("analysis reports") {
    for (auto& c : catalog()) {
      CAPTURE(c.name);
      auto r = analyze(c);
      CHECK(r.mismatches.empty());
      CHECK(r.expected == c.expected->pi1);
      CHECK(report_from_json(report_to_json(r)) == r);
      CHECK(report_markdown(r).find(c.name) != std::string::npos);
      auto lemma = analyze(c, {.hints = false});
      CHECK(lemma.mismatches.empty());
    }
  }

  TEST_CASE("analysis flags a wrong expectation") {
    auto c = by_name("U_{0,4}");
    c.expected->pi1 = Pi1Status::NonTrivial;
    c.expected->d = 23;
    auto r = analyze(c);
    CHECK(r.mismatches.size() >= 2);
  }

  TEST_CASE("coefficient text") {
    CHECK(coeff_text(4, 6) == "4·6!");
    CHECK(coeff_text(mpq_class(-4, 3), 6) == "-4/3·6!");
    CHECK(coeff_text(mpq_class(11, 2), 6) == "11/2·6!");
    CHECK(coeff_text(0, 6) == "0·6!");
  }

  TEST_CASE("table renderings") {
    std::vector<TableRow> rows;
    for (auto& c : catalog())
      rows.push_back({c.name, chern(branch_stats(c.complex, classify_vertices(c.complex))), c.expected->pi1});
    auto md = table_markdown(rows);
    CHECK(md.find("U_{0,7}") != std::string::npos);
    CHECK(md.find("-7/3·6!") != std::string::npos);
    CHECK(std::count(md.begin(), md.end(), '\n') >= 31);
    auto j = table_json(rows);
    CHECK(j.size() == 29);
  }
}
