#include "doctest.h"

#include "degen/pipeline.hpp"
#include "support.hpp"

using namespace degen;
using fixtures::by_name;
using fixtures::catalog;

namespace {

const std::set<std::string> nontrivial{"U_{0,5,1}", "U_{0,5,2}", "U_{0,5,3}", "U_{0,5,4}",
                                       "U_{0,5,5}", "U_{0,6,2}", "U_{0,6,3}", "U_{3,5}"};

PlanarComplex star() {
  return fixtures::from_ints({{1, {0, 0}}, {2, {4, 0}}, {3, {2, 4}}, {4, {2, -2}}, {5, {5, 3}}, {6, {-1, 3}}},
                             {{1, 2, 3}, {1, 4, 2}, {2, 5, 3}, {3, 6, 1}});
}

CaseRecord bare(const std::string& name, PlanarComplex c) {
  CaseRecord r;
  r.name = name;
  r.complex = std::move(c);
  return r;
}

}  // namespace

TEST_SUITE("pipeline") {
  TEST_CASE("rule and mode names") {
    for (auto r : {Rule::OnePoint, Rule::TwoPoint, Rule::InnerThree, Rule::OuterThree, Rule::Hint})
      CHECK(rule_from(to_string(r)) == r);
    CHECK(std::string(to_string(Rule::OuterThree)) == "outer-three-point");
    CHECK(engine_mode_from("lemmas-only") == EngineMode::LemmasOnly);
    CHECK_THROWS(rule_from("five-point"));
  }

  TEST_CASE("figure one equalities") {
    auto f = propagate_equalities(classify_vertices(fixtures::figure_one()));
    // 1-point at vertex 6 gives line 1; the inner 3-point gives its smallest line 3.
    CHECK(f.lines == std::set<LineIndex>{1, 3});
    CHECK_FALSE(f.complete({1, 2, 3, 4, 5, 6}));
    REQUIRE(f.log.size() == 2);
    for (auto& d : f.log) {
      if (d.line == 1) CHECK((d.rule == Rule::OnePoint && d.vertex == 6));
      if (d.line == 3) CHECK((d.rule == Rule::InnerThree && d.vertex == 4));
    }
  }

  TEST_CASE("two-point chains propagate") {
    std::vector<SingularPoint> pts{{1, 1, PointKind::Outer, {1}},
                                   {2, 2, PointKind::Outer, {1, 2}},
                                   {3, 2, PointKind::Outer, {3, 2}},
                                   {4, 2, PointKind::Outer, {3, 4}}};
    auto f = propagate_equalities(pts);
    CHECK(f.lines == std::set<LineIndex>{1, 2, 3, 4});
    CHECK(f.log.size() == 4);
    CHECK(f.log.back().rule == Rule::TwoPoint);
  }

  TEST_CASE("outer 3-point needs monotone numbering") {
    std::vector<SingularPoint> mono{{1, 1, PointKind::Outer, {1}}, {2, 3, PointKind::Outer, {1, 2, 3}}};
    CHECK(propagate_equalities(mono).lines == std::set<LineIndex>{1, 2, 3});
    std::vector<SingularPoint> rev{{1, 1, PointKind::Outer, {1}}, {2, 3, PointKind::Outer, {3, 2, 1}}};
    CHECK(propagate_equalities(rev).lines == std::set<LineIndex>{1, 2, 3});
    std::vector<SingularPoint> bent{{1, 1, PointKind::Outer, {1}}, {2, 3, PointKind::Outer, {2, 1, 3}}};
    CHECK(propagate_equalities(bent).lines == std::set<LineIndex>{1});
    // The largest line alone is not enough.
    std::vector<SingularPoint> top{{1, 1, PointKind::Outer, {3}}, {2, 3, PointKind::Outer, {1, 2, 3}}};
    CHECK(propagate_equalities(top).lines == std::set<LineIndex>{3});
  }

  TEST_CASE("hints fire once their preconditions hold") {
    std::vector<SingularPoint> pts{{1, 1, PointKind::Outer, {1}}};
    std::vector<CaseHint> hints{{2, {1}, "first"}, {3, {2}, "second"}, {4, {9}, "never"}};
    auto f = propagate_equalities(pts, hints);
    CHECK(f.lines == std::set<LineIndex>{1, 2, 3});
    REQUIRE(f.stale.size() == 1);
    CHECK(f.stale[0].line == 4);
    CHECK(f.log[1].citation == "first");
    CHECK(f.log[1].vertex == -1);
  }

  TEST_CASE("fork certificates") {
    auto s = fork_certificate(dual_graph(star()));
    REQUIRE(s);
    CHECK(s->plane == 1);
    CHECK(s->lines == std::array<LineIndex, 3>{1, 2, 3});
    CHECK_FALSE(fork_certificate(dual_graph(by_name("U_{4,2}").complex)));
    CHECK_FALSE(fork_certificate(dual_graph(by_name("U_{0,4}").complex)));
    CHECK_FALSE(fork_certificate(dual_graph(fixtures::figure_one())));
    auto v = decide(bare("star", star()));
    CHECK(v.status == Pi1Status::NonTrivial);
    CHECK(std::holds_alternative<ForkVertex>(v.certificate));
    CHECK_FALSE(v.enumeration);
  }

  TEST_CASE("decide with hints reproduces every catalog status") {
    int counts[3] = {0, 0, 0};
    for (auto& c : catalog()) {
      CAPTURE(c.name);
      auto v = decide(c);
      CHECK(v.status == c.expected->pi1);
      CHECK(v.mode == EngineMode::WithHints);
      CHECK(v.facts.stale.empty());
      ++counts[static_cast<int>(v.status)];
      if (nontrivial.count(c.name)) CHECK(v.status == Pi1Status::NonTrivial);
      if (v.status == Pi1Status::Trivial) {
        REQUIRE(std::holds_alternative<CosetOrder>(v.certificate));
        CHECK(std::get<CosetOrder>(v.certificate).order == 720);
        CHECK(v.enumeration);
      }
      if (v.status == Pi1Status::NonTrivial) CHECK(std::holds_alternative<ForkVertex>(v.certificate));
    }
    CHECK(counts[static_cast<int>(Pi1Status::Trivial)] == 20);
    CHECK(counts[static_cast<int>(Pi1Status::NonTrivial)] == 8);
    CHECK(counts[static_cast<int>(Pi1Status::Undecided)] == 1);
    CHECK(decide(by_name("U_{4,2}")).status == Pi1Status::Undecided);
  }

  TEST_CASE("both strategies decide the same way") {
    for (auto& c : catalog()) {
      CAPTURE(c.name);
      auto a = decide(c, {.limits = {.strategy = Strategy::RelatorFirst}});
      auto b = decide(c, {.limits = {.strategy = Strategy::CoincidenceFirst}});
      CHECK(a.status == b.status);
      CHECK(a.certificate == b.certificate);
    }
  }

  TEST_CASE("lemmas alone never contradict the catalog") {
    std::set<std::string> undecided;
    for (auto& c : catalog()) {
      CAPTURE(c.name);
      auto v = decide(c, {.hints = false});
      CHECK(v.mode == EngineMode::LemmasOnly);
      if (v.status == Pi1Status::Undecided)
        undecided.insert(c.name);
      else
        CHECK(v.status == c.expected->pi1);
      for (auto& d : v.facts.log) CHECK(d.rule != Rule::Hint);
    }
    CHECK(undecided == std::set<std::string>{"U_{3,1}", "U_{4,1}", "U_{4,2}", "U_{4,3}", "U_{4\\cup 3,2}",
                                             "U_{4\\cup 4}", "U_5", "U_{5\\cup 3}"});
  }

  TEST_CASE("coset overflow leaves the case undecided") {
    auto v = decide(by_name("U_{0,4}"), {.limits = {.max_cosets = 50}});
    CHECK(v.status == Pi1Status::Undecided);
    REQUIRE(v.enumeration);
    CHECK(std::holds_alternative<std::monostate>(v.certificate));
  }

  TEST_CASE("fork relators keep trivial cases trivial") {
    for (auto& c : catalog()) {
      if (c.expected->pi1 != Pi1Status::Trivial) continue;
      CAPTURE(c.name);
      CHECK(decide(c, {.forks = true}).status == Pi1Status::Trivial);
    }
  }

  TEST_CASE("a supplied relator that fails in S_n is a logic error") {
    auto c = by_name("U_6");
    REQUIRE_FALSE(c.extra_relators.empty());
    auto lines = classify_vertices(c.complex);
    std::vector<LineIndex> six;
    for (auto& p : lines)
      if (p.kind == PointKind::Inner && p.multiplicity == 6) six = p.lines_cyclic;
    REQUIRE(six.size() == 6);
    c.extra_relators = {{word_of({six[0]}), word_of({six[1]})}};
    CHECK_THROWS_AS(decide(c), std::logic_error);
  }
}
