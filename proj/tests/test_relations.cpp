#include "doctest.h"

#include <fstream>

#include "json.hpp"

#include "degen/relations.hpp"
#include "support.hpp"

using namespace degen;
using fixtures::by_name;

namespace {

std::set<LinePair> pairs_of(const Presentation& p, RelatorTag tag) {
  std::set<LinePair> out;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (p.tags[i] != tag) continue;
    std::set<LineIndex> g;
    for (auto& l : p.relators[i]) g.insert(l.gen);
    REQUIRE(g.size() == 2);
    out.insert({*g.begin(), *g.rbegin()});
  }
  return out;
}

}  // namespace

TEST_SUITE("relations") {
  TEST_CASE("word helpers") {
    Word w{{1, 1}, {2, 1}, {2, -1}, {3, -1}};
    CHECK(free_reduce(w) == Word{{1, 1}, {3, -1}});
    CHECK(inverse(Word{{1, 1}, {2, -1}}) == Word{{2, 1}, {1, -1}});
    CHECK(free_reduce(concat(w, inverse(w))).empty());
    CHECK(word_to_text(Word{}) == "1");
    CHECK(word_to_text(Word{{1, 1}, {12, -1}}) == "g1 g12^-1");
    CHECK(word_from_text("g1 g12^-1") == Word{{1, 1}, {12, -1}});
    CHECK_THROWS_AS(word_from_text("x1"), std::invalid_argument);
    CHECK(triple_relator(2, 5) == word_of({2, 5, 2, 5, 2, 5}));
  }

  TEST_CASE("figure one presentation") {
    auto p = reduced_presentation(fixtures::figure_one());
    CHECK(p.generators == std::vector<LineIndex>{1, 2, 3, 4, 5, 6});
    CHECK(p.count(RelatorTag::Involution) == 6);
    CHECK(pairs_of(p, RelatorTag::Triple) == PairSet{{1, 2}, {2, 3}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {2, 6}, {5, 6}});
    // Inner 3-point {3,5,6}: g6 = g3 g5 g3.
    REQUIRE(p.count(RelatorTag::InnerPoint) == 1);
    auto it = std::find(p.tags.begin(), p.tags.end(), RelatorTag::InnerPoint);
    CHECK(p.relators[it - p.tags.begin()] == free_reduce(concat(word_of({6}), inverse(word_of({3, 5, 3})))));
  }

  TEST_CASE("U_{0,4}") {
    auto p = reduced_presentation(by_name("U_{0,4}").complex);
    CHECK(pairs_of(p, RelatorTag::Triple) == PairSet{{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(pairs_of(p, RelatorTag::Commutator) == PairSet{{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}});
    CHECK(p.count(RelatorTag::InnerPoint) == 0);
  }

  TEST_CASE("U_{0,6,1} relator counts") {
    auto p = reduced_presentation(by_name("U_{0,6,1}").complex);
    CHECK(p.generators.size() == 5);
    CHECK(p.count(RelatorTag::Involution) == 5);
    CHECK(p.count(RelatorTag::Triple) == 4);
    CHECK(p.count(RelatorTag::Commutator) == 6);
    CHECK(p.count(RelatorTag::InnerPoint) == 0);
  }

  TEST_CASE("U_{0,7} tangent pairs are the consecutive lines") {
    auto& c = by_name("U_{0,7}");
    auto ps = classify_vertices(c.complex);
    auto t = tangent_pairs(ps);
    CHECK(t == PairSet{{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    auto tr = transversal_pairs(c.complex, ps);
    CHECK(tr == PairSet{{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}});
  }

  TEST_CASE("U_{4,2} inner 4-point relator") {
    auto p = reduced_presentation(by_name("U_{4,2}").complex);
    REQUIRE(p.count(RelatorTag::InnerPoint) == 1);
  }

  TEST_CASE("inner 6-point needs a supplied relator") {
    auto& c = by_name("U_6");
    CHECK_THROWS_AS(reduced_presentation(c.complex), UnsupportedCase);
    auto p = reduced_presentation(c.complex, {.supplied = c.extra_relators});
    CHECK(p.count(RelatorTag::InnerPoint) >= 1);
  }

  TEST_CASE("fork relators skip inner 3-point triples") {
    // Triangle of tangencies closed by an inner 3-point is not a fork.
    std::vector<SingularPoint> pts{{1, 3, PointKind::Inner, {1, 2, 3}}};
    auto t = tangent_pairs(pts);
    CHECK(fork_relators(t, pts).empty());
    CHECK(fork_relators(t).size() == 1);
  }

  TEST_CASE("golden relations") {
    std::ifstream in(DEGEN_TEST_DATA "/relations_golden.json");
    REQUIRE(in);
    auto golden = nlohmann::json::parse(in);
    for (auto& [name, g] : golden.items()) {
      CAPTURE(name);
      auto& c = by_name(name);
      auto p = reduced_presentation(c.complex, {.supplied = c.extra_relators});
      PairSet triples, comms;
      for (auto& x : g["triples"]) triples.insert({x[0].get<int>(), x[1].get<int>()});
      for (auto& x : g["commutators"]) comms.insert({x[0].get<int>(), x[1].get<int>()});
      CHECK(pairs_of(p, RelatorTag::Triple) == triples);
      CHECK(pairs_of(p, RelatorTag::Commutator) == comms);
    }
  }

  TEST_CASE("presentation text round trip") {
    for (auto& c : fixtures::catalog()) {
      CAPTURE(c.name);
      auto p = reduced_presentation(c.complex, {.forks = true, .supplied = c.extra_relators});
      auto q = presentation_from_text(to_text(p));
      CHECK(q.generators == p.generators);
      CHECK(q.relators == p.relators);
      CHECK(q.tags == p.tags);
    }
  }

  TEST_CASE("undeclared generator is rejected") {
    Presentation p;
    p.generators = {1, 2};
    p.add(word_of({1, 3}), RelatorTag::Triple);
    CHECK_THROWS_AS(p.check(), std::invalid_argument);
    CHECK_THROWS_AS(presentation_from_text("g1 g2\n"), std::invalid_argument);
  }
}
