#include "doctest.h"

#include <algorithm>
#include <random>

#include "degen/complex.hpp"
#include "degen/relations.hpp"
#include "support.hpp"

using namespace degen;
using fixtures::by_name;
using fixtures::catalog;

namespace {

const SingularPoint* at(const std::vector<SingularPoint>& ps, VertexId v) {
  for (auto& p : ps)
    if (p.vertex == v) return &p;
  return nullptr;
}

std::vector<LineIndex> sorted(std::vector<LineIndex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("complex") {
  TEST_CASE("figure one validates and has six lines") {
    auto c = fixtures::figure_one();
    CHECK(validate(c).ok());
    CHECK(interior_lines(c).size() == 6);
  }

  TEST_CASE("figure one vertex classification") {
    auto ps = classify_vertices(fixtures::figure_one());
    REQUIRE(at(ps, 6));
    CHECK(at(ps, 6)->multiplicity == 1);
    CHECK(at(ps, 6)->kind == PointKind::Outer);
    CHECK(at(ps, 2)->multiplicity == 2);
    CHECK(at(ps, 3)->multiplicity == 2);
    CHECK(at(ps, 4)->multiplicity == 3);
    CHECK(at(ps, 4)->kind == PointKind::Inner);
    CHECK(at(ps, 7)->multiplicity == 4);
    CHECK(at(ps, 7)->kind == PointKind::Outer);
    // Counter-clockwise around vertex 7 runs from line 4 to line 1.
    CHECK(at(ps, 7)->lines_cyclic == std::vector<LineIndex>{4, 3, 2, 1});
    CHECK(at(ps, 1) == nullptr);
    CHECK(at(ps, 5) == nullptr);
  }

  TEST_CASE("single triangle") {
    auto c = fixtures::single_triangle();
    CHECK(validate(c).ok());
    CHECK(interior_lines(c).empty());
    auto g = dual_graph(c);
    CHECK(g.nodes.size() == 1);
    CHECK(g.edges.empty());
    CHECK(g.connected());
  }

  TEST_CASE("two triangles on the same three vertices are a structural error") {
    auto c = fixtures::from_ints({{1, {0, 0}}, {2, {1, 0}}, {3, {0, 1}}}, {{1, 2, 3}, {2, 3, 1}});
    auto r = validate(c);
    CHECK_FALSE(r.structural.empty());
    CHECK_THROWS_AS(interior_lines(c), StructuralError);
  }

  TEST_CASE("structural errors are distinct from violations") {
    auto dangling = fixtures::from_ints({{1, {0, 0}}, {2, {1, 0}}, {3, {0, 1}}}, {{1, 2, 9}});
    CHECK_FALSE(validate(dangling).structural.empty());
    auto flat = fixtures::from_ints({{1, {0, 0}}, {2, {1, 0}}, {3, {2, 0}}}, {{1, 2, 3}});
    CHECK_FALSE(validate(flat).structural.empty());

    // Three triangles on one edge.
    auto fan = fixtures::from_ints({{1, {0, 0}}, {2, {2, 0}}, {3, {1, 1}}, {4, {1, -1}}, {5, {1, 3}}},
                                   {{1, 2, 3}, {1, 4, 2}, {1, 2, 5}});
    auto r = validate(fan);
    CHECK(r.structural.empty());
    CHECK_FALSE(r.violations.empty());

    // Overlap without a shared edge.
    auto overlap = fixtures::from_ints({{1, {0, 0}}, {2, {4, 0}}, {3, {0, 4}}, {4, {1, 1}}, {5, {5, 1}}, {6, {1, 5}}},
                                       {{1, 2, 3}, {4, 5, 6}});
    r = validate(overlap);
    CHECK(r.structural.empty());
    CHECK_FALSE(r.violations.empty());

    // Touching at one vertex only: interior disconnected.
    auto bow = fixtures::from_ints({{1, {0, 0}}, {2, {1, 0}}, {3, {0, 1}}, {4, {-1, 0}}, {5, {0, -1}}},
                                   {{1, 2, 3}, {1, 4, 5}});
    CHECK_FALSE(validate(bow).violations.empty());
  }

  TEST_CASE("interior line counts on catalog cases") {
    CHECK(interior_lines(by_name("U_{0,4}").complex).size() == 5);
    CHECK(interior_lines(by_name("U_{0,6,1}").complex).size() == 5);
  }

  TEST_CASE("U_{0,7} has five 1-points and one outer 5-point") {
    auto ps = classify_vertices(by_name("U_{0,7}").complex);
    int ones = 0, fives = 0;
    for (auto& p : ps) {
      if (p.multiplicity == 1) ++ones;
      if (p.multiplicity == 5 && p.kind == PointKind::Outer) ++fives;
    }
    CHECK(ones == 5);
    CHECK(fives == 1);
    CHECK(ps.size() == 6);
  }

  TEST_CASE("U_{4,2} has four 2-points and one inner 4-point") {
    auto ps = classify_vertices(by_name("U_{4,2}").complex);
    int twos = 0, inner4 = 0;
    for (auto& p : ps) {
      if (p.multiplicity == 2 && p.kind == PointKind::Outer) ++twos;
      if (p.multiplicity == 4 && p.kind == PointKind::Inner) ++inner4;
    }
    CHECK(ps.size() == 5);
    CHECK(twos == 4);
    CHECK(inner4 == 1);
  }

  TEST_CASE("U_{0,4} dual graph is a path") {
    auto g = dual_graph(by_name("U_{0,4}").complex);
    CHECK(g.nodes.size() == 6);
    CHECK(g.edges.size() == 5);
    CHECK(g.connected());
    int leaves = 0;
    for (auto p : g.nodes) {
      CHECK(g.valency(p) <= 2);
      if (g.valency(p) == 1) ++leaves;
    }
    CHECK(leaves == 2);
  }

  TEST_CASE("U_{4,2} dual graph is a 4-cycle with two pendant edges") {
    auto g = dual_graph(by_name("U_{4,2}").complex);
    CHECK(g.edges.size() == 6);
    std::map<PlaneId, std::vector<LineIndex>> inc;
    for (auto& e : g.edges) inc[e.a].push_back(e.line), inc[e.b].push_back(e.line);
    int leaves = 0;
    std::set<LineIndex> pendant;
    for (auto& [p, ls] : inc)
      if (ls.size() == 1) ++leaves, pendant.insert(ls[0]);
    CHECK(leaves == 2);
    CHECK(pendant == std::set<LineIndex>{1, 6});
    // Removing the pendant edges leaves a 4-cycle on lines 2..5.
    std::map<PlaneId, int> deg;
    for (auto& e : g.edges)
      if (!pendant.count(e.line)) ++deg[e.a], ++deg[e.b];
    CHECK(deg.size() == 4);
    for (auto& [p, d] : deg) CHECK(d == 2);
  }

  TEST_CASE("disjoint line pairs") {
    CHECK(disjoint_line_pairs(by_name("U_{0,4}").complex) == PairSet{{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}});
    CHECK(disjoint_line_pairs(by_name("U_{0,7}").complex).empty());
    CHECK(disjoint_line_pairs(fixtures::two_triangles()).empty());
  }

  TEST_CASE("properties on every catalog case") {
    for (auto& c : catalog()) {
      CAPTURE(c.name);
      auto lines = interior_lines(c.complex);
      auto ps = classify_vertices(c.complex);
      int sum = 0;
      for (auto& p : ps) sum += p.multiplicity;
      CHECK(sum == 2 * static_cast<int>(lines.size()));

      // Shared vertex xor disjoint.
      auto disjoint = disjoint_line_pairs(c.complex);
      for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
          auto& a = lines[i].endpoints;
          auto& b = lines[j].endpoints;
          bool share = a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1];
          LinePair pr{std::min(lines[i].index, lines[j].index), std::max(lines[i].index, lines[j].index)};
          CHECK(share != (disjoint.count(pr) == 1));
        }

      // Inner k-point touches k planes, outer k-point k+1.
      for (auto& p : ps) {
        int planes = 0;
        for (auto& t : c.complex.triangles())
          if (std::find(t.v.begin(), t.v.end(), p.vertex) != t.v.end()) ++planes;
        CHECK(planes == (p.kind == PointKind::Inner ? p.multiplicity : p.multiplicity + 1));
      }

      auto g = dual_graph(c.complex);
      CHECK(g.connected());
      CHECK(g.nodes.size() == 6);
      CHECK(g.edges.size() == lines.size());
    }
  }

  TEST_CASE("classification is invariant under rigid motions and scaling") {
    std::mt19937 rng(7);
    // Rational rotations from Pythagorean triples.
    const std::vector<std::pair<mpq_class, mpq_class>> rot{{mpq_class(3, 5), mpq_class(4, 5)},
                                                           {mpq_class(5, 13), mpq_class(12, 13)},
                                                           {mpq_class(-8, 17), mpq_class(15, 17)},
                                                           {mpq_class(0), mpq_class(1)}};
    for (auto& c : catalog()) {
      CAPTURE(c.name);
      auto base = classify_vertices(c.complex);
      for (int trial = 0; trial < 4; ++trial) {
        auto [cs, sn] = rot[rng() % rot.size()];
        mpq_class scale(static_cast<long>(rng() % 7 + 1), static_cast<long>(rng() % 5 + 1));
        scale.canonicalize();
        mpq_class tx(static_cast<long>(rng() % 11) - 5), ty(static_cast<long>(rng() % 11) - 5);
        std::vector<Vertex> vs;
        for (auto& v : c.complex.vertices())
          vs.push_back({v.id, {scale * (cs * v.p.x - sn * v.p.y) + tx, scale * (sn * v.p.x + cs * v.p.y) + ty}});
        PlanarComplex moved(vs, c.complex.triangles(), c.complex.numbering());
        REQUIRE(validate(moved).ok());
        auto ps = classify_vertices(moved);
        REQUIRE(ps.size() == base.size());
        for (std::size_t i = 0; i < ps.size(); ++i) {
          CHECK(ps[i].vertex == base[i].vertex);
          CHECK(ps[i].kind == base[i].kind);
          CHECK(sorted(ps[i].lines_cyclic) == sorted(base[i].lines_cyclic));
          // Rotation keeps the cyclic order up to the starting line for inner points.
          if (ps[i].kind == PointKind::Outer) CHECK(ps[i].lines_cyclic == base[i].lines_cyclic);
        }
      }
    }
  }

  TEST_CASE("classification matches the recorded vertex lists") {
    for (auto& c : catalog()) {
      CAPTURE(c.name);
      auto ps = classify_vertices(c.complex);
      REQUIRE(ps.size() == c.expected->points.size());
      for (auto& e : c.expected->points) {
        auto* p = at(ps, e.vertex);
        REQUIRE(p);
        CHECK(p->kind == e.kind);
        CHECK(sorted(p->lines_cyclic) == e.lines);
      }
    }
  }
}
