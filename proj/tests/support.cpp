#include "support.hpp"

#include <stdexcept>

#include "degen/catalog.hpp"

namespace fixtures {

using namespace degen;

PlanarComplex figure_one() {
  auto q = [](long p, long d) { return mpq_class(p, d); };
  std::vector<Vertex> v{{1, {q(3, 5), q(103, 100)}}, {2, {q(-43, 50), q(-1, 2)}}, {3, {q(43, 50), q(-1, 2)}},
                        {4, {q(0, 1), q(0, 1)}},      {5, {q(-43, 50), q(1, 2)}},  {6, {q(43, 50), q(1, 2)}},
                        {7, {q(0, 1), q(1, 1)}}};
  for (auto& x : v) x.p.x.canonicalize(), x.p.y.canonicalize();
  std::vector<Triangle> t{{1, {7, 6, 1}}, {2, {7, 3, 6}}, {3, {3, 7, 4}}, {4, {2, 3, 4}}, {5, {2, 4, 7}}, {6, {2, 7, 5}}};
  PlanarComplex::Numbering n{{1, {6, 7}}, {2, {3, 7}}, {3, {4, 7}}, {4, {2, 7}}, {5, {2, 4}}, {6, {3, 4}}};
  return PlanarComplex(v, t, n);
}

PlanarComplex single_triangle() { return from_ints({{1, {0, 0}}, {2, {1, 0}}, {3, {0, 1}}}, {{1, 2, 3}}); }

PlanarComplex two_triangles() {
  return from_ints({{1, {0, 0}}, {2, {1, 0}}, {3, {0, 1}}, {4, {1, 1}}}, {{1, 2, 3}, {2, 4, 3}});
}

PlanarComplex from_ints(const std::vector<std::pair<int, std::pair<long, long>>>& verts,
                        const std::vector<std::array<int, 3>>& tris) {
  std::vector<Vertex> v;
  for (auto& [id, xy] : verts) v.push_back({id, {mpq_class(xy.first), mpq_class(xy.second)}});
  std::vector<Triangle> t;
  for (std::size_t i = 0; i < tris.size(); ++i) t.push_back({static_cast<PlaneId>(i + 1), tris[i]});
  return PlanarComplex(v, t);
}

const std::vector<CaseRecord>& catalog() {
  static const std::vector<CaseRecord> cases = all();
  return cases;
}

const CaseRecord& by_name(const std::string& name) {
  for (auto& c : catalog())
    if (c.name == name || c.alias == normalize_name(name)) return c;
  throw std::invalid_argument("no catalog case " + name);
}

}  // namespace fixtures
