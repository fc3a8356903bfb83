#include "degen/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

namespace degen {

namespace {

std::array<VertexId, 2> edge_key(VertexId a, VertexId b) { return a < b ? std::array{a, b} : std::array{b, a}; }

std::string str_edge(const std::array<VertexId, 2>& e) {
  return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + ")";
}

int half_of(const mpq_class& dx, const mpq_class& dy) { return (sgn(dy) > 0 || (sgn(dy) == 0 && sgn(dx) > 0)) ? 0 : 1; }

// Strict counter-clockwise order of direction vectors starting at angle 0.
bool angle_less(const mpq_class& ax, const mpq_class& ay, const mpq_class& bx, const mpq_class& by) {
  int ha = half_of(ax, ay), hb = half_of(bx, by);
  if (ha != hb) return ha < hb;
  return sgn(ax * by - ay * bx) > 0;
}

bool same_direction(const mpq_class& ax, const mpq_class& ay, const mpq_class& bx, const mpq_class& by) {
  return sgn(ax * by - ay * bx) == 0 && sgn(ax * bx + ay * by) > 0;
}

// Closed half-plane separation of two non-degenerate triangles; true iff interiors are disjoint.
bool separated(const std::array<const Point*, 3>& s, const std::array<const Point*, 3>& t) {
  auto test = [](const std::array<const Point*, 3>& u, const std::array<const Point*, 3>& w) {
    for (int i = 0; i < 3; ++i) {
      const Point& a = *u[i];
      const Point& b = *u[(i + 1) % 3];
      int side = orientation(a, b, *u[(i + 2) % 3]);
      bool all_out = true;
      for (auto* p : w)
        if (side * orientation(a, b, *p) > 0) {
          all_out = false;
          break;
        }
      if (all_out) return true;
    }
    return false;
  };
  return test(s, t) || test(t, s);
}

bool strictly_inside_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  mpq_class d = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
  mpq_class len = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
  return sgn(d) > 0 && d < len;
}

struct Derived {
  std::map<std::array<VertexId, 2>, LineIndex> line_of;
  std::vector<Line> lines;
};

Derived derive(const PlanarComplex& c) {
  auto rep = validate(c);
  if (!rep.ok()) throw StructuralError("invalid planar complex: " + rep.summary());
  Derived d;
  auto ep = c.edge_planes();
  for (auto& [idx, e] : c.numbering()) d.line_of[edge_key(e[0], e[1])] = idx;
  if (c.numbering().empty()) {
    LineIndex next = 1;
    for (auto& [e, planes] : ep)
      if (planes.size() == 2) d.line_of[e] = next++;
  }
  for (auto& [e, idx] : d.line_of) {
    auto planes = ep.at(e);
    std::sort(planes.begin(), planes.end());
    d.lines.push_back(Line{idx, e, {planes[0], planes[1]}});
  }
  std::sort(d.lines.begin(), d.lines.end(), [](const Line& a, const Line& b) { return a.index < b.index; });
  return d;
}

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) {
  return sgn((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

const char* to_string(PointKind k) { return k == PointKind::Inner ? "inner" : "outer"; }

std::string ValidationReport::summary() const {
  std::ostringstream os;
  const char* sep = "";
  for (auto& s : structural) os << sep << "structural: " << s, sep = "; ";
  for (auto& s : violations) os << sep << s, sep = "; ";
  return os.str();
}

bool DualGraph::connected() const {
  if (nodes.empty()) return true;
  std::map<PlaneId, std::vector<PlaneId>> adj;
  for (auto& e : edges) adj[e.a].push_back(e.b), adj[e.b].push_back(e.a);
  std::set<PlaneId> seen{nodes[0]};
  std::vector<PlaneId> stack{nodes[0]};
  while (!stack.empty()) {
    PlaneId p = stack.back();
    stack.pop_back();
    for (PlaneId q : adj[p])
      if (seen.insert(q).second) stack.push_back(q);
  }
  return seen.size() == nodes.size();
}

int DualGraph::valency(PlaneId p) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const DualEdge& e) { return e.a == p || e.b == p; }));
}

PlanarComplex::PlanarComplex(std::vector<Vertex> vertices, std::vector<Triangle> triangles, Numbering numbering)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)), numbering_(std::move(numbering)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i].id, i);
}

const Point& PlanarComplex::point(VertexId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw StructuralError("unknown vertex " + std::to_string(id));
  return vertices_[it->second].p;
}

std::map<std::array<VertexId, 2>, std::vector<PlaneId>> PlanarComplex::edge_planes() const {
  std::map<std::array<VertexId, 2>, std::vector<PlaneId>> out;
  for (auto& t : triangles_)
    for (int i = 0; i < 3; ++i) out[edge_key(t.v[i], t.v[(i + 1) % 3])].push_back(t.plane);
  return out;
}

ValidationReport validate(const PlanarComplex& c) {
  ValidationReport r;
  std::set<VertexId> ids;
  for (auto& v : c.vertices())
    if (!ids.insert(v.id).second) r.structural.push_back("duplicate vertex id " + std::to_string(v.id));
  std::set<PlaneId> planes;
  std::set<VertexId> used;
  std::map<std::array<VertexId, 3>, PlaneId> faces;
  for (auto& t : c.triangles()) {
    std::string tag = "triangle " + std::to_string(t.plane);
    if (!planes.insert(t.plane).second) r.structural.push_back("duplicate plane id " + std::to_string(t.plane));
    bool dangling = false;
    for (VertexId v : t.v)
      if (!c.has_vertex(v)) {
        r.structural.push_back(tag + " references unknown vertex " + std::to_string(v));
        dangling = true;
      } else {
        used.insert(v);
      }
    if (dangling) continue;
    if (t.v[0] == t.v[1] || t.v[1] == t.v[2] || t.v[0] == t.v[2]) {
      r.structural.push_back(tag + " repeats a vertex");
      continue;
    }
    if (orientation(c.point(t.v[0]), c.point(t.v[1]), c.point(t.v[2])) == 0) {
      r.structural.push_back(tag + " is degenerate (collinear vertices)");
      continue;
    }
    auto key = t.v;
    std::sort(key.begin(), key.end());
    auto [it, fresh] = faces.emplace(key, t.plane);
    if (!fresh)
      r.structural.push_back(tag + " and triangle " + std::to_string(it->second) + " are glued along all their edges");
  }
  for (auto& v : c.vertices())
    if (!used.count(v.id)) r.structural.push_back("vertex " + std::to_string(v.id) + " lies on no triangle");
  if (!r.structural.empty()) return r;

  auto ep = c.edge_planes();
  // Two distinct edges leaving a vertex in the same direction overlap.
  std::map<VertexId, std::vector<VertexId>> nbrs;
  for (auto& [e, p] : ep) nbrs[e[0]].push_back(e[1]), nbrs[e[1]].push_back(e[0]);
  for (auto& [v, ns] : nbrs) {
    const Point& o = c.point(v);
    for (std::size_t i = 0; i < ns.size(); ++i)
      for (std::size_t j = i + 1; j < ns.size(); ++j) {
        const Point& a = c.point(ns[i]);
        const Point& b = c.point(ns[j]);
        if (same_direction(a.x - o.x, a.y - o.y, b.x - o.x, b.y - o.y))
          r.structural.push_back("edges " + str_edge(edge_key(v, ns[i])) + " and " + str_edge(edge_key(v, ns[j])) +
                                 " are collinear at vertex " + std::to_string(v));
      }
  }

  if (!c.numbering().empty()) {
    std::set<LineIndex> idx;
    std::set<std::array<VertexId, 2>> named;
    for (auto& [i, e] : c.numbering()) {
      auto k = edge_key(e[0], e[1]);
      if (!idx.insert(i).second) r.structural.push_back("line index " + std::to_string(i) + " used twice");
      if (!named.insert(k).second) r.structural.push_back("edge " + str_edge(k) + " numbered twice");
      auto it = ep.find(k);
      if (it == ep.end() || it->second.size() != 2)
        r.structural.push_back("numbered line " + std::to_string(i) + " " + str_edge(k) + " is not an interior edge");
    }
    for (auto& [e, p] : ep)
      if (p.size() == 2 && !named.count(e)) r.structural.push_back("interior edge " + str_edge(e) + " has no line index");
    LineIndex expect = 1;
    for (LineIndex i : idx)
      if (i != expect++) {
        r.structural.push_back("line indices are not 1.." + std::to_string(idx.size()));
        break;
      }
  }
  if (!r.structural.empty()) return r;

  for (auto& [e, p] : ep)
    if (p.size() > 2)
      r.violations.push_back("edge " + str_edge(e) + " lies on " + std::to_string(p.size()) + " triangles");

  // Connected interior: open triangles joined through interior edges.
  std::map<PlaneId, std::vector<PlaneId>> adj;
  for (auto& [e, p] : ep)
    if (p.size() == 2) adj[p[0]].push_back(p[1]), adj[p[1]].push_back(p[0]);
  if (!c.triangles().empty()) {
    std::set<PlaneId> seen{c.triangles()[0].plane};
    std::vector<PlaneId> stack{c.triangles()[0].plane};
    while (!stack.empty()) {
      PlaneId p = stack.back();
      stack.pop_back();
      for (PlaneId q : adj[p])
        if (seen.insert(q).second) stack.push_back(q);
    }
    if (seen.size() != c.triangles().size()) r.violations.push_back("interior is not connected");
  }

  auto& tris = c.triangles();
  for (std::size_t i = 0; i < tris.size(); ++i) {
    std::array<const Point*, 3> s{&c.point(tris[i].v[0]), &c.point(tris[i].v[1]), &c.point(tris[i].v[2])};
    for (std::size_t j = i + 1; j < tris.size(); ++j) {
      std::array<const Point*, 3> t{&c.point(tris[j].v[0]), &c.point(tris[j].v[1]), &c.point(tris[j].v[2])};
      if (!separated(s, t))
        r.violations.push_back("triangles " + std::to_string(tris[i].plane) + " and " + std::to_string(tris[j].plane) +
                               " overlap");
    }
  }
  for (auto& [e, p] : ep)
    for (auto& v : c.vertices())
      if (v.id != e[0] && v.id != e[1] && strictly_inside_segment(v.p, c.point(e[0]), c.point(e[1])))
        r.violations.push_back("vertex " + std::to_string(v.id) + " lies inside edge " + str_edge(e));

  // Each vertex must carry a single fan of triangles.
  for (auto& v : c.vertices()) {
    std::vector<const Triangle*> fan;
    for (auto& t : tris)
      if (std::find(t.v.begin(), t.v.end(), v.id) != t.v.end()) fan.push_back(&t);
    std::vector<int> comp(fan.size());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (std::size_t i = 0; i < fan.size(); ++i)
      for (std::size_t j = i + 1; j < fan.size(); ++j) {
        int shared = 0;
        for (VertexId a : fan[i]->v)
          if (a != v.id && std::find(fan[j]->v.begin(), fan[j]->v.end(), a) != fan[j]->v.end()) ++shared;
        if (shared) comp[find(i)] = find(j);
      }
    std::set<int> roots;
    for (std::size_t i = 0; i < fan.size(); ++i) roots.insert(find(i));
    if (roots.size() > 1) r.violations.push_back("vertex " + std::to_string(v.id) + " is a pinch point");
  }
  return r;
}

std::vector<Line> interior_lines(const PlanarComplex& c) { return derive(c).lines; }

std::vector<SingularPoint> classify_vertices(const PlanarComplex& c) {
  auto d = derive(c);
  auto ep = c.edge_planes();
  std::map<VertexId, std::vector<VertexId>> nbrs;
  for (auto& [e, p] : ep) nbrs[e[0]].push_back(e[1]), nbrs[e[1]].push_back(e[0]);

  std::vector<SingularPoint> out;
  for (auto& vx : c.vertices()) {
    VertexId v = vx.id;
    auto& ns = nbrs[v];
    int k = 0;
    bool closed = true;
    for (VertexId u : ns) {
      if (d.line_of.count(edge_key(v, u)))
        ++k;
      else
        closed = false;
    }
    if (k == 0) continue;
    const Point& o = vx.p;
    std::sort(ns.begin(), ns.end(), [&](VertexId a, VertexId b) {
      const Point& pa = c.point(a);
      const Point& pb = c.point(b);
      return angle_less(pa.x - o.x, pa.y - o.y, pb.x - o.x, pb.y - o.y);
    });
    std::size_t start = 0;
    if (!closed) {
      // The angular gap not covered by a triangle separates the two boundary edges.
      for (std::size_t i = 0; i < ns.size(); ++i) {
        VertexId a = ns[i], b = ns[(i + 1) % ns.size()];
        bool covered = std::any_of(c.triangles().begin(), c.triangles().end(), [&](const Triangle& t) {
          auto has = [&](VertexId x) { return std::find(t.v.begin(), t.v.end(), x) != t.v.end(); };
          return has(v) && has(a) && has(b);
        });
        if (!covered) {
          start = (i + 1) % ns.size();
          break;
        }
      }
    }
    SingularPoint sp{v, k, closed ? PointKind::Inner : PointKind::Outer, {}};
    for (std::size_t i = 0; i < ns.size(); ++i) {
      auto it = d.line_of.find(edge_key(v, ns[(start + i) % ns.size()]));
      if (it != d.line_of.end()) sp.lines_cyclic.push_back(it->second);
    }
    if (closed) std::rotate(sp.lines_cyclic.begin(), std::min_element(sp.lines_cyclic.begin(), sp.lines_cyclic.end()),
                            sp.lines_cyclic.end());
    out.push_back(std::move(sp));
  }
  return out;
}

DualGraph dual_graph(const PlanarComplex& c) {
  auto d = derive(c);
  DualGraph g;
  for (auto& t : c.triangles()) g.nodes.push_back(t.plane);
  std::sort(g.nodes.begin(), g.nodes.end());
  for (auto& l : d.lines) g.edges.push_back({l.index, l.planes[0], l.planes[1]});
  return g;
}

PairSet disjoint_line_pairs(const PlanarComplex& c) {
  auto lines = interior_lines(c);
  PairSet out;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto& a = lines[i].endpoints;
      auto& b = lines[j].endpoints;
      if (a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1])
        out.emplace(std::min(lines[i].index, lines[j].index), std::max(lines[i].index, lines[j].index));
    }
  return out;
}

}  // namespace degen
