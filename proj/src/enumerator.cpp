#include "degen/enumerator.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace degen {

namespace {

using Half = std::pair<int, int>;

std::map<Half, int> half_edges(const std::vector<std::array<int, 3>>& faces) {
  std::map<Half, int> h;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    auto& f = faces[i];
    for (int k = 0; k < 3; ++k) h[{f[k], f[(k + 1) % 3]}] = static_cast<int>(i);
  }
  return h;
}

int third(const std::array<int, 3>& f, int a, int b) {
  for (int x : f)
    if (x != a && x != b) return x;
  return -1;
}

// Consistent orientation by propagation from face 0.
std::vector<std::array<int, 3>> orient(std::vector<std::array<int, 3>> faces) {
  if (faces.empty()) return faces;
  std::vector<bool> done(faces.size(), false);
  std::vector<std::size_t> stack{0};
  done[0] = true;
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    auto& f = faces[i];
    std::set<Half> dir;
    for (int k = 0; k < 3; ++k) dir.insert({f[k], f[(k + 1) % 3]});
    for (std::size_t j = 0; j < faces.size(); ++j) {
      if (done[j]) continue;
      auto& g = faces[j];
      int shared = 0;
      for (int x : g) shared += std::count(f.begin(), f.end(), x);
      if (shared != 2) continue;
      bool clash = false;
      for (int k = 0; k < 3; ++k) clash = clash || dir.count({g[k], g[(k + 1) % 3]});
      if (clash) std::swap(g[1], g[2]);
      done[j] = true;
      stack.push_back(j);
    }
  }
  return faces;
}

CanonicalForm encode(const std::vector<std::array<int, 3>>& faces, int nv) {
  auto h = half_edges(faces);
  CanonicalForm best;
  for (auto& [root, fi] : h) {
    std::vector<int> lab(nv, -1);
    int next = 0;
    int w = third(faces[fi], root.first, root.second);
    lab[root.first] = next++;
    lab[root.second] = next++;
    lab[w] = next++;
    std::vector<std::array<int, 3>> queue{{root.first, root.second, w}};
    std::vector<bool> seen(faces.size(), false);
    seen[fi] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto [x, y, z] = queue[q];
      for (Half e : {Half{y, x}, Half{z, y}, Half{x, z}}) {
        auto it = h.find(e);
        if (it == h.end() || seen[it->second]) continue;
        seen[it->second] = true;
        int s = third(faces[it->second], e.first, e.second);
        if (lab[s] < 0) lab[s] = next++;
        queue.push_back({e.first, e.second, s});
      }
    }
    if (queue.size() != faces.size()) continue;
    CanonicalForm enc;
    for (auto& f : faces) {
      std::array<int, 3> l{lab[f[0]], lab[f[1]], lab[f[2]]};
      std::rotate(l.begin(), std::min_element(l.begin(), l.end()), l.end());
      enc.push_back(l);
    }
    std::sort(enc.begin(), enc.end());
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

// Children of a disk: an ear on each boundary edge, and each boundary notch closed by a triangle.
std::vector<CombinatorialMap> children(const CombinatorialMap& m) {
  std::vector<CombinatorialMap> out;
  auto h = half_edges(m.faces);
  auto walk = m.boundary_walk();
  std::size_t b = walk.size();
  for (std::size_t i = 0; i < b; ++i) {
    int u = walk[i], v = walk[(i + 1) % b];
    CombinatorialMap c = m;
    c.faces.push_back({v, u, m.num_vertices});
    ++c.num_vertices;
    out.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < b; ++i) {
    int u = walk[i], v = walk[(i + 1) % b], w = walk[(i + 2) % b];
    if (u == w || h.count({u, w}) || h.count({w, u})) continue;
    CombinatorialMap c = m;
    c.faces.push_back({w, v, u});
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::string CombinatorialMap::disk_violation() const {
  if (faces.empty()) return "no faces";
  std::vector<int> used(num_vertices, 0);
  std::map<Half, int> h;
  for (auto& f : faces) {
    for (int x : f)
      if (x < 0 || x >= num_vertices) return "vertex out of range";
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) return "degenerate face";
    for (int k = 0; k < 3; ++k) {
      ++used[f[k]];
      if (h.count({f[k], f[(k + 1) % 3]})) return "edge in more than two faces or inconsistent orientation";
      h[{f[k], f[(k + 1) % 3]}] = 1;
    }
  }
  if (std::count(used.begin(), used.end(), 0)) return "unused vertex";
  std::set<Half> edges;
  for (auto& [e, x] : h) edges.insert({std::min(e.first, e.second), std::max(e.first, e.second)});
  long euler = static_cast<long>(num_vertices) - static_cast<long>(edges.size()) + static_cast<long>(faces.size());
  if (euler != 1) return "Euler characteristic " + std::to_string(euler) + " instead of 1";
  if (orient(faces).size() != faces.size()) return "disconnected";
  // Faces around each vertex must form a single fan.
  for (int v = 0; v < num_vertices; ++v) {
    std::map<int, int> succ;
    std::set<int> preds;
    for (auto& f : faces)
      for (int k = 0; k < 3; ++k)
        if (f[k] == v) {
          succ[f[(k + 1) % 3]] = f[(k + 2) % 3];
          preds.insert(f[(k + 2) % 3]);
        }
    int start = succ.begin()->first;
    for (auto& [a, bb] : succ)
      if (!preds.count(a)) start = a;
    std::size_t steps = 0;
    for (int x = start; succ.count(x) && steps <= succ.size(); x = succ[x]) {
      ++steps;
      if (succ[x] == start) break;
    }
    if (steps != succ.size()) return "faces at vertex " + std::to_string(v) + " do not form a single fan";
  }
  std::size_t boundary = 0;
  for (auto& [e, x] : h)
    if (!h.count({e.second, e.first})) ++boundary;
  if (boundary_walk().size() != boundary) return "boundary is not a single cycle";
  std::vector<bool> seen(num_vertices, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (auto& [e, y] : h)
      if (e.first == x && !seen[e.second]) seen[e.second] = true, stack.push_back(e.second);
  }
  if (std::count(seen.begin(), seen.end(), false)) return "disconnected";
  return {};
}

std::vector<int> CombinatorialMap::boundary_walk() const {
  auto h = half_edges(faces);
  std::map<int, int> next;
  for (auto& [e, f] : h)
    if (!h.count({e.second, e.first})) next[e.first] = e.second;
  std::vector<int> walk;
  if (next.empty()) return walk;
  int start = next.begin()->first, x = start;
  do {
    walk.push_back(x);
    auto it = next.find(x);
    if (it == next.end() || walk.size() > next.size()) break;
    x = it->second;
  } while (x != start);
  return walk;
}

std::vector<std::vector<int>> CombinatorialMap::rotation() const {
  std::vector<std::vector<int>> rot(num_vertices);
  for (int v = 0; v < num_vertices; ++v) {
    std::map<int, int> succ;
    std::set<int> preds;
    for (auto& f : faces)
      for (int k = 0; k < 3; ++k)
        if (f[k] == v) {
          succ[f[(k + 1) % 3]] = f[(k + 2) % 3];
          preds.insert(f[(k + 2) % 3]);
        }
    if (succ.empty()) continue;
    int start = succ.begin()->first;
    bool open = false;
    for (auto& [a, b] : succ)
      if (!preds.count(a)) start = a, open = true;
    int x = start;
    do {
      rot[v].push_back(x);
      auto it = succ.find(x);
      if (it == succ.end()) break;
      x = it->second;
    } while (x != start && rot[v].size() <= succ.size());
    (void)open;
  }
  return rot;
}

CanonicalForm canonical_form(const CombinatorialMap& m) {
  auto faces = orient(m.faces);
  auto a = encode(faces, m.num_vertices);
  for (auto& f : faces) std::swap(f[1], f[2]);
  auto b = encode(faces, m.num_vertices);
  return std::min(a, b);
}

std::string to_string(const CanonicalForm& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i][0] << '.' << f[i][1] << '.' << f[i][2];
  return os.str();
}

CombinatorialMap map_of(const PlanarComplex& c) {
  std::map<VertexId, int> idx;
  for (auto& v : c.vertices()) idx.emplace(v.id, static_cast<int>(idx.size()));
  CombinatorialMap m;
  m.num_vertices = static_cast<int>(idx.size());
  for (auto& t : c.triangles()) {
    std::array<int, 3> f{idx.at(t.v[0]), idx.at(t.v[1]), idx.at(t.v[2])};
    if (orientation(c.point(t.v[0]), c.point(t.v[1]), c.point(t.v[2])) < 0) std::swap(f[1], f[2]);
    m.faces.push_back(f);
  }
  return m;
}

PlanarComplex embed(const CombinatorialMap& m) {
  if (auto why = m.disk_violation(); !why.empty()) throw std::invalid_argument("not a triangulated disk: " + why);
  auto walk = m.boundary_walk();
  std::vector<int> slot(m.num_vertices, -1);
  std::vector<Point> pos(m.num_vertices);
  for (std::size_t i = 0; i < walk.size(); ++i) {
    long t = static_cast<long>(i);
    pos[walk[i]] = {mpq_class(t), mpq_class(t * t)};
  }
  std::vector<int> inner;
  for (int v = 0; v < m.num_vertices; ++v)
    if (std::find(walk.begin(), walk.end(), v) == walk.end()) slot[v] = static_cast<int>(inner.size()), inner.push_back(v);
  if (!inner.empty()) {
    std::vector<std::set<int>> nb(m.num_vertices);
    for (auto& f : m.faces)
      for (int k = 0; k < 3; ++k) nb[f[k]].insert(f[(k + 1) % 3]), nb[f[(k + 1) % 3]].insert(f[k]);
    std::size_t n = inner.size();
    // Each interior vertex at the average of its neighbours; columns [x-part | rhs x | rhs y].
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 2, 0));
    for (std::size_t i = 0; i < n; ++i) {
      int v = inner[i];
      a[i][i] = static_cast<long>(nb[v].size());
      for (int u : nb[v]) {
        if (slot[u] >= 0)
          a[i][slot[u]] -= 1;
        else
          a[i][n] += pos[u].x, a[i][n + 1] += pos[u].y;
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (sgn(a[p][c]) == 0) ++p;
      std::swap(a[c], a[p]);
      mpq_class inv = 1 / a[c][c];
      for (auto& x : a[c]) x *= inv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || sgn(a[r][c]) == 0) continue;
        mpq_class f = a[r][c];
        for (std::size_t k = 0; k < n + 2; ++k) a[r][k] -= f * a[c][k];
      }
    }
    for (std::size_t i = 0; i < n; ++i) pos[inner[i]] = {a[i][n], a[i][n + 1]};
  }
  std::vector<Vertex> vs;
  for (int v = 0; v < m.num_vertices; ++v) vs.push_back({v + 1, pos[v]});
  std::vector<Triangle> ts;
  for (std::size_t i = 0; i < m.faces.size(); ++i) {
    auto f = m.faces[i];
    if (orientation(pos[f[0]], pos[f[1]], pos[f[2]]) < 0) std::swap(f[1], f[2]);
    ts.push_back({static_cast<PlaneId>(i + 1), {f[0] + 1, f[1] + 1, f[2] + 1}});
  }
  PlanarComplex c(std::move(vs), std::move(ts));
  auto rep = validate(c);
  if (!rep.ok()) throw std::runtime_error("synthesized embedding is invalid: " + rep.summary());
  return c;
}

std::vector<CombinatorialMap> enumerate(int num_triangles, const EnumerateOptions& opt) {
  if (num_triangles < 1) throw std::invalid_argument("num_triangles must be at least 1");
  if (num_triangles > opt.max_triangles)
    throw EnumerationLimit("enumeration beyond " + std::to_string(opt.max_triangles) + " triangles is disabled", 0);
  std::map<CanonicalForm, CombinatorialMap> level;
  CombinatorialMap seed{3, {{0, 1, 2}}};
  level.emplace(canonical_form(seed), seed);
  unsigned jobs = std::max(1u, opt.jobs);
  for (int n = 2; n <= num_triangles; ++n) {
    std::vector<const CombinatorialMap*> frontier;
    for (auto& [f, m] : level) frontier.push_back(&m);
    std::vector<std::vector<std::pair<CanonicalForm, CombinatorialMap>>> found(jobs);
    auto work = [&](unsigned j) {
      for (std::size_t i = j; i < frontier.size(); i += jobs)
        for (auto& c : children(*frontier[i]))
          if (c.disk_violation().empty()) found[j].emplace_back(canonical_form(c), std::move(c));
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(work, j);
    work(0);
    for (auto& t : pool) t.join();
    std::map<CanonicalForm, CombinatorialMap> next;
    for (auto& part : found)
      for (auto& [f, m] : part)
        if (auto it = next.find(f); it == next.end() || m.faces < it->second.faces) next[f] = m;
    level = std::move(next);
  }
  std::vector<CombinatorialMap> out;
  for (auto& [f, m] : level) out.push_back(m);
  return out;
}

CatalogMatch match_catalog(const std::vector<CombinatorialMap>& maps, const std::vector<CaseRecord>& cases) {
  CatalogMatch r;
  std::map<CanonicalForm, std::vector<std::string>> cat;
  for (auto& c : cases) cat[canonical_form(map_of(c.complex))].push_back(c.name);
  std::set<CanonicalForm> seen;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    auto f = canonical_form(maps[i]);
    seen.insert(f);
    auto it = cat.find(f);
    if (it == cat.end()) {
      r.unmatched_maps.push_back(i);
      continue;
    }
    for (auto& name : it->second) r.pairs.emplace_back(i, name);
  }
  for (auto& [f, names] : cat) {
    if (names.size() > 1) r.shared_forms.push_back(names);
    if (!seen.count(f))
      for (auto& n : names) r.unmatched_cases.push_back(n);
  }
  return r;
}

}  // namespace degen
