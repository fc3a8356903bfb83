#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace degen {

using VertexId = int;
using PlaneId = int;
using LineIndex = int;
using LinePair = std::pair<LineIndex, LineIndex>;
using PairSet = std::set<LinePair>;

struct Point {
  mpq_class x, y;
};

struct Vertex {
  VertexId id;
  Point p;
};

struct Triangle {
  PlaneId plane;
  std::array<VertexId, 3> v;
};

// An interior edge: shared by exactly two triangles.
struct Line {
  LineIndex index;
  std::array<VertexId, 2> endpoints;  // sorted
  std::array<PlaneId, 2> planes;      // sorted
};

enum class PointKind { Inner, Outer };

struct SingularPoint {
  VertexId vertex;
  int multiplicity;
  PointKind kind;
  std::vector<LineIndex> lines_cyclic;  // counter-clockwise
  bool operator==(const SingularPoint&) const = default;
};

struct DualEdge {
  LineIndex line;
  PlaneId a, b;
};

struct DualGraph {
  std::vector<PlaneId> nodes;
  std::vector<DualEdge> edges;

  bool connected() const;
  int valency(PlaneId p) const;
};

struct ValidationReport {
  std::vector<std::string> structural;  // malformed input
  std::vector<std::string> violations;  // well-formed but not a planar representation

  bool ok() const { return structural.empty() && violations.empty(); }
  std::string summary() const;
};

class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PlanarComplex {
 public:
  using Numbering = std::vector<std::pair<LineIndex, std::array<VertexId, 2>>>;

  PlanarComplex() = default;
  // Without a numbering, interior edges are numbered in lexicographic endpoint order.
  PlanarComplex(std::vector<Vertex> vertices, std::vector<Triangle> triangles, Numbering numbering = {});

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const Numbering& numbering() const { return numbering_; }
  bool has_vertex(VertexId id) const { return index_.count(id) != 0; }
  const Point& point(VertexId id) const;
  int num_planes() const { return static_cast<int>(triangles_.size()); }

  // Every unordered edge with the planes containing it.
  std::map<std::array<VertexId, 2>, std::vector<PlaneId>> edge_planes() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Triangle> triangles_;
  Numbering numbering_;
  std::map<VertexId, std::size_t> index_;
};

ValidationReport validate(const PlanarComplex& c);

// The operations below require a valid complex and throw StructuralError otherwise.
std::vector<Line> interior_lines(const PlanarComplex& c);
std::vector<SingularPoint> classify_vertices(const PlanarComplex& c);
DualGraph dual_graph(const PlanarComplex& c);
PairSet disjoint_line_pairs(const PlanarComplex& c);

// Exact orientation predicate: sign of (b-a) x (c-a).
int orientation(const Point& a, const Point& b, const Point& c);

const char* to_string(PointKind k);

}  // namespace degen
