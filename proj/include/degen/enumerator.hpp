#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "degen/case.hpp"
#include "degen/complex.hpp"

namespace degen {

// A triangulated disk: vertices 0..num_vertices-1, faces consistently oriented.
struct CombinatorialMap {
  int num_vertices = 0;
  std::vector<std::array<int, 3>> faces;

  // Empty string iff the faces form a triangulated disk.
  std::string disk_violation() const;
  // Boundary cycle, traversed along the face orientation.
  std::vector<int> boundary_walk() const;
  // Per vertex, its neighbours in rotational order (open fans start at a boundary neighbour).
  std::vector<std::vector<int>> rotation() const;
};

using CanonicalForm = std::vector<std::array<int, 3>>;

// Minimised over every rooted half-edge and both orientations.
CanonicalForm canonical_form(const CombinatorialMap& m);
std::string to_string(const CanonicalForm& f);

CombinatorialMap map_of(const PlanarComplex& c);
// Boundary on a convex arc, interior vertices by barycentric placement; throws if the result fails validation.
PlanarComplex embed(const CombinatorialMap& m);

class EnumerationLimit : public std::runtime_error {
 public:
  EnumerationLimit(const std::string& what, std::size_t partial) : std::runtime_error(what), partial(partial) {}
  std::size_t partial;
};

struct EnumerateOptions {
  int max_triangles = 8;
  unsigned jobs = 1;
};

std::vector<CombinatorialMap> enumerate(int num_triangles, const EnumerateOptions& opt = {});

struct CatalogMatch {
  std::vector<std::pair<std::size_t, std::string>> pairs;  // enumerated index -> case name
  std::vector<std::size_t> unmatched_maps;
  std::vector<std::string> unmatched_cases;
  std::vector<std::vector<std::string>> shared_forms;  // catalog cases with one canonical form

  bool bijection() const { return unmatched_maps.empty() && unmatched_cases.empty() && shared_forms.empty(); }
};

CatalogMatch match_catalog(const std::vector<CombinatorialMap>& maps, const std::vector<CaseRecord>& cases);

}  // namespace degen
