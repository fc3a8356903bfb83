#pragma once

#include <string>
#include <vector>

#include "degen/case.hpp"
#include "degen/complex.hpp"

namespace fixtures {

degen::PlanarComplex figure_one();
degen::PlanarComplex single_triangle();
degen::PlanarComplex two_triangles();  // one interior line
// Build a complex from integer coordinates and triangles; planes numbered 1.. in order.
degen::PlanarComplex from_ints(const std::vector<std::pair<int, std::pair<long, long>>>& verts,
                               const std::vector<std::array<int, 3>>& tris);

const std::vector<degen::CaseRecord>& catalog();
const degen::CaseRecord& by_name(const std::string& name);

}  // namespace fixtures
