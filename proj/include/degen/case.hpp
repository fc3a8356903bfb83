#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "degen/complex.hpp"
#include "degen/relations.hpp"

namespace degen {

enum class Pi1Status { Trivial, NonTrivial, Undecided };
const char* to_string(Pi1Status s);
Pi1Status pi1_from(const std::string& s);

struct CaseHint {
  LineIndex line;
  std::vector<LineIndex> preconditions;
  std::string citation;
  bool operator==(const CaseHint&) const = default;
};

struct ExpectedPoint {
  VertexId vertex;
  PointKind kind;
  std::vector<LineIndex> lines;  // sorted
  bool operator==(const ExpectedPoint&) const = default;
};

struct Expected {
  int mu = 0, d = 0, rho = 0, m = 0;
  mpq_class c1_sq_coeff, c2_coeff, chi_coeff;  // multiples of n!
  Pi1Status pi1 = Pi1Status::Undecided;
  std::vector<ExpectedPoint> points;
};

struct CaseRecord {
  std::string name;
  std::string alias;
  PlanarComplex complex;
  std::vector<CaseHint> hints;
  std::optional<Expected> expected;
  std::vector<std::string> notes;
  std::vector<Equality> extra_relators;  // supplied inner-point relators
  bool external_result = false;
};

}  // namespace degen
