#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "degen/case.hpp"
#include "degen/complex.hpp"
#include "degen/fpgroup.hpp"

namespace degen {

enum class Rule { OnePoint, TwoPoint, InnerThree, OuterThree, Hint };
const char* to_string(Rule r);
Rule rule_from(const std::string& s);

struct Derivation {
  Rule rule;
  LineIndex line;
  VertexId vertex = -1;  // -1 for hints
  std::string citation;
  bool operator==(const Derivation&) const = default;
};

struct EqualityFacts {
  std::set<LineIndex> lines;    // lines with Γ = Γ'
  std::vector<Derivation> log;  // in application order
  std::vector<CaseHint> stale;  // hints whose preconditions never held

  bool complete(const std::vector<LineIndex>& all) const;
  bool operator==(const EqualityFacts&) const = default;
};

EqualityFacts propagate_equalities(const std::vector<SingularPoint>& points, const std::vector<CaseHint>& hints = {});

struct ForkVertex {
  PlaneId plane;
  std::array<LineIndex, 3> lines;
  bool operator==(const ForkVertex&) const = default;
};

// A plane of valency >= 3 lying on no cycle of the dual graph.
std::optional<ForkVertex> fork_certificate(const DualGraph& g);

struct CosetOrder {
  std::size_t order;
  bool operator==(const CosetOrder&) const = default;
};

using Certificate = std::variant<std::monostate, CosetOrder, ForkVertex>;

enum class EngineMode { LemmasOnly, WithHints };
const char* to_string(EngineMode m);
EngineMode engine_mode_from(const std::string& s);

struct Verdict {
  Pi1Status status = Pi1Status::Undecided;
  Certificate certificate;
  EngineMode mode = EngineMode::WithHints;
  EqualityFacts facts;
  std::optional<EnumStats> enumeration;  // present when coset enumeration ran
  std::string reason;
  bool operator==(const Verdict&) const = default;
};

struct DecideOptions {
  bool hints = true;
  bool forks = false;  // append fork relators to the presentation
  EnumLimits limits;
};

Verdict decide(const CaseRecord& c, const DecideOptions& opt = {});

}  // namespace degen
