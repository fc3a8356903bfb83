#include "degen/pipeline.hpp"

#include <algorithm>
#include <functional>

#include "degen/invariants.hpp"

namespace degen {

const char* to_string(Rule r) {
  switch (r) {
    case Rule::OnePoint: return "one-point";
    case Rule::TwoPoint: return "two-point";
    case Rule::InnerThree: return "inner-three-point";
    case Rule::OuterThree: return "outer-three-point";
    case Rule::Hint: return "hint";
  }
  return "?";
}

Rule rule_from(const std::string& s) {
  for (auto r : {Rule::OnePoint, Rule::TwoPoint, Rule::InnerThree, Rule::OuterThree, Rule::Hint})
    if (s == to_string(r)) return r;
  throw std::invalid_argument("unknown rule '" + s + "'");
}

const char* to_string(EngineMode m) { return m == EngineMode::LemmasOnly ? "lemmas-only" : "with-hints"; }

EngineMode engine_mode_from(const std::string& s) {
  if (s == "lemmas-only") return EngineMode::LemmasOnly;
  if (s == "with-hints") return EngineMode::WithHints;
  throw std::invalid_argument("unknown engine mode '" + s + "'");
}

bool EqualityFacts::complete(const std::vector<LineIndex>& all) const {
  return std::all_of(all.begin(), all.end(), [&](LineIndex l) { return lines.count(l) != 0; });
}

EqualityFacts propagate_equalities(const std::vector<SingularPoint>& points, const std::vector<CaseHint>& hints) {
  EqualityFacts f;
  auto add = [&](LineIndex l, Rule r, VertexId v, const std::string& cite = {}) {
    if (!f.lines.insert(l).second) return false;
    f.log.push_back({r, l, v, cite});
    return true;
  };
  auto has = [&](LineIndex l) { return f.lines.count(l) != 0; };
  std::vector<bool> used(hints.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& p : points) {
      auto l = p.lines_cyclic;
      std::sort(l.begin(), l.end());
      if (p.kind == PointKind::Outer && p.multiplicity == 1) {
        changed |= add(l[0], Rule::OnePoint, p.vertex);
      } else if (p.kind == PointKind::Outer && p.multiplicity == 2) {
        if (has(l[0])) changed |= add(l[1], Rule::TwoPoint, p.vertex);
        if (has(l[1])) changed |= add(l[0], Rule::TwoPoint, p.vertex);
      } else if (p.kind == PointKind::Inner && p.multiplicity == 3) {
        changed |= add(l[0], Rule::InnerThree, p.vertex);
        if (has(l[1])) changed |= add(l[2], Rule::InnerThree, p.vertex);
        if (has(l[2])) changed |= add(l[1], Rule::InnerThree, p.vertex);
      } else if (p.kind == PointKind::Outer && p.multiplicity == 3 && p.lines_cyclic[1] == l[1]) {
        // Only valid when the lines are numbered monotonically around the point.
        if (has(l[0]) || has(l[1]))
          for (LineIndex x : l) changed |= add(x, Rule::OuterThree, p.vertex);
      }
    }
    for (std::size_t i = 0; i < hints.size(); ++i) {
      if (used[i]) continue;
      auto& h = hints[i];
      if (!std::all_of(h.preconditions.begin(), h.preconditions.end(), has)) continue;
      used[i] = true;
      changed |= add(h.line, Rule::Hint, -1, h.citation);
    }
  }
  for (std::size_t i = 0; i < hints.size(); ++i)
    if (!used[i]) f.stale.push_back(hints[i]);
  return f;
}

std::optional<ForkVertex> fork_certificate(const DualGraph& g) {
  // An edge lies on a cycle iff its endpoints stay connected without it.
  auto connected_without = [&](std::size_t skip) {
    const auto& e = g.edges[skip];
    std::set<PlaneId> seen{e.a};
    std::vector<PlaneId> stack{e.a};
    while (!stack.empty()) {
      PlaneId x = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (i == skip) continue;
        auto& f = g.edges[i];
        PlaneId y = f.a == x ? f.b : f.b == x ? f.a : -1;
        if (y >= 0 && seen.insert(y).second) stack.push_back(y);
      }
    }
    return seen.count(e.b) != 0;
  };
  std::vector<bool> on_cycle(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) on_cycle[i] = connected_without(i);
  for (PlaneId p : g.nodes) {
    std::vector<LineIndex> inc;
    bool clean = true;
    for (std::size_t i = 0; i < g.edges.size(); ++i)
      if (g.edges[i].a == p || g.edges[i].b == p) {
        inc.push_back(g.edges[i].line);
        clean = clean && !on_cycle[i];
      }
    if (clean && inc.size() >= 3) {
      std::sort(inc.begin(), inc.end());
      return ForkVertex{p, {inc[0], inc[1], inc[2]}};
    }
  }
  return std::nullopt;
}

Verdict decide(const CaseRecord& c, const DecideOptions& opt) {
  Verdict v;
  v.mode = opt.hints ? EngineMode::WithHints : EngineMode::LemmasOnly;
  auto points = classify_vertices(c.complex);
  v.facts = propagate_equalities(points, opt.hints ? c.hints : std::vector<CaseHint>{});
  if (auto fork = fork_certificate(dual_graph(c.complex))) {
    v.status = Pi1Status::NonTrivial;
    v.certificate = *fork;
    v.reason = "plane " + std::to_string(fork->plane) + " has valency >= 3 and lies on no cycle of the dual graph";
    return v;
  }
  std::vector<LineIndex> all;
  for (auto& l : interior_lines(c.complex)) all.push_back(l.index);
  if (!v.facts.complete(all)) {
    v.reason = "could not establish Γ = Γ' for every line";
    return v;
  }
  auto p = reduced_presentation(c.complex, {opt.forks, c.extra_relators});
  auto a = permutation_assignment(c.complex);
  if (auto bad = check_relators_in_permutations(p, a); !bad.empty())
    throw std::logic_error("relator " + word_to_text(p.relators[bad[0]]) + " does not hold in S_n");
  auto r = todd_coxeter(p, {}, opt.limits);
  v.enumeration = r.stats;
  if (!r.completed) {
    v.reason = "coset enumeration exceeded " + std::to_string(opt.limits.max_cosets) + " cosets";
    return v;
  }
  mpz_class nf = factorial(c.complex.num_planes());
  std::size_t order = r.table->index();
  v.certificate = CosetOrder{order};
  if (mpz_class(static_cast<unsigned long>(order)) == nf) {
    v.status = Pi1Status::Trivial;
    v.reason = "all Γ = Γ' and the presented group has order n! = " + nf.get_str();
  } else if (mpz_class(static_cast<unsigned long>(order)) > nf) {
    v.status = Pi1Status::NonTrivial;
    v.reason = "presented group has order " + std::to_string(order) + " > n!";
  } else {
    throw std::logic_error("presented group order " + std::to_string(order) + " is below n!");
  }
  return v;
}

}  // namespace degen
