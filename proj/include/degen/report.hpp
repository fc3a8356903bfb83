#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "degen/case.hpp"
#include "degen/invariants.hpp"
#include "degen/pipeline.hpp"

namespace degen {

using json = nlohmann::json;

json complex_to_json(const PlanarComplex& c);
PlanarComplex complex_from_json(const json& j);

json case_to_json(const CaseRecord& c);
CaseRecord case_from_json(const json& j);

json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const json& j);

json chern_to_json(const ChernData& c);
ChernData chern_from_json(const json& j);

struct AnalysisReport {
  std::string name;
  std::vector<SingularPoint> points;
  std::vector<LineIndex> generators;
  std::map<std::string, std::size_t> relator_counts;  // by tag
  Verdict verdict;
  BranchStats stats;
  ChernData chern;
  std::optional<Pi1Status> expected;
  std::vector<std::string> mismatches;

  bool operator==(const AnalysisReport&) const = default;
};

AnalysisReport analyze(const CaseRecord& c, const DecideOptions& opt = {});
json report_to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const json& j);
std::string report_markdown(const AnalysisReport& r);

// "4·6!" style rendering of a multiple of n!.
std::string coeff_text(const mpq_class& q, int n);

struct TableRow {
  std::string name;
  ChernData chern;
  Pi1Status status;
};

std::string table_markdown(const std::vector<TableRow>& rows, int n = 6);
json table_json(const std::vector<TableRow>& rows);

}  // namespace degen
