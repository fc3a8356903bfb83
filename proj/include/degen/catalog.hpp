#pragma once

#include <string>
#include <vector>

#include "degen/case.hpp"
#include "degen/fpgroup.hpp"

namespace degen {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// $DEGEN_CATALOG_DIR if set, else the compiled-in data directory.
std::string catalog_dir();

// "U_{0,5,3}", "U_{4\cup 3,1}", "u-0-5-3" all map to the file alias.
std::string normalize_name(const std::string& name);

CaseRecord load(const std::string& name, const std::string& dir = catalog_dir());
std::vector<CaseRecord> all(const std::string& dir = catalog_dir());
CaseRecord load_file(const std::string& path);

std::string sha256_hex(const std::string& bytes);

struct CatalogIssue {
  std::string case_name;
  std::string field;
  std::string detail;
};

struct CatalogReport {
  std::vector<CatalogIssue> issues;
  std::vector<std::string> requires_hints;  // Undecided without hints but decided with them
  bool clean() const { return issues.empty(); }
};

struct VerifyOptions {
  bool hints = true;
  EnumLimits limits;
};

CatalogReport verify_catalog(const std::vector<CaseRecord>& cases, const VerifyOptions& opt = {});

}  // namespace degen
