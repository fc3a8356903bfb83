#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "degen/complex.hpp"

namespace degen {

struct BranchStats {
  int n = 0;    // planes
  int m = 0;    // degree of the branch curve, 2L
  int mu = 0;   // branch points
  int d = 0;    // nodes
  int rho = 0;  // cusps
  bool operator==(const BranchStats&) const = default;
};

struct ChernData {
  mpz_class c1_sq, c2;
  mpq_class chi;
  // The same three values divided by n!.
  mpq_class c1_sq_coeff, c2_coeff, chi_coeff;
  bool operator==(const ChernData&) const = default;
};

struct SingularityKind {
  PointKind kind;
  int k;
  auto operator<=>(const SingularityKind&) const = default;
};
std::string to_string(const SingularityKind& s);

struct Contribution {
  mpq_class mu, d, rho;
  bool operator==(const Contribution&) const = default;
};

struct ContributionTable {
  std::map<SingularityKind, Contribution> local;
  Contribution parasitic;  // per disjoint line pair
};

// Outer 1..5 and inner 3..6; other kinds throw UnsupportedCase.
Contribution contribution(const SingularityKind& s);
ContributionTable closed_form_contributions();

BranchStats branch_stats(const PlanarComplex& c, const std::vector<SingularPoint>& points);

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

mpz_class factorial(int n);
ChernData chern(const BranchStats& s);

struct Summary {
  std::string name;
  std::map<SingularityKind, int> counts;
  int parasitic = 0;
  int mu = 0, d = 0, rho = 0;
};

Summary summarize(const std::string& name, const std::vector<SingularPoint>& points, int parasitic, int mu, int d,
                  int rho);

struct FitResult {
  bool consistent = false;
  ContributionTable table;
  std::vector<SingularityKind> undetermined;  // free unknowns, set to zero in `table`
  bool parasitic_undetermined = false;
  std::vector<std::string> suspects;  // summaries whose removal restores consistency
};

FitResult fit_contributions(const std::vector<Summary>& summaries);

}  // namespace degen
