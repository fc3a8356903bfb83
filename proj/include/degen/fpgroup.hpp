#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "degen/complex.hpp"
#include "degen/relations.hpp"

namespace degen {

enum class Strategy { RelatorFirst, CoincidenceFirst };
const char* to_string(Strategy s);
Strategy strategy_from(const std::string& s);

struct EnumLimits {
  std::size_t max_cosets = 1'000'000;
  Strategy strategy = Strategy::RelatorFirst;
  std::ostream* trace = nullptr;  // one line per definition / coincidence
};

struct EnumStats {
  std::size_t defined = 0;
  std::size_t max_live = 0;
  std::size_t coincidences = 0;
  bool operator==(const EnumStats&) const = default;
};

// A completed coset table, compacted so that cosets are 0..index()-1 and 0 is the subgroup coset.
class CosetTable {
 public:
  CosetTable(std::vector<LineIndex> gens, std::vector<int> fwd, std::vector<int> bwd);

  std::size_t index() const { return gens_.empty() ? 1 : fwd_.size() / gens_.size(); }
  const std::vector<LineIndex>& generators() const { return gens_; }
  int act(int coset, const Letter& l) const;
  int act(int coset, const Word& w) const;
  // Every relator traced from every coset returns to its start.
  bool closed_under(const Presentation& p) const;

 private:
  int column(LineIndex g) const;
  std::vector<LineIndex> gens_;
  std::vector<int> fwd_, bwd_;  // [coset * gens + column]
};

struct EnumResult {
  bool completed = false;
  std::optional<CosetTable> table;
  EnumStats stats;
};

EnumResult todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup = {}, const EnumLimits& lim = {});

using Perm = std::vector<int>;  // 0-based images; words act on the right

struct PermutationAssignment {
  std::vector<PlaneId> planes;                                // point i of S_n is planes[i]
  std::map<LineIndex, std::pair<PlaneId, PlaneId>> transposition;

  int degree() const { return static_cast<int>(planes.size()); }
  Perm image(LineIndex line) const;
  Perm evaluate(const Word& w) const;
};

PermutationAssignment permutation_assignment(const PlanarComplex& c);
// Indices of relators whose images are not the identity.
std::vector<std::size_t> check_relators_in_permutations(const Presentation& p, const PermutationAssignment& a);
// Order of the image group, by closure; stops early once `limit` is exceeded.
std::size_t image_order(const PermutationAssignment& a, std::size_t limit = 10'000'000);

struct AbelianizationResult {
  int free_rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1, each dividing the next
  bool operator==(const AbelianizationResult&) const = default;
};

struct AbelianizationLimits {
  std::size_t max_image_order = 40'320;
  std::size_t max_entries = 20'000'000;  // budget on relator-matrix nonzeros
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Abelianization of the kernel of the presented group onto the image of `a`.
AbelianizationResult kernel_abelianization(const Presentation& p, const PermutationAssignment& a,
                                           const AbelianizationLimits& lim = {});

using IntMatrix = std::vector<std::vector<mpz_class>>;

struct SmithResult {
  std::vector<mpz_class> factors;  // nonzero invariant factors, divisibility order
  std::size_t rank = 0;
};

SmithResult smith_normal_form(IntMatrix m);

// Z^cols modulo the row span of a sparse integer matrix.
using SparseRow = std::vector<std::pair<int, mpz_class>>;
AbelianizationResult abelian_quotient(std::vector<SparseRow> rows, int cols);

}  // namespace degen
