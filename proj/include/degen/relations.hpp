#pragma once

#include <string>
#include <vector>

#include "degen/complex.hpp"

namespace degen {

struct Letter {
  LineIndex gen;
  int exp;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
// Positive word from generator indices, e.g. {1,2,1} -> g1 g2 g1.
Word word_of(std::initializer_list<LineIndex> gens);
Word word_of(const std::vector<LineIndex>& gens);

enum class RelatorTag { Involution, Triple, Commutator, InnerPoint, Fork };
const char* to_string(RelatorTag t);
RelatorTag relator_tag_from(const std::string& s);

struct Equality {
  Word lhs, rhs;
};

struct Presentation {
  std::vector<LineIndex> generators;
  std::vector<Word> relators;
  std::vector<RelatorTag> tags;  // parallel to relators

  void add(Word w, RelatorTag tag);
  std::size_t count(RelatorTag tag) const;
  void check() const;  // throws if a relator names an undeclared generator
};

class UnsupportedCase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PairSet tangent_pairs(const std::vector<SingularPoint>& points);
PairSet transversal_pairs(const PlanarComplex& c, const std::vector<SingularPoint>& points);

// Inner 6-points take their relators from `supplied`; other inner points use the fixed patterns.
std::vector<Equality> inner_point_relators(const std::vector<SingularPoint>& points,
                                           const std::vector<Equality>& supplied = {});
// Triples of pairwise tangent lines meeting at an inner 3-point are not forks; pass the points to skip them.
std::vector<Word> fork_relators(const PairSet& tangent, const std::vector<SingularPoint>& points = {});

struct PresentationOptions {
  bool forks = false;
  std::vector<Equality> supplied;
};

Presentation reduced_presentation(const PlanarComplex& c, const PresentationOptions& opt = {});

std::string word_to_text(const Word& w);
Word word_from_text(const std::string& s);
std::string to_text(const Presentation& p);
Presentation presentation_from_text(const std::string& s);

Word triple_relator(LineIndex i, LineIndex j);
Word commutator(const Word& a, const Word& b);

}  // namespace degen
