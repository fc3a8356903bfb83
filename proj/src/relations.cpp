#include "degen/relations.hpp"

#include <algorithm>
#include <sstream>

namespace degen {

namespace {

LinePair ordered(LineIndex a, LineIndex b) { return {std::min(a, b), std::max(a, b)}; }

Word gen(LineIndex i) { return Word{{i, 1}}; }

}  // namespace

Word free_reduce(Word w) {
  Word out;
  for (auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.exp = -l.exp;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word word_of(std::initializer_list<LineIndex> gens) { return word_of(std::vector<LineIndex>(gens)); }

Word word_of(const std::vector<LineIndex>& gens) {
  Word w;
  for (LineIndex g : gens) w.push_back({g, 1});
  return w;
}

Word triple_relator(LineIndex i, LineIndex j) { return word_of({i, j, i, j, i, j}); }

Word commutator(const Word& a, const Word& b) { return concat(concat(inverse(a), inverse(b)), concat(a, b)); }

const char* to_string(RelatorTag t) {
  switch (t) {
    case RelatorTag::Involution: return "involution";
    case RelatorTag::Triple: return "triple";
    case RelatorTag::Commutator: return "commutator";
    case RelatorTag::InnerPoint: return "inner-point";
    case RelatorTag::Fork: return "fork";
  }
  return "?";
}

RelatorTag relator_tag_from(const std::string& s) {
  for (auto t : {RelatorTag::Involution, RelatorTag::Triple, RelatorTag::Commutator, RelatorTag::InnerPoint,
                 RelatorTag::Fork})
    if (s == to_string(t)) return t;
  throw std::invalid_argument("unknown relator tag '" + s + "'");
}

void Presentation::add(Word w, RelatorTag tag) {
  relators.push_back(std::move(w));
  tags.push_back(tag);
}

std::size_t Presentation::count(RelatorTag tag) const { return std::count(tags.begin(), tags.end(), tag); }

void Presentation::check() const {
  if (tags.size() != relators.size()) throw std::invalid_argument("relator tags out of step with relators");
  for (auto& r : relators)
    for (auto& l : r) {
      if (std::find(generators.begin(), generators.end(), l.gen) == generators.end())
        throw std::invalid_argument("relator uses undeclared generator g" + std::to_string(l.gen));
      if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("letter exponent must be +1 or -1");
    }
}

PairSet tangent_pairs(const std::vector<SingularPoint>& points) {
  PairSet out;
  for (auto& p : points) {
    auto& ls = p.lines_cyclic;
    int k = static_cast<int>(ls.size());
    if (p.kind == PointKind::Inner) {
      for (int i = 0; i < k; ++i) out.insert(ordered(ls[i], ls[(i + 1) % k]));
    } else {
      for (int i = 0; i + 1 < k; ++i) out.insert(ordered(ls[i], ls[i + 1]));
    }
  }
  return out;
}

PairSet transversal_pairs(const PlanarComplex& c, const std::vector<SingularPoint>& points) {
  PairSet out = disjoint_line_pairs(c);
  auto tangent = tangent_pairs(points);
  for (auto& p : points) {
    if (p.multiplicity < 3) continue;
    auto& ls = p.lines_cyclic;
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t j = i + 1; j < ls.size(); ++j) {
        auto pr = ordered(ls[i], ls[j]);
        if (!tangent.count(pr)) out.insert(pr);
      }
  }
  return out;
}

std::vector<Equality> inner_point_relators(const std::vector<SingularPoint>& points,
                                           const std::vector<Equality>& supplied) {
  std::vector<Equality> out;
  for (auto& p : points) {
    if (p.kind != PointKind::Inner) continue;
    auto l = p.lines_cyclic;
    std::sort(l.begin(), l.end());
    switch (p.multiplicity) {
      case 3:
        out.push_back({gen(l[2]), word_of({l[0], l[1], l[0]})});
        break;
      case 4:
        out.push_back({word_of({l[0], l[1], l[0]}), word_of({l[3], l[2], l[3]})});
        break;
      case 5:
        out.push_back({word_of({l[0], l[1], l[0]}), word_of({l[3], l[4], l[2], l[4], l[3]})});
        break;
      case 6: {
        std::set<LineIndex> mine(l.begin(), l.end());
        bool found = false;
        for (auto& e : supplied) {
          bool inside = true;
          for (auto* w : {&e.lhs, &e.rhs})
            for (auto& x : *w) inside = inside && mine.count(x.gen);
          if (inside) {
            out.push_back(e);
            found = true;
          }
        }
        if (!found)
          throw UnsupportedCase("inner 6-point at vertex " + std::to_string(p.vertex) +
                                " needs a supplied relator (no general pattern is available)");
        break;
      }
      default:
        throw UnsupportedCase("inner " + std::to_string(p.multiplicity) + "-point at vertex " +
                              std::to_string(p.vertex) + " is not supported");
    }
  }
  return out;
}

std::vector<Word> fork_relators(const PairSet& tangent, const std::vector<SingularPoint>& points) {
  std::set<std::vector<LineIndex>> skip;
  for (auto& p : points)
    if (p.kind == PointKind::Inner && p.multiplicity == 3) {
      auto l = p.lines_cyclic;
      std::sort(l.begin(), l.end());
      skip.insert(l);
    }
  std::set<LineIndex> lines;
  for (auto& [a, b] : tangent) lines.insert(a), lines.insert(b);
  std::vector<LineIndex> ls(lines.begin(), lines.end());
  std::vector<Word> out;
  for (std::size_t a = 0; a < ls.size(); ++a)
    for (std::size_t b = a + 1; b < ls.size(); ++b)
      for (std::size_t c = b + 1; c < ls.size(); ++c) {
        LineIndex i = ls[a], j = ls[b], k = ls[c];
        if (tangent.count({i, j}) && tangent.count({j, k}) && tangent.count({i, k}) && !skip.count({i, j, k}))
          out.push_back(commutator(gen(i), word_of({j, k, j})));
      }
  return out;
}

Presentation reduced_presentation(const PlanarComplex& c, const PresentationOptions& opt) {
  auto points = classify_vertices(c);
  Presentation p;
  for (auto& l : interior_lines(c)) p.generators.push_back(l.index);
  for (LineIndex g : p.generators) p.add(word_of({g, g}), RelatorTag::Involution);
  auto tangent = tangent_pairs(points);
  for (auto& [i, j] : tangent) p.add(triple_relator(i, j), RelatorTag::Triple);
  for (auto& [i, j] : transversal_pairs(c, points)) p.add(commutator(gen(i), gen(j)), RelatorTag::Commutator);
  for (auto& e : inner_point_relators(points, opt.supplied))
    p.add(free_reduce(concat(e.lhs, inverse(e.rhs))), RelatorTag::InnerPoint);
  if (opt.forks)
    for (auto& w : fork_relators(tangent, points)) p.add(w, RelatorTag::Fork);
  p.check();
  return p;
}

std::string word_to_text(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << 'g' << w[i].gen;
    if (w[i].exp < 0) os << "^-1";
  }
  return os.str();
}

Word word_from_text(const std::string& s) {
  std::istringstream is(s);
  std::string tok;
  Word w;
  while (is >> tok) {
    if (tok == "1") continue;
    int exp = 1;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      exp = -1;
      tok.resize(tok.size() - 3);
    }
    if (tok.size() < 2 || tok[0] != 'g' || !std::all_of(tok.begin() + 1, tok.end(), ::isdigit))
      throw std::invalid_argument("malformed letter '" + tok + "'");
    w.push_back({std::stoi(tok.substr(1)), exp});
  }
  return w;
}

std::string to_text(const Presentation& p) {
  std::ostringstream os;
  os << "generators:";
  for (LineIndex g : p.generators) os << " g" << g;
  os << '\n';
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i == 0 || p.tags[i] != p.tags[i - 1]) os << "# " << to_string(p.tags[i]) << '\n';
    os << word_to_text(p.relators[i]) << '\n';
  }
  return os.str();
}

Presentation presentation_from_text(const std::string& s) {
  std::istringstream is(s);
  std::string line;
  Presentation p;
  bool header = false;
  RelatorTag tag = RelatorTag::Triple;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (!header) {
      const std::string key = "generators:";
      if (line.compare(0, key.size(), key) != 0) throw std::invalid_argument("missing 'generators:' header");
      for (auto& l : word_from_text(line.substr(key.size()))) p.generators.push_back(l.gen);
      header = true;
    } else if (line[0] == '#') {
      auto t = line.substr(1);
      t.erase(0, t.find_first_not_of(' '));
      tag = relator_tag_from(t);
    } else {
      p.add(word_from_text(line), tag);
    }
  }
  if (!header) throw std::invalid_argument("empty presentation text");
  p.check();
  return p;
}

}  // namespace degen
