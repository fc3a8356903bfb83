#include "degen/fpgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>
#include <unordered_map>

namespace degen {

const char* to_string(Strategy s) { return s == Strategy::RelatorFirst ? "relator-first" : "coincidence-first"; }

Strategy strategy_from(const std::string& s) {
  if (s == "relator-first" || s == "hlt") return Strategy::RelatorFirst;
  if (s == "coincidence-first" || s == "felsch") return Strategy::CoincidenceFirst;
  throw std::invalid_argument("unknown strategy '" + s + "' (expected relator-first or coincidence-first)");
}

CosetTable::CosetTable(std::vector<LineIndex> gens, std::vector<int> fwd, std::vector<int> bwd)
    : gens_(std::move(gens)), fwd_(std::move(fwd)), bwd_(std::move(bwd)) {}

int CosetTable::column(LineIndex g) const {
  auto it = std::find(gens_.begin(), gens_.end(), g);
  if (it == gens_.end()) throw std::invalid_argument("unknown generator g" + std::to_string(g));
  return static_cast<int>(it - gens_.begin());
}

int CosetTable::act(int coset, const Letter& l) const {
  std::size_t k = static_cast<std::size_t>(coset) * gens_.size() + column(l.gen);
  return l.exp > 0 ? fwd_[k] : bwd_[k];
}

int CosetTable::act(int coset, const Word& w) const {
  for (auto& l : w) coset = act(coset, l);
  return coset;
}

bool CosetTable::closed_under(const Presentation& p) const {
  for (std::size_t c = 0; c < index(); ++c) {
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      int d = fwd_[c * gens_.size() + g];
      if (d < 0 || bwd_[static_cast<std::size_t>(d) * gens_.size() + g] != static_cast<int>(c)) return false;
    }
    for (auto& r : p.relators)
      if (act(static_cast<int>(c), r) != static_cast<int>(c)) return false;
  }
  return true;
}

namespace {

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup, const EnumLimits& lim) : p_(p), lim_(lim) {
    p.check();
    std::map<LineIndex, int> gi;
    for (std::size_t i = 0; i < p.generators.size(); ++i) gi[p.generators[i]] = static_cast<int>(i);
    std::vector<bool> invol(p.generators.size(), false);
    for (auto& r : p.relators)
      if (r.size() == 2 && r[0].gen == r[1].gen && r[0].exp == r[1].exp) invol[gi[r[0].gen]] = true;
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
      pos_.push_back(ncols_);
      inv_.push_back(ncols_);
      if (invol[i]) {
        neg_.push_back(ncols_++);
      } else {
        neg_.push_back(ncols_ + 1);
        inv_.back() = ncols_ + 1;
        inv_.push_back(ncols_);
        ncols_ += 2;
      }
    }
    auto cols_of = [&](const Word& w) {
      std::vector<int> out;
      for (auto& l : free_reduce(w)) {
        int g = gi.at(l.gen);
        out.push_back(l.exp > 0 ? pos_[g] : neg_[g]);
      }
      return out;
    };
    for (auto& r : p.relators) {
      auto w = cols_of(r);
      // Cyclically reduce; involutions make x x trivial.
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
          if (w[i + 1] == inv_[w[i]]) {
            w.erase(w.begin() + i, w.begin() + i + 2);
            changed = true;
            break;
          }
        while (w.size() >= 2 && w.back() == inv_[w.front()]) {
          w.pop_back();
          w.erase(w.begin());
          changed = true;
        }
      }
      if (!w.empty()) rels_.push_back(std::move(w));
    }
    for (auto& s : subgroup) subs_.push_back(cols_of(s));
    if (lim_.strategy == Strategy::CoincidenceFirst) {
      by_first_.resize(ncols_);
      for (auto& r : rels_) {
        for (std::size_t k = 0; k < r.size(); ++k) {
          std::vector<int> c(r.begin() + k, r.end());
          c.insert(c.end(), r.begin(), r.begin() + k);
          by_first_[c[0]].push_back(c);
          std::vector<int> ic;
          for (auto it = c.rbegin(); it != c.rend(); ++it) ic.push_back(inv_[*it]);
          by_first_[ic[0]].push_back(ic);
        }
      }
      for (auto& v : by_first_) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
      }
    }
  }

  EnumResult run() {
    EnumResult res;
    if (lim_.max_cosets < 1) throw std::invalid_argument("max_cosets must be at least 1");
    new_coset();
    bool ok = lim_.strategy == Strategy::RelatorFirst ? hlt() : felsch();
    res.stats = stats_;
    if (!ok) return res;
    res.completed = true;
    res.table = compact();
    return res;
  }

 private:
  int& T(int c, int x) { return table_[static_cast<std::size_t>(c) * ncols_ + x]; }
  bool alive(int c) const { return parent_[c] == c; }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int n = parent_[c];
      parent_[c] = r;
      c = n;
    }
    return r;
  }

  int new_coset() {
    if (total_ >= lim_.max_cosets) return -1;
    int n = static_cast<int>(total_++);
    table_.resize(total_ * ncols_, -1);
    parent_.push_back(n);
    ++live_;
    stats_.defined = total_;
    stats_.max_live = std::max(stats_.max_live, live_);
    return n;
  }

  bool define(int c, int x) {
    int n = new_coset();
    if (n < 0) return false;
    T(c, x) = n;
    T(n, inv_[x]) = c;
    if (lim_.trace) *lim_.trace << "def " << c << ' ' << x << ' ' << n << '\n';
    deduce(c, x);
    return true;
  }

  void deduce(int c, int x) {
    if (lim_.strategy == Strategy::CoincidenceFirst) deductions_.emplace_back(c, x);
  }

  void merge(int a, int b, std::vector<int>& q) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    q.push_back(b);
    --live_;
    ++stats_.coincidences;
    if (lim_.trace) *lim_.trace << "coinc " << a << ' ' << b << '\n';
  }

  void coincidence(int a, int b) {
    std::vector<int> q;
    merge(a, b, q);
    for (std::size_t k = 0; k < q.size(); ++k) {
      int g = q[k];
      for (int x = 0; x < ncols_; ++x) {
        int d = T(g, x);
        if (d < 0) continue;
        T(d, inv_[x]) = -1;
        int mu = rep(g), nu = rep(d);
        if (T(mu, x) >= 0) {
          merge(nu, T(mu, x), q);
        } else if (T(nu, inv_[x]) >= 0) {
          merge(mu, T(nu, inv_[x]), q);
        } else {
          T(mu, x) = nu;
          T(nu, inv_[x]) = mu;
          deduce(mu, x);
        }
      }
    }
  }

  // Returns false on overflow.
  bool scan_and_fill(int c, const std::vector<int>& w) {
    if (w.empty()) return true;
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && T(f, w[i]) >= 0) f = T(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && T(b, inv_[w[j]]) >= 0) b = T(b, inv_[w[j--]]);
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        T(f, w[i]) = b;
        T(b, inv_[w[i]]) = f;
        deduce(f, w[i]);
        return true;
      }
      if (!define(f, w[i])) return false;
    }
  }

  void scan(int c, const std::vector<int>& w) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (i <= j && T(f, w[i]) >= 0) f = T(f, w[i++]);
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && T(b, inv_[w[j]]) >= 0) b = T(b, inv_[w[j--]]);
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      T(f, w[i]) = b;
      T(b, inv_[w[i]]) = f;
      deduce(f, w[i]);
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c)) continue;
      for (auto& w : by_first_[x]) {
        scan(c, w);
        if (!alive(c)) break;
      }
      if (!alive(c)) continue;
      int d = T(c, x);
      if (d < 0 || !alive(d)) continue;
      for (auto& w : by_first_[inv_[x]]) {
        scan(d, w);
        if (!alive(d)) break;
      }
    }
  }

  bool hlt() {
    for (auto& s : subs_)
      if (!scan_and_fill(rep(0), s)) return false;
    for (std::size_t c = 0; c < total_; ++c) {
      int ci = static_cast<int>(c);
      for (auto& r : rels_) {
        if (!alive(ci)) break;
        if (!scan_and_fill(ci, r)) return false;
      }
      if (!alive(ci)) continue;
      for (int x = 0; x < ncols_; ++x)
        if (alive(ci) && T(ci, x) < 0 && !define(ci, x)) return false;
    }
    return true;
  }

  bool felsch() {
    for (auto& s : subs_) {
      if (!scan_and_fill(rep(0), s)) return false;
      process_deductions();
    }
    // Relators must also hold at the subgroup coset before anything is defined.
    for (auto& r : rels_) scan(rep(0), r);
    process_deductions();
    for (std::size_t c = 0; c < total_; ++c) {
      int ci = static_cast<int>(c);
      for (int x = 0; x < ncols_ && alive(ci); ++x) {
        if (T(ci, x) >= 0) continue;
        if (!define(ci, x)) return false;
        process_deductions();
      }
    }
    return true;
  }

  CosetTable compact() {
    std::vector<int> id(total_, -1);
    int n = 0;
    for (std::size_t c = 0; c < total_; ++c)
      if (alive(static_cast<int>(c))) id[c] = n++;
    std::size_t g = p_.generators.size();
    std::vector<int> fwd(n * g), bwd(n * g);
    for (std::size_t c = 0; c < total_; ++c) {
      if (id[c] < 0) continue;
      for (std::size_t k = 0; k < g; ++k) {
        fwd[id[c] * g + k] = id[rep(T(static_cast<int>(c), pos_[k]))];
        bwd[id[c] * g + k] = id[rep(T(static_cast<int>(c), neg_[k]))];
      }
    }
    return CosetTable(p_.generators, std::move(fwd), std::move(bwd));
  }

  const Presentation& p_;
  EnumLimits lim_;
  int ncols_ = 0;
  std::vector<int> pos_, neg_, inv_;
  std::vector<std::vector<int>> rels_, subs_;
  std::vector<std::vector<std::vector<int>>> by_first_;
  std::vector<int> table_, parent_;
  std::vector<std::pair<int, int>> deductions_;
  std::size_t total_ = 0, live_ = 0;
  EnumStats stats_;
};

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

Perm identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : p) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

EnumResult todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup, const EnumLimits& lim) {
  return Enumerator(p, subgroup, lim).run();
}

Perm PermutationAssignment::image(LineIndex line) const {
  auto it = transposition.find(line);
  if (it == transposition.end()) throw std::invalid_argument("no permutation assigned to g" + std::to_string(line));
  auto pos = [&](PlaneId q) { return static_cast<int>(std::find(planes.begin(), planes.end(), q) - planes.begin()); };
  Perm p = identity(degree());
  std::swap(p[pos(it->second.first)], p[pos(it->second.second)]);
  return p;
}

Perm PermutationAssignment::evaluate(const Word& w) const {
  Perm p = identity(degree());
  for (auto& l : w) p = compose(p, image(l.gen));  // transpositions are their own inverses
  return p;
}

PermutationAssignment permutation_assignment(const PlanarComplex& c) {
  auto g = dual_graph(c);
  if (!g.connected()) throw std::invalid_argument("dual graph is disconnected; the images cannot generate S_n");
  PermutationAssignment a;
  a.planes = g.nodes;
  for (auto& e : g.edges) a.transposition[e.line] = {e.a, e.b};
  return a;
}

std::vector<std::size_t> check_relators_in_permutations(const Presentation& p, const PermutationAssignment& a) {
  std::vector<std::size_t> bad;
  Perm id = identity(a.degree());
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    if (a.evaluate(p.relators[i]) != id) bad.push_back(i);
  return bad;
}

std::size_t image_order(const PermutationAssignment& a, std::size_t limit) {
  std::vector<Perm> gens;
  for (auto& [l, t] : a.transposition) gens.push_back(a.image(l));
  std::unordered_map<Perm, int, PermHash> seen;
  std::deque<Perm> q{identity(a.degree())};
  seen.emplace(q.front(), 0);
  while (!q.empty() && seen.size() <= limit) {
    Perm x = q.front();
    q.pop_front();
    for (auto& g : gens) {
      Perm y = compose(x, g);
      if (seen.emplace(y, 0).second) q.push_back(std::move(y));
    }
  }
  return seen.size();
}

AbelianizationResult kernel_abelianization(const Presentation& p, const PermutationAssignment& a,
                                           const AbelianizationLimits& lim) {
  p.check();
  if (!check_relators_in_permutations(p, a).empty())
    throw std::invalid_argument("relators do not hold in the permutation images");
  std::size_t ng = p.generators.size();
  std::vector<Perm> gimg;
  for (LineIndex g : p.generators) gimg.push_back(a.image(g));

  // Cosets of the kernel are the elements of the image group.
  std::vector<Perm> elems{identity(a.degree())};
  std::unordered_map<Perm, int, PermHash> index{{elems[0], 0}};
  std::vector<int> mult;  // [e * ng + g]
  std::vector<int> tree;  // 1 if (e,g) is a Schreier tree edge
  for (std::size_t e = 0; e < elems.size(); ++e) {
    for (std::size_t g = 0; g < ng; ++g) {
      Perm y = compose(elems[e], gimg[g]);
      auto [it, fresh] = index.emplace(y, static_cast<int>(elems.size()));
      if (fresh) {
        if (elems.size() >= lim.max_image_order) throw ResourceError("image group exceeds the configured size budget");
        elems.push_back(std::move(y));
      }
      mult.push_back(it->second);
      tree.push_back(fresh ? 1 : 0);
    }
  }
  std::size_t n = elems.size();
  std::vector<int> invmult(n * ng);
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t g = 0; g < ng; ++g) invmult[mult[e * ng + g] * ng + g] = static_cast<int>(e);
  std::vector<int> col(n * ng, -1);
  int cols = 0;
  for (std::size_t k = 0; k < n * ng; ++k)
    if (!tree[k]) col[k] = cols++;

  std::map<LineIndex, std::size_t> gi;
  for (std::size_t i = 0; i < ng; ++i) gi[p.generators[i]] = i;
  std::vector<SparseRow> rows;
  std::size_t entries = 0;
  for (auto& r : p.relators) {
    for (std::size_t e = 0; e < n; ++e) {
      std::map<int, long> acc;
      std::size_t cur = e;
      for (auto& l : r) {
        std::size_t g = gi.at(l.gen);
        if (l.exp > 0) {
          if (int c = col[cur * ng + g]; c >= 0) acc[c] += 1;
          cur = mult[cur * ng + g];
        } else {
          std::size_t prev = invmult[cur * ng + g];
          if (int c = col[prev * ng + g]; c >= 0) acc[c] -= 1;
          cur = prev;
        }
      }
      SparseRow row;
      for (auto& [c, v] : acc)
        if (v) row.emplace_back(c, mpz_class(v));
      if (row.empty()) continue;
      entries += row.size();
      if (entries > lim.max_entries) throw ResourceError("relator matrix exceeds the configured size budget");
      rows.push_back(std::move(row));
    }
  }
  return abelian_quotient(std::move(rows), cols);
}

SmithResult smith_normal_form(IntMatrix a) {
  SmithResult res;
  std::size_t m = a.size(), n = m ? a[0].size() : 0;
  for (auto& row : a)
    if (row.size() != n) throw std::invalid_argument("ragged matrix");
  std::size_t t = 0;
  auto min_pivot = [&](std::size_t& pi, std::size_t& pj) {
    bool found = false;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(a[i][j]) != 0 && (!found || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j, found = true;
    return found;
  };
  while (t < m && t < n) {
    std::size_t pi = t, pj = t;
    if (!min_pivot(pi, pj)) break;
    for (;;) {
      std::swap(a[t], a[pi]);
      for (std::size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        mpz_class q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (sgn(a[i][t]) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        mpz_class q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (sgn(a[t][j]) != 0) clean = false;
      }
      if (clean) {
        // The pivot must divide the rest of the matrix.
        bool divides = true;
        for (std::size_t i = t + 1; i < m && divides; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (sgn(a[i][j]) != 0 && a[i][j] % a[t][t] != 0) {
              for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
              divides = false;
              break;
            }
        if (divides) break;
      }
      pi = t, pj = t;
      for (std::size_t i = t; i < m; ++i)
        if (sgn(a[i][t]) != 0 && (sgn(a[pi][pj]) == 0 || abs(a[i][t]) < abs(a[pi][pj]))) pi = i, pj = t;
      for (std::size_t j = t; j < n; ++j)
        if (sgn(a[t][j]) != 0 && (sgn(a[pi][pj]) == 0 || abs(a[t][j]) < abs(a[pi][pj]))) pi = t, pj = j;
    }
    res.factors.push_back(abs(a[t][t]));
    ++t;
  }
  res.rank = res.factors.size();
  return res;
}

AbelianizationResult abelian_quotient(std::vector<SparseRow> rows, int cols) {
  // Unit pivots first: each removes one generator and one relation.
  std::vector<std::vector<int>> in_col(cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto& [c, v] : rows[r]) in_col[c].push_back(static_cast<int>(r));
  std::vector<bool> dead(rows.size(), false), gone(cols, false);
  int eliminated = 0;
  auto coeff = [](const SparseRow& row, int c) -> const mpz_class* {
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int k) { return e.first < k; });
    return it != row.end() && it->first == c ? &it->second : nullptr;
  };
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<int> order;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!dead[r]) order.push_back(static_cast<int>(r));
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return rows[x].size() < rows[y].size(); });
    for (int r : order) {
      if (dead[r]) continue;
      if (rows[r].empty()) {
        dead[r] = true;
        continue;
      }
      int pc = -1;
      for (auto& [c, v] : rows[r])
        if (abs(v) == 1 && (pc < 0 || in_col[c].size() < in_col[pc].size())) pc = c;
      if (pc < 0) continue;
      mpz_class pv = *coeff(rows[r], pc);
      SparseRow piv = rows[r];
      dead[r] = true;
      gone[pc] = true;
      ++eliminated;
      progress = true;
      auto users = in_col[pc];
      std::sort(users.begin(), users.end());
      users.erase(std::unique(users.begin(), users.end()), users.end());
      for (int s : users) {
        if (dead[s]) continue;
        const mpz_class* a = coeff(rows[s], pc);
        if (!a) continue;
        mpz_class f = *a * pv;  // pv is a unit, so pv^-1 = pv
        SparseRow merged;
        merged.reserve(rows[s].size() + piv.size());
        auto i = rows[s].begin(), j = piv.begin();
        while (i != rows[s].end() || j != piv.end()) {
          if (j == piv.end() || (i != rows[s].end() && i->first < j->first)) {
            merged.push_back(*i++);
          } else if (i == rows[s].end() || j->first < i->first) {
            mpz_class v = -f * j->second;
            merged.emplace_back(j->first, v);
            in_col[j->first].push_back(s);
            ++j;
          } else {
            mpz_class v = i->second - f * j->second;
            if (sgn(v) != 0) merged.emplace_back(i->first, v);
            ++i, ++j;
          }
        }
        rows[s] = std::move(merged);
        if (rows[s].empty()) dead[s] = true;
      }
      in_col[pc].clear();
    }
  }
  std::vector<int> active;
  std::map<int, int> pos;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!dead[r])
      for (auto& [c, v] : rows[r])
        if (!pos.count(c)) pos[c] = 0;
  int k = 0;
  for (auto& [c, i] : pos) i = k++;
  IntMatrix dense;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (dead[r]) continue;
    std::vector<mpz_class> row(k, 0);
    for (auto& [c, v] : rows[r]) row[pos[c]] = v;
    dense.push_back(std::move(row));
  }
  if (dense.size() * static_cast<std::size_t>(k) > 50'000'000)
    throw ResourceError("dense remainder too large for Smith normal form");
  auto snf = smith_normal_form(std::move(dense));
  AbelianizationResult res;
  res.free_rank = cols - eliminated - static_cast<int>(snf.rank);
  for (auto& f : snf.factors)
    if (f > 1) res.torsion.push_back(f);
  return res;
}

}  // namespace degen
