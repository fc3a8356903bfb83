#include "degen/invariants.hpp"

#include <algorithm>

#include "degen/relations.hpp"

namespace degen {

std::string to_string(const SingularityKind& s) {
  return std::string(s.kind == PointKind::Inner ? "inner-" : "outer-") + std::to_string(s.k);
}

Contribution contribution(const SingularityKind& s) {
  int k = s.k;
  if (s.kind == PointKind::Outer) {
    if (k == 1) return {1, 0, 0};
    if (k >= 2 && k <= 5) return {k - 1, 2 * (k - 1) * (k - 2), 3 * (k - 1)};
  } else if (k >= 3 && k <= 6) {
    static const int mu_in[] = {0, 0, 0, 4, 4, 5, 6};
    return {mu_in[k], 2 * (k - 2) * (k - 3), 6 * (k - 2)};
  }
  throw UnsupportedCase("no local contribution known for " + to_string(s) + " points");
}

ContributionTable closed_form_contributions() {
  ContributionTable t;
  for (int k = 1; k <= 5; ++k) t.local[{PointKind::Outer, k}] = contribution({PointKind::Outer, k});
  for (int k = 3; k <= 6; ++k) t.local[{PointKind::Inner, k}] = contribution({PointKind::Inner, k});
  t.parasitic = {0, 4, 0};
  return t;
}

BranchStats branch_stats(const PlanarComplex& c, const std::vector<SingularPoint>& points) {
  BranchStats s;
  s.n = c.num_planes();
  s.m = 2 * static_cast<int>(interior_lines(c).size());
  mpq_class mu = 0, d = 0, rho = 0;
  for (auto& p : points) {
    auto x = contribution({p.kind, p.multiplicity});
    mu += x.mu, d += x.d, rho += x.rho;
  }
  d += 4 * static_cast<int>(disjoint_line_pairs(c).size());
  s.mu = static_cast<int>(mu.get_num().get_si());
  s.d = static_cast<int>(d.get_num().get_si());
  s.rho = static_cast<int>(rho.get_num().get_si());
  return s;
}

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

ChernData chern(const BranchStats& s) {
  if (s.n < 1 || s.m < 0 || s.mu < 0 || s.d < 0 || s.rho < 0) throw ArithmeticError("branch statistics must be non-negative");
  mpz_class nf = factorial(s.n);
  ChernData out;
  mpz_class t = s.m - 6;
  out.c1_sq = nf * t * t / 4;
  if (nf * t * t % 4 != 0) throw ArithmeticError("c1^2 is not integral");
  mpq_class c2 = mpq_class(nf) * (mpq_class(3 - s.m) + mpq_class(s.d, 4) + mpq_class(s.mu, 2) + mpq_class(s.rho, 6));
  c2.canonicalize();
  if (c2.get_den() != 1) throw ArithmeticError("c2 = " + c2.get_str() + " is not integral");
  out.c2 = c2.get_num();
  out.chi = mpq_class(out.c1_sq - 2 * out.c2, 3);
  out.chi.canonicalize();
  out.c1_sq_coeff = mpq_class(out.c1_sq, nf);
  out.c2_coeff = mpq_class(out.c2, nf);
  out.chi_coeff = out.chi / nf;
  out.c1_sq_coeff.canonicalize();
  out.c2_coeff.canonicalize();
  return out;
}

Summary summarize(const std::string& name, const std::vector<SingularPoint>& points, int parasitic, int mu, int d,
                  int rho) {
  Summary s{name, {}, parasitic, mu, d, rho};
  for (auto& p : points) ++s.counts[{p.kind, p.multiplicity}];
  return s;
}

namespace {

struct Solve {
  bool consistent = true;
  std::vector<mpq_class> x;
  std::vector<bool> free;
};

// Row reduction of [A | B] with three right-hand sides at once.
Solve solve(std::vector<std::vector<mpq_class>> a, std::size_t nvars) {
  Solve out;
  std::size_t rows = a.size(), width = nvars + 3;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nvars && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    mpq_class inv = 1 / a[r][c];
    for (std::size_t j = c; j < width; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = c; j < width; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    for (std::size_t j = nvars; j < width; ++j)
      if (sgn(a[i][j]) != 0) out.consistent = false;
  out.x.assign(nvars * 3, 0);
  out.free.assign(nvars, true);
  for (std::size_t i = 0; i < r; ++i) {
    out.free[pivot_col[i]] = false;
    for (int q = 0; q < 3; ++q) out.x[pivot_col[i] * 3 + q] = a[i][nvars + q];
  }
  return out;
}

struct System {
  std::vector<SingularityKind> kinds;
  bool has_parasitic = false;
  std::vector<std::vector<mpq_class>> rows;
};

System build(const std::vector<Summary>& ss) {
  System sys;
  for (auto& s : ss) {
    for (auto& [k, n] : s.counts)
      if (n && std::find(sys.kinds.begin(), sys.kinds.end(), k) == sys.kinds.end()) sys.kinds.push_back(k);
    if (s.parasitic) sys.has_parasitic = true;
  }
  std::sort(sys.kinds.begin(), sys.kinds.end());
  std::size_t nv = sys.kinds.size() + (sys.has_parasitic ? 1 : 0);
  for (auto& s : ss) {
    std::vector<mpq_class> row(nv + 3, 0);
    for (std::size_t i = 0; i < sys.kinds.size(); ++i) {
      auto it = s.counts.find(sys.kinds[i]);
      if (it != s.counts.end()) row[i] = it->second;
    }
    if (sys.has_parasitic) row[sys.kinds.size()] = s.parasitic;
    row[nv] = s.mu, row[nv + 1] = s.d, row[nv + 2] = s.rho;
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

}  // namespace

FitResult fit_contributions(const std::vector<Summary>& summaries) {
  FitResult res;
  auto sys = build(summaries);
  std::size_t nk = sys.kinds.size(), nv = nk + (sys.has_parasitic ? 1 : 0);
  auto sol = solve(sys.rows, nv);
  res.consistent = sol.consistent;
  if (sol.consistent) {
    for (std::size_t i = 0; i < nk; ++i) {
      res.table.local[sys.kinds[i]] = {sol.x[i * 3], sol.x[i * 3 + 1], sol.x[i * 3 + 2]};
      if (sol.free[i]) res.undetermined.push_back(sys.kinds[i]);
    }
    if (sys.has_parasitic) {
      res.table.parasitic = {sol.x[nk * 3], sol.x[nk * 3 + 1], sol.x[nk * 3 + 2]};
      res.parasitic_undetermined = sol.free[nk];
    }
    return res;
  }
  for (std::size_t drop = 0; drop < summaries.size(); ++drop) {
    auto rows = sys.rows;
    rows.erase(rows.begin() + drop);
    if (solve(rows, nv).consistent) res.suspects.push_back(summaries[drop].name);
  }
  return res;
}

}  // namespace degen
