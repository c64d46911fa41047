#include "toric/lp.hpp"

#include <algorithm>

namespace toric {

namespace {

struct Tableau {
  size_t m, n;                     // constraints, original variables
  std::vector<RatVec> t;           // m rows of n + m + 1 entries (original | artificial | rhs)
  std::vector<size_t> basis;       // basic column per row
  std::vector<bool> dead;          // redundant rows (artificial stuck basic at zero)

  void pivot(size_t row, size_t col) {
    Rat p = t[row][col];
    for (auto& e : t[row]) e /= p;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  // Bland's rule simplex over entering columns < n with costs c (size n + m).
  // Returns false when unbounded.
  bool run(const RatVec& cost) {
    for (;;) {
      // y = c_B B^{-1}; reduced cost r_j = c_j - y A_j computed columnwise
      RatVec cb(m);
      for (size_t i = 0; i < m; ++i) cb[i] = cost[basis[i]];
      size_t enter = n;
      for (size_t j = 0; j < n; ++j) {
        Rat r = cost[j];
        for (size_t i = 0; i < m; ++i)
          if (cb[i] != 0) r -= cb[i] * t[i][j];
        if (r > 0) {
          enter = j;
          break;  // Bland: smallest improving index
        }
      }
      if (enter == n) return true;  // optimal
      size_t leave = m;
      Rat best_ratio;
      for (size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        Rat ratio = t[i][n + m] / t[i][enter];
        if (leave == m || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m) return false;  // unbounded
      pivot(leave, enter);
    }
  }

  Rat objective(const RatVec& cost) const {
    Rat v = 0;
    for (size_t i = 0; i < m; ++i) v += cost[basis[i]] * t[i][n + m];
    return v;
  }
};

}  // namespace

SimplexResult lp_maximize(const std::vector<RatVec>& a_rows, const RatVec& b, const RatVec& c) {
  const size_t m = a_rows.size();
  const size_t n = c.size();
  if (b.size() != m) throw Error("lp: rhs size mismatch");
  for (const auto& row : a_rows)
    if (row.size() != n) throw Error("lp: row size mismatch");

  Tableau tab;
  tab.m = m;
  tab.n = n;
  tab.t.assign(m, RatVec(n + m + 1, Rat(0)));
  tab.basis.resize(m);
  tab.dead.assign(m, false);
  std::vector<bool> flipped(m, false);
  for (size_t i = 0; i < m; ++i) {
    bool neg = b[i] < 0;
    flipped[i] = neg;
    for (size_t j = 0; j < n; ++j) tab.t[i][j] = neg ? -a_rows[i][j] : a_rows[i][j];
    tab.t[i][n + i] = 1;
    tab.t[i][n + m] = neg ? -b[i] : b[i];
    tab.basis[i] = n + i;
  }

  // phase 1: maximize -sum(artificials)
  RatVec cost1(n + m, Rat(0));
  for (size_t i = 0; i < m; ++i) cost1[n + i] = -1;
  tab.run(cost1);  // bounded below by construction
  if (tab.objective(cost1) < 0) {
    // infeasible; y = c_B B^{-1} read off the artificial columns
    SimplexResult res;
    res.status = SimplexResult::Status::infeasible;
    res.farkas.assign(m, Rat(0));
    for (size_t i = 0; i < m; ++i) {
      Rat y = 0;
      for (size_t k = 0; k < m; ++k) y += cost1[tab.basis[k]] * tab.t[k][n + i];
      // phase-1 optimality gives y^T A >= 0 and y^T b = objective < 0 for the
      // flipped system; unflip to certify the original rows
      res.farkas[i] = flipped[i] ? -y : y;
    }
    return res;
  }

  // drive basic artificials out; rows that cannot pivot are redundant
  for (size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    size_t col = n;
    for (size_t j = 0; j < n; ++j)
      if (tab.t[i][j] != 0) {
        col = j;
        break;
      }
    if (col == n)
      tab.dead[i] = true;
    else
      tab.pivot(i, col);
  }

  // phase 2
  RatVec cost2(n + m, Rat(0));
  for (size_t j = 0; j < n; ++j) cost2[j] = c[j];
  if (!tab.run(cost2)) {
    SimplexResult res;
    res.status = SimplexResult::Status::unbounded;
    return res;
  }
  SimplexResult res;
  res.status = SimplexResult::Status::optimal;
  res.x.assign(n, Rat(0));
  for (size_t i = 0; i < m; ++i)
    if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.t[i][n + m];
  res.objective = tab.objective(cost2);
  return res;
}

SimplexResult lp_feasible(const std::vector<RatVec>& a_rows, const RatVec& b) {
  size_t n = a_rows.empty() ? 0 : a_rows[0].size();
  return lp_maximize(a_rows, b, RatVec(n, Rat(0)));
}

bool in_conical_span(const std::vector<IntVec>& generators, const RatVec& x) {
  const size_t d = x.size();
  std::vector<RatVec> rows(d, RatVec(generators.size(), Rat(0)));
  for (size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].size() != d) throw Error("in_conical_span: dimension mismatch");
    for (size_t i = 0; i < d; ++i) rows[i][g] = Rat(generators[g][i]);
  }
  return lp_feasible(rows, x).status == SimplexResult::Status::optimal;
}

}  // namespace toric
