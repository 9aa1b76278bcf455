#include "core/lp.hpp"

namespace semitoric {

namespace {

// Tableau with one row per constraint plus a cost row at the end; the
// right-hand side is the final column.  basis[i] is the variable of row i.
struct Tableau {
  std::vector<std::vector<Rat>> t;
  std::vector<int> basis;
  int rows = 0, cols = 0;  // cols excludes the rhs column

  void pivot(int pr, int pc) {
    const Rat piv = t[pr][pc];
    for (int j = 0; j <= cols; ++j) t[pr][j] /= piv;
    for (int i = 0; i <= rows; ++i) {
      if (i == pr) continue;
      const Rat f = t[i][pc];
      if (f == 0) continue;
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[pr][j];
    }
    basis[pr] = pc;
  }

  // Bland's rule: smallest improving column, then the row whose ratio is
  // minimal with the smallest basis variable breaking ties.
  void optimize(int limit_col) {
    for (;;) {
      int pc = -1;
      for (int j = 0; j < limit_col && pc < 0; ++j)
        if (t[rows][j] < 0) pc = j;
      if (pc < 0) return;
      int pr = -1;
      Rat best;
      for (int i = 0; i < rows; ++i) {
        if (t[i][pc] <= 0) continue;
        const Rat ratio = t[i][cols] / t[i][pc];
        if (pr < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[pr])) {
          pr = i;
          best = ratio;
        }
      }
      if (pr < 0) throw LpError("lp: unbounded");
      pivot(pr, pc);
    }
  }
};

}  // namespace

std::optional<std::vector<Rat>> lp_solve_min(
    const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
    const std::vector<Rat>& c) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != m)
    throw LpError("lp: |b| != row count");
  for (const auto& row : A)
    if (static_cast<int>(row.size()) != n)
      throw LpError("lp: ragged constraint matrix");

  Tableau tab;
  tab.rows = m;
  tab.cols = n + m;  // original variables then one artificial per row
  tab.t.assign(m + 1, std::vector<Rat>(tab.cols + 1, Rat(0)));
  tab.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (int j = 0; j < n; ++j) tab.t[i][j] = flip ? -A[i][j] : A[i][j];
    tab.t[i][tab.cols] = flip ? -b[i] : b[i];
    tab.t[i][n + i] = 1;
    tab.basis[i] = n + i;
  }

  // Phase 1: minimize the sum of artificials.
  for (int j = 0; j <= tab.cols; ++j) {
    Rat s(0);
    for (int i = 0; i < m; ++i) s += tab.t[i][j];
    tab.t[m][j] = -s;
  }
  for (int i = 0; i < m; ++i) tab.t[m][n + i] = 0;
  tab.optimize(n);
  if (tab.t[m][tab.cols] != 0) return std::nullopt;

  // Kick leftover artificials out of the basis; a row with no real column
  // to pivot on is a redundant constraint and stays put at zero.
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    int pc = -1;
    for (int j = 0; j < n && pc < 0; ++j)
      if (tab.t[i][j] != 0) pc = j;
    if (pc >= 0) tab.pivot(i, pc);
  }

  // Phase 2 on the original objective, artificial columns frozen.
  for (int j = 0; j <= tab.cols; ++j) tab.t[m][j] = 0;
  for (int j = 0; j < n; ++j) tab.t[m][j] = c[j];
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] >= n) continue;
    const Rat f = tab.t[m][tab.basis[i]];
    if (f == 0) continue;
    for (int j = 0; j <= tab.cols; ++j) tab.t[m][j] -= f * tab.t[i][j];
  }
  tab.optimize(n);

  std::vector<Rat> x(n, Rat(0));
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] < n) x[tab.basis[i]] = tab.t[i][tab.cols];
  return x;
}

}  // namespace semitoric
