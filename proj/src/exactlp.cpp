#include "toda/exactlp.hpp"

#include <stdexcept>

namespace toda::exactlp {

using linalg::Matrix;

bool equality_feasible(const Matrix<Rat>& a_in, const std::vector<Rat>& b_in) {
  const int m = a_in.rows();
  const int n = a_in.cols();
  if (static_cast<int>(b_in.size()) != m) throw std::invalid_argument("rhs length mismatch");
  if (m == 0) return true;

  // Tableau [A | I | b] with artificial basis; minimize the artificial sum.
  Matrix<Rat> t(m, n + m + 1);
  for (int i = 0; i < m; ++i) {
    Rat sign = b_in[i] < 0 ? Rat(-1) : Rat(1);
    for (int j = 0; j < n; ++j) t(i, j) = sign * a_in(i, j);
    t(i, n + i) = 1;
    t(i, n + m) = sign * b_in[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced-cost row z_j - c_j for the phase-1 objective; entering columns
  // are those with positive entries.
  std::vector<Rat> red(n + m + 1, Rat(0));
  for (int j = 0; j <= n + m; ++j)
    for (int i = 0; i < m; ++i) red[j] += t(i, j);
  for (int i = 0; i < m; ++i) red[n + i] -= 1;

  while (true) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (red[j] > 0) {
        enter = j;
        break;  // Bland: smallest improving index
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best_ratio = 0;
    for (int i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      Rat ratio = t(i, n + m) / t(i, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("phase-1 simplex claims unboundedness");
    // pivot on (leave, enter)
    Rat piv = t(leave, enter);
    for (int j = 0; j <= n + m; ++j) t(leave, j) /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      Rat f = t(i, enter);
      for (int j = 0; j <= n + m; ++j) t(i, j) -= f * t(leave, j);
    }
    Rat f = red[enter];
    if (f != 0)
      for (int j = 0; j <= n + m; ++j) red[j] -= f * t(leave, j);
    basis[leave] = enter;
  }
  return red[n + m] == 0;  // optimal artificial sum
}

bool in_convex_hull(const std::vector<Rat>& x, const std::vector<std::vector<Rat>>& points) {
  const int dim = static_cast<int>(x.size());
  const int np = static_cast<int>(points.size());
  if (np == 0) return false;
  Matrix<Rat> a(dim + 1, np);
  std::vector<Rat> b(dim + 1);
  for (int j = 0; j < np; ++j) {
    if (static_cast<int>(points[j].size()) != dim)
      throw std::invalid_argument("in_convex_hull: dimension mismatch");
    for (int i = 0; i < dim; ++i) a(i, j) = points[j][i];
    a(dim, j) = 1;
  }
  for (int i = 0; i < dim; ++i) b[i] = x[i];
  b[dim] = 1;
  return equality_feasible(a, b);
}

}  // namespace toda::exactlp
