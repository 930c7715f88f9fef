#pragma once

// Parametrization of cells of the totally non-negative flag variety by a
// Bruhat pair (v, w), a reduced word for w, and positive parameters on the
// stalled positions of the PDS. The resulting group element g is exact, so
// flag-minor positivity and the projection matroids are decided exactly.

#include <vector>

#include "toda/matrix.hpp"
#include "toda/rational.hpp"
#include "toda/symgroup.hpp"

namespace toda::tnncell {

using linalg::Matrix;
using symgroup::Permutation;
using symgroup::ReducedWord;
using symgroup::Subexpression;

// Identity with the 2x2 block [[1,0],[p,1]] at rows/cols (i, i+1), 1-based.
Matrix<Rat> generator_y(int n, int i, const Rat& p);
// Identity with the 2x2 block [[0,-1],[1,0]] at (i, i+1); the sign convention
// (upper-right -1) fixes the global signs of all flag minors.
Matrix<Rat> generator_sdot(int n, int i);

class CellPoint {
 public:
  // params run over the stalled (J^+) positions of the PDS, in position
  // order; all must be > 0 and there must be l(w) - l(v) of them.
  CellPoint(Permutation v, ReducedWord w_word, std::vector<Rat> params);

  const Permutation& v() const { return v_; }
  const Permutation& w() const { return w_word_.target(); }
  const ReducedWord& w_word() const { return w_word_; }
  const Subexpression& subexpr() const { return sub_; }
  const std::vector<Rat>& params() const { return params_; }
  int n() const { return v_.n(); }

 private:
  Permutation v_;
  ReducedWord w_word_;
  Subexpression sub_;
  std::vector<Rat> params_;
};

// The cell matrix g = g_1 ... g_m with g_l = y_{i_l}(p_l) on stalled
// positions and sdot_{i_l} on the others. det g = 1.
Matrix<Rat> build_g(const CellPoint& c);

// True iff all flag minors indexed by the prefix sets of z are positive,
// which characterizes v <= z <= w on cell matrices.
bool interval_by_minors(const Matrix<Rat>& g, const Permutation& z);

// Basis sets of the rank-k projection: {I : flag minor of rows I is nonzero}.
std::vector<std::vector<int>> matroid_of_projection(const Matrix<Rat>& g, int k);

// Basis exchange axiom for a set family (used to validate projections).
bool exchange_axiom_holds(const std::vector<std::vector<int>>& bases);

std::vector<std::vector<int>> k_subsets(int n, int k);

// Seeded positive parameters drawn from {1/4, 1/3, 1/2, 1, 2, 3}; small
// rationals keep exact minors cheap while positivity statements are
// parameter-independent anyway.
std::vector<Rat> random_params(int count, unsigned long long seed);

}  // namespace toda::tnncell
