#pragma once

// Exact polytope geometry for the moment side of the flows: matroid
// polytopes, Bruhat interval polytopes in two vertex embeddings, Minkowski
// sums, vertex/edge detection by exact LP, and the moment-map trajectory
// checks (containment in a tolerance shell, fixed-point limits, closure).

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toda/exactlp.hpp"
#include "toda/fktflow.hpp"
#include "toda/matrix.hpp"
#include "toda/rational.hpp"
#include "toda/spectrum.hpp"
#include "toda/symgroup.hpp"
#include "toda/symtoda.hpp"

namespace toda::momentpoly {

using fktflow::MultiTime;
using linalg::Matrix;
using symgroup::Permutation;

using Point = std::vector<Rat>;

struct Polytope {
  int dim = 0;
  std::vector<Point> vertices;
  std::vector<std::pair<int, int>> edges;       // indices into vertices, a < b
  std::vector<std::vector<int>> vertex_labels;  // optional permutation one-lines
};

// Indices of the points that are vertices of their convex hull (a point is
// kept iff it is not a convex combination of the others). Duplicates are
// collapsed to their first occurrence.
std::vector<int> hull_vertex_indices(const std::vector<Point>& points);
std::vector<Point> hull_vertices(const std::vector<Point>& points);

// Edge detection: the midpoint-exclusion test ((a+b)/2 outside the hull of
// the remaining vertices) prefilters candidate pairs, and each survivor is
// certified by an exact functional. The certificate alone is already a
// complete characterization; the midpoint test alone is not on polytopes of
// deficient dimension.
std::vector<std::pair<int, int>> compute_edges(const Polytope& p);

// Exact edge characterization: a linear functional equal on a,b and
// strictly smaller on every other vertex.
bool certify_edge(const Polytope& p, int a, int b);

// Exact containment of x in the polytope inflated by eps in sup norm.
bool contains_with_shell(const Polytope& p, const Point& x, const Rat& eps);

Polytope matroid_polytope(const std::vector<std::vector<int>>& bases, int n);

enum class Embedding {
  kAppendix,  // vertex of z is (z(1), ..., z(n))
  kMoment,    // vertex of z is p_z with (p_z)_i = n - z^{-1}(i)
};

Point permutation_point(const Permutation& z, Embedding emb);

struct IntervalPolytope {
  Polytope polytope;
  std::vector<std::vector<int>> nonvertex_labels;  // interval members that are
                                                   // not hull vertices (none
                                                   // observed; reported anyway)
};

IntervalPolytope bruhat_interval_polytope(const Permutation& v, const Permutation& w,
                                          Embedding emb);

Polytope minkowski_sum(const std::vector<Polytope>& ps);

// Moment map of a flow: per projection rank k, softmax of the squared
// Pluecker weights over the exponential torus action.
class MomentMap {
 public:
  MomentMap(const Matrix<Rat>& g_exact, const Spectrum& spec);

  // Same map computed through the orthogonal factor of g (the symmetric-Toda
  // route); the zero pattern is still taken from the exact minors of g.
  static MomentMap from_orthogonal(const Matrix<double>& q0, const Matrix<Rat>& g_exact,
                                   const Spectrum& spec);

  int n() const { return n_; }
  // phi(t) in R^n, coordinates summing to n(n-1)/2
  std::vector<double> point(const MultiTime& t) const;

 private:
  MomentMap() = default;
  struct Term {
    std::vector<int> index_set;
    double log_weight;              // log Delta_I^2
    std::vector<double> power_sums;  // theta_I coefficients
  };
  void build_terms(int n, const Spectrum& spec, const Matrix<Rat>& pattern,
                   const std::function<double(const std::vector<int>&, int)>& minor_of);
  int n_ = 0;
  std::vector<std::vector<Term>> terms_;  // k = 1..n-1
};

struct SamplePlan {
  std::vector<double> t1_grid;
  std::vector<double> ray_scales;  // containment samples along each fixed-point ray
  double limit_scale = 0;          // where the vertex-limit is tested
  static SamplePlan standard(const Spectrum& spec);
};

struct MomentClosureReport {
  int samples_checked = 0;
  int containment_violations = 0;
  double limit_max_err = 0;
  bool hull_matches = false;
  bool pass = false;
};

// (a) every sampled trajectory point lies in P_{v,w} inflated by shell_eps,
// (b) along each fixed-point ray the trajectory reaches the labeled vertex
//     within limit_tol,
// (c) the hull of the limit points is exactly P_{v,w}.
MomentClosureReport verify_moment_closure(const MomentMap& mm, const Spectrum& spec,
                                          const Permutation& v, const Permutation& w,
                                          const SamplePlan& plan, double shell_eps = 1e-8,
                                          double limit_tol = 1e-6);

struct SymMomentReport {
  double trajectory_max_dev = 0;  // A_k route vs Q_k route over the plan
  double matroid_match_dev = 0;
  MomentClosureReport closure;
  bool pass = false;
};

SymMomentReport verify_sym_moment(const Matrix<Rat>& g_exact,
                                  const symtoda::SymmetricFlow<double>& sflow,
                                  const Spectrum& spec, const Permutation& v,
                                  const Permutation& w, const SamplePlan& plan,
                                  double tol = 1e-8);

}  // namespace toda::momentpoly
