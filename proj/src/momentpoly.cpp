#include "toda/momentpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "toda/tnncell.hpp"

namespace toda::momentpoly {

std::vector<int> hull_vertex_indices(const std::vector<Point>& points) {
  std::map<Point, int> first_seen;
  std::vector<int> unique_idx;
  for (int i = 0; i < static_cast<int>(points.size()); ++i)
    if (first_seen.emplace(points[i], i).second) unique_idx.push_back(i);

  std::vector<int> kept;
  for (int i : unique_idx) {
    std::vector<Point> others;
    others.reserve(unique_idx.size() - 1);
    for (int j : unique_idx)
      if (j != i) others.push_back(points[j]);
    if (!exactlp::in_convex_hull(points[i], others)) kept.push_back(i);
  }
  return kept;
}

std::vector<Point> hull_vertices(const std::vector<Point>& points) {
  std::vector<Point> out;
  for (int i : hull_vertex_indices(points)) out.push_back(points[i]);
  return out;
}

std::vector<std::pair<int, int>> compute_edges(const Polytope& p) {
  // The midpoint test alone is not decisive: on polytopes of deficient
  // dimension (e.g. a planar interval polytope in R^4) the midpoint of a
  // diagonal can escape the hull of the remaining vertices. It is still a
  // sound rejection, so it serves as a prefilter before the exact
  // functional certificate, which characterizes edges completely.
  std::vector<std::pair<int, int>> edges;
  const int nv = static_cast<int>(p.vertices.size());
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b) {
      Point mid(p.dim);
      for (int i = 0; i < p.dim; ++i) mid[i] = (p.vertices[a][i] + p.vertices[b][i]) / 2;
      std::vector<Point> others;
      others.reserve(nv - 2);
      for (int j = 0; j < nv; ++j)
        if (j != a && j != b) others.push_back(p.vertices[j]);
      if (exactlp::in_convex_hull(mid, others)) continue;
      if (certify_edge(p, a, b)) edges.emplace_back(a, b);
    }
  return edges;
}

bool certify_edge(const Polytope& p, int a, int b) {
  // Look for (c, gamma) with c.a = c.b = gamma and c.q <= gamma - 1 on the
  // remaining vertices; free variables split into positive parts.
  const int n = p.dim;
  const int nv = static_cast<int>(p.vertices.size());
  const int nfree = 2 * (n + 1);
  const int nslack = nv - 2;
  linalg::Matrix<Rat> A(2 + nslack, nfree + nslack);
  std::vector<Rat> rhs(2 + nslack);
  auto fill_row = [&](int row, const Point& q) {
    for (int i = 0; i < n; ++i) {
      A(row, 2 * i) = q[i];
      A(row, 2 * i + 1) = -q[i];
    }
    A(row, 2 * n) = -1;      // -gamma_plus
    A(row, 2 * n + 1) = 1;   // +gamma_minus
  };
  fill_row(0, p.vertices[a]);
  fill_row(1, p.vertices[b]);
  int row = 2;
  for (int j = 0; j < nv; ++j) {
    if (j == a || j == b) continue;
    fill_row(row, p.vertices[j]);
    A(row, nfree + (row - 2)) = 1;
    rhs[row] = -1;
    ++row;
  }
  return exactlp::equality_feasible(A, rhs);
}

bool contains_with_shell(const Polytope& p, const Point& x, const Rat& eps) {
  if (static_cast<int>(x.size()) != p.dim)
    throw std::invalid_argument("contains_with_shell: dimension mismatch");
  const int n = p.dim;
  const int nv = static_cast<int>(p.vertices.size());
  // mu over vertices, then per coordinate a deviation d_i in [0, 2 eps]
  // with slack s_i: sum_j mu_j V_ji - d_i = x_i - eps.
  linalg::Matrix<Rat> A(2 * n + 1, nv + 2 * n);
  std::vector<Rat> rhs(2 * n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < nv; ++j) A(i, j) = p.vertices[j][i];
    A(i, nv + i) = -1;
    rhs[i] = x[i] - eps;
    A(n + i, nv + i) = 1;
    A(n + i, nv + n + i) = 1;
    rhs[n + i] = 2 * eps;
  }
  for (int j = 0; j < nv; ++j) A(2 * n, j) = 1;
  rhs[2 * n] = 1;
  return exactlp::equality_feasible(A, rhs);
}

Polytope matroid_polytope(const std::vector<std::vector<int>>& bases, int n) {
  if (!tnncell::exchange_axiom_holds(bases))
    throw std::invalid_argument("matroid_polytope: basis exchange axiom fails");
  Polytope p;
  p.dim = n;
  for (const auto& basis : bases) {
    Point e(n, Rat(0));
    for (int i : basis) e[i - 1] = 1;
    p.vertices.push_back(std::move(e));
  }
  // Distinct 0/1 points with a common coordinate sum lie on a sphere, so
  // every one of them is a vertex already.
  return p;
}

Point permutation_point(const Permutation& z, Embedding emb) {
  const int n = z.n();
  Point p(n);
  if (emb == Embedding::kAppendix) {
    for (int i = 1; i <= n; ++i) p[i - 1] = z(i);
  } else {
    Permutation zi = z.inverse();
    for (int i = 1; i <= n; ++i) p[i - 1] = n - zi(i);
  }
  return p;
}

IntervalPolytope bruhat_interval_polytope(const Permutation& v, const Permutation& w,
                                          Embedding emb) {
  std::vector<Permutation> interval = symgroup::bruhat_interval(v, w);
  std::vector<Point> pts;
  pts.reserve(interval.size());
  for (const auto& z : interval) pts.push_back(permutation_point(z, emb));
  std::vector<int> kept = hull_vertex_indices(pts);

  IntervalPolytope out;
  out.polytope.dim = v.n();
  std::set<int> kept_set(kept.begin(), kept.end());
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    if (kept_set.count(i)) {
      out.polytope.vertices.push_back(pts[i]);
      out.polytope.vertex_labels.push_back(interval[i].word());
    } else {
      out.nonvertex_labels.push_back(interval[i].word());
    }
  }
  return out;
}

Polytope minkowski_sum(const std::vector<Polytope>& ps) {
  if (ps.empty()) throw std::invalid_argument("minkowski_sum: empty input");
  const int n = ps[0].dim;
  for (const auto& p : ps)
    if (p.dim != n) throw std::invalid_argument("minkowski_sum: dimension mismatch");
  std::set<Point> sums{Point(n, Rat(0))};
  for (const auto& p : ps) {
    std::set<Point> next;
    for (const auto& base : sums)
      for (const auto& vtx : p.vertices) {
        Point s(n);
        for (int i = 0; i < n; ++i) s[i] = base[i] + vtx[i];
        next.insert(std::move(s));
      }
    sums = std::move(next);
  }
  Polytope out;
  out.dim = n;
  out.vertices = hull_vertices(std::vector<Point>(sums.begin(), sums.end()));
  return out;
}

MomentMap::MomentMap(const Matrix<Rat>& g_exact, const Spectrum& spec) {
  auto minor_of = [&](const std::vector<int>& idx, int k) {
    return to_double(linalg::flag_minor(g_exact, idx, k));
  };
  build_terms(spec.n(), spec, g_exact, minor_of);
}

MomentMap MomentMap::from_orthogonal(const Matrix<double>& q0, const Matrix<Rat>& g_exact,
                                     const Spectrum& spec) {
  MomentMap mm;
  auto minor_of = [&](const std::vector<int>& idx, int k) {
    std::vector<int> rows0(idx.begin(), idx.end());
    for (int& r : rows0) --r;
    return linalg::determinant(q0.leading_columns_submatrix(rows0, k));
  };
  mm.build_terms(spec.n(), spec, g_exact, minor_of);
  return mm;
}

void MomentMap::build_terms(int n, const Spectrum& spec, const Matrix<Rat>& pattern,
                            const std::function<double(const std::vector<int>&, int)>& minor_of) {
  n_ = n;
  auto lam = spec.values<double>();
  terms_.assign(n - 1, {});
  for (int k = 1; k < n; ++k) {
    for (const auto& idx : tnncell::k_subsets(n, k)) {
      if (linalg::flag_minor(pattern, idx, k) == 0) continue;
      Term term;
      term.index_set = idx;
      term.log_weight = 2.0 * std::log(std::abs(minor_of(idx, k)));
      term.power_sums.assign(n - 1, 0.0);
      for (int m = 1; m < n; ++m)
        for (int i : idx) term.power_sums[m - 1] += std::pow(lam[i - 1], m);
      terms_[k - 1].push_back(std::move(term));
    }
    if (terms_[k - 1].empty())
      throw std::invalid_argument("moment map has an empty projection matroid");
  }
}

std::vector<double> MomentMap::point(const MultiTime& t) const {
  if (static_cast<int>(t.t.size()) != n_ - 1)
    throw std::invalid_argument("multi-time needs n-1 components");
  std::vector<double> coords(n_, 0.0);
  for (const auto& level : terms_) {
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> expo(level.size());
    for (size_t i = 0; i < level.size(); ++i) {
      double th = 0;
      for (int m = 0; m < n_ - 1; ++m) th += level[i].power_sums[m] * t.t[m];
      expo[i] = level[i].log_weight + 2.0 * th;
      best = std::max(best, expo[i]);
    }
    double z = 0;
    for (double e : expo) z += std::exp(e - best);
    for (size_t i = 0; i < level.size(); ++i) {
      double alpha = std::exp(expo[i] - best) / z;
      for (int c : level[i].index_set) coords[c - 1] += alpha;
    }
  }
  return coords;
}

SamplePlan SamplePlan::standard(const Spectrum& spec) {
  SamplePlan plan;
  for (int i = -10; i <= 10; ++i) plan.t1_grid.push_back(static_cast<double>(i));
  double gap = to_double(spec.min_gap());
  for (double s : {1.0, 2.0, 4.0, 8.0, 16.0}) plan.ray_scales.push_back(s / gap);
  plan.limit_scale = 40.0 / gap;
  return plan;
}

namespace {
Point rationalize(const std::vector<double>& x) {
  Point p(x.size());
  for (size_t i = 0; i < x.size(); ++i) p[i] = rat_from_double(x[i]);
  return p;
}
}  // namespace

MomentClosureReport verify_moment_closure(const MomentMap& mm, const Spectrum& spec,
                                          const Permutation& v, const Permutation& w,
                                          const SamplePlan& plan, double shell_eps,
                                          double limit_tol) {
  MomentClosureReport rep;
  const int n = v.n();
  IntervalPolytope ip = bruhat_interval_polytope(v, w, Embedding::kMoment);
  const Polytope& poly = ip.polytope;
  Rat eps = rat_from_double(shell_eps);

  auto check_containment = [&](const MultiTime& t) {
    ++rep.samples_checked;
    if (!contains_with_shell(poly, rationalize(mm.point(t)), eps)) ++rep.containment_violations;
  };
  for (double t1 : plan.t1_grid) check_containment(MultiTime::axis(n, t1));

  std::vector<Permutation> interval = symgroup::bruhat_interval(v, w);
  std::vector<Point> limit_points;
  for (const auto& z : interval) {
    MultiTime ray = fktflow::direction_to_fixed_point(z, spec);
    for (double s : plan.ray_scales) check_containment(ray.scaled(s));

    std::vector<double> x = mm.point(ray.scaled(plan.limit_scale));
    Point target = permutation_point(z, Embedding::kMoment);
    Point rounded(n);
    for (int i = 0; i < n; ++i) {
      rep.limit_max_err = std::max(rep.limit_max_err, std::abs(x[i] - to_double(target[i])));
      rounded[i] = Rat(std::llround(x[i]));
    }
    limit_points.push_back(std::move(rounded));
  }

  std::set<Point> hull_of_limits;
  for (const auto& p : hull_vertices(limit_points)) hull_of_limits.insert(p);
  std::set<Point> expected(poly.vertices.begin(), poly.vertices.end());
  rep.hull_matches = hull_of_limits == expected;

  rep.pass = rep.containment_violations == 0 && rep.limit_max_err < limit_tol && rep.hull_matches;
  return rep;
}

SymMomentReport verify_sym_moment(const Matrix<Rat>& g_exact,
                                  const symtoda::SymmetricFlow<double>& sflow,
                                  const Spectrum& spec, const Permutation& v,
                                  const Permutation& w, const SamplePlan& plan, double tol) {
  SymMomentReport rep;
  MomentMap via_a(g_exact, spec);
  MomentMap via_q = MomentMap::from_orthogonal(sflow.q0(), g_exact, spec);
  const int n = v.n();

  auto compare_at = [&](const MultiTime& t) {
    auto xa = via_a.point(t);
    auto xq = via_q.point(t);
    for (int i = 0; i < n; ++i)
      rep.trajectory_max_dev = std::max(rep.trajectory_max_dev, std::abs(xa[i] - xq[i]));
  };
  for (double t1 : plan.t1_grid) compare_at(MultiTime::axis(n, t1));
  for (const auto& z : symgroup::bruhat_interval(v, w)) {
    MultiTime ray = fktflow::direction_to_fixed_point(z, spec);
    for (double s : plan.ray_scales) compare_at(ray.scaled(s));
    compare_at(ray.scaled(plan.limit_scale));
  }

  rep.matroid_match_dev = static_cast<double>(symtoda::matroid_match(g_exact, sflow));
  rep.closure = verify_moment_closure(via_q, spec, v, w, plan);
  rep.pass = rep.trajectory_max_dev < tol && rep.matroid_match_dev < 1e-6 && rep.closure.pass;
  return rep;
}

}  // namespace toda::momentpoly
