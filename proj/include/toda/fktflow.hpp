#pragma once

// Full Kostant-Toda hierarchy driven by matrix factorization. The initial
// Hessenberg matrix comes from a flag-nonnegative group element g and a
// spectrum Lambda via the LU factorization of E g; evolution at multi-time t
// factorizes u0^{-1} E exp(Theta_Lambda(t)) g instead of stepping an ODE, so
// there is no integration error to accumulate.
//
// tau-functions are evaluated as stabilized log-sum-exp sums over the exact
// minor data of g, which keeps the diagonal formula and the moment map
// usable at times far beyond what naive exponentials tolerate.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "toda/linalg.hpp"
#include "toda/matrix.hpp"
#include "toda/rational.hpp"
#include "toda/spectrum.hpp"
#include "toda/symgroup.hpp"
#include "toda/tnncell.hpp"

namespace toda::fktflow {

using linalg::Matrix;
using symgroup::Permutation;

// Hessenberg Lax matrix in canonical form: superdiagonal exactly 1, zeros
// above it. Constructed by projecting a numerically Hessenberg matrix; the
// discarded mass is recorded for diagnostics.
template <class F>
class LaxMatrix {
 public:
  static LaxMatrix from_full(Matrix<F> m) {
    if (!m.square()) throw std::invalid_argument("Lax matrix must be square");
    const int n = m.rows();
    F resid(0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        F target = (j == i + 1) ? F(1) : F(0);
        resid = std::max(resid, std::abs(m(i, j) - target));
        m(i, j) = target;
      }
    LaxMatrix L;
    L.full_ = std::move(m);
    L.offhess_residual_ = resid;
    return L;
  }

  int n() const { return full_.rows(); }
  const Matrix<F>& full() const { return full_; }
  F entry(int i, int j) const { return full_(i - 1, j - 1); }  // 1-based
  F offhess_residual() const { return offhess_residual_; }

  std::vector<F> diagonal() const {
    std::vector<F> d(n());
    for (int i = 0; i < n(); ++i) d[i] = full_(i, i);
    return d;
  }

  // sup norm of the strictly lower part
  F strictly_lower_norm() const {
    F m(0);
    for (int i = 1; i < n(); ++i)
      for (int j = 0; j < i; ++j) m = std::max(m, std::abs(full_(i, j)));
    return m;
  }

 private:
  Matrix<F> full_;
  F offhess_residual_ = F(0);
};

// Multi-time (t_1, ..., t_{n-1}) of the hierarchy.
struct MultiTime {
  std::vector<double> t;

  MultiTime() = default;
  explicit MultiTime(std::vector<double> times) : t(std::move(times)) {}
  static MultiTime zero(int n) { return MultiTime(std::vector<double>(n - 1, 0.0)); }
  static MultiTime axis(int n, double t1) {
    MultiTime m = zero(n);
    m.t[0] = t1;
    return m;
  }
  MultiTime scaled(double s) const {
    MultiTime m = *this;
    for (double& x : m.t) x *= s;
    return m;
  }
};

template <class F>
bool fixed_point_test(const LaxMatrix<F>& L, F tol) {
  return L.strictly_lower_norm() < tol;
}

// (M)_{>=0}: weakly upper triangular part.
template <class F>
Matrix<F> upper_part(const Matrix<F>& m) {
  Matrix<F> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

// One exponential term of a tau-function: exact weight and the power sums
// that drive its exponent theta_I(t) = sum_m powsum[m-1] t_m.
template <class F>
struct TauTerm {
  std::vector<int> index_set;  // 1-based rows I
  F log_weight;
  std::vector<F> power_sums;  // length n-1
};

template <class F>
struct TauData {
  // terms[k-1] holds the expansion of tau_k, k = 1..n
  std::vector<std::vector<TauTerm<F>>> terms;
};

struct AsymptoticReport {
  std::vector<int> v, w;  // one-line notation
  std::vector<double> diag_minus, diag_plus;
  double diag_minus_err = 0, diag_plus_err = 0;
  double max_subdiag = 0;  // worst of the two endpoints
  double T = 0, tol = 0;
  bool pass = false;
};

template <class F>
class KostantFlow {
 public:
  KostantFlow(const Matrix<Rat>& g_exact, Spectrum spectrum)
      : spec_(std::move(spectrum)), g_exact_(g_exact) {
    init();
  }
  KostantFlow(const tnncell::CellPoint& cell, Spectrum spectrum)
      : KostantFlow(tnncell::build_g(cell), std::move(spectrum)) {}

  int n() const { return spec_.n(); }
  const Spectrum& spectrum() const { return spec_; }
  const Matrix<Rat>& g_exact() const { return g_exact_; }
  const Matrix<F>& g() const { return g_float_; }
  const Matrix<F>& u0() const { return u0_; }
  const Matrix<F>& b0() const { return b0_; }
  const Matrix<Rat>& u0_exact() const { return u0_exact_; }
  const Matrix<Rat>& initial_exact() const { return L0_exact_; }
  const LaxMatrix<F>& initial() const { return L0_; }
  const TauData<F>& tau_data() const { return tau_; }

  // theta_i(t) = sum_m lambda_i^m t_m, 1-based i.
  F theta(int i, const MultiTime& t) const {
    check_time(t);
    F s(0);
    for (int m = 1; m < n(); ++m) s += pow_table_[i - 1][m] * F(t.t[m - 1]);
    return s;
  }

  // log tau_k(t); tau_0 = 1. Always finite on flag-nonnegative input.
  F log_tau(int k, const MultiTime& t) const {
    if (k == 0) return F(0);
    check_time(t);
    const auto& terms = tau_.terms.at(k - 1);
    F best = -std::numeric_limits<F>::infinity();
    std::vector<F> expo(terms.size());
    for (size_t i = 0; i < terms.size(); ++i) {
      expo[i] = terms[i].log_weight + theta_of(terms[i], t);
      best = std::max(best, expo[i]);
    }
    F s(0);
    for (F e : expo) s += std::exp(e - best);
    return best + std::log(s);
  }

  // d/dt_1 log tau_k as the softmax average of sum_{i in I} lambda_i.
  F dlog_tau_dt1(int k, const MultiTime& t) const {
    if (k == 0) return F(0);
    check_time(t);
    const auto& terms = tau_.terms.at(k - 1);
    F best = -std::numeric_limits<F>::infinity();
    std::vector<F> expo(terms.size());
    for (size_t i = 0; i < terms.size(); ++i) {
      expo[i] = terms[i].log_weight + theta_of(terms[i], t);
      best = std::max(best, expo[i]);
    }
    F z(0), acc(0);
    for (size_t i = 0; i < terms.size(); ++i) {
      F w = std::exp(expo[i] - best);
      z += w;
      acc += w * terms[i].power_sums[0];
    }
    return acc / z;
  }

  // Diagonal of L(t) through the analytic tau-derivative route.
  std::vector<F> diag_via_tau(const MultiTime& t) const {
    std::vector<F> d(n());
    F prev(0);
    for (int k = 1; k <= n(); ++k) {
      F cur = dlog_tau_dt1(k, t);
      d[k - 1] = cur - prev;
      prev = cur;
    }
    return d;
  }

  // Unit-lower LU factor u(t) of M(t) = u0^{-1} E exp(Theta_Lambda(t)) g.
  // Each entry is a ratio of minors of M(t); every such minor is a
  // Binet-Cauchy sum of exponentials whose coefficients are exact rational
  // data of the cell, so the ratio is evaluated by stabilized log-sum-exp
  // and stays accurate at times where a floating elimination of M(t) would
  // cancel catastrophically.
  Matrix<F> lower_factor(const MultiTime& t) const {
    check_time(t);
    Matrix<F> u = Matrix<F>::identity(n());
    for (int j = 1; j < n(); ++j) {
      auto [den_max, den_sum] = eval_signed(den_[j - 1], t);
      for (int i = j + 1; i <= n(); ++i) {
        const auto& terms = num_[j - 1][i - j - 1];
        if (terms.empty()) continue;
        auto [num_max, num_sum] = eval_signed(terms, t);
        u(i - 1, j - 1) = std::exp(num_max - den_max) * num_sum / den_sum;
      }
    }
    return u;
  }

  // L(t) = u(t)^{-1} L0 u(t).
  LaxMatrix<F> at(const MultiTime& t) const {
    Matrix<F> u = lower_factor(t);
    return LaxMatrix<F>::from_full(linalg::invert_unit_lower(u) * L0_.full() * u);
  }

  // Chevalley invariants H_k = tr(L^{k+1}), k = 1..n-1.
  std::vector<F> chevalley(const LaxMatrix<F>& L) const {
    std::vector<F> h;
    Matrix<F> p = L.full() * L.full();
    for (int k = 1; k < n(); ++k) {
      h.push_back(linalg::trace(p));
      if (k + 1 < n()) p = p * L.full();
    }
    return h;
  }

  void set_pivot_threshold(double thr) { pivot_threshold_ = thr; }

 private:
  void check_time(const MultiTime& t) const {
    if (static_cast<int>(t.t.size()) != n() - 1)
      throw std::invalid_argument("multi-time needs n-1 components");
  }

  F theta_of(const TauTerm<F>& term, const MultiTime& t) const {
    F s(0);
    for (int m = 1; m < n(); ++m) s += term.power_sums[m - 1] * F(t.t[m - 1]);
    return s;
  }

  void init() {
    const int n = spec_.n();
    if (g_exact_.rows() != n || g_exact_.cols() != n)
      throw std::invalid_argument("g and spectrum dimension mismatch");
    lambda_ = spec_.values<F>();
    pow_table_.assign(n, std::vector<F>(n, F(1)));
    for (int i = 0; i < n; ++i)
      for (int m = 1; m < n; ++m) pow_table_[i][m] = pow_table_[i][m - 1] * lambda_[i];

    g_float_ = linalg::to_float_matrix<F>(g_exact_);
    Matrix<Rat> e_exact = linalg::vandermonde(spec_);
    Matrix<Rat> eg_exact = e_exact * g_exact_;
    std::vector<Rat> eg_minors = linalg::principal_minors(eg_exact);
    for (int k = 0; k < n; ++k)
      if (eg_minors[k] <= 0)
        throw std::invalid_argument("E g has a nonpositive principal minor: g is not a tnn cell matrix");

    Matrix<F> e_float = linalg::to_float_matrix<F>(e_exact);
    auto lu0 = linalg::lu_unipotent(e_float * g_float_, pivot_threshold_);
    u0_ = std::move(lu0.u);
    b0_ = std::move(lu0.b);
    Matrix<F> u0_inv = linalg::invert_unit_lower(u0_);
    left_ = u0_inv * e_float;
    L0_ = LaxMatrix<F>::from_full(u0_inv * linalg::companion_float<F>(spec_) * u0_);

    // tau expansion: tau_k(t) = sum_I w_I exp(theta_I(t)), with exact
    // weights w_I = Delta_I(A_k) vdm(I) / [Eg]_k. Binet-Cauchy makes the
    // weights sum to 1, so log tau_k(0) = 0.
    tau_.terms.assign(n, {});
    for (int k = 1; k <= n; ++k) {
      for (const auto& idx : tnncell::k_subsets(n, k)) {
        Rat delta = linalg::flag_minor(g_exact_, idx, k);
        if (delta == 0) continue;
        if (delta < 0)
          throw std::invalid_argument("g has a negative flag minor: not totally nonnegative");
        Rat vdm = 1;
        for (size_t a = 0; a < idx.size(); ++a)
          for (size_t b = a + 1; b < idx.size(); ++b)
            vdm *= spec_.at(idx[b] - 1) - spec_.at(idx[a] - 1);
        Rat weight = delta * vdm / eg_minors[k - 1];
        TauTerm<F> term;
        term.index_set = idx;
        term.log_weight = std::log(to_float<F>(weight));
        term.power_sums.assign(n - 1, F(0));
        for (int m = 1; m < n; ++m)
          for (int i : idx) term.power_sums[m - 1] += pow_table_[i - 1][m];
        tau_.terms[k - 1].push_back(std::move(term));
      }
      if (tau_.terms[k - 1].empty())
        throw std::invalid_argument("tau expansion has no terms: malformed input");
    }
  }

  Spectrum spec_;
  Matrix<Rat> g_exact_;
  Matrix<F> g_float_;
  std::vector<F> lambda_;
  std::vector<std::vector<F>> pow_table_;  // lambda_i^m
  Matrix<F> u0_, b0_, left_;               // left_ = u0^{-1} E
  LaxMatrix<F> L0_;
  TauData<F> tau_;
  double pivot_threshold_ = 1e-300;
};

// [ (L)_{>=0}, L ]: the right-hand side of the first Lax equation.
template <class F>
Matrix<F> lax_rhs(const LaxMatrix<F>& L) {
  Matrix<F> b = upper_part(L.full());
  return b * L.full() - L.full() * b;
}

// Central-difference residual of the t_1 Lax equation at time t.
template <class F>
F lax_residual(const KostantFlow<F>& flow, const MultiTime& t, double h) {
  MultiTime tp = t, tm = t;
  tp.t[0] += h;
  tm.t[0] -= h;
  Matrix<F> diff = (flow.at(tp).full() - flow.at(tm).full()) * (F(1) / F(2 * h));
  return linalg::max_abs(diff - lax_rhs(flow.at(t)));
}

// The unique unit-lower u with u L = C_Lambda u, built from Krylov rows
// u_{i+1} = u_i L. Throws when the last row is inconsistent, i.e. L does not
// have the given spectrum.
template <class F>
Matrix<F> companion_embed(const LaxMatrix<F>& L, const Spectrum& spec, double tol = 1e-6) {
  const int n = L.n();
  if (spec.n() != n) throw std::invalid_argument("companion_embed: dimension mismatch");
  Matrix<F> u(n, n);
  u(0, 0) = F(1);
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j < n; ++j) {
      F s(0);
      for (int k = 0; k < n; ++k) s += u(i, k) * L.full()(k, j);
      u(i + 1, j) = s;
    }
  Matrix<F> c = linalg::companion_float<F>(spec);
  Matrix<F> resid = u * L.full() - c * u;
  F scale = std::max(F(1), linalg::max_abs(u));
  if (static_cast<double>(linalg::max_abs(resid) / scale) > tol)
    throw std::invalid_argument("companion_embed: L is not in the isospectral family of Lambda");
  return u;
}

// A multi-time c with theta_{z(1)}(c) > ... > theta_{z(n)}(c), found by
// interpolating the score vector r_{z(j)} = n - j at the eigenvalues and
// dropping the constant coefficient. Exact, so the ordering is strict.
MultiTime direction_to_fixed_point(const Permutation& z, const Spectrum& spec);

template <class F>
AsymptoticReport asymptotic_check(const KostantFlow<F>& flow, const Permutation& v,
                                  const Permutation& w, double T, double tol) {
  if (T <= 0) throw std::invalid_argument("asymptotic_check: T must be positive");
  AsymptoticReport rep;
  rep.v = v.word();
  rep.w = w.word();
  rep.T = T;
  rep.tol = tol;
  const int n = flow.n();
  auto lam = flow.spectrum().template values<double>();
  LaxMatrix<F> lm = flow.at(MultiTime::axis(n, -T));
  LaxMatrix<F> lp = flow.at(MultiTime::axis(n, T));
  for (int k = 1; k <= n; ++k) {
    rep.diag_minus.push_back(static_cast<double>(lm.entry(k, k)));
    rep.diag_plus.push_back(static_cast<double>(lp.entry(k, k)));
    rep.diag_minus_err = std::max(rep.diag_minus_err, std::abs(rep.diag_minus.back() - lam[v(k) - 1]));
    rep.diag_plus_err = std::max(rep.diag_plus_err, std::abs(rep.diag_plus.back() - lam[w(k) - 1]));
  }
  rep.max_subdiag = std::max(static_cast<double>(lm.strictly_lower_norm()),
                             static_cast<double>(lp.strictly_lower_norm()));
  rep.pass = rep.diag_minus_err < tol && rep.diag_plus_err < tol && rep.max_subdiag < tol;
  return rep;
}

}  // namespace toda::fktflow
