#pragma once

// Full symmetric Toda hierarchy, reached from the Kostant flows by the
// conjugation L -> beta^{-1} L beta with gamma gamma^T = beta beta^T for
// gamma = u^{-1} E. Evolution goes through the QR factorization of
// q0^T exp(Theta_Lambda(t)) q0, never through a generic matrix exponential.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "toda/fktflow.hpp"
#include "toda/linalg.hpp"
#include "toda/matrix.hpp"
#include "toda/spectrum.hpp"
#include "toda/tnncell.hpp"

namespace toda::symtoda {

using linalg::Matrix;

template <class F>
F symmetry_residual(const Matrix<F>& m) {
  F r(0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j) - m(j, i)));
  return r;
}

// skew projection (M)_{>0} - (M)_{<0}
template <class F>
Matrix<F> pi_so(const Matrix<F>& m) {
  Matrix<F> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (j > i) r(i, j) = m(i, j);
      if (j < i) r(i, j) = -m(i, j);
    }
  return r;
}

// The Kostant-to-symmetric map psi: gamma = u^{-1} E, beta the upper
// Cholesky factor of gamma gamma^T, result beta^{-1} L beta.
template <class F>
Matrix<F> psi_map(const fktflow::LaxMatrix<F>& L, const Matrix<F>& u, const Spectrum& spec) {
  Matrix<F> e = linalg::vandermonde_float<F>(spec);
  Matrix<F> gamma = linalg::invert_unit_lower(u) * e;
  Matrix<F> beta = linalg::cholesky_upper(gamma * gamma.transpose());
  return linalg::invert_upper(beta) * L.full() * beta;
}

template <class F>
struct SymTauTerm {
  F log_weight;   // log Delta_I(Q_k)^2
  F lambda_sum;   // sum_{i in I} lambda_i
};

template <class F>
class SymmetricFlow {
 public:
  // tnn entry point: exact g fixes the zero pattern of the Q_k minors.
  SymmetricFlow(const Matrix<Rat>& g_exact, Spectrum spectrum)
      : spec_(std::move(spectrum)) {
    init(linalg::to_float_matrix<F>(g_exact), &g_exact);
  }
  SymmetricFlow(const tnncell::CellPoint& cell, Spectrum spectrum)
      : SymmetricFlow(tnncell::build_g(cell), std::move(spectrum)) {}

  // General (possibly non-tnn) initial data: the symmetric flow is complete
  // even where the Kostant flow is not, so no exact counterpart is required.
  static SymmetricFlow from_general(const Matrix<F>& g, Spectrum spectrum) {
    return SymmetricFlow(std::move(spectrum), g);
  }

  int n() const { return spec_.n(); }
  const Spectrum& spectrum() const { return spec_; }
  const Matrix<F>& q0() const { return q0_; }
  const Matrix<F>& r0() const { return r0_; }
  const Matrix<F>& initial() const { return L0_; }

  Matrix<F> at(const fktflow::MultiTime& t) const {
    if (static_cast<int>(t.t.size()) != n() - 1)
      throw std::invalid_argument("multi-time needs n-1 components");
    const int n_ = n();
    std::vector<F> th(n_);
    F thmax = -std::numeric_limits<F>::infinity();
    for (int i = 0; i < n_; ++i) {
      F s(0), p(1);
      for (int m = 1; m < n_; ++m) {
        p *= lambda_[i];
        s += p * F(t.t[m - 1]);
      }
      th[i] = s;
      thmax = std::max(thmax, s);
    }
    // exp(Theta_{L0}(t)) = q0^T exp(Theta_Lambda(t)) q0, normalized
    Matrix<F> x(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        F s(0);
        for (int k = 0; k < n_; ++k) s += q0_(k, i) * std::exp(th[k] - thmax) * q0_(k, j);
        x(i, j) = s;
      }
    auto qr = linalg::qr_special(x);
    return qr.q.transpose() * L0_ * qr.q;
  }

  // log tau^sym_k(t) = log [exp(2 t L0)]_k = log sum_I Delta_I(Q_k)^2 e^{2 theta_I(t)}.
  F log_tau_sym(int k, double t1) const {
    if (k == 0) return F(0);
    const auto& terms = terms_.at(k - 1);
    F best = -std::numeric_limits<F>::infinity();
    std::vector<F> expo(terms.size());
    for (size_t i = 0; i < terms.size(); ++i) {
      expo[i] = terms[i].log_weight + F(2) * terms[i].lambda_sum * F(t1);
      best = std::max(best, expo[i]);
    }
    F s(0);
    for (F e : expo) s += std::exp(e - best);
    return best + std::log(s);
  }

  // alpha_{k,k}(t1) = (1/2) d/dt1 log(tau^sym_k / tau^sym_{k-1})
  std::vector<F> diag_via_tau_sym(double t1) const {
    std::vector<F> d(n());
    F prev(0);
    for (int k = 1; k <= n(); ++k) {
      const auto& terms = terms_.at(k - 1);
      F best = -std::numeric_limits<F>::infinity();
      std::vector<F> expo(terms.size());
      for (size_t i = 0; i < terms.size(); ++i) {
        expo[i] = terms[i].log_weight + F(2) * terms[i].lambda_sum * F(t1);
        best = std::max(best, expo[i]);
      }
      F z(0), acc(0);
      for (size_t i = 0; i < terms.size(); ++i) {
        F w = std::exp(expo[i] - best);
        z += w;
        acc += w * terms[i].lambda_sum;
      }
      F cur = acc / z;
      d[k - 1] = cur - prev;
      prev = cur;
    }
    return d;
  }

 private:
  SymmetricFlow(Spectrum spectrum, const Matrix<F>& g) : spec_(std::move(spectrum)) {
    init(g, nullptr);
  }

  void init(const Matrix<F>& g, const Matrix<Rat>* g_exact) {
    const int n_ = spec_.n();
    if (g.rows() != n_ || g.cols() != n_)
      throw std::invalid_argument("g and spectrum dimension mismatch");
    lambda_ = spec_.template values<F>();
    auto qr = linalg::qr_special(g);
    q0_ = std::move(qr.q);
    r0_ = std::move(qr.r);
    Matrix<F> lam(n_, n_);
    for (int i = 0; i < n_; ++i) lam(i, i) = lambda_[i];
    L0_ = q0_.transpose() * lam * q0_;

    terms_.assign(n_, {});
    for (int k = 1; k <= n_; ++k) {
      F scale(0);
      std::vector<std::pair<std::vector<int>, F>> minors;
      for (const auto& idx : tnncell::k_subsets(n_, k)) {
        std::vector<int> rows0(idx.begin(), idx.end());
        for (int& r : rows0) --r;
        F d = linalg::determinant(q0_.leading_columns_submatrix(rows0, k));
        minors.emplace_back(idx, d);
        scale = std::max(scale, std::abs(d));
      }
      for (auto& [idx, d] : minors) {
        if (g_exact != nullptr) {
          // zero pattern decided exactly through Delta_I(A_k)
          if (linalg::flag_minor(*g_exact, idx, k) == 0) continue;
        } else if (std::abs(d) < scale * F(1e-12)) {
          continue;
        }
        SymTauTerm<F> term;
        term.log_weight = F(2) * std::log(std::abs(d));
        term.lambda_sum = F(0);
        for (int i : idx) term.lambda_sum += lambda_[i - 1];
        terms_[k - 1].push_back(term);
      }
      if (terms_[k - 1].empty())
        throw std::invalid_argument("tau^sym expansion has no terms: singular input");
    }
  }

  Spectrum spec_;
  std::vector<F> lambda_;
  Matrix<F> q0_, r0_, L0_;
  std::vector<std::vector<SymTauTerm<F>>> terms_;
};

// Max deviation over the grid between the psi image of the Kostant flow and
// the symmetric flow evolved directly.
template <class F>
F consistency_psi(const fktflow::KostantFlow<F>& kflow, const SymmetricFlow<F>& sflow,
                  const std::vector<fktflow::MultiTime>& grid) {
  F worst(0);
  for (const auto& t : grid) {
    fktflow::LaxMatrix<F> L = kflow.at(t);
    Matrix<F> u = fktflow::companion_embed(L, kflow.spectrum());
    Matrix<F> via_psi = psi_map(L, u, kflow.spectrum());
    worst = std::max(worst, linalg::max_abs(via_psi - sflow.at(t)));
  }
  return worst;
}

// Checks Delta_I(Q_k) * (r0_11 ... r0_kk) = Delta_I(A_k) for every I and k,
// which identifies the matroids M(Q_k) and M(A_k). Returns the worst
// absolute deviation.
template <class F>
F matroid_match(const Matrix<Rat>& g_exact, const SymmetricFlow<F>& sflow) {
  const int n = g_exact.rows();
  F worst(0);
  F rprod(1);
  for (int k = 1; k <= n; ++k) {
    rprod *= sflow.r0()(k - 1, k - 1);
    for (const auto& idx : tnncell::k_subsets(n, k)) {
      std::vector<int> rows0(idx.begin(), idx.end());
      for (int& r : rows0) --r;
      F dq = linalg::determinant(sflow.q0().leading_columns_submatrix(rows0, k));
      F da = to_float<F>(linalg::flag_minor(g_exact, idx, k));
      worst = std::max(worst, std::abs(dq * rprod - da));
    }
  }
  return worst;
}

}  // namespace toda::symtoda
