#pragma once

// Factorizations with the exact conventions the Toda engines rely on:
//  * LU without pivoting into unit-lower times upper (pivoting would destroy
//    the U^- x B^+ group structure);
//  * QR with det(q) = +1 and positive r-diagonal, up to the last entry;
//  * Cholesky in the upper*upper^T orientation;
//  * Vandermonde and companion matrices of a spectrum, and flag minors.

#include <cmath>
#include <set>
#include <vector>

#include "toda/matrix.hpp"
#include "toda/spectrum.hpp"

namespace toda::linalg {

// Raised when the k-th leading principal minor vanishes, i.e. the point left
// the big cell and the unit-lower/upper factorization does not exist.
class SingularPrincipalMinor : public std::runtime_error {
 public:
  explicit SingularPrincipalMinor(int k)
      : std::runtime_error("singular leading principal minor at k=" + std::to_string(k)), k_(k) {}
  int k() const { return k_; }

 private:
  int k_;
};

template <class T>
struct LUFactors {
  Matrix<T> u;  // unit lower-triangular
  Matrix<T> b;  // upper-triangular
};

template <class T>
struct QRFactors {
  Matrix<T> q;  // special orthogonal
  Matrix<T> r;  // upper-triangular, diag > 0 except possibly the last entry
};

namespace detail {
inline bool pivot_is_zero(const Rat& p, double /*threshold*/) { return p == 0; }
template <class F>
bool pivot_is_zero(const F& p, double threshold) {
  return std::abs(static_cast<double>(p)) < threshold;
}
inline bool trace_nonzero(const Rat& s) { return s != 0; }
template <class F>
bool trace_nonzero(const F& s) {
  return std::abs(static_cast<double>(s)) > 1e-9;
}
}  // namespace detail

// Doolittle elimination without pivoting: M = u*b. Unique when all leading
// principal minors are nonzero; the k-th elimination pivot is exactly the
// ratio of consecutive principal minors.
template <class T>
LUFactors<T> lu_unipotent(const Matrix<T>& m, double float_pivot_threshold = 1e-300) {
  if (!m.square()) throw std::invalid_argument("lu_unipotent needs a square matrix");
  const int n = m.rows();
  Matrix<T> b = m;
  Matrix<T> u = Matrix<T>::identity(n);
  for (int k = 0; k < n; ++k) {
    if (detail::pivot_is_zero(b(k, k), float_pivot_threshold)) throw SingularPrincipalMinor(k + 1);
    for (int i = k + 1; i < n; ++i) {
      if (b(i, k) == T(0)) continue;
      T f = b(i, k) / b(k, k);
      u(i, k) = f;
      for (int j = k; j < n; ++j) b(i, j) -= f * b(k, j);
    }
  }
  return {std::move(u), std::move(b)};
}

// Leading principal minors [M]_1, ..., [M]_n.
template <class T>
std::vector<T> principal_minors(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("principal_minors needs a square matrix");
  std::vector<T> out;
  out.reserve(m.rows());
  for (int k = 1; k <= m.rows(); ++k) out.push_back(determinant(m.leading_block(k)));
  return out;
}

// Householder QR adjusted so that q is special orthogonal and diag(r) > 0,
// except that r(n-1,n-1) carries whatever sign det(q) = +1 forces.
template <class F>
QRFactors<F> qr_special(const Matrix<F>& m) {
  if (!m.square()) throw std::invalid_argument("qr_special needs a square matrix");
  const int n = m.rows();
  Matrix<F> r = m;
  Matrix<F> q = Matrix<F>::identity(n);  // accumulates the product of reflections
  int det_sign = 1;
  for (int k = 0; k < n; ++k) {
    // scaled norm: the column can live many orders of magnitude below the
    // matrix scale and squaring it raw would underflow
    F colmax(0);
    for (int i = k; i < n; ++i) colmax = std::max(colmax, std::abs(r(i, k)));
    if (!(colmax > F(0))) throw std::invalid_argument("qr_special: singular input");
    F norm2(0);
    for (int i = k; i < n; ++i) {
      F s = r(i, k) / colmax;
      norm2 += s * s;
    }
    F norm = colmax * std::sqrt(norm2);
    F alpha = r(k, k) >= F(0) ? -norm : norm;
    // reflector in column-scaled units so vtv cannot underflow
    std::vector<F> v(n, F(0));
    v[k] = (r(k, k) - alpha) / colmax;
    for (int i = k + 1; i < n; ++i) v[i] = r(i, k) / colmax;
    F vtv(0);
    for (int i = k; i < n; ++i) vtv += v[i] * v[i];
    if (vtv > F(0)) {
      det_sign = -det_sign;
      // r <- H r,  q <- q H  with H = I - 2 v v^T / (v^T v)
      for (int j = 0; j < n; ++j) {
        F s(0);
        for (int i = k; i < n; ++i) s += v[i] * r(i, j);
        s = F(2) * s / vtv;
        for (int i = k; i < n; ++i) r(i, j) -= s * v[i];
      }
      for (int i = 0; i < n; ++i) {
        F s(0);
        for (int j = k; j < n; ++j) s += q(i, j) * v[j];
        s = F(2) * s / vtv;
        for (int j = k; j < n; ++j) q(i, j) -= s * v[j];
      }
    }
    r(k, k) = alpha;
    for (int i = k + 1; i < n; ++i) r(i, k) = F(0);
  }
  for (int k = 0; k + 1 < n; ++k) {
    if (r(k, k) < F(0)) {
      det_sign = -det_sign;
      for (int j = 0; j < n; ++j) r(k, j) = -r(k, j);
      for (int i = 0; i < n; ++i) q(i, k) = -q(i, k);
    }
  }
  if (det_sign < 0) {
    for (int j = 0; j < n; ++j) r(n - 1, j) = -r(n - 1, j);
    for (int i = 0; i < n; ++i) q(i, n - 1) = -q(i, n - 1);
  }
  return {std::move(q), std::move(r)};
}

// Upper-triangular beta with positive diagonal and beta*beta^T = S. This is
// the mirror image of the textbook lower*lower^T convention: the elimination
// runs from the last coordinate backwards.
template <class F>
Matrix<F> cholesky_upper(const Matrix<F>& s_in) {
  if (!s_in.square()) throw std::invalid_argument("cholesky_upper needs a square matrix");
  const int n = s_in.rows();
  Matrix<F> s = s_in;
  Matrix<F> beta(n, n);
  for (int k = n - 1; k >= 0; --k) {
    if (!(s(k, k) > F(0))) throw std::invalid_argument("cholesky_upper: matrix not positive definite");
    F d = std::sqrt(s(k, k));
    beta(k, k) = d;
    for (int i = 0; i < k; ++i) beta(i, k) = s(i, k) / d;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) s(i, j) -= beta(i, k) * beta(j, k);
  }
  return beta;
}

// E(i,j) = lambda_j^i, rows indexed by powers 0..n-1.
template <class T>
Matrix<T> vandermonde(const std::vector<T>& lambda) {
  const int n = static_cast<int>(lambda.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (lambda[i] == lambda[j]) throw std::invalid_argument("vandermonde: repeated eigenvalue");
  Matrix<T> e(n, n);
  for (int j = 0; j < n; ++j) {
    T p(1);
    for (int i = 0; i < n; ++i) {
      e(i, j) = p;
      p *= lambda[j];
    }
  }
  return e;
}

inline Matrix<Rat> vandermonde(const Spectrum& s) { return vandermonde(s.exact()); }
template <class F>
Matrix<F> vandermonde_float(const Spectrum& s) {
  return vandermonde(s.values<F>());
}

// Elementary symmetric polynomials e_0..e_n of the given values.
template <class T>
std::vector<T> elementary_symmetric(const std::vector<T>& x) {
  std::vector<T> e(x.size() + 1, T(0));
  e[0] = T(1);
  for (const T& v : x)
    for (size_t k = e.size() - 1; k >= 1; --k) e[k] += v * e[k - 1];
  return e;
}

// Companion matrix of the characteristic polynomial prod (x - lambda_i):
// superdiagonal 1, bottom row (-1)^(n-j) e_{n+1-j} in column j (1-based),
// so that C = E Lambda E^{-1} with E the Vandermonde matrix above.
template <class T>
Matrix<T> companion(const std::vector<T>& lambda) {
  const int n = static_cast<int>(lambda.size());
  T sum(0);
  for (const T& v : lambda) sum += v;
  if (detail::trace_nonzero(sum)) throw std::invalid_argument("companion: spectrum must sum to zero");
  std::vector<T> e = elementary_symmetric(lambda);
  Matrix<T> c(n, n);
  for (int i = 0; i + 1 < n; ++i) c(i, i + 1) = T(1);
  for (int j = 1; j <= n; ++j) {
    T coeff = e[n + 1 - j];
    if ((n - j) % 2 != 0) coeff = -coeff;
    c(n - 1, j - 1) = coeff;
  }
  return c;
}

inline Matrix<Rat> companion(const Spectrum& s) { return companion(s.exact()); }
template <class F>
Matrix<F> companion_float(const Spectrum& s) {
  return companion(s.values<F>());
}

// Flag minor: determinant of the rows in I (1-based, size k) against the
// leftmost k columns.
template <class T>
T flag_minor(const Matrix<T>& g, const std::vector<int>& rows_1based, int k) {
  if (static_cast<int>(rows_1based.size()) != k)
    throw std::invalid_argument("flag_minor: |I| must equal k");
  std::set<int> seen;
  std::vector<int> rows0;
  rows0.reserve(k);
  for (int r : rows_1based) {
    if (r < 1 || r > g.rows() || !seen.insert(r).second)
      throw std::invalid_argument("flag_minor: bad row index set");
    rows0.push_back(r - 1);
  }
  return determinant(g.leading_columns_submatrix(rows0, k));
}

}  // namespace toda::linalg
