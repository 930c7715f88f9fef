#include "toda/fktflow.hpp"

namespace toda::fktflow {

MultiTime direction_to_fixed_point(const Permutation& z, const Spectrum& spec) {
  const int n = spec.n();
  if (z.n() != n) throw std::invalid_argument("direction_to_fixed_point: dimension mismatch");
  // Score vector with r_{z(j)} = n - j, interpolated at the eigenvalues:
  // the polynomial p with p(lambda_i) = r_i has coefficients (t_0, c).
  std::vector<Rat> x = spec.exact();
  std::vector<Rat> y(n);
  for (int j = 1; j <= n; ++j) y[z(j) - 1] = n - j;

  // Newton divided differences, then expansion to monomial coefficients.
  std::vector<Rat> dd = y;
  for (int j = 1; j < n; ++j)
    for (int i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - j]);
  std::vector<Rat> coeff(n, Rat(0));
  coeff[0] = dd[n - 1];
  for (int i = n - 2; i >= 0; --i) {
    // coeff <- coeff * (X - x_i) + dd_i
    for (int k = n - 1; k >= 1; --k) coeff[k] = coeff[k - 1] - x[i] * coeff[k];
    coeff[0] = dd[i] - x[i] * coeff[0];
  }

  MultiTime c;
  c.t.resize(n - 1);
  for (int m = 1; m < n; ++m) c.t[m - 1] = to_double(coeff[m]);
  return c;
}

}  // namespace toda::fktflow
