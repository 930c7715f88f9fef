#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "toda/linalg.hpp"
#include "toda/spectrum.hpp"

using namespace toda;
using namespace toda::linalg;

namespace {
Matrix<Rat> random_rational_matrix(int n, std::mt19937_64& rng) {
  static const Rat pool[] = {Rat(-3), Rat(-2), Rat(-1), Rat(-1, 2), Rat(0),
                             Rat(1, 3), Rat(1, 2), Rat(1), Rat(2), Rat(3)};
  std::uniform_int_distribution<int> pick(0, 9);
  Matrix<Rat> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = pool[pick(rng)];
  return m;
}
}  // namespace

TEST_CASE("lu_unipotent basics") {
  auto id = Matrix<Rat>::identity(3);
  auto f = lu_unipotent(id);
  CHECK(f.u == id);
  CHECK(f.b == id);

  Matrix<Rat> m{{1, 1}, {1, 2}};
  auto g = lu_unipotent(m);
  CHECK(g.u == Matrix<Rat>{{1, 0}, {1, 1}});
  CHECK(g.b == Matrix<Rat>{{1, 1}, {0, 1}});
}

TEST_CASE("lu_unipotent reconstructs exactly and flags singular minors") {
  std::mt19937_64 rng(7);
  int done = 0;
  while (done < 10) {
    Matrix<Rat> m = random_rational_matrix(4, rng);
    auto minors = principal_minors(m);
    bool ok = true;
    for (const Rat& pm : minors)
      if (pm == 0) ok = false;
    if (!ok) continue;
    auto f = lu_unipotent(m);
    CHECK(f.u * f.b == m);
    for (int i = 0; i < 4; ++i) {
      CHECK(f.u(i, i) == 1);
      for (int j = i + 1; j < 4; ++j) CHECK(f.u(i, j) == 0);
      for (int j = 0; j < i; ++j) CHECK(f.b(i, j) == 0);
    }
    ++done;
  }

  Matrix<Rat> sing{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(lu_unipotent(sing), SingularPrincipalMinor);
  try {
    lu_unipotent(sing);
  } catch (const SingularPrincipalMinor& e) {
    CHECK(e.k() == 1);
  }
}

TEST_CASE("principal minors against the cofactor oracle") {
  CHECK(principal_minors(Matrix<Rat>::identity(4)) == std::vector<Rat>{1, 1, 1, 1});

  Matrix<Rat> d(3, 3);
  d(0, 0) = 2;
  d(1, 1) = 3;
  d(2, 2) = 5;
  CHECK(principal_minors(d) == std::vector<Rat>{2, 6, 30});

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix<Rat> m = random_rational_matrix(4, rng);
    auto minors = principal_minors(m);
    for (int k = 1; k <= 4; ++k) CHECK(minors[k - 1] == oracles::cofactor_det(m.leading_block(k)));
  }
}

TEST_CASE("principal minors of u*b are partial products of diag(b)") {
  std::mt19937_64 rng(13);
  Matrix<Rat> u = Matrix<Rat>::identity(4);
  Matrix<Rat> b(4, 4);
  static const Rat pool[] = {Rat(1), Rat(2), Rat(-1), Rat(1, 2)};
  std::uniform_int_distribution<int> pick(0, 3);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) u(i, j) = pool[pick(rng)];
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) b(i, j) = (i == j) ? pool[pick(rng) % 2] + 1 : pool[pick(rng)];
  auto minors = principal_minors(u * b);
  Rat prod = 1;
  for (int k = 0; k < 4; ++k) {
    prod *= b(k, k);
    CHECK(minors[k] == prod);
  }
}

TEST_CASE("qr_special basics") {
  auto f = qr_special(Matrix<double>::identity(3));
  CHECK(max_abs(f.q - Matrix<double>::identity(3)) < 1e-14);
  CHECK(max_abs(f.r - Matrix<double>::identity(3)) < 1e-14);

  double c = std::cos(0.4), s = std::sin(0.4);
  Matrix<double> rot{{c, -s}, {s, c}};
  auto g = qr_special(rot);
  CHECK(max_abs(g.q - rot) < 1e-14);
  CHECK(max_abs(g.r - Matrix<double>::identity(2)) < 1e-14);
}

TEST_CASE("qr_special on random 5x5") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 8; ++trial) {
    Matrix<double> m(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) m(i, j) = u(rng);
    auto f = qr_special(m);
    CHECK(max_abs(f.q.transpose() * f.q - Matrix<double>::identity(5)) < 1e-12);
    CHECK(max_abs(f.q * f.r - m) / std::max(1.0, max_abs(m)) < 1e-12);
    CHECK(determinant(f.q) == doctest::Approx(1.0).epsilon(1e-12));
    for (int i = 0; i + 1 < 5; ++i) CHECK(f.r(i, i) > 0);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < i; ++j) CHECK(f.r(i, j) == 0);
  }
  CHECK_THROWS(qr_special(Matrix<double>(2, 2)));
}

TEST_CASE("cholesky_upper") {
  CHECK(max_abs(cholesky_upper(Matrix<double>::identity(3)) - Matrix<double>::identity(3)) == 0);

  Matrix<double> d{{4, 0}, {0, 9}};
  auto b = cholesky_upper(d);
  CHECK(b(0, 0) == doctest::Approx(2));
  CHECK(b(1, 1) == doctest::Approx(3));
  CHECK(b(0, 1) == 0);

  // gamma = u^{-1} E for random unit-lower u: recover gamma gamma^T
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> un(-1, 1);
  auto e = vandermonde_float<double>(Spectrum::standard(4));
  for (int trial = 0; trial < 5; ++trial) {
    Matrix<double> u = Matrix<double>::identity(4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < i; ++j) u(i, j) = un(rng);
    Matrix<double> gamma = invert_unit_lower(u) * e;
    Matrix<double> s = gamma * gamma.transpose();
    Matrix<double> beta = cholesky_upper(s);
    CHECK(max_abs(beta * beta.transpose() - s) / max_abs(s) < 1e-12);
    for (int i = 0; i < 4; ++i) CHECK(beta(i, i) > 0);
  }

  Matrix<double> notpd{{1, 2}, {2, 1}};
  CHECK_THROWS(cholesky_upper(notpd));
}

TEST_CASE("vandermonde") {
  Spectrum s3({Rat(-1), Rat(0), Rat(1)});
  Matrix<Rat> e = vandermonde(s3);
  CHECK(e == Matrix<Rat>{{1, 1, 1}, {-1, 0, 1}, {1, 0, 1}});

  Spectrum s2({Rat(-1), Rat(1)});
  CHECK(vandermonde(s2) == Matrix<Rat>{{1, 1}, {-1, 1}});

  // det E = prod_{i<j} (lambda_j - lambda_i)
  Spectrum s4 = Spectrum::standard(4);
  Rat expected = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) expected *= s4.at(j) - s4.at(i);
  CHECK(determinant(vandermonde(s4)) == expected);

  CHECK_THROWS(vandermonde(std::vector<Rat>{Rat(1), Rat(1)}));
}

TEST_CASE("companion matrix") {
  Spectrum s3({Rat(-1), Rat(0), Rat(1)});
  Matrix<Rat> c = companion(s3);
  CHECK(c == Matrix<Rat>{{0, 1, 0}, {0, 0, 1}, {0, 1, 0}});
  CHECK(trace(c) == 0);

  // C E = E Lambda exactly, for several spectra
  for (int n : {2, 3, 4, 5}) {
    Spectrum s = Spectrum::standard(n);
    Matrix<Rat> e = vandermonde(s);
    Matrix<Rat> lam(n, n);
    for (int i = 0; i < n; ++i) lam(i, i) = s.at(i);
    CHECK(companion(s) * e == e * lam);
  }

  // eigenvalues recovered by the bisection oracle
  Spectrum s5 = Spectrum::standard(5);
  auto coeff = char_poly(companion_float<double>(s5));
  auto roots = oracles::real_roots_bisect(coeff);
  REQUIRE(roots.size() == 5);
  auto lam = s5.values<double>();
  for (int i = 0; i < 5; ++i) CHECK(roots[i] == doctest::Approx(lam[i]).epsilon(1e-9));

  CHECK_THROWS(companion(std::vector<Rat>{Rat(1), Rat(2)}));  // nonzero trace
}

TEST_CASE("flag minors") {
  auto id = Matrix<Rat>::identity(4);
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> lead(k);
    for (int i = 0; i < k; ++i) lead[i] = i + 1;
    CHECK(flag_minor(id, lead, k) == 1);
  }
  CHECK_THROWS(flag_minor(id, {1, 2}, 3));
  CHECK_THROWS(flag_minor(id, {1, 1}, 2));
  CHECK_THROWS(flag_minor(id, {0, 1}, 2));

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 6; ++trial) {
    Matrix<Rat> g = random_rational_matrix(5, rng);
    for (int k = 1; k <= 3; ++k)
      for (const auto& idx : std::vector<std::vector<int>>{{1, 2, 3}, {1, 3, 5}, {2, 4, 5}}) {
        if (k != 3) continue;
        std::vector<int> rows0;
        for (int r : idx) rows0.push_back(r - 1);
        CHECK(flag_minor(g, idx, 3) == oracles::cofactor_det(g.leading_columns_submatrix(rows0, 3)));
      }
  }
}

TEST_CASE("char_poly matches the exact expansion") {
  Spectrum s = Spectrum::standard(4);
  Matrix<Rat> c = companion(s);
  auto coeff = char_poly(c);
  // prod (x - lambda_i) expanded
  std::vector<Rat> expected{1};
  for (int i = 0; i < 4; ++i) {
    expected.push_back(0);
    for (int k = static_cast<int>(expected.size()) - 1; k >= 1; --k)
      expected[k] -= s.at(i) * expected[k - 1];
  }
  CHECK(coeff == expected);
}
