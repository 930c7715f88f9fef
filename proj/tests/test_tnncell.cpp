#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "toda/linalg.hpp"
#include "toda/tnncell.hpp"

using namespace toda;
using namespace toda::tnncell;
using symgroup::all_permutations;
using symgroup::bruhat_leq;
using symgroup::Permutation;
using symgroup::ReducedWord;

namespace {
CellPoint make_cell(int n, const std::vector<int>& v_letters, const std::vector<int>& w_letters,
                    std::vector<Rat> params) {
  return CellPoint(Permutation::from_letters(n, v_letters), ReducedWord(n, w_letters),
                   std::move(params));
}
}  // namespace

TEST_CASE("generators") {
  CHECK(generator_y(3, 1, Rat(0)) == linalg::Matrix<Rat>::identity(3));
  for (int i = 1; i <= 2; ++i) {
    auto s = generator_sdot(3, i);
    auto s2 = s * s;
    // the rotation block squares to -I
    CHECK(s2(i - 1, i - 1) == -1);
    CHECK(s2(i, i) == -1);
    CHECK(linalg::determinant(s) == 1);
  }
  CHECK(generator_y(4, 2, Rat(1, 2)) * generator_y(4, 2, Rat(1, 3)) ==
        generator_y(4, 2, Rat(5, 6)));
  CHECK_THROWS(generator_y(3, 3, Rat(1)));
  CHECK_THROWS(generator_sdot(3, 0));
}

TEST_CASE("cell point validation") {
  CHECK_THROWS(make_cell(3, {}, {1}, {Rat(-1)}));       // negative parameter
  CHECK_THROWS(make_cell(3, {}, {1}, {}));              // wrong count
  CHECK_THROWS(make_cell(3, {1, 2}, {1}, {}));          // v not <= w
}

TEST_CASE("build_g reproduces the worked 6x6 cell matrix") {
  // v = s3 s4 s2 inside w = s2 s3 s1 s4 s5 s3 s2; params (p1, p3, p5, p6)
  auto check_with = [&](const Rat& p1, const Rat& p3, const Rat& p5, const Rat& p6) {
    CellPoint c = make_cell(6, {3, 4, 2}, {2, 3, 1, 4, 5, 3, 2}, {p1, p3, p5, p6});
    linalg::Matrix<Rat> g = build_g(c);
    linalg::Matrix<Rat> expected{
        {1, 0, 0, 0, 0, 0},
        {p3, 0, -1, 0, 0, 0},
        {p1 * p3, 0, -p1, 0, 1, 0},
        {0, 1, 0, 0, 0, 0},
        {0, p6, 0, 1, 0, 0},
        {0, 0, 0, 0, p5, 1}};
    CHECK(g == expected);
    // direct generator-product evaluation
    linalg::Matrix<Rat> direct = generator_y(6, 2, p1) * generator_sdot(6, 3) *
                                 generator_y(6, 1, p3) * generator_sdot(6, 4) *
                                 generator_y(6, 5, p5) * generator_y(6, 3, p6) *
                                 generator_sdot(6, 2);
    CHECK(g == direct);
    CHECK(linalg::determinant(g) == 1);
  };
  check_with(1, 1, 1, 1);
  check_with(2, 3, 5, 7);

  CellPoint ones = make_cell(6, {3, 4, 2}, {2, 3, 1, 4, 5, 3, 2}, {1, 1, 1, 1});
  linalg::Matrix<Rat> g = build_g(ones);
  CHECK(linalg::flag_minor(g, {1}, 1) == 1);
  CHECK(linalg::flag_minor(g, {2}, 1) == 1);  // p3
}

TEST_CASE("v = w gives the signed permutation matrix of w") {
  Permutation w = Permutation::from_letters(4, {2, 3, 2, 1});
  CellPoint c(w, ReducedWord(4, {2, 3, 2, 1}), {});
  auto g = build_g(c);
  CHECK(linalg::determinant(g) == 1);
  for (int j = 1; j <= 4; ++j) {
    int nonzero = 0;
    for (int i = 1; i <= 4; ++i)
      if (g(i - 1, j - 1) != 0) ++nonzero;
    CHECK(nonzero == 1);
  }
  // all flag minors still nonnegative
  for (int k = 1; k <= 4; ++k)
    for (const auto& idx : k_subsets(4, k)) CHECK(linalg::flag_minor(g, idx, k) >= 0);
}

TEST_CASE("cell matrices are flag nonnegative") {
  // a spread of cells in S4 with random parameters
  auto perms = all_permutations(4);
  int cells = 0;
  for (const auto& w : perms) {
    if (w.length() < 2) continue;
    ReducedWord rw(4, symgroup::reduced_word(w));
    for (const auto& v : perms) {
      if (!bruhat_leq(v, w)) continue;
      CellPoint c(v, rw, random_params(w.length() - v.length(), 1000 + cells));
      auto g = build_g(c);
      for (int k = 1; k <= 4; ++k)
        for (const auto& idx : k_subsets(4, k)) CHECK(linalg::flag_minor(g, idx, k) >= 0);
      ++cells;
      if (cells > 40) return;
    }
  }
}

TEST_CASE("interval_by_minors matches the Bruhat oracle") {
  // z = v is always inside
  CellPoint c4 = make_cell(4, {3}, {2, 3, 2, 1}, random_params(3, 42));
  auto g4 = build_g(c4);
  CHECK(interval_by_minors(g4, Permutation::from_letters(4, {3})));
  CHECK_FALSE(interval_by_minors(g4, Permutation({4, 3, 2, 1})));  // w0 not <= w

  for (const auto& z : all_permutations(4)) {
    bool in_interval = bruhat_leq(Permutation::from_letters(4, {3}), z) &&
                       bruhat_leq(z, Permutation::from_letters(4, {2, 3, 2, 1}));
    CHECK(interval_by_minors(g4, z) == in_interval);
  }

  // exhaustive over all cells of S3
  auto perms3 = all_permutations(3);
  int seed = 0;
  for (const auto& w : perms3) {
    ReducedWord rw(3, symgroup::reduced_word(w));
    for (const auto& v : perms3) {
      if (!bruhat_leq(v, w)) continue;
      CellPoint c(v, rw, random_params(w.length() - v.length(), 7000 + seed++));
      auto g = build_g(c);
      for (const auto& z : perms3)
        CHECK(interval_by_minors(g, z) == (bruhat_leq(v, z) && bruhat_leq(z, w)));
    }
  }
}

TEST_CASE("projection matroids") {
  // signed permutation matrix: one basis per rank
  Permutation w0 = Permutation({4, 3, 2, 1});
  CellPoint c(w0, ReducedWord(4, symgroup::reduced_word(w0)), {});
  auto g = build_g(c);
  for (int k = 1; k <= 4; ++k) {
    auto m = matroid_of_projection(g, k);
    REQUIRE(m.size() == 1);
    CHECK(m[0] == w0.prefix_set(k));
  }

  // lexicographic extremes are the prefix sets of v and w
  Permutation v5 = Permutation::from_letters(5, {2, 4, 3});
  ReducedWord w5(5, {2, 3, 1, 4, 3, 2});
  CellPoint c5(v5, w5, random_params(3, 99));
  auto g5 = build_g(c5);
  for (int k = 1; k <= 4; ++k) {
    auto m = matroid_of_projection(g5, k);
    CHECK(exchange_axiom_holds(m));
    CHECK(m.front() == v5.prefix_set(k));           // enumeration is lex order
    CHECK(m.back() == w5.target().prefix_set(k));
  }
}

TEST_CASE("matroids do not depend on the word or the parameters") {
  Permutation v = Permutation::from_letters(4, {3});
  Permutation w = Permutation::from_letters(4, {2, 3, 2, 1});
  std::set<std::vector<std::vector<std::vector<int>>>> seen;
  int seed = 0;
  for (const auto& word : symgroup::all_reduced_words(w)) {
    ReducedWord rw(4, word);
    for (int rep = 0; rep < 3; ++rep) {
      CellPoint c(v, rw, random_params(3, 500 + seed++));
      auto g = build_g(c);
      std::vector<std::vector<std::vector<int>>> matroids;
      for (int k = 1; k <= 3; ++k) matroids.push_back(matroid_of_projection(g, k));
      seen.insert(matroids);
    }
  }
  CHECK(seen.size() == 1);
}

TEST_CASE("exchange axiom checker") {
  CHECK(exchange_axiom_holds({{1, 2}, {1, 3}, {2, 3}}));
  CHECK(exchange_axiom_holds({{1, 2}}));
  CHECK_FALSE(exchange_axiom_holds({{1, 2}, {3, 4}}));
  CHECK_FALSE(exchange_axiom_holds({}));
}
