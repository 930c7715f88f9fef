#include "toda/tnncell.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "toda/linalg.hpp"

namespace toda::tnncell {

Matrix<Rat> generator_y(int n, int i, const Rat& p) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator_y: index out of range");
  Matrix<Rat> m = Matrix<Rat>::identity(n);
  m(i, i - 1) = p;
  return m;
}

Matrix<Rat> generator_sdot(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator_sdot: index out of range");
  Matrix<Rat> m = Matrix<Rat>::identity(n);
  m(i - 1, i - 1) = 0;
  m(i, i) = 0;
  m(i - 1, i) = -1;
  m(i, i - 1) = 1;
  return m;
}

CellPoint::CellPoint(Permutation v, ReducedWord w_word, std::vector<Rat> params)
    : v_(std::move(v)),
      w_word_(std::move(w_word)),
      sub_(symgroup::pds(v_, w_word_)),
      params_(std::move(params)) {
  const int expected = w_word_.target().length() - v_.length();
  if (static_cast<int>(params_.size()) != expected)
    throw std::invalid_argument("cell point needs l(w) - l(v) parameters");
  for (const Rat& p : params_)
    if (p <= 0) throw std::invalid_argument("cell parameters must be positive");
}

Matrix<Rat> build_g(const CellPoint& c) {
  const int n = c.n();
  const auto& letters = c.w_word().letters();
  Matrix<Rat> g = Matrix<Rat>::identity(n);
  size_t next_param = 0;
  for (size_t l = 0; l < letters.size(); ++l) {
    if (c.subexpr().use[l])
      g = g * generator_sdot(n, letters[l]);
    else
      g = g * generator_y(n, letters[l], c.params()[next_param++]);
  }
  return g;
}

bool interval_by_minors(const Matrix<Rat>& g, const Permutation& z) {
  for (int k = 1; k <= g.rows(); ++k)
    if (linalg::flag_minor(g, z.prefix_set(k), k) <= 0) return false;
  return true;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Lexicographic enumeration of k-subsets of {1..n}.
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (k - static_cast<int>(cur.size())) + 1; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<std::vector<int>> matroid_of_projection(const Matrix<Rat>& g, int k) {
  if (k < 1 || k > g.rows()) throw std::invalid_argument("matroid_of_projection: bad rank");
  std::vector<std::vector<int>> bases;
  for (const auto& idx : k_subsets(g.rows(), k))
    if (linalg::flag_minor(g, idx, k) != 0) bases.push_back(idx);
  return bases;
}

std::vector<Rat> random_params(int count, unsigned long long seed) {
  static const Rat pool[] = {Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(1), Rat(2), Rat(3)};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 5);
  std::vector<Rat> out(count);
  for (Rat& p : out) p = pool[pick(rng)];
  return out;
}

bool exchange_axiom_holds(const std::vector<std::vector<int>>& bases) {
  if (bases.empty()) return false;
  std::set<std::vector<int>> lookup(bases.begin(), bases.end());
  for (const auto& a : bases)
    for (const auto& b : bases) {
      if (a == b) continue;
      for (int i : a) {
        if (std::binary_search(b.begin(), b.end(), i)) continue;
        bool found = false;
        for (int j : b) {
          if (std::binary_search(a.begin(), a.end(), j)) continue;
          std::vector<int> candidate;
          for (int x : a)
            if (x != i) candidate.push_back(x);
          candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), j), j);
          if (lookup.count(candidate)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  return true;
}

}  // namespace toda::tnncell
