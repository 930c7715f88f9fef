#include "toda/symgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace toda::symgroup {

Permutation::Permutation(std::vector<int> one_line) : word_(std::move(one_line)) {
  const int n = static_cast<int>(word_.size());
  if (n == 0) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::from_letters(int n, const std::vector<int>& letters) {
  Permutation p = identity(n);
  for (int l : letters) p = p.times_s(l);
  return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (n() != o.n()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> w(word_.size());
  for (int i = 1; i <= n(); ++i) w[i - 1] = (*this)(o(i));
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(word_.size());
  for (int i = 1; i <= n(); ++i) w[word_[i - 1] - 1] = i;
  return Permutation(std::move(w));
}

Permutation Permutation::times_s(int i) const {
  if (i < 1 || i >= n()) throw std::invalid_argument("simple reflection index out of range");
  std::vector<int> w = word_;
  std::swap(w[i - 1], w[i]);
  return Permutation(std::move(w));
}

int Permutation::length() const {
  int inv = 0;
  for (size_t i = 0; i < word_.size(); ++i)
    for (size_t j = i + 1; j < word_.size(); ++j)
      if (word_[i] > word_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (word_[i - 1] != i) return false;
  return true;
}

std::vector<int> Permutation::prefix_set(int k) const {
  if (k < 1 || k > n()) throw std::invalid_argument("prefix_set: k out of range");
  std::vector<int> s(word_.begin(), word_.begin() + k);
  std::sort(s.begin(), s.end());
  return s;
}

std::string Permutation::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(word_[i]);
  }
  return s + ")";
}

bool bruhat_leq(const Permutation& x, const Permutation& y) {
  if (x.n() != y.n()) throw std::invalid_argument("bruhat_leq: size mismatch");
  const int n = x.n();
  // Tableau criterion: the increasing rearrangements of the length-k
  // prefixes must compare entrywise, for every k.
  std::vector<int> xs, ys;
  xs.reserve(n);
  ys.reserve(n);
  for (int k = 1; k < n; ++k) {
    xs.insert(std::upper_bound(xs.begin(), xs.end(), x(k)), x(k));
    ys.insert(std::upper_bound(ys.begin(), ys.end(), y(k)), y(k));
    for (int i = 0; i < k; ++i)
      if (xs[i] > ys[i]) return false;
  }
  return true;
}

bool covers(const Permutation& y, const Permutation& z) {
  if (y.n() != z.n()) throw std::invalid_argument("covers: size mismatch");
  int first = -1, second = -1;
  for (int i = 1; i <= y.n(); ++i) {
    if (y(i) == z(i)) continue;
    if (first < 0)
      first = i;
    else if (second < 0)
      second = i;
    else
      return false;
  }
  if (second < 0) return false;
  if (y(first) != z(second) || y(second) != z(first)) return false;
  return z.length() == y.length() + 1;
}

std::vector<Permutation> bruhat_interval(const Permutation& v, const Permutation& w) {
  if (!bruhat_leq(v, w)) throw std::invalid_argument("bruhat_interval: v is not <= w");
  std::vector<Permutation> out;
  for (const Permutation& z : all_permutations(v.n()))
    if (bruhat_leq(v, z) && bruhat_leq(z, w)) out.push_back(z);
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<int> reduced_word(const Permutation& w) {
  // Strip descents on the right; the collected letters read backwards give
  // a reduced word for w.
  std::vector<int> stripped;
  Permutation u = w;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 1; i < u.n(); ++i) {
      if (u(i) > u(i + 1)) {
        stripped.push_back(i);
        u = u.times_s(i);
        progress = true;
        break;
      }
    }
  }
  std::reverse(stripped.begin(), stripped.end());
  return stripped;
}

namespace {
void reduced_words_dfs(const Permutation& u, std::vector<int>& acc,
                       std::vector<std::vector<int>>& out, size_t cap) {
  if (out.size() >= cap) return;
  if (u.is_identity()) {
    out.push_back(acc);
    return;
  }
  for (int i = 1; i < u.n(); ++i) {
    if (u(i) > u(i + 1)) {  // right descent: w = (w s_i) s_i with shorter w s_i
      acc.push_back(i);
      reduced_words_dfs(u.times_s(i), acc, out, cap);
      acc.pop_back();
    }
  }
}
}  // namespace

std::vector<std::vector<int>> all_reduced_words(const Permutation& w, size_t cap) {
  // Peeling descents from the right builds words back to front.
  std::vector<std::vector<int>> rev;
  std::vector<int> acc;
  reduced_words_dfs(w, acc, rev, cap);
  for (auto& word : rev) std::reverse(word.begin(), word.end());
  return rev;
}

ReducedWord::ReducedWord(int n, std::vector<int> letters)
    : n_(n), letters_(std::move(letters)), target_(Permutation::identity(n)) {
  for (int l : letters_)
    if (l < 1 || l >= n) throw std::invalid_argument("reduced word letter out of range");
  target_ = Permutation::from_letters(n, letters_);
  if (target_.length() != static_cast<int>(letters_.size()))
    throw std::invalid_argument("word is not reduced");
}

std::string Subexpression::mask_string(const ReducedWord& w) const {
  std::string s;
  for (size_t l = 0; l < use.size(); ++l) {
    if (l) s += " ";
    s += use[l] ? "s" + std::to_string(w.letters()[l]) : "1";
  }
  return s;
}

Subexpression pds(const Permutation& v, const ReducedWord& w_word) {
  if (v.n() != w_word.n()) throw std::invalid_argument("pds: size mismatch");
  if (!bruhat_leq(v, w_word.target())) throw std::invalid_argument("pds: v is not <= w");
  const auto& letters = w_word.letters();
  const int m = w_word.size();

  Subexpression sub;
  sub.use.assign(m, false);
  // Right-to-left greedy: use s_{i_l} exactly when it shortens the running
  // right-quotient of v. This realizes the unique PDS.
  Permutation r = v;
  for (int l = m - 1; l >= 0; --l) {
    int i = letters[l];
    if (r(i) > r(i + 1)) {
      sub.use[l] = true;
      r = r.times_s(i);
    }
  }
  if (!r.is_identity()) throw std::logic_error("pds: greedy scan failed despite v <= w");

  sub.prefix.reserve(m + 1);
  sub.prefix.push_back(Permutation::identity(v.n()));
  for (int l = 0; l < m; ++l) {
    Permutation next = sub.use[l] ? sub.prefix.back().times_s(letters[l]) : sub.prefix.back();
    int dl = next.length() - sub.prefix.back().length();
    if (dl > 0)
      sub.jcirc.push_back(l + 1);
    else if (dl == 0)
      sub.jplus.push_back(l + 1);
    else
      sub.jbullet.push_back(l + 1);
    sub.prefix.push_back(std::move(next));
  }
  if (!sub.jbullet.empty() || sub.prefix.back() != v)
    throw std::logic_error("pds: output fails the positive distinguished conditions");
  // Positivity at the skipped positions: the skipped letter must go up.
  for (int l = 0; l < m; ++l) {
    if (sub.use[l]) continue;
    const Permutation& p = sub.prefix[l];
    if (p(letters[l]) > p(letters[l] + 1))
      throw std::logic_error("pds: skipped letter violates the distinguished condition");
  }
  return sub;
}

}  // namespace toda::symgroup
