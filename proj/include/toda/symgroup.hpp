#pragma once

// Symmetric-group combinatorics: Bruhat order via the tableau criterion,
// intervals, covers, reduced words, and positive distinguished
// subexpressions (PDS) inside a fixed reduced word.

#include <cstddef>
#include <string>
#include <vector>

namespace toda::symgroup {

// Permutation in one-line notation over {1..n}; word()[i-1] = z(i).
// Products compose as functions: (x*y)(i) = x(y(i)).
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  // Product s_{letters[0]} ... s_{letters[m-1]} of simple reflections.
  static Permutation from_letters(int n, const std::vector<int>& letters);

  int n() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_.at(i - 1); }  // 1-based
  const std::vector<int>& word() const { return word_; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  // Right product z * s_i: swaps the one-line entries at positions i, i+1.
  Permutation times_s(int i) const;

  int length() const;  // inversion count
  bool is_identity() const;
  // z.[k] = {z(1),...,z(k)} as a sorted set.
  std::vector<int> prefix_set(int k) const;

  bool operator==(const Permutation& o) const { return word_ == o.word_; }
  bool operator!=(const Permutation& o) const { return word_ != o.word_; }
  bool operator<(const Permutation& o) const { return word_ < o.word_; }  // one-line lex

  std::string to_string() const;

 private:
  std::vector<int> word_;
};

// Strong Bruhat order by the tableau criterion.
bool bruhat_leq(const Permutation& x, const Permutation& y);

// True iff z covers y: z = y*t for a transposition t and l(z) = l(y) + 1.
bool covers(const Permutation& y, const Permutation& z);

// {z : v <= z <= w}; throws if v is not <= w.
std::vector<Permutation> bruhat_interval(const Permutation& v, const Permutation& w);

std::vector<Permutation> all_permutations(int n);

// One reduced word by insertion sort (repeatedly strip a descent on the
// right). Every downstream construction is reduced-word independent.
std::vector<int> reduced_word(const Permutation& w);

// All reduced words, up to the given cap on count (DFS over left descents).
std::vector<std::vector<int>> all_reduced_words(const Permutation& w, size_t cap = 100000);

class ReducedWord {
 public:
  ReducedWord(int n, std::vector<int> letters);  // validates reducedness
  int n() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  const Permutation& target() const { return target_; }

 private:
  int n_;
  std::vector<int> letters_;
  Permutation target_;
};

// Subexpression of a reduced word, as the index sets of its prefix-product
// behavior. For a PDS, jbullet is empty and each prefix product is obtained
// greedily from the right.
struct Subexpression {
  std::vector<bool> use;   // position l (0-based) multiplies in s_{i_l}
  std::vector<int> jplus;  // 1-based positions where the prefix stalls
  std::vector<int> jcirc;  // 1-based positions where the prefix goes up
  std::vector<int> jbullet;
  std::vector<Permutation> prefix;  // prefix[k] = v_(k), k = 0..m

  std::string mask_string(const ReducedWord& w) const;
};

// The unique positive distinguished subexpression for v inside w_word.
// Throws if v is not <= target(w_word).
Subexpression pds(const Permutation& v, const ReducedWord& w_word);

}  // namespace toda::symgroup
