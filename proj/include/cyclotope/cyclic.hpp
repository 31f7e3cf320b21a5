#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclotope/polynomial.hpp"

namespace cyclotope::cyclic {

// A total cyclic order on {0, ..., n}, stored as the unique reading of the
// circle that starts at 0. The word (0, w_1, ..., w_n) means the elements
// appear in that clockwise order.
class CyclicWord {
 public:
  // Letters must be a permutation of {0, ..., n} starting with 0.
  explicit CyclicWord(std::vector<int> letters);

  // n, i.e. the largest element; the word has n + 1 letters.
  int top() const { return static_cast<int>(letters_.size()) - 1; }

  const std::vector<int>& letters() const { return letters_; }

  // Index of an element within the word, O(1).
  int position(int element) const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

  std::string to_text() const;  // "0,7,1,4,5,2,6,3"

 private:
  std::vector<int> letters_;
  std::vector<int> position_;
};

// A set of index intervals {(lo, hi)} on {0, ..., n}, each demanding that
// the chain (lo, lo+1, ..., hi) appears clockwise in a word. Nested pairs
// are redundant (a longer chain forces its sub-chains) but accepted.
class ChainSet {
 public:
  ChainSet(int top, std::vector<std::pair<int, int>> pairs);

  // Parses "0-2,1-3"; an empty string yields the unconstrained set.
  static ChainSet parse(std::string_view text, int top);

  // All width-k windows {(i, i+k) : 0 <= i <= top - k}; requires
  // 1 <= k <= top.
  static ChainSet windows(int k, int top);

  int top() const { return top_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  // Copy with nested (redundant) pairs removed.
  ChainSet without_nested() const;

  std::string to_text() const;

 private:
  int top_ = 0;
  std::vector<std::pair<int, int>> pairs_;
};

// A word over {+, -} prescribing, for each i, whether element i+1 sits
// clockwise between i and i-1 ('+') or not ('-').
class SignWord {
 public:
  SignWord() = default;  // empty word
  explicit SignWord(std::string_view signs);

  int size() const { return static_cast<int>(signs_.size()); }
  bool is_plus(int i) const { return signs_[static_cast<std::size_t>(i)] == '+'; }
  const std::string& text() const { return signs_; }

 private:
  std::string signs_;
};

// True when y lies strictly clockwise between x and z on the circle of w.
// The three elements must be distinct.
bool contains_triple(const CyclicWord& w, int x, int y, int z);

// True when the tuple's elements (all distinct, length >= 2) appear in
// clockwise order, i.e. every triple of the tuple in order is contained;
// a two-element tuple is trivially a chain.
bool is_chain(const CyclicWord& w, std::span<const int> tuple);

// Number of descents w_i > w_{i+1}, indices 1 <= i <= n - 1 (the leading 0
// never starts a descent and the word has no wrap-around position).
int descents(const CyclicWord& w);

// All words on {0, ..., top} in ascending lexicographic order of their
// letter vectors. f receives a const CyclicWord&.
template <typename F>
void for_each_word(int top, F&& f);

std::vector<CyclicWord> all_words(int top);

// Membership of w in the class cut out by a chain set / sign word.
bool has_all_chains(const CyclicWord& w, const ChainSet& chains);
bool matches_signs(const CyclicWord& w, const SignWord& signs);

// Every chain set on {0, ..., top} whose pairs form an antichain under
// interval containment, including the empty one. Antichains are exactly the
// chain sets with no redundant pair; there are Catalan(top + 1) of them.
std::vector<ChainSet> antichain_chain_sets(int top);

// Exhaustive class counts and descent generating polynomials.
BigInt count_extensions(const ChainSet& chains);
BigInt count_extensions(const SignWord& signs);
IntPolynomial descent_polynomial(const ChainSet& chains);
IntPolynomial descent_polynomial(const SignWord& signs);

// ---- implementation of the enumeration template ----

template <typename F>
void for_each_word(int top, F&& f) {
  if (top < 1) throw std::invalid_argument("for_each_word: order size must be >= 1");
  std::vector<int> letters(static_cast<std::size_t>(top) + 1);
  for (int i = 0; i <= top; ++i) letters[static_cast<std::size_t>(i)] = i;
  // The leading 0 is fixed; permute the tail in lexicographic order.
  do {
    f(CyclicWord(letters));
  } while (std::next_permutation(letters.begin() + 1, letters.end()));
}

}  // namespace cyclotope::cyclic
