#pragma once

#include <cstddef>
#include <vector>

#include "cyclotope/cyclic.hpp"
#include "cyclotope/numbers.hpp"

namespace cyclotope::boustrophedon {

// A composition of `order` into dimension+1 positive parts.
using SimplexIndex = std::vector<int>;

// Arbitrary-precision integers indexed by all compositions of N into d+1
// positive parts (there are C(N-1, d) of them), stored densely in
// lexicographic index order.
class SimplexArray {
 public:
  // Zero-filled array; requires d >= 1 and N >= d + 1.
  SimplexArray(int dimension, int order);

  int dimension() const { return dimension_; }
  int order() const { return order_; }
  std::size_t size() const { return values_.size(); }

  // Lexicographic rank of an index; validates shape.
  std::size_t rank(const SimplexIndex& idx) const;
  SimplexIndex unrank(std::size_t r) const;

  const BigInt& at(const SimplexIndex& idx) const { return values_[rank(idx)]; }
  BigInt& at(const SimplexIndex& idx) { return values_[rank(idx)]; }

  const std::vector<BigInt>& values() const { return values_; }
  std::vector<BigInt>& values() { return values_; }

  BigInt total() const;

  // Visits (index, value) in lexicographic index order.
  template <typename F>
  void for_each(F&& f) const {
    SimplexIndex idx(static_cast<std::size_t>(dimension_) + 1, 1);
    std::size_t r = 0;
    visit_rec(idx, 0, order_ - dimension_ - 1, r, f);
  }

  friend bool operator==(const SimplexArray&, const SimplexArray&) = default;

 private:
  template <typename F>
  void visit_rec(SimplexIndex& idx, int pos, int slack, std::size_t& r,
                 F& f) const {
    if (pos == dimension_) {
      idx[static_cast<std::size_t>(pos)] = 1 + slack;
      f(idx, values_[r]);
      ++r;
      return;
    }
    for (int extra = 0; extra <= slack; ++extra) {
      idx[static_cast<std::size_t>(pos)] = 1 + extra;
      visit_rec(idx, pos + 1, slack - extra, r, f);
    }
  }

  int dimension_ = 0;
  int order_ = 0;
  std::vector<BigInt> values_;
};

// Length of the clockwise arc from i to j: one plus the number of elements
// strictly between them. Requires i != j, both in range.
int arc_length(const cyclic::CyclicWord& w, int i, int j);

// The set of predecessors feeding an entry of the partial-sum operator:
// indices (v, i_2, ..., i_d, i_{d+1} + i_1 - v - 1) for 1 <= v <= i_1 - 1,
// one order lower. Empty when i_1 = 1.
std::vector<SimplexIndex> tau(const SimplexIndex& idx);

// Linear operator summing each entry over tau of its index; maps an array
// of order N to order N + 1. Computed by running prefix sums along the
// first coordinate (the tau sum telescopes), so each step costs O(size).
SimplexArray psi(const SimplexArray& b);

// Cyclic index rotation: output at (i_1, ..., i_{d+1}) reads the input at
// (i_{d+1}, i_1, ..., i_d). Applying it dimension+1 times is the identity.
SimplexArray omega(const SimplexArray& b);

// Arc-length-refined class sizes for words whose width-k windows are all
// chains: starts from the single-entry array of order k, applies
// omega(psi(.)) exactly n - k + 1 times, landing on order n + 1 with
// dimension k - 1. Requires 2 <= k <= n.
SimplexArray refined_array(int k, int n);

// Sum of the refined array: the number of words on {0, ..., n} whose
// width-k windows are all chains. Requires 2 <= k <= n (the k = 1 case is
// plain n! and is handled by callers).
BigInt count_extensions(int k, int n);

// The refinement profile of one word: entry j (1-based, j <= k-1) is the
// arc length from n+j-k to n+1+j-k, and entry k closes the cycle from n
// back to n+1-k. Entries sum to n + 1 whenever the marked letters appear
// in cyclic chain order (always true inside the window class); other words
// are rejected.
SimplexIndex arc_profile(const cyclic::CyclicWord& w, int k);

}  // namespace cyclotope::boustrophedon
