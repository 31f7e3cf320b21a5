#pragma once

#include <string_view>
#include <vector>

#include "cyclotope/cyclic.hpp"
#include "cyclotope/numbers.hpp"

namespace cyclotope::transfer {

// A point of [0,1)^n with exact rational coordinates. Floating point is
// banned here: the correspondence predicates below are if-and-only-if
// statements that rounded ties would corrupt.
class RationalPoint {
 public:
  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> coords);

  // Parses "1/2,3/4,0"; each entry "p/q" or a plain integer.
  static RationalPoint parse(std::string_view text);

  int dimension() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rational>& coords() const { return coords_; }

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;

 private:
  std::vector<Rational> coords_;
};

// y_i = fractional part of x_1 + ... + x_i. A bijection of [0,1)^n.
RationalPoint forward(const RationalPoint& x);

// x_1 = y_1; x_i = y_i - y_{i-1}, plus 1 when that is negative.
RationalPoint inverse(const RationalPoint& y);

// The permutation sigma of {1,...,n} with sigma(i) > sigma(j) iff y_i > y_j
// for i < j; equal coordinates rank by index. Returned as sigma(1..n).
std::vector<int> standardization(const RationalPoint& y);

// The word (0, sigma^{-1}(1), ..., sigma^{-1}(n)): element i+1 of the word
// is the index (1-based) holding the (i+1)-smallest coordinate.
cyclic::CyclicWord cyclic_standardization(const RationalPoint& y);

// True when no consecutive coordinate sum x_i + ... + x_j is an integer.
bool is_generic(const RationalPoint& x);

// For generic x: membership of x in the chain-set polytope must agree with
// membership of the cyclic standardization of forward(x) in the chain-set
// word class. Returns that equivalence (always true unless something is
// broken). Non-generic x is rejected.
bool verify_correspondence(const cyclic::ChainSet& chains,
                           const RationalPoint& x);

}  // namespace cyclotope::transfer
