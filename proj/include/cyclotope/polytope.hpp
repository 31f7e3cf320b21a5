#pragma once

#include <cstddef>
#include <vector>

#include "cyclotope/cyclic.hpp"
#include "cyclotope/polynomial.hpp"

namespace cyclotope::polytope {

enum class Relation { at_most, at_least };

// One linear condition x_{lo+1} + ... + x_{hi} <= 1 (or >= 1) on points of
// the unit cube; the index pair uses the same convention as ChainSet, so a
// pair (lo, hi) constrains the hi - lo consecutive coordinates after lo.
struct Constraint {
  int lo;
  int hi;
  Relation rel;

  int width() const { return hi - lo; }
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// A polytope inside [0,1]^dimension cut out by consecutive-sum constraints.
class ConstraintSystem {
 public:
  ConstraintSystem(int dimension, std::vector<Constraint> rows);

  int dimension() const { return dimension_; }
  const std::vector<Constraint>& rows() const { return rows_; }

  // Largest constraint width; 0 when there are no rows.
  int max_width() const { return max_width_; }

  bool at_most_only() const { return at_most_only_; }

 private:
  int dimension_ = 0;
  std::vector<Constraint> rows_;
  int max_width_ = 0;
  bool at_most_only_ = true;
};

// The polytope whose interval sums come from a chain set on {0, ..., n}:
// dimension n, one at-most row per pair.
ConstraintSystem interval_system(const cyclic::ChainSet& chains);

// All width-k windows in dimension n (1 <= k <= n).
ConstraintSystem window_system(int k, int n);

// The sign-word polytope: dimension s.size() + 1, row i of width 2 with
// x_{i+1} + x_{i+2} <= 1 for '+', >= 1 for '-'.
ConstraintSystem sign_system(const cyclic::SignWord& signs);

struct CountOptions {
  // Upper bound on live states of the dynamic-programming counter before it
  // falls back to direct enumeration.
  std::size_t state_budget = std::size_t(1) << 23;
  // Worker threads for computing Ehrhart values at several dilations.
  int threads = 1;
};

// Number of lattice points of the t-th dilate, i.e. integer vectors
// 0 <= x_i <= t with each at-most row summing to <= t and each at-least row
// to >= t. Requires t >= 0; t = 0 yields 1.
BigInt count_lattice_points(const ConstraintSystem& sys, long long t,
                            const CountOptions& options = {});

// E(P, 0), ..., E(P, t_max), possibly computed in parallel.
std::vector<BigInt> ehrhart_values(const ConstraintSystem& sys, int t_max,
                                   const CountOptions& options = {});

// Everything the Ehrhart pipeline produces for one polytope, cross-checked:
// the interpolated counting polynomial is re-validated at two extra
// dilations, the h* coefficients must be nonnegative integers, and
// dimension! * leading coefficient must equal hstar(1).
struct EhrhartProfile {
  std::vector<BigInt> counts;  // E(P, 0..dimension+2)
  RatPolynomial ehrhart;
  IntPolynomial hstar;
  BigInt normalized_volume;  // hstar(1)
  bool palindromic = false;
};

EhrhartProfile ehrhart_profile(const ConstraintSystem& sys,
                               const CountOptions& options = {});

RatPolynomial ehrhart_polynomial(const ConstraintSystem& sys,
                                 const CountOptions& options = {});
IntPolynomial hstar(const ConstraintSystem& sys,
                    const CountOptions& options = {});
BigInt normalized_volume(const ConstraintSystem& sys,
                         const CountOptions& options = {});

// h* of the half-open variant (box [0,1)^n, every interval sum strict):
// equals z * hstar for at-most-only systems, since the strict count at
// dilation t is the closed count at t - 1. Mixed relations are rejected.
IntPolynomial hstar_halfopen(const ConstraintSystem& sys,
                             const CountOptions& options = {});

}  // namespace cyclotope::polytope
