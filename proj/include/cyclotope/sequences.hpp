#pragma once

#include "cyclotope/polynomial.hpp"

namespace cyclotope::sequences {

// Number of alternating (up-down) permutations of [n]; 1, 1, 1, 2, 5, 16,
// 61, 272, ... Computed by the boustrophedon (Entringer) recurrence, so it
// is independent of every other counting route in the library.
BigInt euler_updown(int n);

// Eulerian polynomial A_n(z) = sum over permutations of [n] of z^des;
// requires n >= 1.
IntPolynomial eulerian_polynomial(int n);

// Narayana number N(n, k) = C(n,k) C(n,k-1) / n for 1 <= k <= n.
BigInt narayana(int n, int k);

// Q_n(z) = sum_{k=1}^{n} N(n,k) z^{k-1}; requires n >= 1.
IntPolynomial narayana_polynomial(int n);

// Catalan number C(2n,n)/(n+1); requires n >= 0.
BigInt catalan(int n);

}  // namespace cyclotope::sequences
