#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace cyclotope {

// Arbitrary-precision integers and rationals. Every count, coefficient and
// coordinate in this library is exact; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when two independently computed quantities that must agree do not,
// or when an exact structural invariant (integrality, nonnegativity, ...)
// fails. Unlike std::invalid_argument this never indicates bad user input;
// it signals an internal bug or corrupted data.
class integrity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

// n!, requires n >= 0.
BigInt factorial(int n);

// base^exp for exp >= 0.
BigInt ipow(const BigInt& base, unsigned long long exp);

}  // namespace cyclotope
