#include "cyclotope/numbers.hpp"

namespace cyclotope {

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is always an integer binomial prefix
  }
  return result;
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt ipow(const BigInt& base, unsigned long long exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp != 0) b *= b;
  }
  return result;
}

}  // namespace cyclotope
