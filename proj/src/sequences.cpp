#include "cyclotope/sequences.hpp"

namespace cyclotope::sequences {

BigInt euler_updown(int n) {
  if (n < 0) throw std::invalid_argument("euler_updown: n must be >= 0");
  if (n == 0) return 1;
  // Entringer triangle: row r holds T(r, 0..r), with T(r, c) counting
  // alternating permutations of r+1 elements by last entry; each row is the
  // reversed running sum of the previous one, swept in alternating
  // direction -- the classical one-dimensional boustrophedon.
  std::vector<BigInt> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<BigInt> next(static_cast<std::size_t>(r) + 1);
    next[0] = 0;
    for (int c = 1; c <= r; ++c) {
      next[static_cast<std::size_t>(c)] =
          next[static_cast<std::size_t>(c - 1)] +
          row[static_cast<std::size_t>(r - c)];
    }
    row = std::move(next);
  }
  return row.back();
}

IntPolynomial eulerian_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("eulerian_polynomial: n must be >= 1");
  // A(n, k) = (k+1) A(n-1, k) + (n-k) A(n-1, k-1), A(1, 0) = 1.
  std::vector<BigInt> row{1};
  for (int m = 2; m <= n; ++m) {
    std::vector<BigInt> next(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      BigInt v = 0;
      if (k < m - 1) v += BigInt(k + 1) * row[static_cast<std::size_t>(k)];
      if (k >= 1) v += BigInt(m - k) * row[static_cast<std::size_t>(k - 1)];
      next[static_cast<std::size_t>(k)] = v;
    }
    row = std::move(next);
  }
  return IntPolynomial(std::move(row));
}

BigInt narayana(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw std::invalid_argument("narayana: need 1 <= k <= n");
  }
  BigInt num = binomial(n, k) * binomial(n, k - 1);
  BigInt q = num / n;
  if (q * n != num) throw integrity_error("narayana: formula not divisible");
  return q;
}

IntPolynomial narayana_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("narayana_polynomial: n must be >= 1");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    coeffs[static_cast<std::size_t>(k - 1)] = narayana(n, k);
  }
  return IntPolynomial(std::move(coeffs));
}

BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: n must be >= 0");
  return binomial(2LL * n, n) / (n + 1);
}

}  // namespace cyclotope::sequences
