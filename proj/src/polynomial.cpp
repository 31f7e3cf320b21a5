#include "cyclotope/polynomial.hpp"

#include <sstream>

namespace cyclotope {

bool is_palindromic(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  std::size_t m = c.size();
  for (std::size_t i = 0; i < m / 2; ++i) {
    if (c[i] != c[m - 1 - i]) return false;
  }
  return true;
}

RatPolynomial interpolate_at_integers(const std::vector<BigInt>& values) {
  if (values.empty()) {
    throw std::invalid_argument("interpolate_at_integers: no values");
  }
  const int m = static_cast<int>(values.size()) - 1;  // nodes 0..m
  RatPolynomial result;
  for (int i = 0; i <= m; ++i) {
    if (values[static_cast<std::size_t>(i)] == 0) continue;
    // Lagrange basis polynomial for node i, scaled by the value there.
    RatPolynomial basis = RatPolynomial::constant(Rational(1));
    Rational denom(1);
    for (int j = 0; j <= m; ++j) {
      if (j == i) continue;
      basis = basis * RatPolynomial({Rational(-j), Rational(1)});
      denom *= Rational(i - j);
    }
    Rational scale = Rational(values[static_cast<std::size_t>(i)]) / denom;
    result += basis * scale;
  }
  return result;
}

IntPolynomial to_integer_polynomial(const RatPolynomial& p) {
  std::vector<BigInt> out;
  out.reserve(p.coeffs().size());
  for (const Rational& c : p.coeffs()) {
    if (boost::multiprecision::denominator(c) != 1) {
      throw integrity_error("to_integer_polynomial: non-integer coefficient " +
                            c.str());
    }
    out.push_back(boost::multiprecision::numerator(c));
  }
  return IntPolynomial(std::move(out));
}

std::string to_string(const IntPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    BigInt c = p.coeff(d);
    if (c == 0) continue;
    if (!first) out << (c > 0 ? "+" : "-");
    else if (c < 0) out << "-";
    BigInt a = abs(c);
    if (a != 1 || d == 0) out << a.str();
    if (d >= 1) out << var;
    if (d >= 2) out << "^" << d;
    first = false;
  }
  return out.str();
}

}  // namespace cyclotope
