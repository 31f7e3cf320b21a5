#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyclotope/numbers.hpp"

namespace cyclotope {

// Dense univariate polynomial with exact coefficients, stored low degree
// first. The zero polynomial has an empty coefficient vector and degree -1.
template <typename Coeff>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial constant(Coeff value) {
    return Polynomial(std::vector<Coeff>{std::move(value)});
  }

  static Polynomial monomial(int degree, Coeff lead = Coeff(1)) {
    std::vector<Coeff> c(static_cast<std::size_t>(degree) + 1, Coeff(0));
    c.back() = std::move(lead);
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return coeffs_.empty(); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  // Coefficient of z^i; zero outside the stored range.
  Coeff coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Coeff(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  Coeff operator()(const Coeff& x) const {  // Horner evaluation
    Coeff acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Coeff& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Coeff> c(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Coeff(0)) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

// True when the coefficient vector reads the same in both directions
// (degree-d coefficient equals degree-0, and so on). The zero polynomial
// counts as palindromic.
bool is_palindromic(const IntPolynomial& p);

// Unique polynomial of degree < values.size() through the points
// (0, values[0]), (1, values[1]), ..., computed exactly.
RatPolynomial interpolate_at_integers(const std::vector<BigInt>& values);

// Extract exact integer coefficients; throws integrity_error if any
// coefficient has a nontrivial denominator.
IntPolynomial to_integer_polynomial(const RatPolynomial& p);

// Render like "z^3+7z^2+7z+1" (descending powers, zero terms skipped).
std::string to_string(const IntPolynomial& p, const std::string& var = "z");

}  // namespace cyclotope
