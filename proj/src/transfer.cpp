#include "cyclotope/transfer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclotope::transfer {

namespace {

Rational fractional_part(const Rational& r) {
  // Assumes r >= 0 (partial sums of [0,1) coordinates).
  BigInt whole = boost::multiprecision::numerator(r) /
                 boost::multiprecision::denominator(r);
  return r - Rational(whole);
}

bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("RationalPoint::parse: empty coordinate");
  }
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    BigInt num(std::string(text.substr(0, slash)));
    BigInt den(std::string(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("RationalPoint::parse: bad rational \"" +
                                std::string(text) + "\"");
  }
}

}  // namespace

RationalPoint::RationalPoint(std::vector<Rational> coords)
    : coords_(std::move(coords)) {
  for (const Rational& c : coords_) {
    if (c < 0 || c >= 1) {
      throw std::invalid_argument("RationalPoint: coordinates must lie in [0,1)");
    }
  }
}

RationalPoint RationalPoint::parse(std::string_view text) {
  std::vector<Rational> coords;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    coords.push_back(parse_rational(text.substr(pos, comma - pos)));
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return RationalPoint(std::move(coords));
}

RationalPoint forward(const RationalPoint& x) {
  std::vector<Rational> y;
  y.reserve(x.coords().size());
  Rational sum = 0;
  for (const Rational& c : x.coords()) {
    sum += c;
    y.push_back(fractional_part(sum));
  }
  return RationalPoint(std::move(y));
}

RationalPoint inverse(const RationalPoint& y) {
  std::vector<Rational> x;
  x.reserve(y.coords().size());
  Rational prev = 0;
  for (const Rational& c : y.coords()) {
    Rational step = c - prev;
    if (step < 0) step += 1;
    x.push_back(step);
    prev = c;
  }
  return RationalPoint(std::move(x));
}

std::vector<int> standardization(const RationalPoint& y) {
  const int n = y.dimension();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  // stable: equal coordinates keep index order, as the tie rule demands
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return y.coords()[static_cast<std::size_t>(a)] <
           y.coords()[static_cast<std::size_t>(b)];
  });
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int rank = 0; rank < n; ++rank) {
    sigma[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] = rank + 1;
  }
  return sigma;
}

cyclic::CyclicWord cyclic_standardization(const RationalPoint& y) {
  const int n = y.dimension();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return y.coords()[static_cast<std::size_t>(a)] <
           y.coords()[static_cast<std::size_t>(b)];
  });
  // Letter r+1 of the word is the 1-based index holding the (r+1)-smallest
  // coordinate, i.e. sigma^{-1}(r+1).
  std::vector<int> letters(static_cast<std::size_t>(n) + 1, 0);
  for (int rank = 0; rank < n; ++rank) {
    letters[static_cast<std::size_t>(rank) + 1] =
        order[static_cast<std::size_t>(rank)] + 1;
  }
  return cyclic::CyclicWord(std::move(letters));
}

bool is_generic(const RationalPoint& x) {
  const int n = x.dimension();
  for (int i = 0; i < n; ++i) {
    Rational sum = 0;
    for (int j = i; j < n; ++j) {
      sum += x.coords()[static_cast<std::size_t>(j)];
      if (is_integer(sum)) return false;
    }
  }
  return true;
}

bool verify_correspondence(const cyclic::ChainSet& chains,
                           const RationalPoint& x) {
  if (x.dimension() != chains.top()) {
    throw std::invalid_argument("verify_correspondence: dimension mismatch");
  }
  if (!is_generic(x)) {
    throw std::invalid_argument(
        "verify_correspondence: point has an integral consecutive sum; the "
        "two-sided equivalence needs genericity");
  }
  bool in_polytope = true;
  for (auto [i, j] : chains.pairs()) {
    Rational sum = 0;
    for (int c = i; c < j; ++c) sum += x.coords()[static_cast<std::size_t>(c)];
    if (sum > 1) {
      in_polytope = false;
      break;
    }
  }
  bool in_class = cyclic::has_all_chains(cyclic_standardization(forward(x)), chains);
  return in_polytope == in_class;
}

}  // namespace cyclotope::transfer
