#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cyclotope/cyclic.hpp"

namespace cyclotope::parking {

// A nondecreasing parking function (p_0, ..., p_n): weakly increasing with
// 0 <= p_i <= i (so p_0 = 0). There are Catalan(n+1) of them.
class ParkingFunction {
 public:
  explicit ParkingFunction(std::vector<int> entries);

  static ParkingFunction parse(std::string_view csv);  // "0,1,1,3"

  // n; the function has n + 1 entries.
  int top() const { return static_cast<int>(entries_.size()) - 1; }
  const std::vector<int>& entries() const { return entries_; }

  std::string to_csv() const;

  friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;

 private:
  std::vector<int> entries_;
};

// All parking functions with entries p_0..p_n in lexicographic order.
template <typename F>
void for_each_parking(int n, F&& f);

std::vector<ParkingFunction> all_parking(int n);

// Number of positions i with p_i < p_{i+1}.
int ascents(const ParkingFunction& p);

// The bijection from words on {0, ..., 2n} whose width-n windows are all
// chains: p_i is the first small letter (one of 0..n) to the right of the
// letter n+i, or 0 when n+i has no small letter after it. Words outside the
// class are rejected. Sends word descents to parking ascents.
ParkingFunction parking_of_order(const cyclic::CyclicWord& w);

// Two-sided inverse of parking_of_order: lays out 0..n as a chain and
// inserts each big letter n+i just before letter p_i (or at the end of the
// word when p_i = 0), grouping so that (n, n+1, ..., 2n) is also a chain.
cyclic::CyclicWord order_of_parking(const ParkingFunction& p);

// For a word on {0, ..., n} whose width-k windows are all chains and with
// 2k > n: collapses the (always consecutive) run n-k, ..., k to the single
// letter n-k and shifts the letters above k down by 2k - n, producing a
// word on {0, ..., 2(n-k)} whose width-(n-k) windows are all chains, with
// the same number of descents. By convention here, k = n collapses
// everything to the one-letter word (0), the unique cyclic order on {0}.
cyclic::CyclicWord contract(const cyclic::CyclicWord& w, int k);

// ---- implementation of the enumeration template ----

namespace detail {
template <typename F>
void parking_rec(std::vector<int>& entries, int n, F& f) {
  int i = static_cast<int>(entries.size());
  if (i == n + 1) {
    f(ParkingFunction(entries));
    return;
  }
  int lo = entries.empty() ? 0 : entries.back();
  for (int v = lo; v <= i; ++v) {
    entries.push_back(v);
    parking_rec(entries, n, f);
    entries.pop_back();
  }
}
}  // namespace detail

template <typename F>
void for_each_parking(int n, F&& f) {
  if (n < 0) throw std::invalid_argument("for_each_parking: n must be >= 0");
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(n) + 1);
  detail::parking_rec(entries, n, f);
}

}  // namespace cyclotope::parking
