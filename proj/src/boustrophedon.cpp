#include "cyclotope/boustrophedon.hpp"

#include <stdexcept>

namespace cyclotope::boustrophedon {

namespace {

// Small helper: C(n, k) in machine integers, for array sizing/ranking only.
std::size_t small_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > (static_cast<unsigned __int128>(1) << 62)) {
      throw std::length_error("SimplexArray: index space too large");
    }
  }
  return static_cast<std::size_t>(result);
}

}  // namespace

SimplexArray::SimplexArray(int dimension, int order)
    : dimension_(dimension), order_(order) {
  if (dimension_ < 1) {
    throw std::invalid_argument("SimplexArray: dimension must be >= 1");
  }
  if (order_ < dimension_ + 1) {
    throw std::invalid_argument(
        "SimplexArray: order must allow dimension+1 positive parts");
  }
  values_.resize(small_binomial(order_ - 1, dimension_));
}

std::size_t SimplexArray::rank(const SimplexIndex& idx) const {
  if (static_cast<int>(idx.size()) != dimension_ + 1) {
    throw std::invalid_argument("SimplexArray::rank: wrong index length");
  }
  int remaining = order_;
  std::size_t r = 0;
  for (int pos = 0; pos <= dimension_; ++pos) {
    int part = idx[static_cast<std::size_t>(pos)];
    int parts_after = dimension_ - pos;
    if (part < 1 || part > remaining - parts_after) {
      throw std::invalid_argument("SimplexArray::rank: index outside simplex");
    }
    // Count compositions whose part here is smaller: summing
    // C(remaining - v - 1, parts_after - 1) over 1 <= v < part telescopes
    // to a difference of binomials.
    if (parts_after > 0 && part > 1) {
      r += small_binomial(remaining - 1, parts_after) -
           small_binomial(remaining - part, parts_after);
    }
    remaining -= part;
  }
  return r;
}

SimplexIndex SimplexArray::unrank(std::size_t r) const {
  if (r >= values_.size()) {
    throw std::invalid_argument("SimplexArray::unrank: rank out of range");
  }
  SimplexIndex idx(static_cast<std::size_t>(dimension_) + 1);
  int remaining = order_;
  for (int pos = 0; pos <= dimension_; ++pos) {
    int parts_after = dimension_ - pos;
    if (parts_after == 0) {
      idx[static_cast<std::size_t>(pos)] = remaining;
      break;
    }
    int part = 1;
    for (;;) {
      std::size_t block = small_binomial(remaining - part - 1, parts_after - 1);
      if (r < block) break;
      r -= block;
      ++part;
    }
    idx[static_cast<std::size_t>(pos)] = part;
    remaining -= part;
  }
  return idx;
}

BigInt SimplexArray::total() const {
  BigInt sum = 0;
  for (const BigInt& v : values_) sum += v;
  return sum;
}

int arc_length(const cyclic::CyclicWord& w, int i, int j) {
  if (i == j) throw std::invalid_argument("arc_length: endpoints must differ");
  const int m = w.top() + 1;
  // Clockwise distance counts exactly the strictly-between elements plus 1.
  return (w.position(j) - w.position(i) + m) % m;
}

std::vector<SimplexIndex> tau(const SimplexIndex& idx) {
  if (idx.size() < 2) throw std::invalid_argument("tau: index needs >= 2 parts");
  for (int part : idx) {
    if (part < 1) throw std::invalid_argument("tau: parts must be positive");
  }
  std::vector<SimplexIndex> out;
  const int first = idx.front();
  const int last = idx.back();
  out.reserve(first > 0 ? static_cast<std::size_t>(first - 1) : 0);
  for (int v = 1; v <= first - 1; ++v) {
    SimplexIndex pred = idx;
    pred.front() = v;
    pred.back() = last + first - v - 1;
    out.push_back(std::move(pred));
  }
  return out;
}

SimplexArray psi(const SimplexArray& b) {
  const int d = b.dimension();
  SimplexArray c(d, b.order() + 1);

  // Fix the middle parts i_2..i_d; the tau predecessors of (i_1, mid, i_last)
  // are (v, mid, s - v) with s = i_1 + i_last - 1 constant, so sweeping i_1
  // upward accumulates a single running sum per group.
  SimplexIndex mid(static_cast<std::size_t>(d) - 1);
  auto sweep = [&](auto&& self, int pos, int used) -> void {
    if (pos == d - 1) {
      const int s_in = b.order() - used;   // i_1 + i_last in the input array
      if (s_in < 2) return;
      SimplexIndex in_idx(static_cast<std::size_t>(d) + 1);
      SimplexIndex out_idx(static_cast<std::size_t>(d) + 1);
      for (int i = 0; i < d - 1; ++i) {
        in_idx[static_cast<std::size_t>(i) + 1] = mid[static_cast<std::size_t>(i)];
        out_idx[static_cast<std::size_t>(i) + 1] = mid[static_cast<std::size_t>(i)];
      }
      BigInt acc = 0;
      for (int i1 = 1; i1 <= s_in; ++i1) {
        out_idx.front() = i1;
        out_idx.back() = s_in + 1 - i1;
        c.at(out_idx) = acc;
        if (i1 <= s_in - 1) {
          in_idx.front() = i1;
          in_idx.back() = s_in - i1;
          acc += b.at(in_idx);
        }
      }
      return;
    }
    for (int part = 1; used + part + (d - 2 - pos) + 2 <= b.order(); ++part) {
      mid[static_cast<std::size_t>(pos)] = part;
      self(self, pos + 1, used + part);
    }
  };
  sweep(sweep, 0, 0);
  return c;
}

SimplexArray omega(const SimplexArray& b) {
  const int d = b.dimension();
  SimplexArray c(d, b.order());
  SimplexIndex rotated(static_cast<std::size_t>(d) + 1);
  std::size_t r = 0;
  // Iterate outputs lexicographically; each reads its cyclically shifted
  // source entry.
  SimplexIndex out(static_cast<std::size_t>(d) + 1);
  auto walk = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == d) {
      out[static_cast<std::size_t>(d)] = remaining;
      rotated.front() = out.back();
      for (int i = 0; i < d; ++i) {
        rotated[static_cast<std::size_t>(i) + 1] = out[static_cast<std::size_t>(i)];
      }
      c.values()[r] = b.at(rotated);
      ++r;
      return;
    }
    for (int part = 1; part <= remaining - (d - pos); ++part) {
      out[static_cast<std::size_t>(pos)] = part;
      self(self, pos + 1, remaining - part);
    }
  };
  walk(walk, 0, b.order());
  return c;
}

SimplexArray refined_array(int k, int n) {
  if (k < 2 || k > n) {
    throw std::invalid_argument("refined_array: need 2 <= k <= n");
  }
  SimplexArray arr(k - 1, k);
  arr.values().front() = 1;  // the single index (1, ..., 1)
  for (int step = 0; step < n - k + 1; ++step) {
    arr = omega(psi(arr));
  }
  return arr;
}

BigInt count_extensions(int k, int n) { return refined_array(k, n).total(); }

SimplexIndex arc_profile(const cyclic::CyclicWord& w, int k) {
  const int n = w.top();
  if (k < 2 || k > n) {
    throw std::invalid_argument("arc_profile: need 2 <= k <= n");
  }
  SimplexIndex idx(static_cast<std::size_t>(k));
  int sum = 0;
  for (int j = 1; j <= k - 1; ++j) {
    idx[static_cast<std::size_t>(j - 1)] = arc_length(w, n + j - k, n + 1 + j - k);
    sum += idx[static_cast<std::size_t>(j - 1)];
  }
  idx[static_cast<std::size_t>(k - 1)] = arc_length(w, n, n + 1 - k);
  sum += idx[static_cast<std::size_t>(k - 1)];
  // The arcs close up in one turn of the circle exactly when the marked
  // letters n+1-k, ..., n appear in cyclic chain order, which holds for
  // every word whose width-k windows are chains.
  if (sum != n + 1) {
    throw std::invalid_argument(
        "arc_profile: marked letters are not in cyclic chain order");
  }
  return idx;
}

}  // namespace cyclotope::boustrophedon
