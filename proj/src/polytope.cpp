#include "cyclotope/polytope.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace cyclotope::polytope {

ConstraintSystem::ConstraintSystem(int dimension, std::vector<Constraint> rows)
    : dimension_(dimension), rows_(std::move(rows)) {
  if (dimension_ < 0) {
    throw std::invalid_argument("ConstraintSystem: negative dimension");
  }
  for (const Constraint& c : rows_) {
    if (c.lo < 0 || c.hi > dimension_ || c.lo >= c.hi) {
      throw std::invalid_argument("ConstraintSystem: constraint interval out of range");
    }
    max_width_ = std::max(max_width_, c.width());
    if (c.rel != Relation::at_most) at_most_only_ = false;
  }
}

ConstraintSystem interval_system(const cyclic::ChainSet& chains) {
  std::vector<Constraint> rows;
  rows.reserve(chains.pairs().size());
  for (auto [i, j] : chains.pairs()) {
    rows.push_back({i, j, Relation::at_most});
  }
  return ConstraintSystem(chains.top(), std::move(rows));
}

ConstraintSystem window_system(int k, int n) {
  return interval_system(cyclic::ChainSet::windows(k, n));
}

ConstraintSystem sign_system(const cyclic::SignWord& signs) {
  std::vector<Constraint> rows;
  rows.reserve(static_cast<std::size_t>(signs.size()));
  for (int i = 0; i < signs.size(); ++i) {
    rows.push_back(
        {i, i + 2, signs.is_plus(i) ? Relation::at_most : Relation::at_least});
  }
  return ConstraintSystem(signs.size() + 1, std::move(rows));
}

namespace {

// Raised internally when the sparse state space outgrows the configured
// budget (or cannot be key-packed at all); callers fall back to direct
// enumeration.
struct budget_exceeded {};

using Key = unsigned __int128;

struct KeyHash {
  std::size_t operator()(Key k) const noexcept {
    // splitmix64 over both halves
    auto mix = [](std::uint64_t z) {
      z += 0x9e3779b97f4a7c15ULL;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return z ^ (z >> 31);
    };
    return static_cast<std::size_t>(mix(static_cast<std::uint64_t>(k)) ^
                                    (mix(static_cast<std::uint64_t>(k >> 64)) << 1));
  }
};

// Constraints regrouped by the position where the sliding window reaches
// them: `ending[pos]` holds rows whose interval ends exactly at pos, and
// `pending[pos]` the left endpoints of at-most rows still open after pos
// (their partial sum already exceeding the dilation kills the state, since
// coordinates cannot shrink it back).
struct SweepPlan {
  struct Ending {
    int lo;
    Relation rel;
  };
  std::vector<std::vector<Ending>> ending;  // index: position 1..n
  std::vector<std::vector<int>> pending;    // distinct lo values

  explicit SweepPlan(const ConstraintSystem& sys) {
    const std::size_t n1 = static_cast<std::size_t>(sys.dimension()) + 1;
    ending.resize(n1);
    pending.resize(n1);
    for (const Constraint& c : sys.rows()) {
      ending[static_cast<std::size_t>(c.hi)].push_back({c.lo, c.rel});
      if (c.rel == Relation::at_most) {
        for (int pos = c.lo + 1; pos < c.hi; ++pos) {
          auto& v = pending[static_cast<std::size_t>(pos)];
          if (std::find(v.begin(), v.end(), c.lo) == v.end()) v.push_back(c.lo);
        }
      }
    }
  }
};

BigInt dp_count(const ConstraintSystem& sys, long long t, std::size_t budget) {
  const int n = sys.dimension();
  const int w = sys.max_width() - 1;  // coordinates remembered between steps
  const Key radix = static_cast<Key>(t) + 1;

  std::vector<Key> radix_pow(static_cast<std::size_t>(w) + 1);
  radix_pow[0] = 1;
  for (int i = 1; i <= w; ++i) {
    if (radix != 0 &&
        radix_pow[static_cast<std::size_t>(i - 1)] >
            (std::numeric_limits<Key>::max)() / radix) {
      throw budget_exceeded{};  // state not packable into 128 bits
    }
    radix_pow[static_cast<std::size_t>(i)] =
        radix_pow[static_cast<std::size_t>(i - 1)] * radix;
  }

  const SweepPlan plan(sys);
  using Map = std::unordered_map<Key, BigInt, KeyHash>;
  Map cur;
  cur.emplace(Key{0}, BigInt(1));

  std::vector<long long> state(static_cast<std::size_t>(std::max(w, 1)));
  std::vector<long long> suffix(static_cast<std::size_t>(std::max(w, 1)) + 1);

  for (int pos = 1; pos <= n; ++pos) {
    const int kept = std::min(w, pos - 1);  // state length at this step
    const int base = pos - kept;            // state holds x_base .. x_{pos-1}
    Map nxt;
    for (const auto& [key, cnt] : cur) {
      Key rest = key;
      for (int i = 0; i < kept; ++i) {
        state[static_cast<std::size_t>(i)] = static_cast<long long>(rest % radix);
        rest /= radix;
      }
      suffix[static_cast<std::size_t>(kept)] = 0;
      for (int i = kept - 1; i >= 0; --i) {
        suffix[static_cast<std::size_t>(i)] =
            suffix[static_cast<std::size_t>(i + 1)] + state[static_cast<std::size_t>(i)];
      }

      // The admissible range for the new coordinate follows from every row
      // this position touches; an empty range just kills the state.
      long long x_min = 0;
      long long x_max = t;
      for (const auto& e : plan.ending[static_cast<std::size_t>(pos)]) {
        long long partial = suffix[static_cast<std::size_t>(e.lo + 1 - base)];
        if (e.rel == Relation::at_most) {
          x_max = std::min(x_max, t - partial);
        } else {
          x_min = std::max(x_min, t - partial);
        }
      }
      for (int lo : plan.pending[static_cast<std::size_t>(pos)]) {
        long long partial = suffix[static_cast<std::size_t>(lo + 1 - base)];
        x_max = std::min(x_max, t - partial);
      }

      for (long long x = x_min; x <= x_max; ++x) {
        Key nk;
        if (kept < w) {
          nk = key + static_cast<Key>(x) * radix_pow[static_cast<std::size_t>(kept)];
        } else if (w > 0) {
          nk = (key - static_cast<Key>(state[0])) / radix +
               static_cast<Key>(x) * radix_pow[static_cast<std::size_t>(w - 1)];
        } else {
          nk = 0;
        }
        nxt[nk] += cnt;
        if (nxt.size() > budget) throw budget_exceeded{};
      }
    }
    cur = std::move(nxt);
  }

  BigInt total = 0;
  for (const auto& [key, cnt] : cur) total += cnt;
  return total;
}

// Depth-first fallback with the same per-position pruning; exact but
// potentially exponential, used only when the DP state space is unusable.
BigInt enumerate_count(const ConstraintSystem& sys, long long t) {
  const int n = sys.dimension();
  const SweepPlan plan(sys);
  std::vector<long long> prefix(static_cast<std::size_t>(n) + 1, 0);
  BigInt total = 0;

  auto dfs = [&](auto&& self, int pos) -> void {
    if (pos > n) {
      ++total;
      return;
    }
    long long x_min = 0;
    long long x_max = t;
    for (const auto& e : plan.ending[static_cast<std::size_t>(pos)]) {
      long long partial = prefix[static_cast<std::size_t>(pos - 1)] -
                          prefix[static_cast<std::size_t>(e.lo)];
      if (e.rel == Relation::at_most) {
        x_max = std::min(x_max, t - partial);
      } else {
        x_min = std::max(x_min, t - partial);
      }
    }
    for (int lo : plan.pending[static_cast<std::size_t>(pos)]) {
      long long partial = prefix[static_cast<std::size_t>(pos - 1)] -
                          prefix[static_cast<std::size_t>(lo)];
      x_max = std::min(x_max, t - partial);
    }
    for (long long x = x_min; x <= x_max; ++x) {
      prefix[static_cast<std::size_t>(pos)] =
          prefix[static_cast<std::size_t>(pos - 1)] + x;
      self(self, pos + 1);
    }
  };
  dfs(dfs, 1);
  return total;
}

}  // namespace

BigInt count_lattice_points(const ConstraintSystem& sys, long long t,
                            const CountOptions& options) {
  if (t < 0) throw std::invalid_argument("count_lattice_points: t must be >= 0");
  if (t == 0) return 1;  // the empty dilation holds exactly the origin
  if (sys.rows().empty()) return ipow(BigInt(t) + 1, static_cast<unsigned long long>(sys.dimension()));
  try {
    return dp_count(sys, t, options.state_budget);
  } catch (const budget_exceeded&) {
    return enumerate_count(sys, t);
  }
}

std::vector<BigInt> ehrhart_values(const ConstraintSystem& sys, int t_max,
                                   const CountOptions& options) {
  if (t_max < 0) throw std::invalid_argument("ehrhart_values: t_max must be >= 0");
  std::vector<BigInt> values(static_cast<std::size_t>(t_max) + 1);
  int workers = std::max(1, options.threads);
  workers = std::min(workers, t_max + 1);
  if (workers == 1) {
    for (int t = 0; t <= t_max; ++t) {
      values[static_cast<std::size_t>(t)] = count_lattice_points(sys, t, options);
    }
    return values;
  }

  std::atomic<int> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  int failure_t = t_max + 1;  // rethrow the lowest-dilation failure
  auto work = [&] {
    for (;;) {
      int t = next.fetch_add(1);
      if (t > t_max) return;
      try {
        values[static_cast<std::size_t>(t)] = count_lattice_points(sys, t, options);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (t < failure_t) {
          failure_t = t;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return values;
}

EhrhartProfile ehrhart_profile(const ConstraintSystem& sys,
                               const CountOptions& options) {
  const int n = sys.dimension();
  EhrhartProfile profile;
  profile.counts = ehrhart_values(sys, n + 2, options);

  std::vector<BigInt> nodes(profile.counts.begin(),
                            profile.counts.begin() + n + 1);
  profile.ehrhart = interpolate_at_integers(nodes);

  // Two spare dilations guard the interpolation: a non-polynomial count
  // sequence (meaning a counter bug or a non-lattice input) cannot match a
  // degree-n polynomial at n+3 points.
  for (int t = n + 1; t <= n + 2; ++t) {
    Rational predicted = profile.ehrhart(Rational(t));
    if (predicted != Rational(profile.counts[static_cast<std::size_t>(t)])) {
      std::ostringstream msg;
      msg << "ehrhart_profile: interpolant disagrees with count at t=" << t
          << ": polynomial gives " << predicted.str() << ", counter gives "
          << profile.counts[static_cast<std::size_t>(t)].str();
      throw integrity_error(msg.str());
    }
  }
  if (profile.ehrhart.degree() != n) {
    throw integrity_error(
        "ehrhart_profile: counting polynomial has degree " +
        std::to_string(profile.ehrhart.degree()) + ", expected dimension " +
        std::to_string(n));
  }

  std::vector<BigInt> h(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (int i = 0; i <= j; ++i) {
      BigInt term = binomial(n + 1, i) * profile.counts[static_cast<std::size_t>(j - i)];
      if (i % 2 == 0) acc += term;
      else acc -= term;
    }
    if (acc < 0) {
      throw integrity_error("ehrhart_profile: negative h* coefficient at degree " +
                            std::to_string(j));
    }
    h[static_cast<std::size_t>(j)] = std::move(acc);
  }
  profile.hstar = IntPolynomial(std::move(h));
  if (profile.hstar.coeff(0) != 1) {
    throw integrity_error("ehrhart_profile: h* constant term is not 1");
  }

  profile.normalized_volume = profile.hstar(BigInt(1));
  Rational lead_volume = profile.ehrhart.coeff(n) * Rational(factorial(n));
  if (lead_volume != Rational(profile.normalized_volume)) {
    throw integrity_error(
        "ehrhart_profile: normalized volume mismatch: h*(1) = " +
        profile.normalized_volume.str() + " but dimension! * leading coefficient = " +
        lead_volume.str());
  }
  profile.palindromic = is_palindromic(profile.hstar);
  return profile;
}

RatPolynomial ehrhart_polynomial(const ConstraintSystem& sys,
                                 const CountOptions& options) {
  return ehrhart_profile(sys, options).ehrhart;
}

IntPolynomial hstar(const ConstraintSystem& sys, const CountOptions& options) {
  return ehrhart_profile(sys, options).hstar;
}

BigInt normalized_volume(const ConstraintSystem& sys,
                         const CountOptions& options) {
  return ehrhart_profile(sys, options).normalized_volume;
}

IntPolynomial hstar_halfopen(const ConstraintSystem& sys,
                             const CountOptions& options) {
  if (!sys.at_most_only()) {
    throw std::invalid_argument(
        "hstar_halfopen: only at-most systems have the shift property");
  }
  return IntPolynomial::monomial(1) * hstar(sys, options);
}

}  // namespace cyclotope::polytope
