#include <doctest.h>

#include <random>
#include <vector>

#include "cyclotope/cyclic.hpp"
#include "cyclotope/numbers.hpp"
#include "cyclotope/polytope.hpp"
#include "cyclotope/sequences.hpp"

using namespace cyclotope;
using namespace cyclotope::polytope;

namespace {

// Independent oracle: walk every point of {0, ..., t}^n and test the rows
// directly. Exponential, fine for tiny systems.
BigInt brute_count(const ConstraintSystem& sys, long long t) {
  const int n = sys.dimension();
  std::vector<long long> x(static_cast<std::size_t>(n), 0);
  BigInt total = 0;
  for (;;) {
    bool ok = true;
    for (const Constraint& row : sys.rows()) {
      long long sum = 0;
      for (int i = row.lo; i < row.hi; ++i) sum += x[static_cast<std::size_t>(i)];
      if (row.rel == Relation::at_most ? sum > t : sum < t) {
        ok = false;
        break;
      }
    }
    if (ok) ++total;
    int pos = 0;
    while (pos < n && ++x[static_cast<std::size_t>(pos)] > t) {
      x[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return total;
}

// Strict variant: coordinates in [0, t) and every row sum strictly against t.
BigInt brute_count_strict(const ConstraintSystem& sys, long long t) {
  const int n = sys.dimension();
  if (t == 0) return 0;
  std::vector<long long> x(static_cast<std::size_t>(n), 0);
  BigInt total = 0;
  for (;;) {
    bool ok = true;
    for (const Constraint& row : sys.rows()) {
      long long sum = 0;
      for (int i = row.lo; i < row.hi; ++i) sum += x[static_cast<std::size_t>(i)];
      if (sum >= t) {
        ok = false;
        break;
      }
    }
    if (ok) ++total;
    int pos = 0;
    while (pos < n && ++x[static_cast<std::size_t>(pos)] > t - 1) {
      x[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return total;
}

}  // namespace

TEST_CASE("constraint systems validate their rows") {
  CHECK_NOTHROW(ConstraintSystem(3, {{0, 2, Relation::at_most}}));
  CHECK_NOTHROW(ConstraintSystem(0, {}));
  CHECK_THROWS_AS(ConstraintSystem(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(ConstraintSystem(3, {{2, 2, Relation::at_most}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ConstraintSystem(3, {{-1, 2, Relation::at_most}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ConstraintSystem(3, {{1, 4, Relation::at_most}}),
                  std::invalid_argument);
  ConstraintSystem sys(4, {{0, 2, Relation::at_most}, {1, 4, Relation::at_least}});
  CHECK(sys.max_width() == 3);
  CHECK_FALSE(sys.at_most_only());
  CHECK(interval_system(cyclic::ChainSet::windows(2, 5)).at_most_only());
}

TEST_CASE("system builders mirror their combinatorial sources") {
  ConstraintSystem w = window_system(2, 4);
  CHECK(w.dimension() == 4);
  CHECK(w.rows().size() == 3);
  CHECK(w.rows()[1] == Constraint{1, 3, Relation::at_most});

  ConstraintSystem s = sign_system(cyclic::SignWord("+-"));
  CHECK(s.dimension() == 3);
  REQUIRE(s.rows().size() == 2);
  CHECK(s.rows()[0] == Constraint{0, 2, Relation::at_most});
  CHECK(s.rows()[1] == Constraint{1, 3, Relation::at_least});

  CHECK(sign_system(cyclic::SignWord("")).dimension() == 1);
  CHECK(interval_system(cyclic::ChainSet(3, {})).rows().empty());
}

TEST_CASE("lattice counts: degenerate dilations and empty systems") {
  ConstraintSystem sys = window_system(2, 3);
  CHECK(count_lattice_points(sys, 0) == 1);
  CHECK_THROWS_AS(count_lattice_points(sys, -1), std::invalid_argument);
  ConstraintSystem cube(3, {});
  CHECK(count_lattice_points(cube, 4) == 125);
  ConstraintSystem point(0, {});
  CHECK(count_lattice_points(point, 7) == 1);
}

TEST_CASE("lattice counts agree with direct enumeration") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> dim_dist(1, 4);
  std::uniform_int_distribution<int> row_dist(0, 3);
  std::uniform_int_distribution<int> rel_dist(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    int n = dim_dist(rng);
    std::vector<Constraint> rows;
    int n_rows = row_dist(rng);
    for (int r = 0; r < n_rows; ++r) {
      std::uniform_int_distribution<int> lo_dist(0, n - 1);
      int lo = lo_dist(rng);
      std::uniform_int_distribution<int> hi_dist(lo + 1, n);
      int hi = hi_dist(rng);
      rows.push_back({lo, hi,
                      rel_dist(rng) == 0 ? Relation::at_most : Relation::at_least});
    }
    ConstraintSystem sys(n, rows);
    for (long long t = 0; t <= 4; ++t) {
      CHECK(count_lattice_points(sys, t) == brute_count(sys, t));
    }
  }
}

TEST_CASE("count is independent of the state budget (fallback path)") {
  ConstraintSystem sys = window_system(3, 6);
  CountOptions tiny;
  tiny.state_budget = 1;  // forces the enumeration fallback
  CountOptions big;
  for (long long t = 0; t <= 6; ++t) {
    CHECK(count_lattice_points(sys, t, tiny) ==
          count_lattice_points(sys, t, big));
  }
  ConstraintSystem mixed = sign_system(cyclic::SignWord("+-+"));
  for (long long t = 0; t <= 5; ++t) {
    CHECK(count_lattice_points(mixed, t, tiny) ==
          count_lattice_points(mixed, t, big));
  }
}

TEST_CASE("ehrhart_values is deterministic across thread counts") {
  ConstraintSystem sys = window_system(2, 6);
  CountOptions one;
  one.threads = 1;
  CountOptions four;
  four.threads = 4;
  CHECK(ehrhart_values(sys, 8, one) == ehrhart_values(sys, 8, four));
}

TEST_CASE("cube profile: Eulerian h*, factorial volume") {
  for (int n = 1; n <= 5; ++n) {
    EhrhartProfile p = ehrhart_profile(ConstraintSystem(n, {}));
    CHECK(p.hstar == sequences::eulerian_polynomial(n));
    CHECK(p.normalized_volume == factorial(n));
    CHECK(p.palindromic);
    CHECK(p.ehrhart.degree() == n);
    // E(t) = (t+1)^n
    CHECK(to_integer_polynomial(p.ehrhart)(BigInt(6)) == ipow(BigInt(7), n));
  }
}

TEST_CASE("window profiles: frozen small cases") {
  EhrhartProfile p = ehrhart_profile(window_system(2, 4));
  CHECK(p.hstar == IntPolynomial({1, 3, 1}));
  CHECK(p.normalized_volume == 5);
  CHECK(p.counts.size() == 7);  // dilations 0..n+2
  CHECK(p.counts[0] == 1);
  CHECK(p.palindromic);

  CHECK(hstar(window_system(3, 6)) == IntPolynomial({1, 6, 6, 1}));
  CHECK(normalized_volume(window_system(2, 7)) == 272);
  CHECK(normalized_volume(window_system(1, 5)) == 120);
  CHECK(normalized_volume(window_system(6, 6)) == 1);
}

TEST_CASE("profile volume equals the exhaustive class count") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      CHECK(normalized_volume(window_system(k, n)) ==
            cyclic::count_extensions(cyclic::ChainSet::windows(k, n)));
    }
  }
}

TEST_CASE("zero-dimensional profile") {
  EhrhartProfile p = ehrhart_profile(ConstraintSystem(0, {}));
  CHECK(p.hstar == IntPolynomial({1}));
  CHECK(p.normalized_volume == 1);
}

TEST_CASE("sign-system profiles have dimension n + 1") {
  EhrhartProfile p = ehrhart_profile(sign_system(cyclic::SignWord("++")));
  CHECK(p.ehrhart.degree() == 3);
  CHECK(p.normalized_volume ==
        cyclic::count_extensions(cyclic::SignWord("++")));
}

TEST_CASE("half-open h* shifts by one dilation") {
  for (int n = 2; n <= 5; ++n) {
    ConstraintSystem sys = window_system(2, n);
    IntPolynomial closed = hstar(sys);
    IntPolynomial open = hstar_halfopen(sys);
    CHECK(open == IntPolynomial::monomial(1) * closed);
    // The strict count at dilation t must equal the closed count at t - 1.
    RatPolynomial e = ehrhart_polynomial(sys);
    for (long long t = 1; t <= n + 1; ++t) {
      CHECK(Rational(brute_count_strict(sys, t)) == e(Rational(t - 1)));
    }
  }
  CHECK_THROWS_AS(hstar_halfopen(sign_system(cyclic::SignWord("+-"))),
                  std::invalid_argument);
}

TEST_CASE("palindromic flag matches the coefficient test") {
  EhrhartProfile p = ehrhart_profile(interval_system(
      cyclic::ChainSet(3, {{0, 2}})));
  CHECK(p.palindromic == is_palindromic(p.hstar));
  EhrhartProfile q = ehrhart_profile(window_system(2, 5));
  CHECK(q.palindromic);
}

TEST_CASE("interval h* equals the descent polynomial on examples") {
  cyclic::ChainSet cs = cyclic::ChainSet::parse("0-2,1-3", 3);
  CHECK(hstar(interval_system(cs)) == cyclic::descent_polynomial(cs));
  cyclic::ChainSet single(4, {{1, 3}});
  CHECK(hstar(interval_system(single)) == cyclic::descent_polynomial(single));
}
