#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "cyclotope/cyclic.hpp"
#include "cyclotope/parking.hpp"
#include "cyclotope/sequences.hpp"

using namespace cyclotope;
using namespace cyclotope::parking;

TEST_CASE("parking functions validate the nondecreasing staircase bound") {
  CHECK_NOTHROW(ParkingFunction({0}));
  CHECK_NOTHROW(ParkingFunction({0, 1, 1, 3}));
  CHECK_NOTHROW(ParkingFunction({0, 0, 0}));
  CHECK_THROWS_AS(ParkingFunction({}), std::invalid_argument);
  CHECK_THROWS_AS(ParkingFunction({1}), std::invalid_argument);
  CHECK_THROWS_AS(ParkingFunction({0, 2}), std::invalid_argument);   // p_1 > 1
  CHECK_THROWS_AS(ParkingFunction({0, 1, 0}), std::invalid_argument);  // decreasing
  CHECK_THROWS_AS(ParkingFunction({0, -1}), std::invalid_argument);
}

TEST_CASE("parking csv parse and print roundtrip") {
  ParkingFunction p = ParkingFunction::parse("0,1,1,3");
  CHECK(p.top() == 3);
  CHECK(p.entries() == std::vector<int>{0, 1, 1, 3});
  CHECK(p.to_csv() == "0,1,1,3");
  CHECK_THROWS_AS(ParkingFunction::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(ParkingFunction::parse("0,x"), std::invalid_argument);
  CHECK_THROWS_AS(ParkingFunction::parse("0,1,"), std::invalid_argument);
}

TEST_CASE("enumeration is lexicographic and Catalan-counted") {
  for (int n = 0; n <= 7; ++n) {
    BigInt count = 0;
    std::vector<int> prev;
    for_each_parking(n, [&](const ParkingFunction& p) {
      ++count;
      if (!prev.empty()) CHECK(prev < p.entries());
      prev = p.entries();
    });
    CHECK(count == sequences::catalan(n + 1));
  }
  auto all = all_parking(2);
  REQUIRE(all.size() == 5);
  CHECK(all.front().entries() == std::vector<int>{0, 0, 0});
  CHECK(all.back().entries() == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(for_each_parking(-1, [](const ParkingFunction&) {}),
                  std::invalid_argument);
}

TEST_CASE("ascent counts refine by Narayana numbers") {
  CHECK(ascents(ParkingFunction({0})) == 0);
  CHECK(ascents(ParkingFunction({0, 1, 1, 3})) == 2);
  CHECK(ascents(ParkingFunction({0, 0, 0, 0})) == 0);
  for (int n = 1; n <= 6; ++n) {
    std::map<int, BigInt> by_ascents;
    for_each_parking(n, [&](const ParkingFunction& p) {
      ++by_ascents[ascents(p)];
    });
    for (const auto& [a, cnt] : by_ascents) {
      CHECK(cnt == sequences::narayana(n + 1, a + 1));
    }
  }
}

TEST_CASE("parking_of_order: worked example") {
  cyclic::CyclicWord w({0, 4, 5, 1, 2, 6, 3});
  ParkingFunction p = parking_of_order(w);
  CHECK(p == ParkingFunction({0, 1, 1, 3}));
  CHECK(order_of_parking(p) == w);
  CHECK(cyclic::descents(w) == ascents(p));
}

TEST_CASE("parking bijection roundtrips exhaustively") {
  for (int n = 0; n <= 3; ++n) {
    std::set<std::vector<int>> images;
    BigInt class_size = 0;
    if (n == 0) {
      cyclic::CyclicWord w({0});
      CHECK(parking_of_order(w) == ParkingFunction({0}));
      CHECK(order_of_parking(ParkingFunction({0})) == w);
      continue;
    }
    cyclic::for_each_word(2 * n, [&](const cyclic::CyclicWord& w) {
      if (!cyclic::has_all_chains(w, cyclic::ChainSet::windows(n, 2 * n))) return;
      ++class_size;
      ParkingFunction p = parking_of_order(w);
      images.insert(p.entries());
      CHECK(order_of_parking(p) == w);
      CHECK(cyclic::descents(w) == ascents(p));
    });
    CHECK(class_size == sequences::catalan(n + 1));
    CHECK(BigInt(images.size()) == class_size);  // injective onto all of P_n
  }
}

TEST_CASE("parking_of_order rejects words outside its class") {
  CHECK_THROWS_AS(parking_of_order(cyclic::CyclicWord({0, 1})),
                  std::invalid_argument);  // odd alphabet
  // On {0,...,4} the class requires every width-2 window to be a chain.
  CHECK_THROWS_AS(parking_of_order(cyclic::CyclicWord({0, 2, 1, 3, 4})),
                  std::invalid_argument);
}

TEST_CASE("contract collapses the middle run and preserves descents") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = (n + 2) / 2; k <= n; ++k) {
      const int m = n - k;
      std::set<std::vector<int>> images;
      BigInt class_size = 0;
      cyclic::for_each_word(n, [&](const cyclic::CyclicWord& w) {
        if (!cyclic::has_all_chains(w, cyclic::ChainSet::windows(k, n))) return;
        ++class_size;
        cyclic::CyclicWord c = contract(w, k);
        CHECK(c.top() == 2 * m);
        if (m > 0) {
          CHECK(cyclic::has_all_chains(c, cyclic::ChainSet::windows(m, 2 * m)));
        }
        CHECK(cyclic::descents(c) == cyclic::descents(w));
        images.insert(c.letters());
      });
      // Injective into an equal-sized class: a bijection.
      CHECK(BigInt(images.size()) == class_size);
      BigInt target_size = 1;
      if (m > 0) {
        target_size = cyclic::count_extensions(cyclic::ChainSet::windows(m, 2 * m));
      }
      CHECK(class_size == target_size);
    }
  }
}

TEST_CASE("contract domain errors") {
  cyclic::CyclicWord w({0, 1, 2, 3});
  CHECK_THROWS_AS(contract(w, 0), std::invalid_argument);
  CHECK_THROWS_AS(contract(w, 4), std::invalid_argument);
  CHECK_THROWS_AS(contract(w, 1), std::invalid_argument);  // 2k <= n
  // Word outside the width-k window class.
  CHECK_THROWS_AS(contract(cyclic::CyclicWord({0, 2, 1, 3}), 2),
                  std::invalid_argument);
  CHECK(contract(cyclic::CyclicWord({0, 1, 2, 3}), 3) == cyclic::CyclicWord({0}));
}