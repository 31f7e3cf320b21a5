#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "cyclotope/cyclic.hpp"
#include "cyclotope/numbers.hpp"
#include "cyclotope/sequences.hpp"

using namespace cyclotope;
using namespace cyclotope::cyclic;

TEST_CASE("CyclicWord accepts exactly the permutations starting with 0") {
  CHECK_NOTHROW(CyclicWord({0}));
  CHECK_NOTHROW(CyclicWord({0, 1}));
  CHECK_NOTHROW(CyclicWord({0, 2, 1}));
  CHECK_THROWS_AS(CyclicWord({}), std::invalid_argument);
  CHECK_THROWS_AS(CyclicWord({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(CyclicWord({0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(CyclicWord({0, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(CyclicWord({0, -1}), std::invalid_argument);
}

TEST_CASE("CyclicWord positions and text") {
  CyclicWord w({0, 3, 1, 4, 2});
  CHECK(w.top() == 4);
  CHECK(w.position(0) == 0);
  CHECK(w.position(3) == 1);
  CHECK(w.position(2) == 4);
  CHECK(w.to_text() == "0,3,1,4,2");
}

TEST_CASE("contains_triple reads clockwise betweenness") {
  CyclicWord w({0, 1, 4, 2, 3});
  CHECK(contains_triple(w, 0, 1, 4));
  CHECK(contains_triple(w, 1, 4, 2));
  CHECK(contains_triple(w, 4, 3, 0));   // wraps around
  CHECK_FALSE(contains_triple(w, 0, 4, 1));
  CHECK_FALSE(contains_triple(w, 4, 0, 3));
  CHECK_THROWS_AS(contains_triple(w, 1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(contains_triple(w, 0, 1, 5), std::invalid_argument);
}

TEST_CASE("contains_triple satisfies the total-cyclic-order axioms") {
  for (int top = 2; top <= 4; ++top) {
    for_each_word(top, [&](const CyclicWord& w) {
      for (int x = 0; x <= top; ++x) {
        for (int y = 0; y <= top; ++y) {
          for (int z = 0; z <= top; ++z) {
            if (x == y || y == z || x == z) continue;
            const bool xyz = contains_triple(w, x, y, z);
            // cyclicity
            CHECK(xyz == contains_triple(w, y, z, x));
            // asymmetry + totality: exactly one orientation holds
            CHECK(xyz != contains_triple(w, z, y, x));
            // transitivity
            if (xyz) {
              for (int u = 0; u <= top; ++u) {
                if (u == x || u == y || u == z) continue;
                if (contains_triple(w, x, z, u)) {
                  CHECK(contains_triple(w, x, y, u));
                }
              }
            }
          }
        }
      }
    });
  }
}

TEST_CASE("is_chain detects clockwise tuples") {
  CyclicWord w({0, 1, 4, 2, 3});
  CHECK(is_chain(w, std::vector<int>{0, 1, 4}));
  CHECK(is_chain(w, std::vector<int>{1, 2, 3}));
  CHECK(is_chain(w, std::vector<int>{0, 1, 4, 2, 3}));
  CHECK(is_chain(w, std::vector<int>{4, 3, 0}));
  CHECK_FALSE(is_chain(w, std::vector<int>{0, 4, 1}));
  CHECK_FALSE(is_chain(w, std::vector<int>{0, 2, 1, 4}));
  CHECK(is_chain(w, std::vector<int>{3, 1}));  // two elements, trivially
  CHECK_THROWS_AS(is_chain(w, std::vector<int>{0}), std::invalid_argument);
  CHECK_THROWS_AS(is_chain(w, std::vector<int>{0, 1, 1}), std::invalid_argument);
}

TEST_CASE("every consecutive window of a word is a chain") {
  for_each_word(5, [&](const CyclicWord& w) {
    const auto& letters = w.letters();
    for (std::size_t i = 0; i + 3 <= letters.size(); ++i) {
      std::span<const int> window(letters.data() + i, 3);
      CHECK(is_chain(w, window));
    }
  });
}

TEST_CASE("ChainSet parse/print roundtrip and validation") {
  ChainSet cs = ChainSet::parse("0-2,1-3", 3);
  CHECK(cs.top() == 3);
  CHECK(cs.pairs() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
  CHECK(cs.to_text() == "0-2,1-3");
  CHECK(ChainSet::parse("", 4).pairs().empty());
  CHECK_THROWS_AS(ChainSet::parse("2-1", 3), std::invalid_argument);
  CHECK_THROWS_AS(ChainSet::parse("0-4", 3), std::invalid_argument);
  CHECK_THROWS_AS(ChainSet::parse("0-2,", 3), std::invalid_argument);
  CHECK_THROWS_AS(ChainSet::parse("x", 3), std::invalid_argument);
  CHECK_THROWS_AS(ChainSet(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("window chain sets") {
  ChainSet cs = ChainSet::windows(2, 4);
  CHECK(cs.pairs() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}, {2, 4}});
  CHECK(ChainSet::windows(4, 4).pairs() ==
        std::vector<std::pair<int, int>>{{0, 4}});
  CHECK_THROWS_AS(ChainSet::windows(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(ChainSet::windows(5, 4), std::invalid_argument);
}

TEST_CASE("nested pairs are redundant for membership and counting") {
  ChainSet outer(4, {{0, 3}});
  ChainSet with_nested(4, {{0, 3}, {1, 2}, {0, 2}});
  CHECK(with_nested.without_nested().pairs() ==
        std::vector<std::pair<int, int>>{{0, 3}});
  CHECK(count_extensions(outer) == count_extensions(with_nested));
  for_each_word(4, [&](const CyclicWord& w) {
    CHECK(has_all_chains(w, outer) == has_all_chains(w, with_nested));
  });
}

TEST_CASE("for_each_word enumerates n! words in lexicographic order") {
  for (int top = 1; top <= 6; ++top) {
    BigInt count = 0;
    std::vector<int> prev;
    for_each_word(top, [&](const CyclicWord& w) {
      ++count;
      if (!prev.empty()) CHECK(prev < w.letters());
      prev = w.letters();
    });
    CHECK(count == factorial(top));
  }
  CHECK(all_words(3).size() == 6);
  CHECK(all_words(3).front().to_text() == "0,1,2,3");
  CHECK_THROWS_AS(for_each_word(0, [](const CyclicWord&) {}),
                  std::invalid_argument);
}

TEST_CASE("count_extensions over chain sets") {
  CHECK(count_extensions(ChainSet(3, {})) == 6);
  CHECK(count_extensions(ChainSet::parse("0-2,1-3", 3)) == 2);
  CHECK(count_extensions(ChainSet::windows(2, 4)) == 5);
  CHECK(count_extensions(ChainSet::windows(1, 5)) == 120);
  CHECK(count_extensions(ChainSet(5, {{0, 5}})) == 1);
}

TEST_CASE("descents") {
  CHECK(descents(CyclicWord({0, 1, 2, 3})) == 0);
  CHECK(descents(CyclicWord({0, 1, 4, 2, 3})) == 1);
  CHECK(descents(CyclicWord({0, 3, 2, 1})) == 2);
  CHECK(descents(CyclicWord({0})) == 0);
}

TEST_CASE("descent polynomial of the unconstrained class is Eulerian") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(descent_polynomial(ChainSet(n, {})) ==
          sequences::eulerian_polynomial(n));
  }
}

TEST_CASE("sign words validate their alphabet") {
  CHECK_NOTHROW(SignWord("++--+"));
  CHECK(SignWord("").size() == 0);
  CHECK(SignWord("+-").is_plus(0));
  CHECK_FALSE(SignWord("+-").is_plus(1));
  CHECK_THROWS_AS(SignWord("+x-"), std::invalid_argument);
}

TEST_CASE("matches_signs requires the matching word size") {
  CHECK_THROWS_AS(matches_signs(CyclicWord({0, 1, 2}), SignWord("++")),
                  std::invalid_argument);
}

TEST_CASE("sign classes partition all words") {
  for (int n = 0; n <= 4; ++n) {
    // Every word on {0, ..., n+1} matches exactly one sign word of length n.
    BigInt total = 0;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
      std::string s;
      for (int i = 0; i < n; ++i) s += (mask >> i & 1) ? '+' : '-';
      total += count_extensions(SignWord(s));
    }
    CHECK(total == factorial(n + 1));
    for_each_word(n + 1, [&](const CyclicWord& w) {
      int matched = 0;
      for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::string s;
        for (int i = 0; i < n; ++i) s += (mask >> i & 1) ? '+' : '-';
        if (matches_signs(w, SignWord(s))) ++matched;
      }
      CHECK(matched == 1);
    });
  }
}

TEST_CASE("the all-plus sign class is the full window class one step up") {
  // A word matches "+...+" (length n) exactly when every width-2 window of
  // {0, ..., n+1} is a chain.
  for (int n = 1; n <= 4; ++n) {
    SignWord all_plus(std::string(static_cast<std::size_t>(n), '+'));
    ChainSet pairs = ChainSet::windows(2, n + 1);
    for_each_word(n + 1, [&](const CyclicWord& w) {
      CHECK(matches_signs(w, all_plus) == has_all_chains(w, pairs));
    });
    CHECK(count_extensions(all_plus) == sequences::euler_updown(n + 1));
  }
}

TEST_CASE("descent polynomials of sign classes sum to the Eulerian polynomial") {
  for (int n = 0; n <= 4; ++n) {
    IntPolynomial sum;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
      std::string s;
      for (int i = 0; i < n; ++i) s += (mask >> i & 1) ? '+' : '-';
      sum += descent_polynomial(SignWord(s));
    }
    CHECK(sum == sequences::eulerian_polynomial(n + 1));
  }
}
