#include "cyclotope/cyclic.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclotope::cyclic {

CyclicWord::CyclicWord(std::vector<int> letters) : letters_(std::move(letters)) {
  if (letters_.empty() || letters_.front() != 0) {
    throw std::invalid_argument("CyclicWord: word must start with 0");
  }
  const int n = static_cast<int>(letters_.size()) - 1;
  position_.assign(letters_.size(), -1);
  for (int pos = 0; pos <= n; ++pos) {
    int v = letters_[static_cast<std::size_t>(pos)];
    if (v < 0 || v > n || position_[static_cast<std::size_t>(v)] != -1) {
      throw std::invalid_argument("CyclicWord: letters must be a permutation of 0..n");
    }
    position_[static_cast<std::size_t>(v)] = pos;
  }
}

int CyclicWord::position(int element) const {
  if (element < 0 || element > top()) {
    throw std::invalid_argument("CyclicWord::position: element out of range");
  }
  return position_[static_cast<std::size_t>(element)];
}

std::string CyclicWord::to_text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << ",";
    out << letters_[i];
  }
  return out.str();
}

ChainSet::ChainSet(int top, std::vector<std::pair<int, int>> pairs)
    : top_(top), pairs_(std::move(pairs)) {
  if (top_ < 0) throw std::invalid_argument("ChainSet: negative order size");
  for (auto [i, j] : pairs_) {
    if (i < 0 || j > top_ || i >= j) {
      throw std::invalid_argument("ChainSet: pair out of range");
    }
  }
}

ChainSet ChainSet::parse(std::string_view text, int top) {
  if (!text.empty() && text.back() == ',') {
    throw std::invalid_argument("ChainSet::parse: trailing comma in \"" +
                                std::string(text) + "\"");
  }
  std::vector<std::pair<int, int>> pairs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    std::size_t dash = item.find('-');
    if (dash == std::string_view::npos || dash == 0 || dash + 1 == item.size()) {
      throw std::invalid_argument("ChainSet::parse: expected \"i-j\" in \"" +
                                  std::string(text) + "\"");
    }
    int i = 0, j = 0;
    try {
      i = std::stoi(std::string(item.substr(0, dash)));
      j = std::stoi(std::string(item.substr(dash + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("ChainSet::parse: bad integer in \"" +
                                  std::string(item) + "\"");
    }
    pairs.emplace_back(i, j);
    pos = comma + 1;
  }
  return ChainSet(top, std::move(pairs));
}

ChainSet ChainSet::windows(int k, int top) {
  if (k < 1 || k > top) throw std::invalid_argument("ChainSet::windows: need 1 <= k <= n");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(top - k) + 1);
  for (int i = 0; i + k <= top; ++i) pairs.emplace_back(i, i + k);
  return ChainSet(top, std::move(pairs));
}

ChainSet ChainSet::without_nested() const {
  std::vector<std::pair<int, int>> kept;
  for (auto p : pairs_) {
    bool nested = false;
    for (auto q : pairs_) {
      if (p != q && q.first <= p.first && p.second <= q.second) {
        nested = true;
        break;
      }
    }
    if (!nested) kept.push_back(p);
  }
  return ChainSet(top_, std::move(kept));
}

std::string ChainSet::to_text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) out << ",";
    out << pairs_[i].first << "-" << pairs_[i].second;
  }
  return out.str();
}

SignWord::SignWord(std::string_view signs) : signs_(signs) {
  for (char c : signs_) {
    if (c != '+' && c != '-') {
      throw std::invalid_argument("SignWord: only '+' and '-' allowed");
    }
  }
}

bool contains_triple(const CyclicWord& w, int x, int y, int z) {
  if (x == y || y == z || x == z) {
    throw std::invalid_argument("contains_triple: elements must be distinct");
  }
  const int m = w.top() + 1;
  // Walk clockwise from x: y must come strictly before z.
  int ry = (w.position(y) - w.position(x) + m) % m;
  int rz = (w.position(z) - w.position(x) + m) % m;
  return ry < rz;
}

bool is_chain(const CyclicWord& w, std::span<const int> tuple) {
  if (tuple.size() < 2) throw std::invalid_argument("is_chain: need length >= 2");
  for (std::size_t a = 0; a < tuple.size(); ++a) {
    for (std::size_t b = a + 1; b < tuple.size(); ++b) {
      if (tuple[a] == tuple[b]) {
        throw std::invalid_argument("is_chain: repeated entry");
      }
    }
  }
  const int m = w.top() + 1;
  int anchor = w.position(tuple[0]);
  int prev = 0;
  for (std::size_t a = 1; a < tuple.size(); ++a) {
    int r = (w.position(tuple[a]) - anchor + m) % m;
    if (r < prev) return false;
    prev = r;
  }
  return true;
}

int descents(const CyclicWord& w) {
  const auto& l = w.letters();
  int count = 0;
  for (std::size_t i = 0; i + 1 < l.size(); ++i) {
    if (l[i] > l[i + 1]) ++count;
  }
  return count;
}

std::vector<CyclicWord> all_words(int top) {
  std::vector<CyclicWord> out;
  for_each_word(top, [&](const CyclicWord& w) { out.push_back(w); });
  return out;
}

bool has_all_chains(const CyclicWord& w, const ChainSet& chains) {
  if (w.top() != chains.top()) {
    throw std::invalid_argument("has_all_chains: order sizes differ");
  }
  const int m = w.top() + 1;
  for (auto [i, j] : chains.pairs()) {
    // (i, i+1, ..., j) is a chain iff positions relative to i increase.
    int anchor = w.position(i);
    int prev = 0;
    for (int v = i + 1; v <= j; ++v) {
      int r = (w.position(v) - anchor + m) % m;
      if (r < prev) {
        prev = -1;
        break;
      }
      prev = r;
    }
    if (prev < 0) return false;
  }
  return true;
}

bool matches_signs(const CyclicWord& w, const SignWord& signs) {
  if (w.top() != signs.size() + 1) {
    throw std::invalid_argument(
        "matches_signs: a sign word of length n needs a word on {0,...,n+1}");
  }
  for (int i = 1; i <= signs.size(); ++i) {
    // '+' at i demands the triple (i-1, i, i+1); '-' demands (i+1, i, i-1).
    bool plus = contains_triple(w, i - 1, i, i + 1);
    if (plus != signs.is_plus(i - 1)) return false;
  }
  return true;
}

namespace {

// Interval antichains are pairs of strictly increasing lo- and hi-sequences
// (equal los or non-increasing his would nest one pair in another), so they
// can be grown left to right without ever backtracking over a containment.
void grow_antichains(int top, int min_lo, int min_hi,
                     std::vector<std::pair<int, int>>& current,
                     std::vector<ChainSet>& out) {
  out.emplace_back(top, current);
  for (int lo = min_lo; lo < top; ++lo) {
    for (int hi = std::max(min_hi, lo + 1); hi <= top; ++hi) {
      current.emplace_back(lo, hi);
      grow_antichains(top, lo + 1, hi + 1, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

std::vector<ChainSet> antichain_chain_sets(int top) {
  if (top < 1) {
    throw std::invalid_argument("antichain_chain_sets: order size must be >= 1");
  }
  std::vector<ChainSet> out;
  std::vector<std::pair<int, int>> current;
  grow_antichains(top, 0, 1, current, out);
  return out;
}

BigInt count_extensions(const ChainSet& chains) {
  BigInt count = 0;
  for_each_word(chains.top(), [&](const CyclicWord& w) {
    if (has_all_chains(w, chains)) ++count;
  });
  return count;
}

BigInt count_extensions(const SignWord& signs) {
  BigInt count = 0;
  for_each_word(signs.size() + 1, [&](const CyclicWord& w) {
    if (matches_signs(w, signs)) ++count;
  });
  return count;
}

IntPolynomial descent_polynomial(const ChainSet& chains) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(chains.top()) + 1);
  for_each_word(chains.top(), [&](const CyclicWord& w) {
    if (has_all_chains(w, chains)) {
      ++coeffs[static_cast<std::size_t>(descents(w))];
    }
  });
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial descent_polynomial(const SignWord& signs) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(signs.size()) + 2);
  for_each_word(signs.size() + 1, [&](const CyclicWord& w) {
    if (matches_signs(w, signs)) {
      ++coeffs[static_cast<std::size_t>(descents(w))];
    }
  });
  return IntPolynomial(std::move(coeffs));
}

}  // namespace cyclotope::cyclic
