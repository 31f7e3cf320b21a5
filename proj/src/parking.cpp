#include "cyclotope/parking.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclotope::parking {

ParkingFunction::ParkingFunction(std::vector<int> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("ParkingFunction: needs at least one entry");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0 || entries_[i] > static_cast<int>(i)) {
      throw std::invalid_argument("ParkingFunction: entry p_i must satisfy 0 <= p_i <= i");
    }
    if (i > 0 && entries_[i] < entries_[i - 1]) {
      throw std::invalid_argument("ParkingFunction: entries must be nondecreasing");
    }
  }
}

ParkingFunction ParkingFunction::parse(std::string_view csv) {
  std::vector<int> entries;
  std::size_t pos = 0;
  while (pos <= csv.size() && !csv.empty()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    try {
      entries.push_back(std::stoi(std::string(csv.substr(pos, comma - pos))));
    } catch (const std::exception&) {
      throw std::invalid_argument("ParkingFunction::parse: bad entry in \"" +
                                  std::string(csv) + "\"");
    }
    if (comma == csv.size()) break;
    pos = comma + 1;
  }
  return ParkingFunction(std::move(entries));
}

std::string ParkingFunction::to_csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ",";
    out << entries_[i];
  }
  return out.str();
}

std::vector<ParkingFunction> all_parking(int n) {
  std::vector<ParkingFunction> out;
  for_each_parking(n, [&](const ParkingFunction& p) { out.push_back(p); });
  return out;
}

int ascents(const ParkingFunction& p) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < p.entries().size(); ++i) {
    if (p.entries()[i] < p.entries()[i + 1]) ++count;
  }
  return count;
}

ParkingFunction parking_of_order(const cyclic::CyclicWord& w) {
  const int m = w.top();
  if (m % 2 != 0) {
    throw std::invalid_argument("parking_of_order: word must cover {0,...,2n}");
  }
  const int n = m / 2;
  if (n > 0 && !cyclic::has_all_chains(w, cyclic::ChainSet::windows(n, m))) {
    throw std::invalid_argument("parking_of_order: width-n windows must all be chains");
  }
  std::vector<int> entries(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    // First small letter strictly right of n+i in the flat word; 0 if none.
    int p = 0;
    for (int pos = w.position(n + i) + 1; pos <= m; ++pos) {
      int letter = w.letters()[static_cast<std::size_t>(pos)];
      if (letter <= n) {
        p = letter;
        break;
      }
    }
    entries[static_cast<std::size_t>(i)] = p;
  }
  return ParkingFunction(std::move(entries));
}

cyclic::CyclicWord order_of_parking(const ParkingFunction& p) {
  const int n = p.top();
  std::vector<int> letters;
  letters.reserve(2 * static_cast<std::size_t>(n) + 1);
  letters.push_back(0);
  // Insert each big letter n+i just before its target small letter p_i;
  // within a group the i ascend, and the wrap group (p_i = 0) goes last,
  // which makes (n, n+1, ..., 2n) a chain because p is nondecreasing.
  for (int target = 1; target <= n; ++target) {
    for (int i = 1; i <= n; ++i) {
      if (p.entries()[static_cast<std::size_t>(i)] == target) {
        letters.push_back(n + i);
      }
    }
    letters.push_back(target);
  }
  for (int i = 1; i <= n; ++i) {
    if (p.entries()[static_cast<std::size_t>(i)] == 0) letters.push_back(n + i);
  }
  return cyclic::CyclicWord(std::move(letters));
}

cyclic::CyclicWord contract(const cyclic::CyclicWord& w, int k) {
  const int n = w.top();
  if (k < 1 || k > n || 2 * k <= n) {
    throw std::invalid_argument("contract: need k <= n < 2k");
  }
  if (!cyclic::has_all_chains(w, cyclic::ChainSet::windows(k, n))) {
    throw std::invalid_argument("contract: width-k windows must all be chains");
  }
  if (k == n) return cyclic::CyclicWord({0});

  const int m = n - k;  // the collapsed class lives on {0, ..., 2m}
  const int run_start = w.position(m);
  // The letters m, m+1, ..., k sit consecutively (they belong to every
  // window), so the run cannot wrap past position 0.
  for (int v = m; v <= k; ++v) {
    int pos = run_start + (v - m);
    if (pos > n || w.letters()[static_cast<std::size_t>(pos)] != v) {
      throw integrity_error("contract: middle letters are not consecutive");
    }
  }

  std::vector<int> letters;
  letters.reserve(2 * static_cast<std::size_t>(m) + 1);
  for (int pos = 0; pos <= n; ++pos) {
    if (pos > run_start && pos <= run_start + (k - m)) continue;  // collapsed
    int v = w.letters()[static_cast<std::size_t>(pos)];
    letters.push_back(v > k ? v - (n - 2 * m) : v);
  }
  return cyclic::CyclicWord(std::move(letters));
}

}  // namespace cyclotope::parking
