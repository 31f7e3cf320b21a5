// cyclotope: exact volumes, Ehrhart h*-polynomials and circular-extension
// counts for consecutive-sum polytopes, cross-checked across independent
// pipelines.
//
// Exit codes: 0 success, 1 cross-check mismatch or integrity failure,
// 2 usage/parse errors.

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclotope/boustrophedon.hpp"
#include "cyclotope/cyclic.hpp"
#include "cyclotope/parking.hpp"
#include "cyclotope/polytope.hpp"
#include "cyclotope/reference_table.hpp"
#include "cyclotope/sequences.hpp"
#include "cyclotope/transfer.hpp"

namespace {

using nlohmann::ordered_json;
using namespace cyclotope;

struct OutputOptions {
  std::string format = "plain";  // plain | json | csv
};

struct FamilyFlags {
  std::vector<int> hat;  // K N
  std::string chainset;
  bool chainset_given = false;
  int n = -1;
  std::string signword;
  bool signword_given = false;
};

// A resolved family selection: window (hat), interval (I) or sign (tilde).
struct Family {
  enum class Kind { hat, interval, sign };
  Kind kind;
  int k = 0;                    // hat only
  cyclic::ChainSet chains;      // hat, interval
  cyclic::SignWord signs;       // sign

  static Family from_flags(const FamilyFlags& f) {
    int given = (f.hat.empty() ? 0 : 1) + (f.chainset_given ? 1 : 0) +
                (f.signword_given ? 1 : 0);
    if (given != 1) {
      throw std::invalid_argument(
          "choose exactly one family: --hat K N, --chainset \"i-j,...\" --n N, "
          "or --signword \"++-\"");
    }
    if (!f.hat.empty()) {
      int k = f.hat[0], n = f.hat[1];
      return Family{Kind::hat, k, cyclic::ChainSet::windows(k, n), {}};
    }
    if (f.chainset_given) {
      if (f.n < 1) {
        throw std::invalid_argument("--chainset requires --n (order size >= 1)");
      }
      return Family{Kind::interval, 0, cyclic::ChainSet::parse(f.chainset, f.n), {}};
    }
    return Family{Kind::sign, 0, cyclic::ChainSet(0, {}), cyclic::SignWord(f.signword)};
  }

  // Dimension of the associated polytope (and the "n" field of reports).
  int dimension() const {
    return kind == Kind::sign ? signs.size() + 1 : chains.top();
  }

  std::string label() const {
    switch (kind) {
      case Kind::hat: return "hat";
      case Kind::interval: return "I";
      case Kind::sign: return "tilde";
    }
    return {};
  }

  ordered_json params() const {
    ordered_json p;
    switch (kind) {
      case Kind::hat:
        p["k"] = k;
        break;
      case Kind::interval:
        p["chainset"] = chains.to_text();
        break;
      case Kind::sign:
        p["signword"] = signs.text();
        break;
    }
    return p;
  }

  polytope::ConstraintSystem system() const {
    switch (kind) {
      case Kind::hat:
      case Kind::interval: return polytope::interval_system(chains);
      case Kind::sign: return polytope::sign_system(signs);
    }
    throw std::logic_error("unreachable");
  }

  std::string describe() const {
    std::ostringstream out;
    switch (kind) {
      case Kind::hat:
        out << "hat k=" << k << " n=" << chains.top();
        break;
      case Kind::interval:
        out << "I chainset=\"" << chains.to_text() << "\" n=" << chains.top();
        break;
      case Kind::sign:
        out << "tilde signword=\"" << signs.text() << "\"";
        break;
    }
    return out.str();
  }
};

std::vector<std::string> coeff_strings(const IntPolynomial& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const BigInt& c : p.coeffs()) out.push_back(c.str());
  return out;
}

std::vector<std::string> coeff_strings(const RatPolynomial& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const Rational& c : p.coeffs()) out.push_back(c.str());
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << sep;
    out << parts[i];
  }
  return out.str();
}

ordered_json profile_report(const Family& fam, const polytope::EhrhartProfile& p) {
  ordered_json j;
  j["family"] = fam.label();
  j["n"] = fam.dimension();
  j["params"] = fam.params();
  j["ehrhart"] = coeff_strings(p.ehrhart);
  j["hstar"] = coeff_strings(p.hstar);
  j["normalized_volume"] = p.normalized_volume.str();
  j["palindromic"] = p.palindromic;
  return j;
}

int cmd_profile(const Family& fam, const polytope::CountOptions& copt,
                const OutputOptions& out, bool ehrhart_focus,
                int dilations = -1) {
  auto profile = polytope::ehrhart_profile(fam.system(), copt);
  std::vector<BigInt> counts;
  if (dilations >= 0) {
    counts = polytope::ehrhart_values(fam.system(), dilations, copt);
  }
  if (out.format == "json") {
    ordered_json j = profile_report(fam, profile);
    if (dilations >= 0) {
      ordered_json values = ordered_json::array();
      for (const BigInt& c : counts) values.push_back(c.str());
      j["counts"] = std::move(values);
    }
    std::cout << j.dump(2) << "\n";
  } else if (out.format == "csv") {
    if (ehrhart_focus) {
      std::cout << "degree,coefficient\n";
      for (int d = 0; d <= profile.ehrhart.degree(); ++d) {
        std::cout << d << "," << profile.ehrhart.coeff(d).str() << "\n";
      }
    } else {
      std::cout << "degree,coefficient\n";
      for (int d = 0; d <= profile.hstar.degree(); ++d) {
        std::cout << d << "," << profile.hstar.coeff(d).str() << "\n";
      }
    }
  } else {
    std::cout << "family: " << fam.describe() << "\n";
    if (ehrhart_focus) {
      std::cout << "ehrhart coefficients (ascending degree): "
                << join(coeff_strings(profile.ehrhart), ", ") << "\n";
      std::cout << "hstar: " << to_string(profile.hstar) << "\n";
    } else {
      std::cout << "hstar: " << to_string(profile.hstar) << "\n";
      std::cout << "ehrhart coefficients (ascending degree): "
                << join(coeff_strings(profile.ehrhart), ", ") << "\n";
    }
    std::cout << "normalized_volume: " << profile.normalized_volume.str() << "\n";
    std::cout << "palindromic: " << (profile.palindromic ? "true" : "false") << "\n";
    if (dilations >= 0) {
      std::cout << "counts (dilations 0.." << dilations << "): ";
      for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << counts[i].str();
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_count(const Family& fam, const polytope::CountOptions& copt,
              const OutputOptions& out) {
  // Pipelines are listed in a fixed order so output is reproducible.
  std::vector<std::pair<std::string, BigInt>> results;
  results.emplace_back("polytope", polytope::normalized_volume(fam.system(), copt));
  switch (fam.kind) {
    case Family::Kind::hat:
    case Family::Kind::interval:
      results.emplace_back("cyclic", cyclic::count_extensions(fam.chains));
      break;
    case Family::Kind::sign:
      results.emplace_back("cyclic", cyclic::count_extensions(fam.signs));
      break;
  }
  if (fam.kind == Family::Kind::hat) {
    results.emplace_back("boustrophedon",
                         fam.k >= 2 ? boustrophedon::count_extensions(fam.k, fam.chains.top())
                                    : factorial(fam.chains.top()));
  }

  bool agree = true;
  for (const auto& [name, value] : results) {
    if (value != results.front().second) agree = false;
  }

  if (out.format == "json") {
    ordered_json j;
    j["family"] = fam.label();
    j["n"] = fam.dimension();
    j["params"] = fam.params();
    j["count"] = results.front().second.str();
    ordered_json pipelines;
    for (const auto& [name, value] : results) pipelines[name] = value.str();
    j["pipelines"] = pipelines;
    j["agreement"] = agree;
    std::cout << j.dump(2) << "\n";
  } else if (out.format == "csv") {
    std::cout << "pipeline,count\n";
    for (const auto& [name, value] : results) {
      std::cout << name << "," << value.str() << "\n";
    }
  } else {
    std::cout << "family: " << fam.describe() << "\n";
    for (const auto& [name, value] : results) {
      std::cout << name << ": " << value.str() << "\n";
    }
    std::cout << "agreement: " << (agree ? "true" : "false") << "\n";
  }

  if (!agree) {
    std::cerr << "cross-check mismatch:";
    for (const auto& [name, value] : results) {
      std::cerr << " " << name << "=" << value.str();
    }
    std::cerr << "\n";
    return 1;
  }
  return 0;
}

int cmd_enumerate(const FamilyFlags& flags, bool parking_mode,
                  const OutputOptions& out) {
  if (parking_mode) {
    if (flags.n < 0) {
      throw std::invalid_argument("enumerate --parking requires --n");
    }
    std::vector<std::string> rows;
    parking::for_each_parking(flags.n, [&](const parking::ParkingFunction& p) {
      rows.push_back(p.to_csv());
    });
    if (out.format == "json") {
      ordered_json j;
      j["n"] = flags.n;
      j["count"] = std::to_string(rows.size());
      j["parking"] = rows;
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& r : rows) std::cout << r << "\n";
    }
    return 0;
  }

  // Word mode: an optional family restricts the enumeration.
  std::optional<Family> fam;
  int top = flags.n;
  int given = (flags.hat.empty() ? 0 : 1) + (flags.chainset_given ? 1 : 0) +
              (flags.signword_given ? 1 : 0);
  if (given > 1) {
    throw std::invalid_argument("enumerate: give at most one family filter");
  }
  if (given == 1) {
    FamilyFlags f = flags;
    if (f.chainset_given && f.n < 1) {
      throw std::invalid_argument("--chainset requires --n (order size >= 1)");
    }
    fam = Family::from_flags(f);
    top = fam->kind == Family::Kind::sign ? fam->signs.size() + 1
                                          : fam->chains.top();
  } else if (top < 1) {
    throw std::invalid_argument("enumerate: need --n or a family filter");
  }

  std::vector<std::string> rows;
  cyclic::for_each_word(top, [&](const cyclic::CyclicWord& w) {
    if (fam) {
      if (fam->kind == Family::Kind::sign) {
        if (!cyclic::matches_signs(w, fam->signs)) return;
      } else if (!cyclic::has_all_chains(w, fam->chains)) {
        return;
      }
    }
    rows.push_back(w.to_text());
  });
  if (out.format == "json") {
    ordered_json j;
    j["n"] = top;
    if (fam) {
      j["family"] = fam->label();
      j["params"] = fam->params();
    }
    j["count"] = std::to_string(rows.size());
    j["words"] = rows;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : rows) std::cout << r << "\n";
  }
  return 0;
}

int cmd_boustrophedon(const FamilyFlags& flags, const OutputOptions& out) {
  if (flags.hat.size() != 2) {
    throw std::invalid_argument("boustrophedon requires --hat K N");
  }
  int k = flags.hat[0], n = flags.hat[1];
  auto arr = boustrophedon::refined_array(k, n);
  if (out.format == "json") {
    ordered_json j;
    j["family"] = "hat";
    j["n"] = n;
    j["params"] = ordered_json{{"k", k}};
    ordered_json entries = ordered_json::array();
    arr.for_each([&](const boustrophedon::SimplexIndex& idx, const BigInt& v) {
      ordered_json e;
      e["index"] = idx;
      e["value"] = v.str();
      entries.push_back(std::move(e));
    });
    j["entries"] = std::move(entries);
    j["count"] = arr.total().str();
    std::cout << j.dump(2) << "\n";
  } else {
    arr.for_each([&](const boustrophedon::SimplexIndex& idx, const BigInt& v) {
      for (int part : idx) std::cout << part << ",";
      std::cout << v.str() << "\n";
    });
    if (out.format == "plain") {
      std::cout << "total: " << arr.total().str() << "\n";
    }
  }
  return 0;
}

int cmd_table(int max_k, int max_shift, int max_n,
              const polytope::CountOptions& copt, const OutputOptions& out) {
  if (max_k < 1 || max_shift < 0 || max_n < 1) {
    throw std::invalid_argument("table: ranges must be positive");
  }
  struct Cell {
    int k;
    int n;
    IntPolynomial hstar;
  };
  std::vector<Cell> cells;
  for (int k = 1; k <= max_k; ++k) {
    for (int c = 0; c <= max_shift; ++c) {
      int n = k + c;
      if (n > max_n) break;
      cells.push_back({k, n, polytope::hstar(polytope::window_system(k, n), copt)});
    }
  }
  if (out.format == "json") {
    ordered_json j;
    ordered_json rows = ordered_json::array();
    for (const auto& cell : cells) {
      ordered_json r;
      r["k"] = cell.k;
      r["n"] = cell.n;
      r["hstar"] = coeff_strings(cell.hstar);
      rows.push_back(std::move(r));
    }
    j["cells"] = std::move(rows);
    std::cout << j.dump(2) << "\n";
  } else if (out.format == "csv") {
    std::cout << "k,n,coefficients\n";
    for (const auto& cell : cells) {
      std::cout << cell.k << "," << cell.n << ","
                << join(coeff_strings(cell.hstar), ",") << "\n";
    }
  } else {
    for (const auto& cell : cells) {
      std::cout << "k=" << cell.k << " n=" << cell.n << ": "
                << to_string(cell.hstar) << "\n";
    }
  }
  return 0;
}

// ---- verify: the tool's own cross-check suite ----

struct VerifyContext {
  polytope::CountOptions copt;
  bool full = false;
  int failures = 0;

  void check(const std::string& name, const std::function<std::optional<std::string>()>& run) {
    std::optional<std::string> failure;
    try {
      failure = run();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      ++failures;
      std::cout << "[FAIL] " << name << ": " << *failure << "\n";
    } else {
      std::cout << "[PASS] " << name << "\n";
    }
  }
};

int cmd_verify(const std::string& scale, const polytope::CountOptions& copt) {
  VerifyContext ctx;
  ctx.copt = copt;
  ctx.full = scale == "full";
  const bool full = ctx.full;

  ctx.check("pipelines agree on window counts", [&]() -> std::optional<std::string> {
    // Direct enumeration is factorial, so it stops at n = 8; the geometric
    // and recurrence pipelines carry the cross-check to the full table.
    int n_max = full ? 10 : 5;
    int enum_max = full ? 8 : 5;
    for (int n = 1; n <= n_max; ++n) {
      for (int k = 1; k <= n; ++k) {
        BigInt vol = polytope::normalized_volume(polytope::window_system(k, n), ctx.copt);
        BigInt bous = k >= 2 ? boustrophedon::count_extensions(k, n) : factorial(n);
        if (vol != bous) {
          return "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                 ": polytope=" + vol.str() + " boustrophedon=" + bous.str();
        }
        if (n <= enum_max) {
          BigInt cyc = cyclic::count_extensions(cyclic::ChainSet::windows(k, n));
          if (vol != cyc) {
            return "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                   ": polytope=" + vol.str() + " cyclic=" + cyc.str();
          }
        }
      }
    }
    return std::nullopt;
  });

  ctx.check("interval-system h* equals descent polynomial (antichains)",
            [&]() -> std::optional<std::string> {
    int n_max = full ? 5 : 4;
    for (int n = 1; n <= n_max; ++n) {
      for (const auto& cs : cyclic::antichain_chain_sets(n)) {
        auto h = polytope::hstar(polytope::interval_system(cs), ctx.copt);
        auto d = cyclic::descent_polynomial(cs);
        if (!(h == d)) {
          return "n=" + std::to_string(n) + " chainset \"" + cs.to_text() + "\"";
        }
      }
    }
    return std::nullopt;
  });

  ctx.check("sign-system volume equals sign-class count, classes partition",
            [&]() -> std::optional<std::string> {
    int n_max = full ? 4 : 3;
    for (int n = 0; n <= n_max; ++n) {
      BigInt sum = 0;
      for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::string s;
        for (int i = 0; i < n; ++i) s += (mask >> i & 1) ? '+' : '-';
        cyclic::SignWord sw(s);
        BigInt count = cyclic::count_extensions(sw);
        BigInt vol = polytope::normalized_volume(polytope::sign_system(sw), ctx.copt);
        if (count != vol) {
          return "signword \"" + s + "\": cyclic=" + count.str() +
                 " polytope=" + vol.str();
        }
        sum += count;
      }
      if (sum != factorial(n + 1)) {
        return "length " + std::to_string(n) + ": classes sum to " + sum.str() +
               ", not (n+1)!";
      }
    }
    return std::nullopt;
  });

  ctx.check("window h* palindromic, stabilization along diagonals",
            [&]() -> std::optional<std::string> {
    int n_max = full ? 10 : 7;
    std::map<std::pair<int, int>, IntPolynomial> grid;
    for (int n = 1; n <= n_max; ++n) {
      for (int k = 1; k <= n; ++k) {
        grid[{k, n}] = polytope::hstar(polytope::window_system(k, n), ctx.copt);
        if (!is_palindromic(grid[{k, n}])) {
          return "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                 " not palindromic";
        }
      }
    }
    for (int n = 1; n + 1 <= n_max; ++n) {
      for (int k = 1; k <= n; ++k) {
        if (2 * k > n - 1 && !(grid[{k, n}] == grid[{k + 1, n + 1}])) {
          return "stabilization fails between (" + std::to_string(k) + "," +
                 std::to_string(n) + ") and (" + std::to_string(k + 1) + "," +
                 std::to_string(n + 1) + ")";
        }
      }
    }
    return std::nullopt;
  });

  ctx.check("window h* equals Narayana polynomial for k <= n <= 2k",
            [&]() -> std::optional<std::string> {
    int n_max = full ? 10 : 7;
    for (int n = 1; n <= n_max; ++n) {
      for (int k = (n + 1) / 2; k <= n; ++k) {
        auto h = polytope::hstar(polytope::window_system(k, n), ctx.copt);
        if (!(h == sequences::narayana_polynomial(n - k + 1))) {
          return "k=" + std::to_string(k) + " n=" + std::to_string(n);
        }
      }
    }
    return std::nullopt;
  });

  ctx.check("window volumes match classic sequences (k=1 Eulerian, k=2 Euler)",
            [&]() -> std::optional<std::string> {
    int n_max = full ? 10 : 7;
    for (int n = 1; n <= n_max; ++n) {
      auto row1 = polytope::hstar(polytope::window_system(1, n), ctx.copt);
      if (!(row1 == sequences::eulerian_polynomial(n))) {
        return "k=1 n=" + std::to_string(n) + " differs from Eulerian polynomial";
      }
      if (n >= 2) {
        BigInt vol = polytope::normalized_volume(polytope::window_system(2, n), ctx.copt);
        if (vol != sequences::euler_updown(n)) {
          return "k=2 n=" + std::to_string(n) + " differs from Euler number";
        }
      }
    }
    return std::nullopt;
  });

  ctx.check("transfer map bijective and correspondence on generic grid",
            [&]() -> std::optional<std::string> {
    int n_max = full ? 4 : 3;
    int denom = full ? 7 : 5;
    for (int n = 1; n <= n_max; ++n) {
      auto chain_sets = cyclic::antichain_chain_sets(n);
      std::vector<int> digits(static_cast<std::size_t>(n), 0);
      for (;;) {
        std::vector<Rational> coords;
        coords.reserve(static_cast<std::size_t>(n));
        for (int d : digits) coords.emplace_back(d, denom);
        transfer::RationalPoint x(std::move(coords));
        if (!(transfer::inverse(transfer::forward(x)) == x)) {
          return "roundtrip failed at a grid point, n=" + std::to_string(n);
        }
        if (transfer::is_generic(x)) {
          for (const auto& cs : chain_sets) {
            if (!transfer::verify_correspondence(cs, x)) {
              return "correspondence failed, n=" + std::to_string(n) +
                     " chainset \"" + cs.to_text() + "\"";
            }
          }
        }
        int pos = 0;
        while (pos < n && ++digits[static_cast<std::size_t>(pos)] == denom) {
          digits[static_cast<std::size_t>(pos)] = 0;
          ++pos;
        }
        if (pos == n) break;
      }
    }
    return std::nullopt;
  });

  ctx.check("parking bijection roundtrips, Catalan/Narayana counts",
            [&]() -> std::optional<std::string> {
    int n_max = full ? 4 : 3;
    for (int n = 1; n <= n_max; ++n) {
      BigInt seen = 0;
      std::optional<std::string> failure;
      cyclic::for_each_word(2 * n, [&](const cyclic::CyclicWord& w) {
        if (failure) return;
        if (!cyclic::has_all_chains(w, cyclic::ChainSet::windows(n, 2 * n))) return;
        ++seen;
        auto p = parking::parking_of_order(w);
        if (cyclic::descents(w) != parking::ascents(p)) {
          failure = "descent/ascent mismatch at word " + w.to_text();
          return;
        }
        if (!(parking::order_of_parking(p) == w)) {
          failure = "roundtrip failed at word " + w.to_text();
        }
      });
      if (failure) return failure;
      if (seen != sequences::catalan(n + 1)) {
        return "class size " + seen.str() + " is not Catalan(n+1), n=" +
               std::to_string(n);
      }
    }
    int count_max = full ? 8 : 6;
    for (int n = 1; n <= count_max; ++n) {
      std::map<int, BigInt> by_ascents;
      BigInt total = 0;
      parking::for_each_parking(n, [&](const parking::ParkingFunction& p) {
        ++by_ascents[parking::ascents(p)];
        ++total;
      });
      if (total != sequences::catalan(n + 1)) {
        return "parking count differs from Catalan(n+1), n=" + std::to_string(n);
      }
      for (const auto& [asc, cnt] : by_ascents) {
        if (cnt != sequences::narayana(n + 1, asc + 1)) {
          return "ascent-refined count differs from Narayana, n=" +
                 std::to_string(n) + " ascents=" + std::to_string(asc);
        }
      }
    }
    return std::nullopt;
  });

  ctx.check("refined boustrophedon array matches brute-force arc classes",
            [&]() -> std::optional<std::string> {
    int n_max = full ? 7 : 6;
    for (int n = 2; n <= n_max; ++n) {
      for (int k = 2; k <= n; ++k) {
        auto arr = boustrophedon::refined_array(k, n);
        boustrophedon::SimplexArray brute(k - 1, n + 1);
        cyclic::for_each_word(n, [&](const cyclic::CyclicWord& w) {
          if (!cyclic::has_all_chains(w, cyclic::ChainSet::windows(k, n))) return;
          brute.at(boustrophedon::arc_profile(w, k)) += 1;
        });
        if (!(arr == brute)) {
          return "k=" + std::to_string(k) + " n=" + std::to_string(n);
        }
      }
    }
    return std::nullopt;
  });

  std::cout << (ctx.failures == 0 ? "verify: all checks passed\n"
                                  : "verify: " + std::to_string(ctx.failures) +
                                        " check(s) failed\n");
  return ctx.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact h*-polynomials, volumes and circular-extension counts for "
      "consecutive-sum polytopes"};
  app.require_subcommand(1);

  OutputOptions out;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  polytope::CountOptions copt;
  app.add_option("--threads", copt.threads,
                 "worker threads for per-dilation counting")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--dp-budget", copt.state_budget,
                 "max live states in the counting DP before brute-force fallback")
      ->capture_default_str();

  FamilyFlags fam_count, fam_hstar, fam_ehrhart, fam_enum, fam_bous;
  auto add_family = [](CLI::App* sub, FamilyFlags& f) {
    sub->add_option("--hat", f.hat, "window family: K N")->expected(2);
    sub->add_option("--chainset", f.chainset,
                    "interval family: comma-separated \"i-j\" pairs (may be empty)")
        ->each([&f](const std::string&) { f.chainset_given = true; });
    sub->add_option("--n", f.n, "order size (with --chainset or --parking)");
    sub->add_option("--signword", f.signword, "sign family: word over {+,-}")
        ->each([&f](const std::string&) { f.signword_given = true; });
    sub->fallthrough();
  };

  auto* count = app.add_subcommand("count", "count circular extensions via all applicable pipelines");
  add_family(count, fam_count);
  auto* hstar_cmd = app.add_subcommand("hstar", "h*-polynomial, volume and palindromicity");
  add_family(hstar_cmd, fam_hstar);
  auto* ehrhart_cmd = app.add_subcommand("ehrhart", "exact Ehrhart counting polynomial");
  add_family(ehrhart_cmd, fam_ehrhart);
  int dilations = -1;
  ehrhart_cmd->add_option("--dilations", dilations,
                          "also report the raw counts at dilations 0..T")
      ->check(CLI::NonNegativeNumber);

  auto* enum_cmd = app.add_subcommand("enumerate", "list words of a class, or parking functions");
  bool enum_parking = false;
  enum_cmd->add_flag("--parking", enum_parking, "list nondecreasing parking functions p_0..p_n");
  add_family(enum_cmd, fam_enum);

  auto* bous_cmd = app.add_subcommand("boustrophedon", "arc-length-refined class sizes as CSV");
  add_family(bous_cmd, fam_bous);

  auto* table_cmd = app.add_subcommand("table", "h*-polynomials over a window-family range");
  int max_k = 7, max_shift = 5, max_n = 10;
  table_cmd->add_option("--max-k", max_k, "largest window width")->capture_default_str();
  table_cmd->add_option("--max-shift", max_shift, "largest n-k column")->capture_default_str();
  table_cmd->add_option("--max-n", max_n, "largest dimension")->capture_default_str();
  table_cmd->fallthrough();

  auto* verify_cmd = app.add_subcommand("verify", "run the internal cross-check suite");
  std::string scale = "small";
  verify_cmd->add_option("--scale", scale, "exhaustiveness of the checks")
      ->check(CLI::IsMember({"small", "full"}))
      ->capture_default_str();
  verify_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) return cmd_count(Family::from_flags(fam_count), copt, out);
    if (hstar_cmd->parsed()) {
      return cmd_profile(Family::from_flags(fam_hstar), copt, out, false);
    }
    if (ehrhart_cmd->parsed()) {
      return cmd_profile(Family::from_flags(fam_ehrhart), copt, out, true,
                         dilations);
    }
    if (enum_cmd->parsed()) return cmd_enumerate(fam_enum, enum_parking, out);
    if (bous_cmd->parsed()) return cmd_boustrophedon(fam_bous, out);
    if (table_cmd->parsed()) return cmd_table(max_k, max_shift, max_n, copt, out);
    if (verify_cmd->parsed()) return cmd_verify(scale, copt);
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const integrity_error& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
