#pragma once

// Sequence emission in OEIS b-file and JSON form, b-file parsing, and
// comparison of computed terms against a b-file fixture.

#include <cctype>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "counting.hpp"
#include "error.hpp"
#include "numtheory.hpp"
#include "parallel.hpp"

namespace modpart {

struct Term {
  i64 index;
  Int value;

  friend bool operator==(const Term&, const Term&) = default;
};

/// The terms T(n, k, s) for n_start <= n <= n_end, printed from index `offset`.
struct SequenceSpec {
  u64 k;
  i64 s;
  u64 n_start;
  u64 n_end;
  i64 offset;

  static SequenceSpec starting_at_k(u64 k, i64 s, u64 n_end) {
    return {k, s, k, n_end, static_cast<i64>(k)};
  }

  void validate() const {
    require(k >= 1, "sequence: k must be positive");
    require(k <= n_start, "sequence: n range must start at or after k");
    require(n_start <= n_end, "sequence: empty n range");
  }

  std::size_t length() const { return static_cast<std::size_t>(n_end - n_start + 1); }
};

inline std::vector<Term> generate_terms(const SequenceSpec& spec, unsigned threads = 1) {
  spec.validate();
  auto values = parallel_map(spec.length(), threads,
                             [&](std::size_t i) { return subset_count(spec.n_start + i, spec.k, spec.s); });
  std::vector<Term> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    out.push_back({spec.offset + static_cast<i64>(i), std::move(values[i])});
  return out;
}

inline void write_bfile(std::ostream& os, const std::vector<Term>& terms) {
  for (const auto& t : terms) os << t.index << ' ' << t.value << '\n';
}

inline nlohmann::json sequence_json(const SequenceSpec& spec, const std::vector<Term>& terms) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& t : terms) values.push_back(t.value.str());
  return {{"k", spec.k}, {"s", spec.s}, {"offset", spec.offset}, {"terms", values}};
}

/// Parse "index value" lines; blank lines and lines starting with '#' are
/// skipped. Indices must increase strictly and values be nonnegative.
inline std::vector<Term> parse_bfile(std::istream& is) {
  std::vector<Term> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    i64 index = 0;
    std::string value, extra;
    if (!(ls >> index >> value) || (ls >> extra))
      throw std::invalid_argument("b-file line " + std::to_string(lineno) + ": expected 'index value'");
    const bool digits = !value.empty() && std::all_of(value.begin() + (value[0] == '-' ? 1 : 0), value.end(),
                                                      [](unsigned char c) { return std::isdigit(c); });
    if (!digits || value == "-") throw std::invalid_argument("b-file line " + std::to_string(lineno) + ": bad value");
    Term t{index, Int(value)};
    if (t.value < 0) throw std::invalid_argument("b-file line " + std::to_string(lineno) + ": negative value");
    if (!out.empty() && t.index <= out.back().index)
      throw std::invalid_argument("b-file line " + std::to_string(lineno) + ": indices must increase");
    out.push_back(std::move(t));
  }
  return out;
}

/// A published sequence identified with the counts for a pair (k, s).
struct OeisPair {
  u64 k;
  i64 s;
  const char* id;
  i64 offset; // fixture index of the term with n = k
};

inline const std::vector<OeisPair>& oeis_pairs() {
  static const std::vector<OeisPair> table = {
      {3, 0, "A007997", 3}, {3, 1, "A001840", 3}, {4, 0, "A032801", 4}, {4, 1, "A006918", 4},
      {4, 2, "A008610", 4}, {5, 0, "A008646", 5}, {5, 1, "A011795", 5}, {6, 0, "A381289", 6},
      {6, 1, "A381290", 6}, {6, 2, "A011796", 6}, {6, 3, "A032191", 6}, {7, 0, "A032192", 7},
      {7, 1, "A011797", 7}, {8, 0, "A381291", 8}, {8, 1, "A031164", 8}, {8, 2, "A381350", 8},
      {8, 4, "A032193", 8}, {9, 0, "A032194", 9}, {9, 1, "A263318", 9}, {9, 3, "A381351", 9},
  };
  return table;
}

inline std::optional<OeisPair> find_oeis_pair(const std::string& id) {
  for (const auto& p : oeis_pairs())
    if (id == p.id) return p;
  return std::nullopt;
}

struct Mismatch {
  i64 index;
  u64 n;
  Int expected; // fixture value
  Int got;      // computed value
};

struct FixtureCheck {
  bool agree = false;
  int shift = 0; // resolved n-shift relative to the declared offset
  std::size_t compared = 0;
  std::optional<Mismatch> first_mismatch; // at shift 0 when nothing agrees
};

/// Compare fixture terms with T(n, k, s), where fixture index i maps to
/// n = k + (i - offset) + shift. Shift 0 is tried first, then +-1 .. +-window.
/// Terms that map below n = 1 are outside the overlap; T is 0 for 1 <= n < k.
inline FixtureCheck check_fixture(const std::vector<Term>& fixture, u64 k, i64 s, i64 offset, int window = 3) {
  require(k >= 1, "check_fixture: k must be positive");
  auto run = [&](int shift) {
    FixtureCheck res;
    res.shift = shift;
    for (const auto& t : fixture) {
      const i64 n = static_cast<i64>(k) + (t.index - offset) + shift;
      if (n < 1) continue;
      const u64 nn = static_cast<u64>(n);
      const Int got = nn < k ? Int(0) : subset_count(nn, k, s);
      ++res.compared;
      if (got != t.value) {
        res.first_mismatch = Mismatch{t.index, nn, t.value, got};
        return res;
      }
    }
    res.agree = res.compared > 0;
    return res;
  };
  FixtureCheck base = run(0);
  if (base.agree) return base;
  for (int d = 1; d <= window; ++d)
    for (int shift : {d, -d}) {
      FixtureCheck r = run(shift);
      if (r.agree) return r;
    }
  return base;
}

} // namespace modpart
