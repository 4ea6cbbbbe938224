#pragma once

// Recover M(k) from data: the first k coefficients of each generating series
// are computed from counts with strictly smaller subset sizes (through
// complements), and the unknown matrix entries are solved for exactly.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "counting.hpp"
#include "divmatrix.hpp"
#include "error.hpp"
#include "numtheory.hpp"
#include "series.hpp"

namespace modpart {

inline constexpr u64 kDefaultDiscoveryCeiling = 24;

/// T(n, k, s) for n = k .. 2k-1, each obtained from the complementary
/// subset size n-k < k.
inline std::vector<Int> empirical_prefix(u64 k, i64 s) {
  require(k >= 1, "empirical_prefix: k must be positive");
  std::vector<Int> out;
  out.reserve(k);
  for (u64 n = k; n < 2 * k; ++n) {
    const i64 shift = (n % 2 == 0) ? static_cast<i64>(n / 2) : 0;
    out.push_back(subset_count(n, n - k, s + shift));
  }
  return out;
}

/// The overdetermined linear system for the entries M[t, d].
struct EmpiricalSystem {
  u64 k = 1;
  std::vector<u64> divisors;
  /// Unknown j is M[divisors[j / tau], divisors[j % tau]].
  std::vector<std::pair<u64, u64>> unknowns;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
};

/// One equation per residue s in [0, k) and exponent n in [k, 2k).
inline EmpiricalSystem assemble_system(u64 k) {
  require(k >= 1, "assemble_system: k must be positive");
  EmpiricalSystem sys;
  sys.k = k;
  sys.divisors = divisors(k);
  const std::size_t tau = sys.divisors.size();
  for (u64 t : sys.divisors)
    for (u64 d : sys.divisors) sys.unknowns.emplace_back(t, d);

  std::vector<TruncatedSeries> basis;
  for (u64 d : sys.divisors) basis.push_back(basis_series(k, d, 2 * k));

  for (u64 s = 0; s < k; ++s) {
    const u64 t = std::gcd(k, s); // gcd(k, 0) = k
    const std::size_t ti = divisor_index(sys.divisors, t);
    const auto prefix = empirical_prefix(k, static_cast<i64>(s));
    for (u64 n = k; n < 2 * k; ++n) {
      std::vector<Rational> row(tau * tau);
      for (std::size_t di = 0; di < tau; ++di) row[ti * tau + di] = basis[di].coefficient(n);
      sys.rows.push_back(std::move(row));
      sys.rhs.emplace_back(prefix[n - k]);
    }
  }
  return sys;
}

struct EliminationResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  bool consistent = true;
  std::vector<Rational> solution; // valid when rank == number of unknowns
};

/// Gaussian elimination over Q, choosing the pivot with the largest numerator.
inline EliminationResult solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  using boost::multiprecision::abs;
  using boost::multiprecision::numerator;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  EliminationResult res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      if (best == rows || abs(numerator(a[i][c])) > abs(numerator(a[best][c]))) best = i;
    }
    if (best == rows) continue;
    std::swap(a[r], a[best]);
    std::swap(b[r], b[best]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    res.pivot_columns.push_back(c);
    ++r;
  }
  res.rank = r;
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) res.consistent = false;
  if (r == cols) {
    res.solution.assign(cols, 0);
    for (std::size_t i = 0; i < r; ++i) res.solution[res.pivot_columns[i]] = b[i];
  }
  return res;
}

struct DiscoveryResult {
  DivisorMatrix matrix;
  bool unique;
  bool consistent;
  std::size_t equations;
  std::size_t unknowns;
  std::size_t rank;
  std::vector<std::size_t> pivot_columns;
};

/// Solve for M(k) from the empirical prefixes. Throws CeilingExceeded above
/// `ceiling`, and InternalError if the system is inconsistent, rank-deficient
/// or has a non-integral solution.
inline DiscoveryResult discover_matrix(u64 k, u64 ceiling = kDefaultDiscoveryCeiling) {
  require(k >= 1, "discover_matrix: k must be positive");
  if (k > ceiling)
    throw CeilingExceeded("discover: k=" + std::to_string(k) + " exceeds the ceiling " + std::to_string(ceiling));
  const EmpiricalSystem sys = assemble_system(k);
  const std::size_t unknowns = sys.unknowns.size();
  const std::size_t equations = sys.rows.size();
  EliminationResult er = solve_exact(sys.rows, sys.rhs);
  if (!er.consistent) throw InternalError("discover: the empirical system is inconsistent");
  if (er.rank != unknowns)
    throw InternalError("discover: rank " + std::to_string(er.rank) + " < " + std::to_string(unknowns) + " unknowns");
  DivisorMatrix m(k);
  const std::size_t tau = sys.divisors.size();
  for (std::size_t j = 0; j < unknowns; ++j) {
    const Rational& v = er.solution[j];
    if (boost::multiprecision::denominator(v) != 1) throw InternalError("discover: non-integral solution");
    m(j / tau, j % tau) = boost::multiprecision::numerator(v);
  }
  return {std::move(m), true, er.consistent, equations, unknowns, er.rank, std::move(er.pivot_columns)};
}

} // namespace modpart
