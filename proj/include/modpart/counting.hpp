#pragma once

// Counts of k-subsets of Z/nZ with a prescribed element sum, by the
// divisor-matrix formula and by direct enumeration, together with the
// identities relating them to necklaces, Lyndon words and conics.

#include <cstdint>
#include <functional>
#include <vector>

#include "divmatrix.hpp"
#include "error.hpp"
#include "numtheory.hpp"

namespace modpart {

/// Default cap on the number of subsets an enumeration oracle may visit.
inline constexpr u64 kDefaultBudget = 10'000'000;

/// A request for the number of k-subsets of Z/nZ summing to s mod n.
struct CountQuery {
  u64 n;
  u64 k;
  i64 s;

  friend bool operator==(const CountQuery&, const CountQuery&) = default;
};

inline void validate(const CountQuery& q) {
  require(q.n >= 1, "count query: n must be positive");
  require(q.k <= q.n, "count query: k must not exceed n");
}

/// Reduce s to the divisor of k selecting the matrix row: s is taken modulo
/// gcd(n, k) with 0 mapped to gcd(n, k), then gcd with k.
inline u64 canonical_residue(u64 n, u64 k, i64 s) {
  require(k >= 1 && k <= n, "canonical_residue: need 1 <= k <= n");
  const u64 m = std::gcd(n, k);
  u64 r = mod_floor(s, m);
  if (r == 0) r = m;
  return std::gcd(k, r);
}

/// Exact count via the weighted divisor sum with binomial coefficients.
/// For k = 0 the empty set is counted when s = 0 mod n.
inline Int subset_count(const CountQuery& q) {
  validate(q);
  const auto [n, k, s] = q;
  if (k == 0) return mod_floor(s, n) == 0 ? 1 : 0;
  const u64 t = canonical_residue(n, k, s);
  Int total = 0;
  for (u64 d : divisors(std::gcd(n, k))) {
    const i64 w = entry(k, t, d);
    if (w == 0) continue;
    Int term = binomial(n / d, static_cast<i64>(k / d)) * w;
    if (parity_sign(k - k / d) < 0) term = -term;
    total += term;
  }
  Int quotient, rem;
  boost::multiprecision::divide_qr(total, Int(n), quotient, rem);
  if (rem != 0) throw InternalError("subset_count: weighted sum not divisible by n");
  return quotient;
}

inline Int subset_count(u64 n, u64 k, i64 s) { return subset_count(CountQuery{n, k, s}); }

/// Count for s = 0 from the totient-weighted sum alone.
inline Int zero_sum_count(u64 n, u64 k) {
  require(k >= 1 && k <= n, "zero_sum_count: need 1 <= k <= n");
  Int total = 0;
  for (u64 d : divisors(std::gcd(n, k))) {
    Int term = binomial(n / d, static_cast<i64>(k / d)) * totient(d);
    if (parity_sign(k - k / d) < 0) term = -term;
    total += term;
  }
  Int quotient, rem;
  boost::multiprecision::divide_qr(total, Int(n), quotient, rem);
  if (rem != 0) throw InternalError("zero_sum_count: weighted sum not divisible by n");
  return quotient;
}

/// Visit every k-subset of {0, ..., n-1} in lexicographic order, handing the
/// callback the current combination. Throws BudgetExceeded up front if
/// C(n, k) exceeds the budget.
inline void for_each_combination(u64 n, u64 k, u64 budget,
                                 const std::function<void(const std::vector<u64>&)>& visit) {
  require(k <= n, "for_each_combination: k must not exceed n");
  if (binomial(n, static_cast<i64>(k)) > budget)
    throw BudgetExceeded("enumeration of C(" + std::to_string(n) + "," + std::to_string(k) +
                         ") subsets exceeds budget " + std::to_string(budget));
  std::vector<u64> c(k);
  for (u64 i = 0; i < k; ++i) c[i] = i;
  while (true) {
    visit(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

/// Number of k-subsets of {0..n-1} for each residue of their sum mod n.
inline std::vector<u64> brute_force_histogram(u64 n, u64 k, u64 budget = kDefaultBudget) {
  require(n >= 1 && k <= n, "brute_force_histogram: need n >= 1 and k <= n");
  std::vector<u64> hist(n, 0);
  for_each_combination(n, k, budget, [&](const std::vector<u64>& c) {
    u64 sum = 0;
    for (u64 x : c) sum += x;
    ++hist[sum % n];
  });
  return hist;
}

/// Ground-truth count by enumerating every k-subset.
inline u64 brute_force_count(const CountQuery& q, u64 budget = kDefaultBudget) {
  validate(q);
  return brute_force_histogram(q.n, q.k, budget)[mod_floor(q.s, q.n)];
}

/// The complement query: (n, n-k, s) for odd n, (n, n-k, s + n/2) for even n.
inline CountQuery complement_query(const CountQuery& q) {
  validate(q);
  require(q.k >= 1 && q.k < q.n, "complement_query: need 0 < k < n");
  const i64 shift = (q.n % 2 == 0) ? static_cast<i64>(q.n / 2) : 0;
  return {q.n, q.n - q.k, q.s + shift};
}

/// Sum over d | gcd(n, s) of (-1)^(k-k/d) T(n/d, k/d, 1), for s | k.
inline Int hadjicostas_sum(u64 n, u64 k, u64 s) {
  require(k >= 1 && k <= n, "hadjicostas_sum: need 1 <= k <= n");
  require(s >= 1 && k % s == 0, "hadjicostas_sum: s must divide k");
  Int total = 0;
  for (u64 d : divisors(std::gcd(n, s))) {
    Int term = subset_count(n / d, k / d, 1);
    total += parity_sign(k - k / d) < 0 ? Int(-term) : term;
  }
  return total;
}

/// Binary necklaces with k black beads out of n (Burnside count).
inline Int necklace_count(u64 n, u64 k) {
  require(n >= 1 && k <= n, "necklace_count: need n >= 1 and k <= n");
  Int total = 0;
  for (u64 d : divisors(std::gcd(n, k))) total += binomial(n / d, static_cast<i64>(k / d)) * totient(d);
  Int q, r;
  boost::multiprecision::divide_qr(total, Int(n), q, r);
  if (r != 0) throw InternalError("necklace_count: sum not divisible by n");
  return q;
}

/// Aperiodic binary necklaces (Lyndon words) with k black beads out of n.
inline Int lyndon_count(u64 n, u64 k) {
  require(k >= 1 && k <= n, "lyndon_count: need 1 <= k <= n");
  Int total = 0;
  for (u64 d : divisors(std::gcd(n, k))) total += binomial(n / d, static_cast<i64>(k / d)) * moebius(d);
  Int q, r;
  boost::multiprecision::divide_qr(total, Int(n), q, r);
  if (r != 0) throw InternalError("lyndon_count: sum not divisible by n");
  return q;
}

/// N(n,k) equals the zero-sum count (k odd) or the k/2-sum count (k even).
inline bool necklace_identity_holds(u64 n, u64 k) {
  require(0 < k && k < n, "necklace_identity_holds: need 0 < k < n");
  const i64 s = (k % 2 == 1) ? 0 : static_cast<i64>(k / 2);
  return necklace_count(n, k) == subset_count(n, k, s);
}

/// L(n,k) equals the 2-sum count when k = 2 mod 4, else the 1-sum count.
inline bool lyndon_identity_holds(u64 n, u64 k) {
  require(0 < k && k < n, "lyndon_identity_holds: need 0 < k < n");
  const i64 s = (k % 4 == 2) ? 2 : 1;
  return lyndon_count(n, k) == subset_count(n, k, s);
}

/// Unordered pairs of disjoint zero-sum 3-subsets of Z/nZ: the six-point
/// configurations that split into two lines.
inline u64 line_pair_count(u64 n, u64 budget = kDefaultBudget) {
  if (n < 6) return 0;
  std::vector<std::vector<u64>> triples;
  for_each_combination(n, 3, budget, [&](const std::vector<u64>& c) {
    if ((c[0] + c[1] + c[2]) % n == 0) triples.push_back(c);
  });
  const u64 pairs = static_cast<u64>(triples.size()) * (triples.size() - (triples.empty() ? 0 : 1)) / 2;
  if (pairs > budget) throw BudgetExceeded("line_pair_count: too many triple pairs");
  auto disjoint = [](const std::vector<u64>& a, const std::vector<u64>& b) {
    for (u64 x : a)
      for (u64 y : b)
        if (x == y) return false;
    return true;
  };
  u64 count = 0;
  for (std::size_t i = 0; i < triples.size(); ++i)
    for (std::size_t j = i + 1; j < triples.size(); ++j)
      if (disjoint(triples[i], triples[j])) ++count;
  return count;
}

/// Zero-sum 6-subsets that do not split into two zero-sum triples.
inline Int irreducible_conic_count(u64 n, u64 budget = kDefaultBudget) {
  require(n >= 9, "irreducible_conic_count: need n >= 9");
  return subset_count(n, 6, 0) - line_pair_count(n, budget);
}

} // namespace modpart
