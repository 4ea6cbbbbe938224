#pragma once

// Elementary number theory over machine integers, plus exact big-integer
// binomials. Factorizations and divisor lists are memoized process-wide.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "lru_cache.hpp"

namespace modpart {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using u64 = std::uint64_t;
using i64 = std::int64_t;

struct PrimePower {
  u64 prime;
  unsigned exponent;

  u64 value() const {
    u64 q = 1;
    for (unsigned i = 0; i < exponent; ++i) q *= prime;
    return q;
  }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power decomposition of a positive integer, primes ascending.
struct Factorization {
  u64 value = 1;
  std::vector<PrimePower> factors;

  /// The prime powers q = p^e exactly dividing `value`.
  std::vector<u64> prime_power_parts() const {
    std::vector<u64> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.value());
    return out;
  }

  bool squarefree() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const PrimePower& f) { return f.exponent == 1; });
  }
};

namespace detail {

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

inline constexpr u64 kTrialLimit = 1u << 16;

} // namespace detail

/// Deterministic Miller-Rabin, exact for every 64-bit input.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

// A nontrivial factor of an odd composite n (Pollard rho, Brent's cycle search).
inline u64 rho_factor(u64 n) {
  for (u64 c = 1;; ++c) {
    auto step = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 batch = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        for (u64 i = 0; i < batch && i < r - k; ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

// Prime factors (with repetition) of a cofactor free of small primes.
inline void split_large(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const u64 d = rho_factor(n);
  split_large(d, primes);
  split_large(n / d, primes);
}

inline Factorization factorize_uncached(u64 n) {
  Factorization f;
  f.value = n;
  u64 rest = n;
  auto strip = [&](u64 p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) f.factors.push_back({p, e});
  };
  strip(2);
  for (u64 p = 3; p <= kTrialLimit && p * p <= rest; p += 2) strip(p);
  if (rest > 1) {
    // Every prime factor of the cofactor now exceeds the trial limit.
    std::vector<u64> big;
    split_large(rest, big);
    std::sort(big.begin(), big.end());
    for (std::size_t i = 0; i < big.size();) {
      std::size_t j = i;
      while (j < big.size() && big[j] == big[i]) ++j;
      f.factors.push_back({big[i], static_cast<unsigned>(j - i)});
      i = j;
    }
  }
  return f;
}

inline LruCache<u64, Factorization>& factorization_cache() {
  static LruCache<u64, Factorization> cache(1u << 16);
  return cache;
}

inline LruCache<u64, std::vector<u64>>& divisor_cache() {
  static LruCache<u64, std::vector<u64>> cache(1u << 16);
  return cache;
}

} // namespace detail

/// Bound the memo caches used by factorize() and divisors().
inline void set_memo_capacity(std::size_t entries) {
  detail::factorization_cache().set_capacity(entries);
  detail::divisor_cache().set_capacity(entries);
}

inline Factorization factorize(u64 n) {
  require(n >= 1, "factorize: n must be positive");
  if (auto hit = detail::factorization_cache().get(n)) return *hit;
  Factorization f = detail::factorize_uncached(n);
  detail::factorization_cache().put(n, f);
  return f;
}

inline bool is_prime_power(u64 n) { return n >= 2 && factorize(n).factors.size() == 1; }

inline int moebius(u64 n) {
  require(n >= 1, "moebius: n must be positive");
  const auto f = factorize(n);
  if (!f.squarefree()) return 0;
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

inline u64 totient(u64 n) {
  require(n >= 1, "totient: n must be positive");
  u64 phi = n;
  for (const auto& [p, e] : factorize(n).factors) phi = phi / p * (p - 1);
  return phi;
}

/// Positive divisors of n in ascending order.
inline std::vector<u64> divisors(u64 n) {
  require(n >= 1, "divisors: n must be positive");
  if (auto hit = detail::divisor_cache().get(n)) return *hit;
  std::vector<u64> out{1};
  for (const auto& [p, e] : factorize(n).factors) {
    const std::size_t base = out.size();
    u64 q = 1;
    for (unsigned i = 0; i < e; ++i) {
      q *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * q);
    }
  }
  std::sort(out.begin(), out.end());
  detail::divisor_cache().put(n, out);
  return out;
}

inline std::size_t divisor_index(const std::vector<u64>& sorted_divisors, u64 d) {
  auto it = std::lower_bound(sorted_divisors.begin(), sorted_divisors.end(), d);
  require(it != sorted_divisors.end() && *it == d,
          "value " + std::to_string(d) + " is not in the divisor list");
  return static_cast<std::size_t>(it - sorted_divisors.begin());
}

/// gcd with the convention gcd(0, m) = m; accepts negative a.
inline u64 gcd_signed(i64 a, u64 m) {
  const u64 abs_a = a < 0 ? static_cast<u64>(-(a + 1)) + 1 : static_cast<u64>(a);
  return std::gcd(abs_a, m);
}

/// Least nonnegative residue of a (any sign) modulo m.
inline u64 mod_floor(i64 a, u64 m) {
  const i64 mm = static_cast<i64>(m);
  i64 r = a % mm;
  if (r < 0) r += mm;
  return static_cast<u64>(r);
}

inline int parity_sign(u64 e) { return (e & 1) ? -1 : 1; }

/// C(n, k), exact; zero outside 0 <= k <= n.
inline Int binomial(u64 n, i64 k) {
  if (k < 0 || static_cast<u64>(k) > n) return 0;
  u64 kk = std::min<u64>(static_cast<u64>(k), n - static_cast<u64>(k));
  Int r = 1;
  for (u64 i = 0; i < kk; ++i) {
    r *= (n - i);
    r /= (i + 1); // exact: r is C(n, i+1) after this step
  }
  return r;
}

/// Generalized binomial C(top, j) for any integer top and j >= 0:
/// top(top-1)...(top-j+1)/j!.
inline Int binomial_general(const Int& top, u64 j) {
  Int r = 1;
  for (u64 i = 0; i < j; ++i) {
    r *= (top - i);
    r /= (i + 1);
  }
  return r;
}

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

} // namespace modpart
