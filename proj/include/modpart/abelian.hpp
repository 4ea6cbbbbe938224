#pragma once

// Subset and multiset sum counts over finite abelian groups
// Z/m1 x ... x Z/mc (m_{i+1} | m_i). Characters of the exterior and
// symmetric powers of the regular representation depend only on element
// order; their Fourier transforms are computed exactly through the divisor
// lattice of the exponent, using the coordinate self-duality of the group.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <boost/integer/mod_inverse.hpp>

#include "counting.hpp"
#include "error.hpp"
#include "numtheory.hpp"

namespace modpart {

class AbelianGroup {
public:
  /// The trivial group.
  AbelianGroup() = default;

  /// Requires a divisibility chain m1, m2, ... with every m_i >= 2 and m_{i+1} | m_i.
  static AbelianGroup from_invariant_factors(std::vector<u64> factors) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      require(factors[i] >= 2, "invariant factors must be >= 2");
      if (i > 0) require(factors[i - 1] % factors[i] == 0, "invariant factors must form a divisibility chain");
    }
    AbelianGroup g;
    g.factors_ = std::move(factors);
    return g;
  }

  /// Any product of cyclic groups, rewritten in invariant-factor form.
  static AbelianGroup canonical(const std::vector<u64>& cyclic_orders) {
    std::map<u64, std::vector<u64>> by_prime; // prime -> prime powers
    for (u64 m : cyclic_orders) {
      require(m >= 1, "cyclic factor orders must be positive");
      for (const auto& f : factorize(m).factors) by_prime[f.prime].push_back(f.value());
    }
    std::size_t len = 0;
    for (auto& [p, qs] : by_prime) {
      std::sort(qs.rbegin(), qs.rend());
      len = std::max(len, qs.size());
    }
    std::vector<u64> inv(len, 1);
    for (const auto& [p, qs] : by_prime)
      for (std::size_t i = 0; i < qs.size(); ++i) inv[i] *= qs[i];
    return from_invariant_factors(std::move(inv));
  }

  const std::vector<u64>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }

  u64 order() const {
    return std::accumulate(factors_.begin(), factors_.end(), u64{1}, std::multiplies<>());
  }

  /// Largest element order, m1 (1 for the trivial group).
  u64 exponent() const { return factors_.empty() ? 1 : factors_.front(); }

  /// |A_d|, the number of elements killed by d.
  u64 torsion_size(u64 d) const {
    require(d >= 1, "torsion_size: d must be positive");
    u64 r = 1;
    for (u64 m : factors_) r *= std::gcd(d, m);
    return r;
  }

  std::string str() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? "," : "") + std::to_string(factors_[i]);
    return s;
  }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

private:
  std::vector<u64> factors_;
};

/// An element, stored as reduced coordinates against the invariant factors.
class GroupElement {
public:
  GroupElement(const AbelianGroup& g, std::vector<i64> coords) : coords_(g.rank()) {
    require(coords.size() == g.rank() || (g.rank() == 0 && coords.size() <= 1 && (coords.empty() || coords[0] == 0)),
            "element has the wrong number of coordinates");
    for (std::size_t i = 0; i < g.rank(); ++i) coords_[i] = mod_floor(coords[i], g.invariant_factors()[i]);
  }

  static GroupElement zero(const AbelianGroup& g) { return GroupElement(g, std::vector<i64>(g.rank(), 0)); }

  /// Element number `index` in mixed radix (first coordinate most significant).
  static GroupElement from_index(const AbelianGroup& g, u64 index) {
    std::vector<i64> c(g.rank());
    for (std::size_t i = g.rank(); i-- > 0;) {
      const u64 m = g.invariant_factors()[i];
      c[i] = static_cast<i64>(index % m);
      index /= m;
    }
    return GroupElement(g, std::move(c));
  }

  u64 index(const AbelianGroup& g) const {
    u64 idx = 0;
    for (std::size_t i = 0; i < g.rank(); ++i) idx = idx * g.invariant_factors()[i] + coords_[i];
    return idx;
  }

  const std::vector<u64>& coordinates() const { return coords_; }

  u64 order(const AbelianGroup& g) const {
    u64 l = 1;
    for (std::size_t i = 0; i < g.rank(); ++i) {
      const u64 m = g.invariant_factors()[i];
      l = std::lcm(l, m / std::gcd(m, coords_[i]));
    }
    return l;
  }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](u64 c) { return c == 0; });
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
  std::vector<u64> coords_;
};

/// Map an element of Z/m_1 x ... x Z/m_r (any cyclic orders) to coordinates
/// in AbelianGroup::canonical(orders), following the same assignment of
/// prime-power parts to invariant factors.
inline GroupElement canonical_element(const std::vector<u64>& cyclic_orders, const std::vector<i64>& coords) {
  require(coords.size() == cyclic_orders.size(), "element has the wrong number of coordinates");
  const AbelianGroup g = AbelianGroup::canonical(cyclic_orders);
  struct Part {
    u64 q;
    u64 residue;
  };
  std::map<u64, std::vector<Part>> by_prime;
  for (std::size_t i = 0; i < cyclic_orders.size(); ++i)
    for (const auto& f : factorize(cyclic_orders[i]).factors) {
      const u64 q = f.value();
      by_prime[f.prime].push_back({q, mod_floor(coords[i], q)});
    }
  // slot residue accumulated by CRT: x mod modulus
  std::vector<u64> x(g.rank(), 0), modulus(g.rank(), 1);
  for (auto& [p, parts] : by_prime) {
    std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.q > b.q; });
    for (std::size_t slot = 0; slot < parts.size(); ++slot) {
      const u64 m = modulus[slot], q = parts[slot].q;
      // Find x' = x + m*t with x' = residue (mod q); m is invertible mod q.
      const u64 inv = q == 1 ? 0 : static_cast<u64>(boost::integer::mod_inverse(static_cast<i64>(m % q), static_cast<i64>(q)));
      const u64 diff = (parts[slot].residue + q - x[slot] % q) % q;
      x[slot] += m * (diff * inv % q);
      modulus[slot] = m * q;
    }
  }
  std::vector<i64> c(x.begin(), x.end());
  return GroupElement(g, std::move(c));
}

inline GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
  std::vector<i64> c(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i)
    c[i] = static_cast<i64>((a.coordinates()[i] + b.coordinates()[i]) % g.invariant_factors()[i]);
  return GroupElement(g, std::move(c));
}

inline GroupElement scale(const AbelianGroup& g, u64 m, const GroupElement& a) {
  std::vector<i64> c(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const u64 mi = g.invariant_factors()[i];
    c[i] = static_cast<i64>((m % mi) * a.coordinates()[i] % mi);
  }
  return GroupElement(g, std::move(c));
}

namespace detail {

inline void require_order_divisor(const AbelianGroup& g, u64 d) {
  require(d >= 1 && g.exponent() % d == 0, "d must divide the exponent of the group");
}

} // namespace detail

/// Character of the k-th exterior power of the regular representation at an
/// element of order d: (-1)^((d-1)k/d) C(|A|/d, k/d) if d | k, else 0.
inline Int exterior_character(const AbelianGroup& g, u64 k, u64 d) {
  detail::require_order_divisor(g, d);
  require(k <= g.order(), "exterior_character: k must not exceed |A|");
  if (k % d != 0) return 0;
  const u64 j = k / d;
  Int v = binomial(g.order() / d, static_cast<i64>(j));
  return parity_sign((d - 1) * j) < 0 ? Int(-v) : v;
}

/// Character of the k-th symmetric power: C(|A|/d + k/d - 1, k/d) if d | k.
inline Int symmetric_character(const AbelianGroup& g, u64 k, u64 d) {
  detail::require_order_divisor(g, d);
  if (k % d != 0) return 0;
  const u64 j = k / d;
  return binomial(g.order() / d + j - 1, static_cast<i64>(j));
}

/// The same value written as (-1)^(k/d) C(-|A|/d, k/d).
inline Int symmetric_character_negated_form(const AbelianGroup& g, u64 k, u64 d) {
  detail::require_order_divisor(g, d);
  if (k % d != 0) return 0;
  const u64 j = k / d;
  Int v = binomial_general(-Int(g.order() / d), j);
  return parity_sign(j) < 0 ? Int(-v) : v;
}

/// Whether a lies in dA, i.e. gcd(d, m_i) | a_i for every coordinate.
inline bool in_multiple_subgroup(const AbelianGroup& g, const GroupElement& a, u64 d) {
  require(d >= 1, "in_multiple_subgroup: d must be positive");
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (a.coordinates()[i] % std::gcd(d, g.invariant_factors()[i]) != 0) return false;
  return true;
}

/// Largest divisor d of the exponent with a in dA.
inline u64 divisibility_level(const AbelianGroup& g, const GroupElement& a) {
  u64 best = 1;
  for (u64 d : divisors(g.exponent()))
    if (in_multiple_subgroup(g, a, d)) best = d;
  return best;
}

namespace detail {

// |A| * (Fourier transform at a) of the class function with value chi(d) on
// elements of order d: sum_d chi(d) sum_{e|d} mu(d/e) |A_e| [a in eA].
template <typename CharFn>
Int scaled_transform(const AbelianGroup& g, const GroupElement& a, CharFn chi) {
  Int total = 0;
  for (u64 d : divisors(g.exponent())) {
    const Int c = chi(d);
    if (c == 0) continue;
    Int inner = 0;
    for (u64 e : divisors(d)) {
      const int mu = moebius(d / e);
      if (mu == 0 || !in_multiple_subgroup(g, a, e)) continue;
      inner += mu * Int(g.torsion_size(e));
    }
    total += c * inner;
  }
  return total;
}

inline Int divide_by_order(const Int& total, u64 order, const char* what) {
  Int q, r;
  boost::multiprecision::divide_qr(total, Int(order), q, r);
  if (r != 0) throw InternalError(std::string(what) + ": Fourier sum not divisible by |A|");
  return q;
}

} // namespace detail

/// Number of k-element subsets of A summing to a.
inline Int subset_count(const AbelianGroup& g, u64 k, const GroupElement& a) {
  require(k <= g.order(), "subset_count: k must not exceed |A|");
  return detail::divide_by_order(
      detail::scaled_transform(g, a, [&](u64 d) { return exterior_character(g, k, d); }), g.order(),
      "subset_count");
}

/// Number of k-element multisets of A summing to a.
inline Int multiset_count(const AbelianGroup& g, u64 k, const GroupElement& a) {
  return detail::divide_by_order(
      detail::scaled_transform(g, a, [&](u64 d) { return symmetric_character(g, k, d); }), g.order(),
      "multiset_count");
}

/// Fourier transform of a function that depends only on element order,
/// returned as a function of the divisibility level of the dual element.
/// `by_order` must have exactly the divisors of the exponent as keys.
inline std::map<u64, Rational> fourier_class_function(const AbelianGroup& g,
                                                      const std::map<u64, Rational>& by_order) {
  const auto ds = divisors(g.exponent());
  require(by_order.size() == ds.size(), "fourier_class_function: keys must be the divisors of the exponent");
  for (u64 d : ds) require(by_order.count(d) == 1, "fourier_class_function: missing divisor key");
  std::map<u64, Rational> out;
  const Rational inv_order(1, static_cast<long long>(g.order()));
  for (u64 level : ds) {
    // An element at divisibility level L lies in eA exactly when e | L.
    Rational acc = 0;
    for (u64 d : ds) {
      const Rational& c = by_order.at(d);
      if (c == 0) continue;
      for (u64 e : divisors(d)) {
        if (level % e != 0) continue;
        const int mu = moebius(d / e);
        if (mu != 0) acc += c * mu * Rational(g.torsion_size(e));
      }
    }
    out[level] = acc * inv_order;
  }
  return out;
}

namespace detail {

struct CayleyTable {
  std::size_t size;
  std::vector<u64> sum; // sum[a * size + b]

  explicit CayleyTable(const AbelianGroup& g) : size(g.order()), sum(size * size) {
    std::vector<GroupElement> elems;
    for (u64 i = 0; i < size; ++i) elems.push_back(GroupElement::from_index(g, i));
    for (u64 i = 0; i < size; ++i)
      for (u64 j = 0; j < size; ++j) sum[i * size + j] = add(g, elems[i], elems[j]).index(g);
  }
  u64 operator()(u64 a, u64 b) const { return sum[a * size + b]; }
};

} // namespace detail

/// table[k][a] = number of k-subsets of A summing to element index a.
inline std::vector<std::vector<u64>> brute_force_subset_table(const AbelianGroup& g, u64 budget = kDefaultBudget) {
  const u64 n = g.order();
  require(n < 63 && (u64{1} << n) <= budget, "brute_force_subset_table: 2^|A| subsets exceed the budget");
  const detail::CayleyTable table(g);
  std::vector<std::vector<u64>> out(n + 1, std::vector<u64>(n, 0));
  // Depth-first over include/exclude decisions, carrying size and sum.
  auto rec = [&](auto&& self, u64 next, u64 size, u64 sum) -> void {
    if (next == n) {
      ++out[size][sum];
      return;
    }
    self(self, next + 1, size, sum);
    self(self, next + 1, size + 1, table(sum, next));
  };
  rec(rec, 0, 0, 0);
  return out;
}

inline u64 brute_force_subset_count(const AbelianGroup& g, u64 k, const GroupElement& a,
                                    u64 budget = kDefaultBudget) {
  require(k <= g.order(), "brute_force_subset_count: k must not exceed |A|");
  if (binomial(g.order(), static_cast<i64>(k)) > budget) throw BudgetExceeded("brute_force_subset_count: over budget");
  const detail::CayleyTable table(g);
  u64 count = 0;
  for_each_combination(g.order(), k, budget, [&](const std::vector<u64>& c) {
    u64 s = 0;
    for (u64 x : c) s = table(s, x);
    if (s == a.index(g)) ++count;
  });
  return count;
}

/// table[j][a] = number of j-multisets (j <= max_k) summing to element index a.
inline std::vector<std::vector<u64>> brute_force_multiset_table(const AbelianGroup& g, u64 max_k,
                                                                u64 budget = kDefaultBudget) {
  const u64 n = g.order();
  require(binomial(n + max_k, static_cast<i64>(max_k)) <= budget, "brute_force_multiset_table: over budget");
  const detail::CayleyTable table(g);
  std::vector<std::vector<u64>> out(max_k + 1, std::vector<u64>(n, 0));
  // Non-decreasing sequences of element indices.
  auto rec = [&](auto&& self, u64 min_elem, u64 size, u64 sum) -> void {
    ++out[size][sum];
    if (size == max_k) return;
    for (u64 e = min_elem; e < n; ++e) self(self, e, size + 1, table(sum, e));
  };
  rec(rec, 0, 0, 0);
  return out;
}

inline u64 brute_force_multiset_count(const AbelianGroup& g, u64 k, const GroupElement& a,
                                      u64 budget = kDefaultBudget) {
  return brute_force_multiset_table(g, k, budget)[k][a.index(g)];
}

/// Number of multisets of A whose multiplicities, as a multiset, equal
/// `parts` and whose weighted sum is a. Brute force over assignments of
/// distinct elements to parts.
inline u64 profile_count(const AbelianGroup& g, std::vector<u64> parts, const GroupElement& a,
                         u64 budget = kDefaultBudget) {
  for (u64 p : parts) require(p >= 1, "profile_count: parts must be positive");
  const u64 n = g.order();
  if (parts.size() > n) return 0;
  Int work = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) work *= (n - i);
  if (work > budget) throw BudgetExceeded("profile_count: over budget");

  std::sort(parts.begin(), parts.end());
  std::vector<GroupElement> elems;
  for (u64 i = 0; i < n; ++i) elems.push_back(GroupElement::from_index(g, i));
  std::vector<GroupElement> weighted; // weighted[i * |parts| + j] = parts[j] * elem_i
  for (u64 i = 0; i < n; ++i)
    for (u64 p : parts) weighted.push_back(scale(g, p, elems[i]));
  const detail::CayleyTable table(g);
  const u64 target = a.index(g);

  // Equal parts receive increasing element indices, so each multiset is
  // produced exactly once.
  std::vector<bool> used(n, false);
  u64 count = 0;
  auto rec = [&](auto&& self, std::size_t j, u64 min_elem, u64 sum) -> void {
    if (j == parts.size()) {
      if (sum == target) ++count;
      return;
    }
    const u64 start = (j > 0 && parts[j] == parts[j - 1]) ? min_elem : 0;
    for (u64 e = start; e < n; ++e) {
      if (used[e]) continue;
      used[e] = true;
      self(self, j + 1, e + 1, table(sum, weighted[e * parts.size() + j].index(g)));
      used[e] = false;
    }
  };
  rec(rec, 0, 0, GroupElement::zero(g).index(g));
  return count;
}

/// Every abelian group of the given order, in invariant-factor form.
inline std::vector<AbelianGroup> groups_of_order(u64 order) {
  require(order >= 1, "groups_of_order: order must be positive");
  std::vector<AbelianGroup> out;
  std::vector<u64> chain;
  // m1 | order, then each next factor divides both the previous one and
  // what is left of the order.
  auto rec = [&](auto&& self, u64 remaining, u64 bound) -> void {
    if (remaining == 1) {
      out.push_back(AbelianGroup::from_invariant_factors(chain));
      return;
    }
    for (u64 m : divisors(remaining)) {
      if (m < 2 || bound % m != 0) continue;
      chain.push_back(m);
      self(self, remaining / m, m);
      chain.pop_back();
    }
  };
  rec(rec, order, order);
  return out;
}

} // namespace modpart
