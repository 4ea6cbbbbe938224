#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <set>

#include "modpart/abelian.hpp"

using namespace modpart;

namespace {

AbelianGroup group(std::vector<u64> f) { return AbelianGroup::from_invariant_factors(std::move(f)); }

GroupElement elem(const AbelianGroup& g, std::vector<i64> c) { return GroupElement(g, std::move(c)); }

// T(A, k, a) as a floating average over all characters of A of e_k(chi)
// times conj(chi(a)), with e_k the elementary symmetric polynomial.
double character_sum_oracle(const AbelianGroup& g, u64 k, const GroupElement& a) {
  const double pi = std::acos(-1.0);
  const auto& m = g.invariant_factors();
  const u64 n = g.order();
  std::complex<double> total = 0;
  for (u64 ci = 0; ci < n; ++ci) {
    const GroupElement chi = GroupElement::from_index(g, ci);
    auto value = [&](const GroupElement& x) {
      double phase = 0;
      for (std::size_t i = 0; i < m.size(); ++i)
        phase += static_cast<double>(chi.coordinates()[i] * x.coordinates()[i]) / static_cast<double>(m[i]);
      return std::polar(1.0, 2 * pi * phase);
    };
    std::vector<std::complex<double>> e(k + 1, 0);
    e[0] = 1;
    for (u64 xi = 0; xi < n; ++xi) {
      const auto v = value(GroupElement::from_index(g, xi));
      for (u64 j = k; j >= 1; --j) e[j] += e[j - 1] * v;
    }
    total += e[k] * std::conj(value(a));
  }
  return total.real() / static_cast<double>(n);
}

} // namespace

TEST(AbelianGroup, Construction) {
  EXPECT_EQ(group({4, 2}).order(), 8u);
  EXPECT_THROW(group({2, 4}), std::invalid_argument);
  EXPECT_THROW(group({1}), std::invalid_argument);
  EXPECT_EQ(AbelianGroup::canonical({2, 4}).invariant_factors(), (std::vector<u64>{4, 2}));
  EXPECT_EQ(AbelianGroup::canonical({6, 10}).invariant_factors(), (std::vector<u64>{30, 2}));
  EXPECT_EQ(AbelianGroup::canonical({1}).rank(), 0u);
  EXPECT_EQ(AbelianGroup::canonical({1}).order(), 1u);
}

TEST(AbelianGroup, GroupsOfOrder) {
  EXPECT_EQ(groups_of_order(1).size(), 1u);
  EXPECT_EQ(groups_of_order(16).size(), 5u);
  EXPECT_EQ(groups_of_order(12).size(), 2u);
  EXPECT_EQ(groups_of_order(72).size(), 6u);
  for (u64 n = 1; n <= 64; ++n)
    for (const auto& g : groups_of_order(n)) EXPECT_EQ(g.order(), n);
}

TEST(GroupElement, IndexRoundTrip) {
  const AbelianGroup g = group({6, 3, 3});
  for (u64 i = 0; i < g.order(); ++i) EXPECT_EQ(GroupElement::from_index(g, i).index(g), i);
  EXPECT_EQ(elem(g, {-1, 4, 0}).coordinates(), (std::vector<u64>{5, 1, 0}));
  EXPECT_THROW(elem(g, {1, 1}), std::invalid_argument);
}

TEST(GroupElement, CanonicalElementPreservesStructure) {
  // Z/2 x Z/4 mapped into Z/4 x Z/2: the map must be an isomorphism.
  const std::vector<u64> orders{2, 4};
  const AbelianGroup g = AbelianGroup::canonical(orders);
  std::set<u64> images;
  for (i64 x = 0; x < 2; ++x)
    for (i64 y = 0; y < 4; ++y) {
      const GroupElement a = canonical_element(orders, {x, y});
      images.insert(a.index(g));
      EXPECT_EQ(a.order(g), std::lcm<u64>(x ? 2 : 1, 4 / std::gcd<u64>(4, static_cast<u64>(y))));
      EXPECT_EQ(canonical_element(orders, {(2 * x) % 2, (2 * y) % 4}), scale(g, 2, a));
    }
  EXPECT_EQ(images.size(), 8u);
  // Z/6 x Z/4 -> Z/12 x Z/2 respects addition.
  const std::vector<u64> o2{6, 4};
  const AbelianGroup h = AbelianGroup::canonical(o2);
  for (i64 a = 0; a < 6; ++a)
    for (i64 b = 0; b < 4; ++b)
      EXPECT_EQ(add(h, canonical_element(o2, {a, b}), canonical_element(o2, {1, 1})),
                canonical_element(o2, {(a + 1) % 6, (b + 1) % 4}));
}

TEST(Characters, Examples) {
  const AbelianGroup v4 = group({2, 2});
  for (u64 k = 0; k <= 4; ++k) EXPECT_EQ(exterior_character(v4, k, 1), binomial(4, static_cast<i64>(k)));
  EXPECT_EQ(exterior_character(v4, 2, 2), -2);
  EXPECT_EQ(exterior_character(group({6}), 3, 2), 0);
  const AbelianGroup z2 = group({2});
  EXPECT_EQ(symmetric_character(z2, 2, 2), 1);
  EXPECT_EQ(symmetric_character(group({5}), 3, 1), binomial(7, 3));
  EXPECT_EQ(symmetric_character(group({6}), 3, 2), 0);
  EXPECT_THROW(exterior_character(v4, 2, 4), std::invalid_argument);
}

TEST(Characters, VanishAwayFromDivisorsOfK) {
  for (u64 n = 1; n <= 16; ++n)
    for (const auto& g : groups_of_order(n))
      for (u64 k = 0; k <= n; ++k)
        for (u64 d : divisors(g.exponent()))
          if (k % d != 0) {
            ASSERT_EQ(exterior_character(g, k, d), 0);
            ASSERT_EQ(symmetric_character(g, k, d), 0);
          }
}

TEST(Characters, SymmetricFormsAgree) {
  for (u64 n = 1; n <= 24; ++n)
    for (const auto& g : groups_of_order(n))
      for (u64 k = 0; k <= 12; ++k)
        for (u64 d : divisors(g.exponent()))
          ASSERT_EQ(symmetric_character(g, k, d), symmetric_character_negated_form(g, k, d)) << g.str();
}

TEST(Subgroups, Examples) {
  EXPECT_EQ(group({2, 2}).torsion_size(1), 1u);
  EXPECT_EQ(group({2, 2}).torsion_size(2), 4u);
  EXPECT_EQ(group({4, 2}).torsion_size(2), 4u);
  const AbelianGroup z4 = group({4});
  for (u64 d : {1, 2, 4}) EXPECT_TRUE(in_multiple_subgroup(z4, GroupElement::zero(z4), d));
  EXPECT_TRUE(in_multiple_subgroup(z4, elem(z4, {2}), 2));
  EXPECT_FALSE(in_multiple_subgroup(z4, elem(z4, {2}), 4));
  EXPECT_FALSE(in_multiple_subgroup(group({2, 2}), elem(group({2, 2}), {1, 0}), 2));
  EXPECT_EQ(divisibility_level(z4, GroupElement::zero(z4)), 4u);
  EXPECT_EQ(divisibility_level(z4, elem(z4, {2})), 2u);
  EXPECT_EQ(divisibility_level(z4, elem(z4, {1})), 1u);
}

TEST(Subgroups, MembershipMatchesImageOfMultiplication) {
  for (u64 n = 1; n <= 32; ++n)
    for (const auto& g : groups_of_order(n))
      for (u64 d : divisors(g.exponent())) {
        std::set<u64> image;
        for (u64 i = 0; i < n; ++i) image.insert(scale(g, d, GroupElement::from_index(g, i)).index(g));
        for (u64 i = 0; i < n; ++i)
          ASSERT_EQ(in_multiple_subgroup(g, GroupElement::from_index(g, i), d), image.count(i) == 1) << g.str();
      }
}

TEST(SubsetCountAbelian, Examples) {
  const AbelianGroup v4 = group({2, 2});
  EXPECT_EQ(subset_count(v4, 2, GroupElement::zero(v4)), 0);
  EXPECT_EQ(subset_count(v4, 2, elem(v4, {1, 1})), 2);
  EXPECT_EQ(brute_force_subset_count(v4, 2, elem(v4, {1, 1})), 2u);
  EXPECT_EQ(subset_count(v4, 0, GroupElement::zero(v4)), 1);
  EXPECT_EQ(subset_count(v4, 0, elem(v4, {1, 0})), 0);
  EXPECT_THROW(subset_count(v4, 5, GroupElement::zero(v4)), std::invalid_argument);
}

TEST(SubsetCountAbelian, FullSetSumsToTotal) {
  for (u64 n = 1; n <= 16; ++n)
    for (const auto& g : groups_of_order(n)) {
      GroupElement total = GroupElement::zero(g);
      for (u64 i = 0; i < n; ++i) total = add(g, total, GroupElement::from_index(g, i));
      for (u64 i = 0; i < n; ++i) {
        const GroupElement a = GroupElement::from_index(g, i);
        ASSERT_EQ(brute_force_subset_count(g, n, a), a == total ? 1u : 0u);
        ASSERT_EQ(subset_count(g, n, a), a == total ? 1 : 0);
      }
    }
}

TEST(MultisetCountAbelian, Examples) {
  const AbelianGroup z2 = group({2});
  EXPECT_EQ(multiset_count(z2, 2, GroupElement::zero(z2)), 2);
  for (u64 n : {3, 4, 6})
    for (const auto& g : groups_of_order(n))
      for (u64 i = 0; i < n; ++i) EXPECT_EQ(multiset_count(g, 1, GroupElement::from_index(g, i)), 1);
}

TEST(SubsetCountAbelian, MatchesCharacterSumOracle) {
  for (u64 n = 1; n <= 12; ++n)
    for (const auto& g : groups_of_order(n))
      for (u64 k = 0; k <= n; ++k)
        for (u64 i = 0; i < n; ++i) {
          const GroupElement a = GroupElement::from_index(g, i);
          const double f = character_sum_oracle(g, k, a);
          ASSERT_LT(std::abs(f - std::round(f)), 1e-6);
          ASSERT_EQ(subset_count(g, k, a), static_cast<long long>(std::llround(f))) << g.str() << " " << k << " " << i;
        }
}

TEST(SubsetCountAbelian, BruteForceAndSums) {
  for (u64 n = 1; n <= 16; ++n)
    for (const auto& g : groups_of_order(n)) {
      const auto table = brute_force_subset_table(g);
      for (u64 k = 0; k <= n; ++k) {
        Int sum = 0;
        for (u64 i = 0; i < n; ++i) {
          const Int t = subset_count(g, k, GroupElement::from_index(g, i));
          ASSERT_EQ(t, table[k][i]);
          sum += t;
        }
        ASSERT_EQ(sum, binomial(n, static_cast<i64>(k)));
      }
    }
}

TEST(MultisetCountAbelian, BruteForceAndSums) {
  for (u64 n = 1; n <= 12; ++n)
    for (const auto& g : groups_of_order(n)) {
      const auto table = brute_force_multiset_table(g, 6);
      for (u64 k = 0; k <= 6; ++k) {
        Int sum = 0;
        for (u64 i = 0; i < n; ++i) {
          const Int t = multiset_count(g, k, GroupElement::from_index(g, i));
          ASSERT_EQ(t, table[k][i]);
          sum += t;
        }
        ASSERT_EQ(sum, binomial(n + k - 1, static_cast<i64>(k)));
      }
    }
}

TEST(SubsetCountAbelian, DependsOnlyOnResidueModGcdMultiple) {
  for (u64 n = 1; n <= 16; ++n)
    for (const auto& g : groups_of_order(n))
      for (u64 k = 1; k <= n; ++k) {
        const u64 m = std::gcd(n, k);
        for (u64 i = 0; i < n; ++i) {
          const GroupElement a = GroupElement::from_index(g, i);
          const Int t = subset_count(g, k, a);
          for (u64 j = 0; j < n; ++j) {
            const GroupElement shifted = add(g, a, scale(g, m, GroupElement::from_index(g, j)));
            ASSERT_EQ(subset_count(g, k, shifted), t) << g.str() << " k=" << k;
          }
        }
      }
}

TEST(SubsetCountAbelian, CyclicReduction) {
  for (u64 n = 1; n <= 20; ++n) {
    const AbelianGroup g = AbelianGroup::canonical({n});
    for (u64 k = 0; k <= n; ++k)
      for (u64 s = 0; s < n; ++s) {
        const GroupElement a = n == 1 ? GroupElement::zero(g) : elem(g, {static_cast<i64>(s)});
        ASSERT_EQ(subset_count(g, k, a), subset_count(n, k, static_cast<i64>(s))) << n << " " << k << " " << s;
      }
  }
}

TEST(ProfileCount, Examples) {
  const AbelianGroup z3 = group({3});
  // 2b + c = 0 mod 3 forces c = b, which the profile (2,1) forbids.
  EXPECT_EQ(profile_count(z3, {2, 1}, GroupElement::zero(z3)), 0u);
  EXPECT_EQ(profile_count(z3, {2, 1}, elem(z3, {1})), 3u);
  for (u64 n = 1; n <= 10; ++n)
    for (const auto& g : groups_of_order(n))
      for (u64 i = 0; i < n; ++i) {
        const GroupElement a = GroupElement::from_index(g, i);
        for (u64 k = 1; k <= std::min<u64>(n, 4); ++k) {
          ASSERT_EQ(profile_count(g, std::vector<u64>(k, 1), a), subset_count(g, k, a));
          u64 solutions = 0;
          for (u64 j = 0; j < n; ++j) solutions += scale(g, k, GroupElement::from_index(g, j)) == a;
          ASSERT_EQ(profile_count(g, {k}, a), solutions);
        }
      }
}

TEST(FourierClassFunction, Examples) {
  // Constant 1 on every element: only the trivial character survives.
  for (u64 n : {4, 6, 8, 12})
    for (const auto& g : groups_of_order(n)) {
      std::map<u64, Rational> ones;
      for (u64 d : divisors(g.exponent())) ones[d] = 1;
      for (const auto& [level, v] : fourier_class_function(g, ones)) EXPECT_EQ(v, level == g.exponent() ? 1 : 0);
    }
  // Z/p with the indicator of elements of order p.
  for (u64 p : {2, 3, 5, 7}) {
    const AbelianGroup g = group({p});
    const auto f = fourier_class_function(g, {{1, 0}, {p, 1}});
    EXPECT_EQ(f.at(p), Rational(static_cast<long long>(p) - 1, static_cast<long long>(p)));
    EXPECT_EQ(f.at(1), Rational(-1, static_cast<long long>(p)));
  }
}

TEST(FourierClassFunction, ExteriorCharacterGivesSubsetCounts) {
  for (u64 n = 1; n <= 16; ++n)
    for (const auto& g : groups_of_order(n))
      for (u64 k = 0; k <= n; ++k) {
        std::map<u64, Rational> chi;
        for (u64 d : divisors(g.exponent())) chi[d] = Rational(exterior_character(g, k, d));
        const auto by_level = fourier_class_function(g, chi);
        for (u64 i = 0; i < n; ++i) {
          const GroupElement a = GroupElement::from_index(g, i);
          ASSERT_EQ(by_level.at(divisibility_level(g, a)), Rational(subset_count(g, k, a)));
        }
      }
}
