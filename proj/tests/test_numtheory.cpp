#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "modpart/lru_cache.hpp"
#include "modpart/numtheory.hpp"
#include "oracles.hpp"

using namespace modpart;

TEST(Factorize, Examples) {
  EXPECT_TRUE(factorize(1).factors.empty());
  EXPECT_EQ(factorize(12).factors, (std::vector<PrimePower>{{2, 2}, {3, 1}}));
  EXPECT_EQ(factorize(10000).factors, (std::vector<PrimePower>{{2, 4}, {5, 4}}));
  EXPECT_EQ(factorize(10000).prime_power_parts(), (std::vector<u64>{16, 625}));
  EXPECT_THROW(factorize(0), std::invalid_argument);
}

TEST(Factorize, LargeSemiprimeAndPrime) {
  const u64 p = 4294967291ULL, q = 4294967279ULL; // primes below 2^32
  EXPECT_EQ(factorize(p * q).factors, (std::vector<PrimePower>{{q, 1}, {p, 1}}));
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_FALSE(is_prime(18446744073709551555ULL));
  EXPECT_TRUE(is_prime_power(3125));
  EXPECT_FALSE(is_prime_power(12));
}

TEST(Factorize, LargePrimeFactors) {
  EXPECT_EQ(factorize(1000003ULL * 1000003ULL).factors, (std::vector<PrimePower>{{1000003, 2}}));
  EXPECT_EQ(factorize(100003ULL * 100019ULL * 100043ULL).factors,
            (std::vector<PrimePower>{{100003, 1}, {100019, 1}, {100043, 1}}));
  EXPECT_EQ(factorize(8ULL * 4294967291ULL).factors, (std::vector<PrimePower>{{2, 3}, {4294967291ULL, 1}}));
  EXPECT_TRUE(is_prime_power(1000003ULL * 1000003ULL));
}

TEST(Factorize, RandomSixtyFourBitValues) {
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 300; ++i) {
    const u64 n = rng() | 1;
    u64 prod = 1, last = 0;
    for (const auto& f : factorize(n).factors) {
      ASSERT_TRUE(is_prime(f.prime)) << n;
      ASSERT_GT(f.prime, last);
      last = f.prime;
      prod *= f.value();
    }
    ASSERT_EQ(prod, n);
  }
}

TEST(Factorize, ProductRebuildsValue) {
  for (u64 n = 1; n <= 5000; ++n) {
    u64 prod = 1;
    for (const auto& f : factorize(n).factors) {
      EXPECT_TRUE(is_prime(f.prime));
      prod *= f.value();
    }
    EXPECT_EQ(prod, n);
  }
}

TEST(Moebius, Examples) {
  EXPECT_EQ(moebius(1), 1);
  EXPECT_EQ(moebius(4), 0);
  EXPECT_EQ(moebius(30), -1);
  EXPECT_THROW(moebius(0), std::invalid_argument);
}

TEST(Totient, Examples) {
  EXPECT_EQ(totient(1), 1u);
  EXPECT_EQ(totient(9), 6u);
  EXPECT_EQ(totient(12), 4u);
}

TEST(Divisors, Examples) {
  EXPECT_EQ(divisors(1), (std::vector<u64>{1}));
  EXPECT_EQ(divisors(12), (std::vector<u64>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(97), (std::vector<u64>{1, 97}));
  EXPECT_THROW(divisor_index(divisors(12), 5), std::invalid_argument);
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(17, 0), 1);
  EXPECT_EQ(binomial(4, 5), 0);
  EXPECT_EQ(binomial(4, -1), 0);
  EXPECT_EQ(binomial(100, 50).str(), "100891344545564193334812497256");
  EXPECT_EQ(binomial_general(-3, 2), 6);
  EXPECT_EQ(binomial_general(-1, 5), -1);
}

TEST(Binomial, PascalRule) {
  for (u64 n = 1; n <= 80; ++n)
    for (i64 k = 1; k <= static_cast<i64>(n); ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1));
}

TEST(NumTheoryProperties, MultiplicativeOverCoprimePairs) {
  for (u64 a = 1; a <= 200; ++a)
    for (u64 b = 1; b <= 200; ++b) {
      if (std::gcd(a, b) != 1) continue;
      ASSERT_EQ(moebius(a * b), moebius(a) * moebius(b)) << a << "," << b;
      ASSERT_EQ(totient(a * b), totient(a) * totient(b)) << a << "," << b;
    }
}

TEST(NumTheoryProperties, DivisorSums) {
  for (u64 n = 1; n <= 1000; ++n) {
    u64 phi_sum = 0;
    int mu_sum = 0;
    for (u64 d : divisors(n)) {
      phi_sum += totient(d);
      mu_sum += moebius(d);
    }
    ASSERT_EQ(phi_sum, n);
    ASSERT_EQ(mu_sum, n == 1 ? 1 : 0);
  }
}

TEST(NumTheoryProperties, AgreesWithDirectDefinitions) {
  for (u64 n = 1; n <= 500; ++n) {
    ASSERT_EQ(moebius(n), oracle::mu(n));
    ASSERT_EQ(totient(n), oracle::phi(n));
    std::vector<u64> ds;
    for (u64 d = 1; d <= n; ++d)
      if (n % d == 0) ds.push_back(d);
    ASSERT_EQ(divisors(n), ds);
  }
}

TEST(NumTheoryProperties, DivisorsClosedUnderComplement) {
  for (u64 n = 1; n <= 2000; ++n) {
    const auto ds = divisors(n);
    for (u64 d : ds) ASSERT_TRUE(std::binary_search(ds.begin(), ds.end(), n / d));
  }
}

TEST(Residues, SignedHelpers) {
  EXPECT_EQ(mod_floor(-1, 5), 4u);
  EXPECT_EQ(mod_floor(12, 5), 2u);
  EXPECT_EQ(gcd_signed(0, 12), 12u);
  EXPECT_EQ(gcd_signed(-8, 12), 4u);
  EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
}

TEST(LruCache, EvictsLeastRecentlyUsed) {
  LruCache<int, std::string> c(2);
  c.put(1, "a");
  c.put(2, "b");
  ASSERT_TRUE(c.get(1)); // 1 becomes most recent
  c.put(3, "c");
  EXPECT_FALSE(c.get(2));
  EXPECT_EQ(*c.get(1), "a");
  EXPECT_EQ(*c.get(3), "c");
  c.put(3, "d");
  EXPECT_EQ(*c.get(3), "d");
  EXPECT_EQ(c.size(), 2u);
  c.set_capacity(1);
  EXPECT_EQ(c.size(), 1u);
  EXPECT_TRUE(c.get(3));
  c.set_capacity(0);
  c.put(4, "x");
  EXPECT_EQ(c.size(), 0u);
}

TEST(LruCache, ConcurrentUse) {
  LruCache<u64, u64> c(64);
  std::vector<std::jthread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&c, t] {
      for (u64 i = 0; i < 2000; ++i) {
        c.put(i % 100 + static_cast<u64>(t), i);
        c.get(i % 97);
      }
    });
  workers.clear();
  EXPECT_LE(c.size(), 64u);
}

TEST(MemoCapacity, BoundedCachesStillCorrect) {
  set_memo_capacity(4);
  for (u64 n = 1; n <= 300; ++n) ASSERT_EQ(totient(n), oracle::phi(n));
  set_memo_capacity(1u << 16);
}
