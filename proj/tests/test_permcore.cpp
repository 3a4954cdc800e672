#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "regcycle/permcore.hpp"

using namespace regcycle;

namespace {

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<u32> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

// Order by repeated multiplication until the identity comes back.
u64 naive_order(const Permutation& p) {
  Permutation q = p;
  u64 k = 1;
  while (!q.is_identity()) {
    q = q * p;
    ++k;
  }
  return k;
}

u64 naive_partition_count(u32 n) {
  std::vector<u64> ways(n + 1, 0);
  ways[0] = 1;
  for (u32 part = 1; part <= n; ++part)
    for (u32 s = part; s <= n; ++s) ways[s] += ways[s - part];
  return ways[n];
}

}  // namespace

TEST(Permutation, CompositionAppliesLeftFactorFirst) {
  const Permutation p = parse_cycles("(1 2)", 3);
  const Permutation q = parse_cycles("(2 3)", 3);
  const Permutation pq = p * q;
  for (u32 i = 0; i < 3; ++i) EXPECT_EQ(pq(i), q(p(i)));
  EXPECT_EQ(render_cycles(pq), "(1 3 2)");
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation(std::vector<u32>{0, 0, 1}), PreconditionError);
  EXPECT_THROW(Permutation(std::vector<u32>{0, 3, 1}), PreconditionError);
}

TEST(Permutation, GroupLawsOnRandomElements) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const Permutation a = random_perm(n, rng), b = random_perm(n, rng), c = random_perm(n, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ(a.conjugate_by(b), b.inverse() * a * b);
    EXPECT_EQ(a.order(), naive_order(a));
    EXPECT_TRUE(a.pow(a.order()).is_identity());
    EXPECT_EQ(a.pow(5), a * a * a * a * a);
    EXPECT_EQ(CycleType::of(a), CycleType::of(a.conjugate_by(b)));
  }
}

TEST(Permutation, CycleNotationRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Permutation a = random_perm(9, rng);
    EXPECT_EQ(parse_cycles(render_cycles(a), 9), a);
  }
  EXPECT_EQ(render_cycles(Permutation::identity(4)), "()");
}

TEST(Permutation, ParseErrors) {
  EXPECT_THROW(parse_cycles("(1 2", 4), ParseError);
  EXPECT_THROW(parse_cycles("(1 5)", 4), ParseError);
  EXPECT_THROW(parse_cycles("(1 2 1)", 4), ParseError);
  EXPECT_THROW(parse_cycles("(0 1)", 4), ParseError);
  EXPECT_THROW(parse_cycles("(a b)", 4), ParseError);
}

TEST(Permutation, ParseRequiresDisjointCycles) {
  EXPECT_THROW(parse_cycles("(1 2)(2 3)", 3), ParseError);
  EXPECT_EQ(parse_cycles("(1 2)(3 4)", 4), parse_cycles("(3 4)(2 1)", 4));
}

TEST(CycleType, OrderAndRepresentative) {
  const Permutation g = parse_cycles("(1 2)(3 4 5)(6 7 8 9 10)", 10);
  const CycleType ct = CycleType::of(g);
  EXPECT_EQ(ct.to_string(), "[5,3,2]");
  EXPECT_EQ(ct.order(), 30u);
  EXPECT_EQ(g.order(), 30u);
  EXPECT_EQ(CycleType::of(ct.representative()), ct);
  EXPECT_EQ(CycleType(std::vector<u32>{2, 1, 3}).to_string(), "[3,2,1]");
  EXPECT_THROW(CycleType(std::vector<u32>{2, 0}), PreconditionError);
}

TEST(Partitions, CountsMatchCoinChangeOracle) {
  for (u32 m = 1; m <= 25; ++m) EXPECT_EQ(partitions_of(m).size(), naive_partition_count(m)) << m;
}

TEST(Partitions, AllDistinctAndSumToM) {
  const auto ps = partitions_of(12);
  std::set<std::vector<u32>> seen;
  for (const auto& ct : ps) {
    EXPECT_EQ(ct.degree(), 12u);
    EXPECT_TRUE(seen.insert({ct.parts().begin(), ct.parts().end()}).second);
  }
}

TEST(Primes, SieveMatchesTrialDivision) {
  auto trial = [](u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (u64 n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), trial(n)) << n;
  EXPECT_EQ(first_primes(5), (std::vector<u64>{2, 3, 5, 7, 11}));
}

TEST(Primes, FactorizationReconstructs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const u64 n = 1 + rng() % 100'000'000;
    const Factorization f = factorize(n);
    EXPECT_EQ(f.reconstruct(), n);
    for (const auto& pp : f.prime_powers()) EXPECT_TRUE(is_prime(pp.prime));
  }
  EXPECT_EQ(factorize(360).omega(), 3u);
  EXPECT_EQ(factorize(360).radical(), 30u);
  EXPECT_EQ(factorize(360).maximal_prime_powers(), (std::vector<u64>{8, 9, 5}));
}

TEST(Thresholds, SumsOfFirstPrimes) {
  EXPECT_EQ(nk_threshold(1), 5u);
  EXPECT_EQ(nk_threshold(2), 10u);
  EXPECT_EQ(nk_threshold(3), 17u);
  EXPECT_EQ(nk_threshold(4), 28u);
}

TEST(Combinatorics, BinomialMatchesPascal) {
  std::vector<std::vector<u64>> pascal(41, std::vector<u64>(41, 0));
  for (u64 n = 0; n <= 40; ++n) {
    pascal[n][0] = 1;
    for (u64 k = 1; k <= n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + (k < n ? pascal[n - 1][k] : 0);
  }
  for (u64 n = 0; n <= 40; ++n)
    for (u64 k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), pascal[n][k]);
  EXPECT_EQ(factorial(10), 3628800u);
  EXPECT_EQ(lcm_u64(4, 6), 12u);
}
