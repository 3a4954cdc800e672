#include <gtest/gtest.h>

#include <cmath>

#include "regcycle/bounds.hpp"

using namespace regcycle;

namespace {

// Landau oracle: maximum order over all cycle types of Sym(m).
u64 landau_by_partitions(u32 m) {
  u64 best = 1;
  for_each_partition(m, [&](const CycleType& ct) { best = std::max(best, ct.order()); });
  return best;
}

double massias_double(double m) {
  const double L = std::log(m);
  return std::sqrt(m * L) * (1 + (std::log(L) - 0.975) / (2 * L));
}

}  // namespace

TEST(CheckLeq, TriState) {
  const DI one = DI::constant(1.0), two = DI::constant(2.0);
  EXPECT_EQ(check_leq(one, two).status, CheckStatus::pass);
  EXPECT_EQ(check_leq(two, one).status, CheckStatus::fail);
  EXPECT_EQ(check_leq(one, one).status, CheckStatus::inconclusive);
  EXPECT_EQ(check_leq(one, DI::constant(1.0 + 1e-12)).status, CheckStatus::inconclusive);
  EXPECT_EQ(check_leq(one, DI::constant(1.0 + 1e-12), 0.0).status, CheckStatus::pass);
}

TEST(Interval, EnclosesDoubleEvaluation) {
  for (double x : {0.5, 1.0, 2.0, 10.0, 1e4}) {
    const DI X = DI::constant(x);
    EXPECT_TRUE(log(X).contains(std::log(x)));
    EXPECT_TRUE(exp(X / DI::constant(100.0)).contains(std::exp(x / 100)));
    EXPECT_TRUE(sqrt(X).contains(std::sqrt(x)));
  }
  const DI huge = exp(DI::constant(1e4));
  EXPECT_FALSE(std::isnan(huge.lo()));
  EXPECT_TRUE(std::isinf(huge.hi()));
  EXPECT_TRUE(pi_interval<double>().contains(M_PI));
  EXPECT_LT(to_double(pi_interval<HighFloat>().width()), 1e-40);
}

TEST(Robin, ExamplesAndSweep) {
  const DI b30 = robin_bound(30);
  EXPECT_TRUE(b30.contains(std::log(30.0) / (std::log(std::log(30.0)) - 1.1714)));
  EXPECT_NEAR(to_double(b30.mid()), 64.5, 0.1);
  EXPECT_GE(to_double(robin_bound(26).lo()), 2.0);
  EXPECT_THROW(robin_bound(25), PreconditionError);
  const RobinSweep s = robin_sweep(26, 100'000);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.checked, 100'000u - 25u);
}

TEST(Landau, ExactValuesMatchPartitionOracle) {
  EXPECT_EQ(landau_exact(3), 3u);
  EXPECT_EQ(landau_exact(5), 6u);
  EXPECT_EQ(landau_exact(10), 30u);
  EXPECT_EQ(landau_exact(100), 232792560u);
  for (u32 m = 1; m <= 40; ++m) EXPECT_EQ(landau_exact(m), landau_by_partitions(m)) << m;
  for (u32 m = 2; m <= 200; ++m) EXPECT_LE(landau_exact(m - 1), landau_exact(m));
  EXPECT_THROW(landau_exact(201), PreconditionError);
}

TEST(Massias, ExamplesAndBoundary) {
  const HI b10 = massias_bound(10);
  EXPECT_NEAR(to_double(b10.mid()), 4.652, 5e-4);
  EXPECT_NEAR(to_double(b10.mid()), massias_double(10), 1e-12);
  EXPECT_TRUE(landau_vs_massias(10).passed());
  EXPECT_TRUE(landau_vs_massias(4).passed());
  // the bound dips below log 3 at m = 3
  EXPECT_NEAR(to_double(massias_bound(3).mid()), 1.0876, 1e-4);
  EXPECT_EQ(landau_vs_massias(3).status, CheckStatus::fail);
  for (u32 m = 4; m <= 200; ++m) EXPECT_TRUE(landau_vs_massias(m).passed()) << m;
  EXPECT_THROW(massias_bound(2), PreconditionError);
}

TEST(Stirling, BracketsHoldWhereResolvable) {
  for (u32 n : {1u, 2u, 10u, 50u, 140u}) {
    const StirlingResult r = stirling_check(n);
    EXPECT_TRUE(r.lower.passed()) << n;
    EXPECT_TRUE(r.upper.passed()) << n;
  }
  // the upper slack is about 1/(360 n^3), below 1e-9 once n >= 141
  const StirlingResult far = stirling_check(1000);
  EXPECT_TRUE(far.lower.passed());
  EXPECT_EQ(far.upper.status, CheckStatus::inconclusive);
  EXPECT_TRUE(stirling_check(1000, 1e-30).upper.passed());
  EXPECT_GT(far.upper.slack, 0.0);
}

TEST(Technical, ExamplesAndSweep) {
  EXPECT_TRUE(technical_inequality(14, 4, 2, Rational(4, 7)).passed());
  EXPECT_TRUE(technical_inequality(14, 2, 7, Rational(4, 7)).passed());  // r = 0
  EXPECT_THROW(technical_inequality(14, 1, 2, Rational(4, 7)), PreconditionError);  // r = 12 > 8
  EXPECT_THROW(technical_inequality(14, 8, 2, Rational(4, 7)), PreconditionError);  // r < 0
  const TechnicalSweep s = technical_sweep(3, 200);
  EXPECT_TRUE(s.ok());
  EXPECT_GT(s.checked, 100'000u);
}

TEST(AlphaBeta, MarotiBoundIsExact) {
  for (u64 m : {47u, 64u, 100u}) {
    BigInt want = m;
    for (u64 i = 0; (u64{1} << (i + 1)) <= m; ++i) want *= m - (u64{1} << i);
    EXPECT_EQ(maroti_bound(m), want) << m;
  }
}

TEST(AlphaBeta, ProductBelowOne) {
  const BoundsContext c47 = bounds_context(47);
  EXPECT_TRUE(c47.product.passed());
  EXPECT_TRUE(c47.product_exact.passed());
  EXPECT_NEAR(to_double(exp(c47.log_product).mid()), 0.364, 1e-3);
  EXPECT_TRUE(bounds_context(144).product.passed());
  const AlphaBetaScan s = alpha_beta_scan(47, 2000);
  EXPECT_TRUE(s.ok());
  EXPECT_TRUE(s.tail_decreasing_off_powers_of_two());
  EXPECT_THROW(alpha_beta_scan(46, 50), PreconditionError);
}

TEST(WreathCase, ExamplesAndPrecondition) {
  EXPECT_TRUE(wreath_case_bound(13, 2, 1).product.passed());
  EXPECT_TRUE(wreath_case_bound(6, 2, 2).product.passed());
  EXPECT_THROW(wreath_case_bound(12, 2, 1), PreconditionError);
  EXPECT_FALSE(wreath_case_bound(13, 2, 1).paper_exception);
}

TEST(Diagonal, CrudeBoundIsExact) {
  EXPECT_EQ(diagonal_crude_bound(5, 3, 1), Rational(3, 5) + Rational(4, 15) + Rational(1, 59));
  const Rational alt7 = diagonal_crude_bound(7, 4, 1);
  EXPECT_EQ(alt7, Rational(4, 7) + Rational(4, 15) + Rational(1, 59));
  EXPECT_LT(alt7, Rational(1));
  EXPECT_LT(diagonal_crude_bound(1000, 4, 3), Rational(4, 15) + Rational(1, 58));
  EXPECT_THROW(diagonal_crude_bound(4, 2, 1), PreconditionError);
}

TEST(E8, HoldsForAllPrimePowersUpTo1024) {
  EXPECT_TRUE(e8_demo(2).passed());
  EXPECT_NEAR(std::exp(-e8_demo(2).slack), 58.0 / 3840.0, 1e-12);
  u64 count = 0;
  for (u64 q = 2; q <= 1024; ++q)
    if (is_prime_power(q)) {
      ++count;
      EXPECT_TRUE(e8_demo(q).passed()) << q;
    }
  EXPECT_EQ(count, 198u);  // 172 primes and 26 proper prime powers
}
