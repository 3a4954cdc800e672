#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <random>

#include "regcycle/regcycle.hpp"

using namespace regcycle;

namespace {

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<u32> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

// Independent oracle: walk every point with `apply` and compare each orbit
// length with the element order computed by repeated multiplication.
template <class A>
bool oracle_has_regular_cycle(const A& act, const Permutation& g) {
  u64 order = 1;
  for (Permutation q = g; !q.is_identity(); q = q * g) ++order;
  for (u64 i = 0; i < act.size(); ++i) {
    const auto x = act.unrank(i);
    u64 len = 1;
    for (auto y = act.apply(g, x); !(y == x); y = act.apply(g, y)) ++len;
    if (len == order) return true;
  }
  return false;
}

}  // namespace

TEST(Decide, IntroExampleHasNoRegularCycle) {
  KSetAction act(10, 2);
  const Permutation g = parse_cycles("(1 2)(3 4 5)(6 7 8 9 10)", 10);
  const auto v = decide_bruteforce(act, g);
  EXPECT_EQ(v.order, 30u);
  EXPECT_EQ(v.induced_order, 30u);
  EXPECT_FALSE(v.has_regular_cycle);
  EXPECT_TRUE(v.certified);
  EXPECT_FALSE(decide_fix_union(act, g).has_regular_cycle);
}

TEST(Decide, BruteForceAndFixUnionMatchOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 4 + trial % 6;
    const Permutation g = random_perm(m, rng);
    for (std::size_t k = 1; 2 * k <= m; ++k) {
      KSetAction act(m, k);
      const bool want = oracle_has_regular_cycle(act, g);
      const auto bv = decide_bruteforce(act, g);
      const auto fv = decide_fix_union(act, g);
      ASSERT_EQ(bv.has_regular_cycle, want) << render_cycles(g) << " k=" << k;
      ASSERT_EQ(fv.has_regular_cycle, want) << render_cycles(g) << " k=" << k;
      if (bv.witness) {
        EXPECT_TRUE(is_regular_point(act, g, *bv.witness));
      }
      if (fv.witness) {
        EXPECT_TRUE(is_regular_point(act, g, *fv.witness));
      }
    }
  }
}

TEST(Decide, UnfaithfulActionIsFlagged) {
  PartitionAction act(2, 2);
  const auto v = decide_bruteforce(act, parse_cycles("(1 2)(3 4)", 4));
  EXPECT_EQ(v.induced_order, 1u);
  EXPECT_FALSE(v.has_regular_cycle);
  EXPECT_FALSE(v.flags.empty());
}

TEST(Decide, CertifyRejectsNonRegularPoint) {
  KSetAction act(10, 2);
  const Permutation g = parse_cycles("(1 2)(3 4 5)(6 7 8 9 10)", 10);
  EXPECT_THROW(certify(act, g, std::vector<u32>{0, 1}), std::logic_error);
}

TEST(FprSum, CertificateImpliesRegularCycle) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const Permutation g = random_perm(8, rng);
    if (g.order() < 2) continue;
    KSetAction act(8, 3);
    const FprSum s = fpr_sum_sufficient(act, g);
    if (s.certificate) {
      EXPECT_TRUE(decide_bruteforce(act, g).has_regular_cycle);
    }
  }
  EXPECT_THROW(fpr_sum_sufficient(NaturalAction(3), Permutation::identity(3)), PreconditionError);
}

TEST(LiftWitness, AcceptsLiftableAndRejectsOthers) {
  NaturalAction act(4);
  const Permutation g = parse_cycles("(1 2 3 4)", 4);
  EXPECT_EQ(lift_witness(act, g, 2, 0u), 0u);
  EXPECT_THROW(lift_witness(act, parse_cycles("(1 2)(3 4 5)", 5), 2, 0u), PreconditionError);
}

TEST(KSets, MinimalCoverExamples) {
  const std::vector<u32> a{5, 3, 2};
  EXPECT_EQ(minimal_cover(a).lengths, (std::vector<u64>{2, 3, 5}));
  const std::vector<u32> b{6, 3, 2};
  EXPECT_EQ(minimal_cover(b).lengths, (std::vector<u64>{6}));
  const std::vector<u32> c{4, 6, 1};
  EXPECT_EQ(minimal_cover(c).lengths.size(), 2u);
}

TEST(KSets, DecisionMatchesOracleForSmallDegrees) {
  for (u32 m = 2; m <= 10; ++m)
    for (const auto& ct : partitions_of(m))
      for (std::size_t k = 1; 2 * k <= m; ++k) {
        const Permutation g = ct.representative();
        const auto [dec, v] = kset_decide(ct, k);
        ASSERT_EQ(v.has_regular_cycle, oracle_has_regular_cycle(KSetAction(m, k), g)) << ct.to_string() << " k=" << k;
        if (v.has_regular_cycle) {
          const auto w = kset_witness(g, k);
          EXPECT_EQ(w.size(), k);
          EXPECT_TRUE(is_regular_point(KSetAction(m, k), g, w));
        }
      }
}

TEST(KSets, ThresholdScans) {
  EXPECT_TRUE(ksets_theorem_scan(16, 3).failures.empty());
  const auto at17 = ksets_theorem_scan(17, 3);
  ASSERT_FALSE(at17.failures.empty());
  EXPECT_TRUE(at17.consistent);
  EXPECT_EQ(at17.failures.front().cycle_type.to_string(), "[7,5,3,2]");
  const auto at10 = ksets_theorem_scan(10, 2);
  ASSERT_EQ(at10.failures.size(), 1u);
  EXPECT_EQ(at10.failures[0].cycle_type.to_string(), "[5,3,2]");
  EXPECT_THROW(ksets_theorem_scan(5, 3), PreconditionError);
}

TEST(Partitions, WitnessesAreCertifiedOnRandomElements) {
  std::mt19937_64 rng(23);
  for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}, {3, 2}, {2, 4}, {4, 2}, {3, 3}, {2, 5}, {5, 2}, {3, 4}, {4, 3}, {2, 6}, {6, 2}, {5, 5}, {4, 6}}) {
    PartitionAction act(a, b);
    for (int trial = 0; trial < 60; ++trial) {
      const Permutation g = random_perm(a * b, rng);
      const auto w = partition_witness(g, a, b);
      EXPECT_TRUE(is_regular_point(act, g, w)) << a << "x" << b << " " << render_cycles(g);
    }
  }
}

TEST(Partitions, TwoByTwoIsExceptional) {
  EXPECT_THROW(partition_witness(parse_cycles("(1 2 3 4)", 4), 2, 2), ExceptionalCase);
  PartitionAction act(2, 2);
  const auto lens = orbit_lengths(induced_permutation(act, parse_cycles("(1 2 3 4)", 4)));
  EXPECT_EQ(lens, (std::vector<u64>{1, 2}));
}

TEST(Product, WitnessOnRandomWreathElements) {
  std::mt19937_64 rng(24);
  for (auto [n, r] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {3, 3}, {4, 2}, {4, 3}, {2, 4}}) {
    ProductAction<NaturalAction> act(NaturalAction(n), r);
    for (int trial = 0; trial < 100; ++trial) {
      WreathElement<Permutation> w;
      for (std::size_t i = 0; i < r; ++i) w.coords.push_back(random_perm(n, rng));
      w.sigma = random_perm(r, rng);
      const auto x = product_witness(act, w);
      EXPECT_TRUE(is_regular_point(act, w, x));
    }
  }
}

TEST(Product, InnerElementWithoutRegularCycleIsRejected) {
  ProductAction<NaturalAction> act(NaturalAction(5), 1);
  WreathElement<Permutation> w{{parse_cycles("(1 2)(3 4 5)", 5)}, Permutation::identity(1)};
  EXPECT_THROW(product_witness(act, w), PreconditionError);
}

TEST(Linear, RegularVectorsSpan) {
  for (auto [d, q] : std::vector<std::pair<std::size_t, std::uint32_t>>{{1, 7}, {2, 3}, {2, 4}, {3, 2}}) {
    for (const auto& g : enumerate_gl(Field::get(q), d)) {
      const SpanningSet s = gl_regular_vector_set(g);
      EXPECT_TRUE(s.spans) << g.to_string();
      for (const auto& v : s.regular_vectors) EXPECT_TRUE(is_regular_point(VectorAction(Field::get(q), d), g, v));
    }
  }
}

TEST(Affine, WitnessOnEveryMapOfAgl23) {
  const Field& f = Field::get(3);
  AffineAction act(f, 2);
  for (const auto& m : enumerate_gl(f, 2))
    for (u64 t = 0; t < 9; ++t) {
      const AffineMap g{m, vector_from_index(f, 2, t)};
      EXPECT_TRUE(is_regular_point(act, g, affine_witness(g)));
    }
}

TEST(WreathFpr, MaxEqualsInnerMax) {
  const auto rep = wreath_fpr_max(symmetric_group(3), symmetric_group(2));
  EXPECT_TRUE(rep.equal);
  EXPECT_EQ(rep.inner_max, Rational(1, 3));
  EXPECT_EQ(rep.elements_scanned, 72u);
  EXPECT_THROW(wreath_fpr_max(closure({cycle_perm(3, {1, 2, 3})}, 3), symmetric_group(2)), PreconditionError);
}

TEST(MinDegree, BuiltInTableAndUserOverride) {
  EXPECT_EQ(min_degree_entry("alt", 7).min_degree, 7u);
  EXPECT_EQ(min_degree_entry("psl2", 9).min_degree, 6u);
  EXPECT_EQ(min_degree_entry("psl2", 8).min_degree, 9u);
  EXPECT_THROW(min_degree_entry("sz", 8), PreconditionError);
  const std::string path = ::testing::TempDir() + "mt_table.tsv";
  std::ofstream(path) << "sz\t8\t65\t4\n";
  ::setenv("REGCYCLE_MT_TABLE", path.c_str(), 1);
  EXPECT_EQ(min_degree_entry("sz", 8).min_degree, 65u);
  ::unsetenv("REGCYCLE_MT_TABLE");
}

TEST(Diagonal, Alt5InvolutionSwapAttainsFourFifteenths) {
  const AmbientAutomorphisms amb(alternating_group(5), symmetric_group(5));
  const DiagonalSetting S(amb, 1);
  const DiagonalAudit audit = diagonal_fpr_audit(S, 5);
  EXPECT_TRUE(audit.ok);
  EXPECT_EQ(audit.involution_swap_fpr, Rational(4, 15));
}

TEST(CycleRatio, CountsRegularCycles) {
  const auto r = cycle_ratio_stats(NaturalAction(5), parse_cycles("(1 2 3)(4 5)", 5));
  EXPECT_EQ(r.regular_cycles, 0u);
  EXPECT_EQ(r.total_cycles, 2u);
  const auto s = cycle_ratio_stats(NaturalAction(4), parse_cycles("(1 2)", 4));
  EXPECT_EQ(s.ratio, Rational(1, 3));
}
