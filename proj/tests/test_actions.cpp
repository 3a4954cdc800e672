#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "regcycle/actions.hpp"

using namespace regcycle;

namespace {

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<u32> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

AffineMap random_affine(const Field& f, std::size_t d, std::mt19937_64& rng) {
  const auto gl = enumerate_gl(f, d);
  Vec t(d);
  for (auto& x : t) x = static_cast<FieldElem>(rng() % f.q());
  return {gl[rng() % gl.size()], t};
}

// Right action: x^(gh) = (x^g)^h, and rank/unrank are inverse bijections.
template <class A, class Gen>
void expect_right_action(const A& act, Gen&& random_element, std::mt19937_64& rng, int trials = 40) {
  for (u64 i = 0; i < act.size(); ++i) ASSERT_EQ(act.rank(act.unrank(i)), i);
  for (int t = 0; t < trials; ++t) {
    const auto g = random_element(rng), h = random_element(rng);
    const auto x = act.unrank(rng() % act.size());
    EXPECT_EQ(act.apply(g * h, x), act.apply(h, act.apply(g, x)));
    const Permutation p = induced_permutation(act, g);
    EXPECT_EQ(act.group_order(g) % p.order(), 0u);
    const auto lens = orbit_lengths(p);
    EXPECT_EQ(std::accumulate(lens.begin(), lens.end(), u64{0}), act.size());
    EXPECT_EQ(orbit_length(act, g, x), element_orbit(act, g, x).length);
  }
}

}  // namespace

TEST(NaturalAction, IsTheIdentityEmbedding) {
  std::mt19937_64 rng(1);
  NaturalAction act(7);
  expect_right_action(act, [](auto& r) { return random_perm(7, r); }, rng);
  EXPECT_EQ(act.render(0), "1");
  EXPECT_THROW(act.check_element(Permutation::identity(6)), PreconditionError);
}

TEST(KSetAction, MatchesSetImageOracle) {
  std::mt19937_64 rng(2);
  for (std::size_t m = 2; m <= 9; ++m)
    for (std::size_t k = 1; k < m; ++k) {
      KSetAction act(m, k);
      EXPECT_EQ(act.size(), binomial(m, k));
      expect_right_action(act, [m](auto& r) { return random_perm(m, r); }, rng, 10);
      const Permutation g = random_perm(m, rng);
      for (u64 i = 0; i < act.size(); ++i) {
        const auto x = act.unrank(i);
        std::set<u32> image;
        for (u32 p : x) image.insert(g(p));
        const auto y = act.apply(g, x);
        EXPECT_EQ(std::set<u32>(y.begin(), y.end()), image);
      }
    }
}

TEST(KSetAction, IntroExampleOrbitLengths) {
  KSetAction act(10, 2);
  const Permutation g = parse_cycles("(1 2)(3 4 5)(6 7 8 9 10)", 10);
  EXPECT_EQ(orbit_lengths(induced_permutation(act, g)), (std::vector<u64>{1, 3, 5, 5, 6, 10, 15}));
}

TEST(PartitionAction, SizeAndHomomorphism) {
  std::mt19937_64 rng(3);
  const std::map<std::pair<std::size_t, std::size_t>, u64> expected{
      {{2, 2}, 3}, {{2, 3}, 15}, {{3, 2}, 10}, {{2, 4}, 105}, {{4, 2}, 35}, {{3, 3}, 280}, {{2, 5}, 945}, {{5, 2}, 126}};
  for (const auto& [ab, count] : expected) {
    PartitionAction act(ab.first, ab.second);
    EXPECT_EQ(act.size(), count);
    const std::size_t n = ab.first * ab.second;
    expect_right_action(act, [n](auto& r) { return random_perm(n, r); }, rng, 15);
  }
  EXPECT_TRUE(PartitionAction(2, 2).unfaithful());
  EXPECT_FALSE(PartitionAction(2, 3).unfaithful());
}

TEST(PartitionAction, ImagesAreCanonicalPartitions) {
  PartitionAction act(3, 3);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const Permutation g = random_perm(9, rng);
    const auto x = act.unrank(rng() % act.size());
    const auto y = act.apply(g, x);
    EXPECT_NO_THROW(act.check_point(y));
    std::set<std::set<u32>> want, got;
    for (const auto& blk : x) {
      std::set<u32> s;
      for (u32 p : blk) s.insert(g(p));
      want.insert(s);
    }
    for (const auto& blk : y) got.insert(std::set<u32>(blk.begin(), blk.end()));
    EXPECT_EQ(got, want);
  }
}

TEST(ProductAction, CoordinateRule) {
  std::mt19937_64 rng(5);
  ProductAction<NaturalAction> act(NaturalAction(4), 3);
  EXPECT_EQ(act.size(), 64u);
  auto gen = [](auto& r) {
    WreathElement<Permutation> w;
    for (int i = 0; i < 3; ++i) w.coords.push_back(random_perm(4, r));
    w.sigma = random_perm(3, r);
    return w;
  };
  expect_right_action(act, gen, rng);
  for (int t = 0; t < 50; ++t) {
    const auto w = gen(rng);
    const auto x = act.unrank(rng() % 64);
    const auto y = act.apply(w, x);
    for (u32 i = 0; i < 3; ++i) EXPECT_EQ(y[w.sigma(i)], w.coords[i](x[i]));
  }
}

TEST(VectorAndAffineActions, Homomorphism) {
  std::mt19937_64 rng(6);
  const Field& f = Field::get(3);
  const auto gl = enumerate_gl(f, 2);
  VectorAction va(f, 2);
  EXPECT_EQ(va.size(), 9u);
  expect_right_action(va, [&](auto& r) { return gl[r() % gl.size()]; }, rng);
  AffineAction aa(f, 2);
  expect_right_action(aa, [&](auto& r) { return random_affine(f, 2, r); }, rng);
}

TEST(DiagonalAction, InducedMatchesApply) {
  const AmbientAutomorphisms amb(alternating_group(5), symmetric_group(5));
  const DiagonalSetting S(amb, 1);
  DiagonalAction act(S);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    const DiagonalElement x = S.random_element(rng);
    const Permutation p = act.induced(x);
    for (u64 i = 0; i < act.size(); ++i) EXPECT_EQ(p(static_cast<u32>(i)), act.rank(act.apply(x, act.unrank(i))));
  }
}

TEST(CosetAction, PointStabilizerCosetsMatchNaturalAction) {
  const GeneratedGroup G = symmetric_group(5);
  const CosetAction act = coset_action(G, G.stabilizer(0), "point");
  EXPECT_EQ(act.size(), 5u);
  EXPECT_EQ(act.name(), "cosets:point");
  for (const auto& g : G.elements())
    EXPECT_EQ(CycleType::of(induced_permutation(act, g)), CycleType::of(g));
}

TEST(FixedPoints, RatioMatchesCount) {
  KSetAction act(6, 2);
  const Permutation g = parse_cycles("(1 2)", 6);
  const auto [fs, r] = fix_and_fpr(act, g, 2);
  EXPECT_EQ(fs.count, 7u);  // {1,2} and the six pairs inside {3..6}
  EXPECT_EQ(r, Rational(7, 15));
  EXPECT_EQ(fixed_points(induced_permutation(act, g)).count, 7u);
}

TEST(Caps, InducedPermutationRespectsDomainCap) {
  KSetAction act(30, 10);
  EXPECT_THROW(induced_permutation(act, Permutation::identity(30), 1000), CapExceeded);
}
