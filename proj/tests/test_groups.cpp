#include <gtest/gtest.h>

#include <random>

#include "regcycle/groups.hpp"

using namespace regcycle;

TEST(Closure, ClassicalOrders) {
  EXPECT_EQ(symmetric_group(5).order(), 120u);
  EXPECT_EQ(symmetric_group(6).order(), 720u);
  EXPECT_EQ(alternating_group(6).order(), 360u);
  EXPECT_EQ(alternating_group(3).order(), 3u);
  const GeneratedGroup A5 = alternating_group(5);
  for (const auto& g : A5.elements()) EXPECT_TRUE(is_even(g));
}

TEST(Closure, ProjectiveGroupOrders) {
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u}) {
    const u64 pgl = static_cast<u64>(q) * (q * q - 1);
    EXPECT_EQ(pgl2(q).order(), pgl) << q;
    EXPECT_EQ(psl2(q).order(), q % 2 ? pgl / 2 : pgl) << q;
  }
  EXPECT_EQ(pgammal2(9).order(), 1440u);
  EXPECT_EQ(pgammal2(8).order(), 1512u);
  EXPECT_EQ(mathieu10().order(), 720u);
}

TEST(Closure, M10IsNeitherPgl2NorSym6) {
  const GeneratedGroup M = mathieu10(), P = pgl2(9), S = psl2(9);
  u64 in_pgl = 0;
  for (const auto& g : M.elements()) in_pgl += P.contains(g) ? 1 : 0;
  EXPECT_EQ(in_pgl, S.order());
  // M10 has no elements of order 6 or 10, unlike PGL_2(9)
  for (const auto& g : M.elements()) EXPECT_TRUE(g.order() != 6 && g.order() != 10);
}

TEST(Closure, CapIsEnforced) { EXPECT_THROW(symmetric_group(8, 1000), CapExceeded); }

TEST(Groups, TransitivityAndStabilizers) {
  const GeneratedGroup P = pgl2(5);
  EXPECT_EQ(P.degree(), 6u);
  EXPECT_TRUE(P.is_transitive());
  EXPECT_EQ(P.stabilizer(0).order(), 20u);
  EXPECT_FALSE(closure({cycle_perm(6, {1, 2, 3})}, 6).is_transitive());
}

TEST(Groups, ConjugacyClassesOfSym5) {
  const auto classes = conjugacy_classes(symmetric_group(5));
  EXPECT_EQ(classes.size(), 7u);
  std::size_t total = 0;
  for (const auto& c : classes) {
    total += c.size();
    for (const auto& g : c) EXPECT_EQ(CycleType::of(g), CycleType::of(c.front()));
  }
  EXPECT_EQ(total, 120u);
}

TEST(Groups, NormalizerOfTransitivePgl25) {
  const GeneratedGroup S6 = symmetric_group(6);
  EXPECT_EQ(normalizer(S6, pgl2(5)).order(), 120u);
  EXPECT_EQ(normalizer(S6, alternating_group(6)).order(), 720u);
}

TEST(Groups, SetStabilizer) {
  EXPECT_EQ(set_stabilizer(symmetric_group(6), {0, 1}).order(), 48u);
}

TEST(CosetSpace, RightCosetActionIsAHomomorphism) {
  const GeneratedGroup G = symmetric_group(6);
  const GeneratedGroup H = pgl2(5);
  const CosetSpace cs(G, H);
  EXPECT_EQ(cs.size(), 6u);
  std::mt19937_64 rng(9);
  const auto& el = G.elements();
  for (int trial = 0; trial < 300; ++trial) {
    const auto& g = el[rng() % el.size()];
    const auto& h = el[rng() % el.size()];
    for (u32 c = 0; c < cs.size(); ++c) EXPECT_EQ(cs.apply(g * h, c), cs.apply(h, cs.apply(g, c)));
  }
  // the trivial coset is fixed exactly by H
  const u32 home = cs.coset_of(Permutation::identity(6));
  for (const auto& g : el) EXPECT_EQ(cs.apply(g, home) == home, H.contains(g));
}

TEST(CosetSpace, RejectsNonSubgroupAndCap) {
  const GeneratedGroup G = alternating_group(5);
  const GeneratedGroup H = closure({cycle_perm(5, {1, 2})}, 5);
  EXPECT_THROW(CosetSpace(G, H), PreconditionError);
  EXPECT_THROW(CosetSpace(symmetric_group(6), closure({Permutation::identity(6)}, 6), 100), CapExceeded);
}

TEST(AmbientAutomorphisms, Sym5RealizesAutAlt5) {
  const AmbientAutomorphisms amb(alternating_group(5), symmetric_group(5));
  EXPECT_EQ(amb.count(), 120u);
  const auto& T = amb.target();
  for (std::size_t r = 0; r < amb.count(); ++r)
    for (std::size_t s = 0; s < amb.count(); s += 17) {
      const std::size_t rs = amb.compose(r, s);
      for (u32 i = 0; i < T.order(); i += 7) EXPECT_EQ(amb.apply(rs, i), amb.apply(s, amb.apply(r, i)));
    }
}

TEST(DiagonalSetting, ActionMatchesGeneratedGroup) {
  const AmbientAutomorphisms amb(alternating_group(5), symmetric_group(5));
  const DiagonalSetting S(amb, 1);
  EXPECT_EQ(S.size(), 60u);
  const GeneratedGroup W = closure(S.generators(), 60);
  EXPECT_EQ(W.order(), 14400u);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const DiagonalElement x = S.random_element(rng), y = S.random_element(rng);
    EXPECT_EQ(S.to_permutation(S.multiply(x, y)), S.to_permutation(x) * S.to_permutation(y));
    EXPECT_TRUE(W.contains(S.to_permutation(x)));
  }
}
