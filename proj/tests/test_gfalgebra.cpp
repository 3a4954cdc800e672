#include <gtest/gtest.h>

#include <random>
#include <set>

#include "regcycle/gfalgebra.hpp"

using namespace regcycle;

namespace {

u64 gl_order(u64 q, u64 d) {
  u64 qd = 1;
  for (u64 i = 0; i < d; ++i) qd *= q;
  u64 out = 1, qi = 1;
  for (u64 i = 0; i < d; ++i) {
    out *= qd - qi;
    qi *= q;
  }
  return out;
}

Matrix random_matrix(const Field& f, std::size_t d, std::mt19937_64& rng) {
  std::vector<FieldElem> e(d * d);
  for (auto& x : e) x = static_cast<FieldElem>(rng() % f.q());
  return Matrix(f, d, d, e);
}

u64 naive_matrix_order(const Matrix& m) {
  const Matrix I = Matrix::identity(m.field(), m.rows());
  Matrix p = m;
  u64 k = 1;
  while (!(p == I)) {
    p = p * m;
    ++k;
  }
  return k;
}

}  // namespace

class FieldAxioms : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FieldAxioms, ExhaustiveRingLawsAndInverses) {
  const Field& f = Field::get(GetParam());
  const std::uint32_t q = f.q();
  for (std::uint32_t a = 0; a < q; ++a) {
    EXPECT_EQ(f.add(a, 0), a);
    EXPECT_EQ(f.mul(a, 1), a);
    EXPECT_EQ(f.add(a, f.neg(a)), 0);
    if (a) {
      EXPECT_EQ(f.mul(a, f.inv(a)), 1);
    }
    for (std::uint32_t b = 0; b < q; ++b) {
      EXPECT_EQ(f.add(a, b), f.add(b, a));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      EXPECT_EQ(f.sub(f.add(a, b), b), a);
      if (a && b) {
        EXPECT_NE(f.mul(a, b), 0);
      }
      for (std::uint32_t c = 0; c < q; ++c) {
        EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      }
    }
  }
}

TEST_P(FieldAxioms, PrimitiveElementGeneratesUnits) {
  const Field& f = Field::get(GetParam());
  std::set<FieldElem> powers;
  const FieldElem g = f.primitive_element();
  for (std::uint32_t i = 0; i + 1 < f.q(); ++i) powers.insert(f.pow(g, i));
  EXPECT_EQ(powers.size(), f.q() - 1);
  EXPECT_FALSE(powers.count(0));
}

TEST_P(FieldAxioms, FrobeniusIsAnAutomorphism) {
  const Field& f = Field::get(GetParam());
  std::set<FieldElem> image;
  for (std::uint32_t a = 0; a < f.q(); ++a) {
    image.insert(f.frobenius(a));
    for (std::uint32_t b = 0; b < f.q(); ++b) {
      EXPECT_EQ(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
      EXPECT_EQ(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
    }
  }
  EXPECT_EQ(image.size(), f.q());
}

TEST_P(FieldAxioms, SquaresAreHalfTheUnitsInOddCharacteristic) {
  const Field& f = Field::get(GetParam());
  std::uint32_t squares = 0;
  for (std::uint32_t a = 1; a < f.q(); ++a) squares += f.is_square(a) ? 1 : 0;
  EXPECT_EQ(squares, f.characteristic() == 2 ? f.q() - 1 : (f.q() - 1) / 2);
}

INSTANTIATE_TEST_SUITE_P(SupportedFields, FieldAxioms, ::testing::Values(2, 3, 4, 5, 7, 8, 9, 11, 13));

TEST(Field, RejectsUnsupportedOrders) {
  EXPECT_THROW(Field::get(6), PreconditionError);
  EXPECT_THROW(Field::get(1), PreconditionError);
}

TEST(Matrix, GeneralLinearOrders) {
  for (auto [d, q] : std::vector<std::pair<std::size_t, std::uint32_t>>{{1, 7}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}})
    EXPECT_EQ(enumerate_gl(Field::get(q), d).size(), gl_order(q, d)) << d << "," << q;
}

TEST(Matrix, DeterminantInverseAndOrder) {
  std::mt19937_64 rng(5);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
    const Field& f = Field::get(q);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t d = 1 + trial % 3;
      const Matrix a = random_matrix(f, d, rng), b = random_matrix(f, d, rng);
      EXPECT_EQ((a * b).determinant(), f.mul(a.determinant(), b.determinant()));
      EXPECT_EQ(a.invertible(), a.rank() == d);
      if (!a.invertible()) continue;
      EXPECT_EQ(a * a.inverse(), Matrix::identity(f, d));
      EXPECT_EQ(a.order(), naive_matrix_order(a));
    }
  }
}

TEST(Matrix, RowVectorConvention) {
  const Field& f = Field::get(3);
  const Matrix m(f, 2, 2, {1, 1, 0, 1});
  EXPECT_EQ(m.act(Vec{1, 0}), (Vec{1, 1}));
  EXPECT_EQ(m.act(Vec{0, 1}), (Vec{0, 1}));
  const Matrix n(f, 2, 2, {0, 1, 1, 0});
  const Vec w{1, 2};
  EXPECT_EQ((m * n).act(w), n.act(m.act(w)));
}

TEST(AffineMap, CompositionAndOrder) {
  const Field& f = Field::get(3);
  const AffineMap t{Matrix::identity(f, 2), Vec{1, 0}};
  EXPECT_EQ(t.order(), 3u);
  const AffineMap s{Matrix(f, 2, 2, {0, 1, 1, 0}), Vec{0, 0}};
  const Vec w{2, 1};
  EXPECT_EQ((t * s).act(w), s.act(t.act(w)));
  EXPECT_EQ((t * s).block_matrix(), t.block_matrix() * s.block_matrix());
}

TEST(ProjectiveLine, MatrixActionIsAHomomorphism) {
  for (std::uint32_t q : {4u, 5u, 9u}) {
    const Field& f = Field::get(q);
    const auto gl = enumerate_gl(f, 2);
    std::mt19937_64 rng(q);
    for (int trial = 0; trial < 50; ++trial) {
      const Matrix& a = gl[rng() % gl.size()];
      const Matrix& b = gl[rng() % gl.size()];
      EXPECT_EQ(projective_permutation(a * b), projective_permutation(a) * projective_permutation(b));
    }
    for (std::size_t i = 0; i < projective_line_size(f); ++i)
      EXPECT_EQ(projective_index(f, projective_point(f, i)), i);
  }
}

TEST(Vectors, IndexRoundTrip) {
  const Field& f = Field::get(4);
  for (u64 i = 0; i < 64; ++i) EXPECT_EQ(vector_index(f, vector_from_index(f, 3, i)), i);
}
