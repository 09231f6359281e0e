#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "horadam/exact_scalars.hpp"
#include "horadam/octonion.hpp"
#include "support/oracles.hpp"

namespace horadam {
namespace {

using IntOct = Octonion<Integer>;

IntOct basis(std::size_t i) {
  IntOct e = IntOct::zero();
  e[i] = 1;
  return e;
}

IntOct from(std::initializer_list<long> values) {
  IntOct x = IntOct::zero();
  std::size_t i = 0;
  for (long v : values) x[i++] = v;
  return x;
}

TEST(MultiplicationTableTest, UnitRowAndColumn) {
  const MultiplicationTable t = build_table();
  for (std::size_t j = 0; j < kOctonionDim; ++j) {
    EXPECT_EQ(t(0, j), (BasisProduct{1, j}));
    EXPECT_EQ(t(j, 0), (BasisProduct{1, j}));
  }
}

TEST(MultiplicationTableTest, ImaginaryUnitsSquareToMinusOne) {
  const MultiplicationTable t = build_table();
  for (std::size_t i = 1; i < kOctonionDim; ++i) EXPECT_EQ(t(i, i), (BasisProduct{-1, 0}));
}

TEST(MultiplicationTableTest, DistinctImaginaryUnitsAnticommute) {
  const MultiplicationTable t = build_table();
  for (std::size_t i = 1; i < kOctonionDim; ++i) {
    for (std::size_t j = 1; j < kOctonionDim; ++j) {
      if (i == j) continue;
      EXPECT_EQ(t(i, j).index, t(j, i).index);
      EXPECT_EQ(t(i, j).sign, -t(j, i).sign);
      EXPECT_NE(t(i, j).index, 0U);
    }
  }
}

TEST(MultiplicationTableTest, QuaternionSubalgebraHasIjEqualsK) {
  const MultiplicationTable t = build_table();
  EXPECT_EQ(t(1, 2), (BasisProduct{1, 3}));
  EXPECT_EQ(t(2, 3), (BasisProduct{1, 1}));
  EXPECT_EQ(t(3, 1), (BasisProduct{1, 2}));
}

TEST(MultiplicationTableTest, MatchesQuaternionPairOracle) {
  const MultiplicationTable t = build_table();
  for (std::size_t i = 0; i < kOctonionDim; ++i) {
    for (std::size_t j = 0; j < kOctonionDim; ++j) {
      std::array<long long, 8> ei{}, ej{};
      ei[i] = 1;
      ej[j] = 1;
      const auto prod = testing::pair_product(ei, ej);
      std::array<long long, 8> expected{};
      expected[t(i, j).index] = t(i, j).sign;
      EXPECT_EQ(prod, expected) << i << "," << j;
    }
  }
}

TEST(MultiplicationTableTest, EachRowIsASignedPermutation) {
  const MultiplicationTable t = build_table();
  for (std::size_t i = 0; i < kOctonionDim; ++i) {
    std::array<int, kOctonionDim> seen{};
    for (std::size_t j = 0; j < kOctonionDim; ++j) ++seen[t(i, j).index];
    for (int s : seen) EXPECT_EQ(s, 1);
  }
}

TEST(MultiplicationTableTest, FixtureIsStable) {
  const std::string text = build_table().to_fixture();
  EXPECT_EQ(text, build_table().to_fixture());
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 64);
  EXPECT_NE(text.find("0 1 +1 1\n"), std::string::npos);

  std::ifstream in(std::string(HORADAM_FIXTURE_DIR) + "/octonion_table.txt", std::ios::binary);
  ASSERT_TRUE(in);
  std::ostringstream fixture;
  fixture << in.rdbuf();
  EXPECT_EQ(fixture.str(), text);
}

TEST(OctonionTest, UnitAndAnticommutation) {
  std::mt19937_64 rng(3);
  const IntOct x = testing::random_int_octonion(rng);
  EXPECT_EQ(x * basis(0), x);
  EXPECT_EQ(basis(0) * x, x);
  EXPECT_NE(basis(1) * basis(2), basis(2) * basis(1));
  EXPECT_EQ(basis(1) * basis(2), -(basis(2) * basis(1)));
}

TEST(OctonionTest, BasisTriplesWitnessNonAssociativity) {
  int failures = 0;
  for (std::size_t i = 1; i < kOctonionDim; ++i)
    for (std::size_t j = 1; j < kOctonionDim; ++j)
      for (std::size_t k = 1; k < kOctonionDim; ++k)
        if ((basis(i) * basis(j)) * basis(k) != basis(i) * (basis(j) * basis(k))) ++failures;
  EXPECT_GT(failures, 0);
  EXPECT_NE((basis(1) * basis(2)) * basis(4), basis(1) * (basis(2) * basis(4)));
}

TEST(OctonionTest, Conjugation) {
  EXPECT_EQ(oct_conj(basis(0)), basis(0));
  EXPECT_EQ(oct_conj(from({0, 1, 1, 2, 3, 5, 8, 13})), from({0, -1, -1, -2, -3, -5, -8, -13}));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const IntOct x = testing::random_int_octonion(rng);
    EXPECT_EQ(oct_conj(oct_conj(x)), x);
  }
}

TEST(OctonionTest, Norm) {
  EXPECT_EQ(oct_norm(basis(0)), 1);
  const auto w = testing::unfold({0, 1, 1, 1}, 8);
  testing::i128 squares = 0;
  for (auto v : w) squares += v * v;
  EXPECT_EQ(oct_norm(from({0, 1, 1, 2, 3, 5, 8, 13})), testing::big(squares));
  EXPECT_EQ(oct_norm(from({0, 1, 1, 2, 3, 5, 8, 13})), 273);
}

TEST(OctonionTest, NormIsRealPartOfConjugateProduct) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const IntOct x = testing::random_int_octonion(rng);
    for (const IntOct& prod : {oct_conj(x) * x, x * oct_conj(x)}) {
      EXPECT_EQ(prod[0], oct_norm(x));
      for (std::size_t k = 1; k < kOctonionDim; ++k) EXPECT_EQ(prod[k], 0);
    }
  }
}

TEST(OctonionTest, ScaleAndAdd) {
  std::mt19937_64 rng(13);
  const IntOct x = testing::random_int_octonion(rng);
  EXPECT_EQ(oct_scale(Integer(0), x), IntOct::zero());
  EXPECT_EQ(oct_scale(Integer(1), x), x);
  EXPECT_EQ(oct_add(x, IntOct::zero()), x);

  // Fibonacci: 1 * OG_1 + 1 * OG_0 = OG_2.
  const IntOct og0 = from({0, 1, 1, 2, 3, 5, 8, 13});
  const IntOct og1 = from({1, 1, 2, 3, 5, 8, 13, 21});
  const IntOct og2 = from({1, 2, 3, 5, 8, 13, 21, 34});
  EXPECT_EQ(oct_add(oct_scale(Integer(1), og1), oct_scale(Integer(1), og0)), og2);
}

TEST(OctonionProperties, CompositionAlternativityAntiAutomorphism) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const IntOct x = testing::random_int_octonion(rng);
    const IntOct y = testing::random_int_octonion(rng);
    const IntOct z = testing::random_int_octonion(rng);
    EXPECT_EQ(oct_norm(x * y), oct_norm(x) * oct_norm(y));
    EXPECT_EQ(x * (x * y), (x * x) * y);
    EXPECT_EQ((y * x) * x, y * (x * x));
    EXPECT_EQ(oct_conj(x * y), oct_conj(y) * oct_conj(x));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ((x + y) * z, x * z + y * z);
  }
}

TEST(OctonionProperties, ProductAgreesWithQuaternionPairOracle) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 200; ++i) {
    const IntOct x = testing::random_int_octonion(rng);
    const IntOct y = testing::random_int_octonion(rng);
    std::array<long long, 8> xs{}, ys{};
    for (std::size_t k = 0; k < kOctonionDim; ++k) {
      xs[k] = x[k].get_si();
      ys[k] = y[k].get_si();
    }
    const auto expected = testing::pair_product(xs, ys);
    const IntOct prod = x * y;
    for (std::size_t k = 0; k < kOctonionDim; ++k) EXPECT_EQ(prod[k], Integer(static_cast<long>(expected[k])));
  }
}

TEST(OctonionProperties, WorksOverQuadExt) {
  std::mt19937_64 rng(23);
  const Discriminant d(Integer(5));
  auto random_oct = [&] {
    std::array<QuadExt, kOctonionDim> c{QuadExt::zero(d), QuadExt::zero(d), QuadExt::zero(d),
                                        QuadExt::zero(d), QuadExt::zero(d), QuadExt::zero(d),
                                        QuadExt::zero(d), QuadExt::zero(d)};
    for (auto& v : c) v = testing::random_quad(rng, d);
    return Octonion<QuadExt>(c);
  };
  for (int i = 0; i < 30; ++i) {
    const auto x = random_oct();
    const auto y = random_oct();
    EXPECT_EQ(oct_norm(x * y), oct_norm(x) * oct_norm(y));
    EXPECT_EQ(x * (x * y), (x * x) * y);
  }
}

}  // namespace
}  // namespace horadam
