#include <gtest/gtest.h>

#include "gwht/cyclotomic.hpp"
#include "gwht/errors.hpp"
#include "gwht/spectral.hpp"
#include "support.hpp"

namespace gwht {
namespace {

using testing::integers;

Vector vec(std::initializer_list<std::uint32_t> xs) {
  Vector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

TEST(Cyclotomic, ZetaHasOrderP) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const CyclotomicInteger one(p, 1);
    EXPECT_EQ(CyclotomicInteger::zeta_power(p, p), one);
    EXPECT_EQ(CyclotomicInteger::zeta_power(p, 0), one);
    CyclotomicInteger sum(p);
    for (std::uint32_t e = 0; e < p; ++e) sum += CyclotomicInteger::zeta_power(p, e);
    EXPECT_TRUE(sum.is_integer());
    EXPECT_EQ(sum.to_integer(), BigInt(0));
    const auto z = CyclotomicInteger::zeta_power(p, 1);
    EXPECT_EQ(z * CyclotomicInteger::zeta_power(p, p - 1), one);
  }
  EXPECT_EQ(CyclotomicInteger::zeta_power(2, 1).to_integer(), BigInt(-1));
}

TEST(Cyclotomic, ArithmeticAndFormatting) {
  CyclotomicInteger x = CyclotomicInteger::zeta_power(3, 1);
  x *= BigInt(4);
  x += CyclotomicInteger(3, 2);
  EXPECT_FALSE(x.is_integer());
  EXPECT_EQ(x.to_string(), "zeta(2,4)");
  EXPECT_EQ(CyclotomicInteger(3, 5).to_string(), "5");
  // zeta + zeta^2 = -1
  EXPECT_EQ((CyclotomicInteger::zeta_power(3, 1) + CyclotomicInteger::zeta_power(3, 2)).to_integer(), BigInt(-1));
  EXPECT_EQ((x - x).to_integer(), BigInt(0));
  EXPECT_THROW(CyclotomicInteger(4), InputError);
  EXPECT_THROW(CyclotomicInteger(3) += CyclotomicInteger(5), InputError);
}

TEST(Cyclotomic, RotationMatchesMultiplication) {
  testing::Rng rng(3);
  std::uniform_int_distribution<int> d(-50, 50);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (int trial = 0; trial < 20; ++trial) {
      CyclotomicInteger x(p);
      for (std::uint32_t e = 0; e < p; ++e) x.add_scaled_power(d(rng), e);
      for (std::uint32_t e = 0; e < 2 * p; ++e) {
        CyclotomicInteger rotated(p);
        rotated.add_rotated(x, e);
        EXPECT_EQ(rotated, x * CyclotomicInteger::zeta_power(p, e));
      }
    }
  }
}

TEST(Kernels, VilenkinChrestensonExamples) {
  const Field f3 = Field::of_order(3);
  EXPECT_EQ(vc_kernel(f3, vec({0}), vec({2})), CyclotomicInteger(3, 1));
  EXPECT_EQ(vc_kernel(f3, vec({1}), vec({2})), CyclotomicInteger::zeta_power(3, 2));
  EXPECT_EQ(vc_kernel(f3, vec({1, 1}), vec({2, 1})), CyclotomicInteger(3, 1));
  EXPECT_THROW(vc_kernel(Field::of_order(9), vec({1}), vec({1})), InputError);
  EXPECT_THROW(kernel_exponent(f3, vec({1}), vec({1, 1})), InputError);
}

TEST(Kernels, TraceExamples) {
  const Field f4 = Field::of_order(4);
  std::vector<BigInt> row;
  for (std::uint32_t x = 0; x < 4; ++x) row.push_back(*trace_kernel(f4, vec({1}), vec({x})).to_integer());
  EXPECT_EQ(row, integers({1, 1, -1, -1}));
  const Field f9 = Field::of_order(9);
  for (std::uint32_t x = 0; x < 9; ++x) EXPECT_EQ(trace_kernel(f9, vec({0}), vec({x})), CyclotomicInteger(3, 1));
  EXPECT_EQ(trace_kernel(Field::of_order(2), vec({1, 1}), vec({1, 1})), CyclotomicInteger(2, 1));
}

TEST(Kernels, Symmetric) {
  for (std::uint32_t q : {3u, 4u, 5u, 9u}) {
    const Field f = Field::of_order(q);
    const auto e = kernel_exponents(f, 2);
    const std::size_t n = q * q;
    for (std::size_t w = 0; w < n; ++w) {
      for (std::size_t x = 0; x < n; ++x) ASSERT_EQ(e[w * n + x], e[x * n + w]);
    }
  }
}

TEST(FullTransform, OneDimensionalExamples) {
  const Field f = Field::of_order(3);
  const auto delta = transform_full(FullSpectrum::from_integers(f, 1, integers({1, 0, 0})));
  for (std::uint64_t i = 0; i < 3; ++i) EXPECT_EQ(delta[i].to_integer(), BigInt(1));
  const auto other = transform_full(FullSpectrum::from_integers(f, 1, integers({0, 1, 1})));
  EXPECT_EQ(other[0].to_integer(), BigInt(2));
  EXPECT_EQ(other[1].to_integer(), BigInt(-1));
  EXPECT_EQ(other[2].to_integer(), BigInt(-1));
}

TEST(FullTransform, TernaryPlaneSymbolicRows) {
  const Field f = Field::of_order(3);
  const auto h = FullSpectrum::from_integers(f, 2, integers({1, 2, 2, 3, 4, 5, 3, 5, 4}));
  const auto out = transform_full(h);
  EXPECT_EQ(out[0].to_integer(), BigInt(29));
  EXPECT_EQ(out[1].to_integer(), BigInt(-4));
  EXPECT_EQ(out[3].to_integer(), BigInt(-7));
}

TEST(FullTransform, RejectsBadShapes) {
  const Field f = Field::of_order(3);
  EXPECT_THROW(FullSpectrum::from_integers(f, 2, integers({1, 2, 3})), InputError);
  const auto h = FullSpectrum::from_integers(f, 2, std::vector<BigInt>(9, 1));
  EXPECT_THROW(transform_full(h, TransformAlgorithm::butterfly, 10), BudgetError);
}

TEST(FullTransform, ButterflyMatchesIndependentNaiveSum) {
  testing::Rng rng(17);
  std::uniform_int_distribution<int> d(-30, 30);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
    const Field f = Field::of_order(q);
    for (unsigned s = 1; s <= 2; ++s) {
      const std::uint64_t size = testing::ipow(q, s);
      std::vector<CyclotomicInteger> values;
      for (std::uint64_t i = 0; i < size; ++i) {
        CyclotomicInteger v(f.characteristic());
        for (std::uint32_t e = 0; e < f.characteristic(); ++e) v.add_scaled_power(d(rng), e);
        values.push_back(v);
      }
      const FullSpectrum h(f, s, values);
      const auto fast = transform_full(h);
      const auto slow = transform_full(h, TransformAlgorithm::naive);
      const auto oracle = testing::naive_transform(f, s, values);
      for (std::uint64_t i = 0; i < size; ++i) {
        ASSERT_EQ(fast[i], oracle[i]);
        ASSERT_EQ(slow[i], oracle[i]);
      }
    }
  }
}

TEST(FullTransform, TwiceGivesScaledReflection) {
  testing::Rng rng(23);
  std::uniform_int_distribution<int> d(-9, 9);
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const Field f = Field::of_order(q);
    const unsigned s = 2;
    const std::uint64_t size = q * q;
    std::vector<BigInt> h(size);
    for (auto& x : h) x = d(rng);
    const auto twice = transform_full(transform_full(FullSpectrum::from_integers(f, s, h)));
    for (std::uint64_t x = 0; x < size; ++x) {
      Vector neg = decode_point(f, s, x);
      for (Element& e : neg) e = f.neg(e);
      EXPECT_EQ(twice[x].to_integer(), BigInt(size) * h[encode_point(f, neg)]);
    }
  }
}

TEST(Composition, Examples) {
  const Field f = Field::of_order(3);
  const Composition c = composition(f, vec({0, 1, 2, 1}), integers({1, 2, 3, 4}));
  EXPECT_EQ(c.mu, integers({1, 6, 3}));
  EXPECT_EQ(c.reduced(), integers({-5, -2}));
  EXPECT_EQ(composition(f, vec({0, 1, 2, 1}), integers({0, 0, 0, 0})).mu, integers({0, 0, 0}));
  EXPECT_THROW(composition(f, vec({0, 1}), integers({1})), InputError);
}

TEST(ReducedDistribution, Examples) {
  const Field f = Field::of_order(3);
  const auto t2 = build_table(f, 2);
  EXPECT_EQ(reduced_distribution(*t2, integers({1, 1, 1, 1})), integers({-1, -1, -1, -1}));
  EXPECT_EQ(reduced_distribution(*t2, integers({0, 0, 0, 0})), integers({0, 0, 0, 0}));
  const auto t3 = build_table(f, 3);
  std::vector<BigInt> v(13, 0);
  v[0] = v[3] = v[12] = 1;  // 001, 010, 100
  EXPECT_EQ(reduced_distribution(*t3, v), integers({3, 0, 0, 3, 0, -3, -3, 0, 0, -3, -3, 0, 3}));
}

// Row i of the reduced distribution is sum_u mu_0 - mu_u over the products e_i . e_j.
TEST(ReducedDistribution, MatchesCompositionDefinition) {
  testing::Rng rng(29);
  std::uniform_int_distribution<int> d(-5, 5);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
    const Field f = Field::of_order(q);
    for (unsigned k = 1; k <= 3; ++k) {
      const auto t = build_table(f, k);
      std::vector<BigInt> v(t->size());
      for (auto& x : v) x = d(rng);
      const auto got = reduced_distribution(*t, v);
      for (std::size_t i = 0; i < t->size(); ++i) {
        Vector row(t->size());
        for (std::size_t j = 0; j < t->size(); ++j) row[j] = f.dot(t->point(i), t->point(j));
        BigInt expected = 0;
        for (const BigInt& x : composition(f, row, v).reduced()) expected += x;
        ASSERT_EQ(got[i], expected);
      }
    }
  }
}

class ReducedFixture : public ::testing::Test {
 protected:
  Field f3 = Field::of_order(3);
  std::shared_ptr<const ProjectiveTable> t3 = build_table(f3, 3);

  ReducedSpectrum ternary63_h() const {
    std::vector<BigInt> pts(13, 0);
    pts[0] = pts[3] = pts[12] = 1;
    return ReducedSpectrum(t3, 0, pts);
  }
};

TEST_F(ReducedFixture, DeltaTransformsToOnes) {
  std::vector<BigInt> zero(13, 0);
  const auto out = reduced_transform(ReducedSpectrum(t3, 1, zero));
  EXPECT_EQ(out.at_zero(), 1);
  EXPECT_EQ(out.at_points(), std::vector<BigInt>(13, 1));
}

TEST_F(ReducedFixture, Ternary63Rounds) {
  const auto hat = reduced_transform(*t3, ternary63_h());
  EXPECT_EQ(hat.at_zero(), 6);
  EXPECT_EQ(hat.at_points(), integers({3, 0, 0, 3, 0, -3, -3, 0, 0, -3, -3, 0, 3}));
  const auto sq = pointwise_power(hat, 2);
  EXPECT_EQ(sq.at_zero(), 36);
  EXPECT_EQ(sq.at_points(), integers({9, 0, 0, 9, 0, 9, 9, 0, 0, 9, 9, 0, 9}));
  EXPECT_EQ(reduced_transform(sq).at_points(), integers({27, 54, 54, 27, 54, 0, 0, 54, 54, 0, 0, 54, 27}));
  const auto cube = pointwise_power(hat, 3);
  EXPECT_EQ(cube.at_zero(), 216);
  EXPECT_EQ(cube.at_points(), integers({27, 0, 0, 27, 0, -27, -27, 0, 0, -27, -27, 0, 27}));
  EXPECT_EQ(pointwise_power(hat, 1), hat);
  EXPECT_EQ(pointwise_product(hat, hat), sq);
  EXPECT_THROW(pointwise_power(hat, 0), InputError);
}

TEST_F(ReducedFixture, ValueLookupAndExpansion) {
  const auto h = ternary63_h();
  EXPECT_EQ(h.value(vec({0, 0, 0})), 0);
  EXPECT_EQ(h.value(vec({0, 2, 0})), 1);
  EXPECT_EQ(h.value(vec({1, 1, 1})), 0);
  const FullSpectrum full = h.to_full();
  EXPECT_EQ(ReducedSpectrum::from_full(t3, full), h);
  EXPECT_THROW(ReducedSpectrum(t3, 0, integers({1, 2})), InputError);
}

TEST_F(ReducedFixture, FromFullRejectsNonInvariant) {
  std::vector<BigInt> v(27, 0);
  v[1] = 1;  // (0,0,1) but not (0,0,2)
  EXPECT_THROW(ReducedSpectrum::from_full(t3, FullSpectrum::from_integers(f3, 3, v)), InputError);
  const auto other = build_table(f3, 2);
  EXPECT_THROW(reduced_transform(*other, ternary63_h()), InputError);
}

TEST(ReducedVsFull, AgreeOnRandomInvariantFunctions) {
  testing::Rng rng(31);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
    const Field f = Field::of_order(q);
    for (unsigned s = 1; s <= 3; ++s) {
      const auto t = build_table(f, s);
      for (int trial = 0; trial < 3; ++trial) {
        const auto h = testing::random_invariant_function(rng, f, s);
        const auto full = transform_full(FullSpectrum::from_integers(f, s, h));
        const auto reduced = reduced_transform(ReducedSpectrum::from_full(t, FullSpectrum::from_integers(f, s, h)));
        EXPECT_EQ(ReducedSpectrum::from_full(t, full), reduced) << f.name() << " s=" << s;
      }
    }
  }
}

TEST(SpectrumOutput, Formatting) {
  const Field f = Field::of_order(3);
  std::ostringstream os;
  write_spectrum(os, ReducedSpectrum(build_table(f, 1), 4, integers({-2})));
  EXPECT_EQ(os.str(), "(0) 4\n(1) -2\n");
  std::ostringstream full;
  write_spectrum(full, FullSpectrum::from_integers(f, 1, integers({1, 2, 3})));
  EXPECT_EQ(full.str(), "(0) 1\n(1) 2\n(2) 3\n");
}

}  // namespace
}  // namespace gwht
