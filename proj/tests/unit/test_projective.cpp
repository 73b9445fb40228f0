#include <gtest/gtest.h>

#include <set>

#include "gwht/errors.hpp"
#include "gwht/projective.hpp"
#include "support.hpp"

namespace gwht {
namespace {

std::vector<std::vector<std::uint32_t>> point_list(const ProjectiveTable& t) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::uint32_t> p;
    for (Element e : t.point(i)) p.push_back(e.index());
    out.push_back(p);
  }
  return out;
}

Vector vec(std::initializer_list<std::uint32_t> xs) {
  Vector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

TEST(Theta, Values) {
  EXPECT_EQ(theta(3, 2), 4u);
  EXPECT_EQ(theta(3, 3), 13u);
  EXPECT_EQ(theta(2, 3), 7u);
  EXPECT_EQ(theta(9, 5), 7381u);
  EXPECT_EQ(theta(3, 9), 9841u);
  EXPECT_THROW(theta(65536, 8), BudgetError);
}

TEST(ProjectiveTable, SmallTablesUnrolled) {
  EXPECT_EQ(point_list(*build_table(Field::of_order(2), 2)),
            (std::vector<std::vector<std::uint32_t>>{{0, 1}, {1, 1}, {1, 0}}));
  EXPECT_EQ(point_list(*build_table(Field::of_order(3), 2)),
            (std::vector<std::vector<std::uint32_t>>{{0, 1}, {1, 1}, {2, 1}, {1, 0}}));
}

TEST(ProjectiveTable, TernaryPlaneIncidenceAndR) {
  const auto t = build_table(Field::of_order(3), 2);
  const int nm[4][4] = {{1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}};
  const int r[4][4] = {{-1, -1, -1, 2}, {-1, -1, 2, -1}, {-1, 2, -1, -1}, {2, -1, -1, -1}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_EQ(t->nonzero_product(i, j) ? 1 : 0, nm[i][j]);
      EXPECT_EQ(t->r_entry(i, j), r[i][j]);
    }
  }
}

TEST(ProjectiveTable, PointIndexExamples) {
  const Field f = Field::of_order(3);
  const auto t2 = build_table(f, 2);
  EXPECT_EQ(t2->point_index(vec({0, 2})), (PointRef{0, Element{2}}));
  const auto t3 = build_table(f, 3);
  EXPECT_EQ(t3->point_index(vec({1, 0, 0})), (PointRef{12, Element{1}}));
  EXPECT_EQ(t3->point_index(vec({0, 0, 1})), (PointRef{0, Element{1}}));
  EXPECT_THROW((void)t3->point_index(vec({0, 0, 0})), InputError);
  EXPECT_THROW((void)t3->point_index(vec({1, 0})), InputError);
}

TEST(ProjectiveTable, RejectsDegenerateAndOversized) {
  EXPECT_THROW(build_table(Field::of_order(3), 0), InputError);
  TableOptions small;
  small.max_theta = 100;
  EXPECT_THROW(build_table(Field::of_order(3), 6, small), BudgetError);
}

struct Shape {
  std::uint32_t q;
  unsigned k;
};

class TableProperties : public ::testing::TestWithParam<Shape> {};

TEST_P(TableProperties, PointsAreCanonicalAndPartitionTheSpace) {
  const Field f = Field::of_order(GetParam().q);
  const unsigned k = GetParam().k;
  const auto t = build_table(f, k);
  ASSERT_EQ(t->size(), theta(f.order(), k));
  for (std::size_t i = 0; i < t->size(); ++i) {
    const auto p = t->point(i);
    std::size_t last = k;
    for (std::size_t c = k; c-- > 0;) {
      if (!p[c].is_zero()) {
        last = c;
        break;
      }
    }
    ASSERT_LT(last, k);
    EXPECT_EQ(p[last], Field::one());
    EXPECT_EQ(t->point_index(p), (PointRef{i, Field::one()}));
  }
  // Every nonzero vector lands in exactly one class; classes have q - 1 members.
  std::vector<std::uint64_t> class_size(t->size(), 0);
  const std::uint64_t total = testing::ipow(f.order(), k);
  for (std::uint64_t x = 1; x < total; ++x) {
    const Vector v = testing::digits(x, f.order(), k);
    const PointRef ref = t->point_index(v);
    ++class_size[ref.index];
    for (unsigned c = 0; c < k; ++c) ASSERT_EQ(f.mul(ref.scalar, t->point(ref.index)[c]), v[c]);
  }
  for (std::uint64_t s : class_size) EXPECT_EQ(s, f.order() - 1u);
}

TEST_P(TableProperties, ScaledPointsRoundTrip) {
  const Field f = Field::of_order(GetParam().q);
  const auto t = build_table(f, GetParam().k);
  for (std::size_t i = 0; i < t->size(); ++i) {
    for (std::uint32_t lambda = 1; lambda < f.order(); ++lambda) {
      Vector v(t->point(i).begin(), t->point(i).end());
      for (Element& e : v) e = f.mul(Element{lambda}, e);
      ASSERT_EQ(t->point_index(v), (PointRef{i, Element{lambda}}));
    }
  }
}

TEST_P(TableProperties, IncidenceMatchesInnerProducts) {
  const Field f = Field::of_order(GetParam().q);
  const auto t = build_table(f, GetParam().k);
  std::vector<Element> row(t->size());
  for (std::size_t i = 0; i < t->size(); ++i) {
    t->product_row(i, row);
    for (std::size_t j = 0; j < t->size(); ++j) {
      Element direct = Field::zero();
      for (unsigned c = 0; c < t->dimension(); ++c) {
        direct = f.add(direct, f.mul(t->point(i)[c], t->point(j)[c]));
      }
      ASSERT_EQ(row[j], direct);
    }
  }
}

TEST_P(TableProperties, MatvecMatchesDirectSum) {
  const Field f = Field::of_order(GetParam().q);
  const auto t = build_table(f, GetParam().k);
  const std::size_t theta_ = t->size();
  testing::Rng rng(GetParam().q * 100 + GetParam().k);
  const std::vector<BigInt> scales = {BigInt(5), BigInt(1) << 70, BigInt(1) << 130};
  for (const BigInt& scale : scales) {
    for (double density : {0.01, 1.0}) {
      std::vector<BigInt> v(theta_, BigInt{0});
      std::bernoulli_distribution keep(density);
      std::uniform_int_distribution<int> d(-9, 9);
      for (auto& x : v) {
        if (keep(rng)) x = scale * d(rng);
      }
      const std::vector<BigInt> nm = t->nm_times(v);
      const std::vector<BigInt> r = t->r_times(v);
      for (std::size_t i = 0; i < theta_; ++i) {
        BigInt expect_nm = 0, expect_r = 0;
        for (std::size_t j = 0; j < theta_; ++j) {
          if (t->nonzero_product(i, j)) expect_nm += v[j];
          expect_r += BigInt(t->r_entry(i, j)) * v[j];
        }
        ASSERT_EQ(nm[i], expect_nm);
        ASSERT_EQ(r[i], expect_r);
      }
    }
  }
}

TEST_P(TableProperties, RowSumsOfRAreConstant) {
  const Field f = Field::of_order(GetParam().q);
  const auto t = build_table(f, GetParam().k);
  const std::vector<BigInt> ones(t->size(), BigInt{1});
  const std::vector<BigInt> r = t->r_times(ones);
  // Each point has theta(q, k-1) orthogonal points.
  const BigInt orth = theta(f.order(), GetParam().k - 1);
  const BigInt q = f.order();
  const BigInt expected = (q - 1) * BigInt(t->size()) - q * (BigInt(t->size()) - orth);
  for (const BigInt& x : r) EXPECT_EQ(x, expected);
}

std::vector<Shape> shapes() {
  std::vector<Shape> out;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    for (unsigned k = 1; k <= 4; ++k) {
      if (theta(q, k) <= 900) out.push_back({q, k});
    }
  }
  return out;
}

INSTANTIATE_TEST_SUITE_P(SmallShapes, TableProperties, ::testing::ValuesIn(shapes()),
                         [](const ::testing::TestParamInfo<Shape>& info) {
                           return "q" + std::to_string(info.param.q) + "_k" + std::to_string(info.param.k);
                         });

TEST(ProjectiveTable, UnmaterializedMatvecAgrees) {
  const Field f = Field::of_order(3);
  TableOptions lazy;
  lazy.max_materialized_theta = 0;
  const auto a = build_table(f, 4);
  const auto b = build_table(f, 4, lazy);
  EXPECT_TRUE(a->materializes_incidence());
  EXPECT_FALSE(b->materializes_incidence());
  std::vector<BigInt> v(a->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<long>(i % 7) - 3;
  EXPECT_EQ(a->nm_times(v), b->nm_times(v));
  EXPECT_THROW((void)a->nm_times(std::vector<BigInt>(3)), InputError);
}

}  // namespace
}  // namespace gwht
