// Copyright 2026 The trigwdvv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "trigwdvv/configuration.hpp"
#include "trigwdvv/errors.hpp"

namespace trigwdvv {
namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

double multiplicity_of(const Configuration& c, const Vector& v) {
  const int at = c.find(v);
  return at < 0 ? NAN : c[static_cast<std::size_t>(at)].multiplicity;
}

TEST(Configuration, MergesCoincidingVectors) {
  Configuration c(2);
  c.add(vec({1, 0}), 2.0);
  c.add(vec({0, 1}), 1.0);
  c.add(vec({1, 0}), 0.5);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_DOUBLE_EQ(c[0].multiplicity, 2.5);
  EXPECT_DOUBLE_EQ(c.total_multiplicity(), 3.5);
}

TEST(Configuration, MergesWithinTolerance) {
  Configuration c(1);
  c.add(vec({1.0}), 1.0);
  c.add(vec({1.0 + 1e-13}), 1.0);
  c.add(vec({1.0 + 1e-9}), 1.0);
  EXPECT_EQ(c.size(), 2u);
}

TEST(Configuration, KeepsZeroMultiplicityMembers) {
  Configuration c(1, {{vec({1.0}), 0.0}, {vec({2.0}), 0.0}});
  EXPECT_EQ(c.size(), 2u);
}

TEST(Configuration, RejectsBadMembers) {
  Configuration c(2);
  EXPECT_THROW(c.add(vec({1, 0, 0}), 1.0), DimensionError);
  EXPECT_THROW(c.add(vec({0, 0}), 1.0), DomainError);
  EXPECT_THROW(c.add(vec({NAN, 1}), 1.0), DomainError);
  EXPECT_THROW(c.add(vec({1, 1}), INFINITY), DomainError);
  EXPECT_THROW(Configuration(0), DimensionError);
}

TEST(Configuration, SameMembersIgnoresOrder) {
  Configuration a(2, {{vec({1, 0}), 1.0}, {vec({1, 1}), 2.0}});
  Configuration b(2, {{vec({1, 1}), 2.0}, {vec({1, 0}), 1.0}});
  Configuration c(2, {{vec({1, 1}), 2.0}, {vec({1, 0}), 1.5}});
  EXPECT_TRUE(same_members(a, b));
  EXPECT_FALSE(same_members(a, c));
  EXPECT_TRUE(same_members(a, c, 0.6));
}

TEST(BCnParameters, CachesN) {
  BCnParameters p(1, 2, 3, {0.5, 1.5, 2});
  EXPECT_EQ(p.n(), 3);
  EXPECT_DOUBLE_EQ(p.N(), 4.0);
  EXPECT_DOUBLE_EQ(p.with_r(7).r(), 7.0);
  EXPECT_THROW(BCnParameters(0, 0, 0, {}), DimensionError);
  EXPECT_THROW(BCnParameters(NAN, 0, 0, {1}), DomainError);
}

TEST(Constraint, ResidualAndSolvedR) {
  EXPECT_DOUBLE_EQ(constraint_residual(BCnParameters(-2, 0, 1, {1, 1, 1})), 0);
  EXPECT_DOUBLE_EQ(constraint_residual(BCnParameters(-20, 1, 2, {2, 3})), 0);
  EXPECT_DOUBLE_EQ(constraint_residual(BCnParameters(0, 0, 1, {1, 1})), 0);
  EXPECT_DOUBLE_EQ(constraint_residual(BCnParameters(-1.5, 0, 1, {1, 1, 1})),
                   0.5);
  EXPECT_DOUBLE_EQ(constrained_r(1, 2, {2, 3}), -20);
  EXPECT_NEAR(constrained_r(0.5, 1, {0.7, 1.3, 2.1}),
              -4.0 - 2.0 * (4.1 - 2.0), 1e-14);
}

TEST(BuildBcn, MembersAndMultiplicities) {
  const BCnParameters p(1.5, 0.25, 2.0, {2.0, 3.0});
  const Configuration c = build_bcn(p);
  ASSERT_EQ(c.dimension(), 2);
  ASSERT_EQ(c.size(), 6u);
  // construction order: e block, 2e block, pairs
  EXPECT_EQ(c[0].vector, vec({1, 0}));
  EXPECT_EQ(c[1].vector, vec({0, 1}));
  EXPECT_EQ(c[2].vector, vec({2, 0}));
  EXPECT_EQ(c[3].vector, vec({0, 2}));
  EXPECT_EQ(c[4].vector, vec({1, 1}));
  EXPECT_EQ(c[5].vector, vec({1, -1}));
  EXPECT_DOUBLE_EQ(c[0].multiplicity, 3.0);
  EXPECT_DOUBLE_EQ(c[1].multiplicity, 4.5);
  EXPECT_DOUBLE_EQ(c[2].multiplicity, 0.25 * 2 + 0.5 * 2 * 2 * 1);
  EXPECT_DOUBLE_EQ(c[3].multiplicity, 0.25 * 3 + 0.5 * 2 * 3 * 2);
  EXPECT_DOUBLE_EQ(c[4].multiplicity, 12.0);
  EXPECT_DOUBLE_EQ(c[5].multiplicity, 12.0);
}

TEST(BuildBcn, SizeFormula) {
  for (int n = 1; n <= 6; ++n) {
    const Configuration c =
        build_bcn(BCnParameters(1, 1, 1, std::vector<double>(n, 1.0)));
    EXPECT_EQ(static_cast<int>(c.size()), 2 * n + n * (n - 1));
  }
}

TEST(BuildBcn, RootSystemMatchesUnitMultiplicities) {
  const Configuration a = build_bcN_root_system(4, 1, 2, 3);
  const Configuration b = build_bcn(BCnParameters(1, 2, 3, {1, 1, 1, 1}));
  EXPECT_TRUE(same_members(a, b));
  // at m = 1 the 2e_i multiplicity is just s
  EXPECT_DOUBLE_EQ(multiplicity_of(a, vec({0, 2, 0, 0})), 2.0);
  EXPECT_THROW(build_bcN_root_system(0, 1, 1, 1), DimensionError);
}

TEST(Partition, Geometry) {
  Partition part({2, 1, 3});
  EXPECT_EQ(part.N(), 6);
  EXPECT_EQ(part.n(), 3);
  EXPECT_EQ(part.offset(2), 3);
  EXPECT_EQ(part.block_of(0), 0);
  EXPECT_EQ(part.block_of(2), 1);
  EXPECT_EQ(part.block_of(5), 2);
  EXPECT_EQ(part.indicator(2), vec({0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(part.as_multiplicities(), (std::vector<double>{2, 1, 3}));
  EXPECT_THROW(Partition({}), PreconditionError);
  EXPECT_THROW(Partition({2, 0}), PreconditionError);
}

TEST(Projection, VectorAndSubspace) {
  Partition part({2, 3});
  const Vector u = vec({1, 3, 0, 3, 6});
  EXPECT_EQ(project_vector(u, part), vec({2, 3}));
  EXPECT_EQ(project_to_subspace(u, part), vec({2, 2, 3, 3, 3}));
  EXPECT_TRUE(orthogonal_to_subspace(vec({1, -1, 0, 0, 0}), part));
  EXPECT_TRUE(orthogonal_to_subspace(vec({0, 0, 1, 0, -1}), part));
  EXPECT_FALSE(orthogonal_to_subspace(vec({1, 0, -1, 0, 0}), part));
  EXPECT_THROW(project_vector(vec({1, 2}), part), DimensionError);
}

TEST(Restriction, FiveIntoTwoThreeIsBcTwo) {
  for (double s : {0.0, 1.0, -0.5}) {
    for (double q : {1.0, 2.0}) {
      const double r = -8 * s - 2 * q * 3;
      const Configuration restricted =
          restrict_configuration(5, r, s, q, Partition({2, 3}));
      const Configuration direct = build_bcn(BCnParameters(r, s, q, {2, 3}));
      EXPECT_TRUE(same_members(restricted, direct, 0.0))
          << "s=" << s << " q=" << q;
    }
  }
}

// Independent enumeration: for every BC_N root, compute (alpha, f_k) by hand
// and accumulate multiplicities in a map keyed by the image.
TEST(Restriction, MatchesEnumerationForManyPartitions) {
  const std::vector<std::vector<int>> partitions = {
      {1, 1, 1}, {3}, {2, 2}, {1, 3}, {2, 1, 2}, {4, 2}, {1, 1, 1, 2}};
  const double r = 1.25, s = -0.5, q = 0.75;
  for (const auto& blocks : partitions) {
    Partition part(blocks);
    const int N = part.N();
    std::map<std::vector<double>, double> expected;
    auto add = [&](const std::vector<int>& coeff, double mult) {
      std::vector<double> image(blocks.size(), 0.0);
      bool zero = true;
      for (int a = 0; a < N; ++a) image[part.block_of(a)] += coeff[a];
      for (double v : image) zero = zero && v == 0.0;
      if (!zero) expected[image] += mult;
    };
    for (int a = 0; a < N; ++a) {
      std::vector<int> e(N, 0);
      e[a] = 1;
      add(e, r);
      e[a] = 2;
      add(e, s);
      for (int b = a + 1; b < N; ++b) {
        std::vector<int> pm(N, 0);
        pm[a] = 1;
        pm[b] = 1;
        add(pm, q);
        pm[b] = -1;
        add(pm, q);
      }
    }
    const Configuration got = restrict_configuration(N, r, s, q, part);
    ASSERT_EQ(got.size(), expected.size());
    for (const auto& [image, mult] : expected) {
      Vector v(static_cast<Eigen::Index>(image.size()));
      for (std::size_t i = 0; i < image.size(); ++i) v(i) = image[i];
      EXPECT_NEAR(multiplicity_of(got, v), mult, 1e-12);
    }
    // and the family formula with m = block sizes
    EXPECT_TRUE(same_members(
        got, build_bcn(BCnParameters(r, s, q, part.as_multiplicities())),
        1e-12));
  }
}

TEST(Restriction, RequiresMatchingN) {
  EXPECT_THROW(restrict_configuration(6, 1, 1, 1, Partition({2, 3})),
               DimensionError);
}

}  // namespace
}  // namespace trigwdvv
