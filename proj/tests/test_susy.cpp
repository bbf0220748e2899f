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
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "trigwdvv/configuration.hpp"
#include "trigwdvv/errors.hpp"
#include "trigwdvv/prepotential.hpp"
#include "trigwdvv/sampling.hpp"
#include "trigwdvv/susy.hpp"
#include "trigwdvv/wdvv.hpp"

namespace trigwdvv {
namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

Matrix dense(const SparseMatrix& m) { return Matrix(m); }

TEST(HatConfiguration, UnitMultiplicitiesAreUnchanged) {
  const BCnParameters p(1, 2, 3, {1, 1, 1});
  EXPECT_TRUE(same_members(build_hat_configuration(p).members, build_bcn(p)));
}

TEST(HatConfiguration, ShortVectorIsScaled) {
  const BCnParameters p(1, 0, 1, {4, 1});
  const Configuration& c = build_hat_configuration(p).members;
  EXPECT_EQ(c[0].vector, vec({0.5, 0}));
  EXPECT_EQ(c[2].vector, vec({1, 0}));
  EXPECT_DOUBLE_EQ(c[0].multiplicity, 4.0);
  EXPECT_GE(c.find(vec({0.5, 1})), 0);
  EXPECT_GE(c.find(vec({0.5, -1})), 0);
}

TEST(HatConfiguration, PairingsAreInvariant) {
  Rng rng(1, "pairing");
  const BCnParameters p(1, 0.5, 2, {2, 3, 0.7});
  const Configuration base = build_bcn(p);
  const Configuration hat = build_hat_configuration(p).members;
  ASSERT_EQ(base.size(), hat.size());
  for (int t = 0; t < 10; ++t) {
    const Vector x = rng.uniform_vector(3, 0.3, 1.5);
    const Vector xh = to_hat_coordinates(p, x);
    EXPECT_LT((from_hat_coordinates(p, xh) - x).cwiseAbs().maxCoeff(), 1e-15);
    for (std::size_t i = 0; i < base.size(); ++i) {
      EXPECT_NEAR(base[i].vector.dot(x), hat[i].vector.dot(xh), 1e-14);
      EXPECT_EQ(base[i].multiplicity, hat[i].multiplicity);
    }
  }
}

TEST(HatConfiguration, RejectsNonpositiveM) {
  EXPECT_THROW(build_hat_configuration(BCnParameters(1, 1, 1, {1, 0})),
               PreconditionError);
  EXPECT_THROW(build_hat_configuration(BCnParameters(1, 1, 1, {-1, 2})),
               PreconditionError);
}

TEST(HatTensor, TwoPathProperty) {
  Rng rng(2, "hat-two-path");
  for (int n : {2, 3}) {
    for (int t = 0; t < 20; ++t) {
      const BCnParameters p = oracle::random_parameters(rng, n);
      const Vector xh = sample_admissible(
          rng, build_hat_configuration(p).members, SampleBox{}, kDefaultThreshold);
      EXPECT_LT(oracle::relative_diff(hat_tensor(p, xh),
                                      hat_tensor_by_conjugation(p, xh)),
                1e-10);
    }
  }
}

TEST(HatTensor, UnitMultiplicitiesMatchPlainTensor) {
  const BCnParameters p(1, 1, 1, {1, 1});
  const Vector x = vec({0.9, 0.4});
  EXPECT_LT(oracle::max_abs_diff(hat_tensor(p, x), tensor_closed_form(p, x)),
            1e-13);
}

TEST(HatTensor, CommutingAndScalarMetric) {
  Rng rng(3, "hat-commuting");
  const BCnParameters good(-10, 0.5, 1, {2, 3});
  const BCnParameters bad = good.with_r(-9.5);
  int bad_above = 0;
  for (int t = 0; t < 50; ++t) {
    const Vector xh = sample_admissible(
        rng, build_hat_configuration(good).members, SampleBox{}, kDefaultThreshold);
    const Tensor3 th = hat_tensor(good, xh);
    EXPECT_LT(max_commuting_residual(th), 1e-8);
    const Matrix B = hat_metric(good, th, xh);
    const double h = h_function(good, from_hat_coordinates(good, xh));
    EXPECT_LT((B - h * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(),
              1e-10 * std::max(1.0, std::abs(h)));
    if (max_commuting_residual(hat_tensor(bad, xh)) > 1e-3) ++bad_above;
  }
  EXPECT_GT(bad_above, 40);
}

TEST(Potential, SingleVector) {
  Configuration c(1, {{vec({1}), 1.7}});
  const double x = 0.8;
  const double coth = 1 / std::tanh(x);
  const double expected =
      0.5 * 1.7 / (std::sinh(x) * std::sinh(x)) + 0.25 * 1.7 * 1.7 * coth * coth;
  EXPECT_NEAR(bosonic_potential(c, vec({x})), expected, 1e-13);
}

TEST(Potential, ZeroMultiplicities) {
  const Configuration c = build_bcn(BCnParameters(0, 0, 0, {1, 1}));
  EXPECT_EQ(bosonic_potential(c, vec({0.7, 0.3})), 0.0);
}

TEST(Potential, ReverseSummationOracle) {
  const Configuration c = build_bcn(BCnParameters(0, 0, 1, {1, 1}));
  const Vector x = vec({0.7, 0.3});
  const double v = bosonic_potential(c, x);
  EXPECT_NEAR(v, oracle::potential_reverse(c, x),
              1e-12 * std::max(1.0, std::abs(v)));
  Rng rng(4, "potential");
  for (int t = 0; t < 20; ++t) {
    const BCnParameters p = oracle::random_parameters(rng, 3);
    const Configuration h = build_hat_configuration(p).members;
    const Vector xh = sample_admissible(rng, h, SampleBox{}, kDefaultThreshold);
    const double got = bosonic_potential(h, xh);
    EXPECT_NEAR(got, oracle::potential_reverse(h, xh),
                1e-12 * std::max(1.0, std::abs(got)));
  }
}

TEST(Fermions, OneParticle) {
  const FermionicSpace fs = build_fermionic_space(1);
  EXPECT_EQ(fs.dim(), 4);
  const Matrix id = Matrix::Identity(4, 4);
  const Matrix psi = dense(fs.psi(0, 0));
  const Matrix bar = dense(fs.psibar(0, 0));
  EXPECT_EQ(psi * bar + bar * psi, -0.5 * id);
  // all pairwise {psi, psi} vanish, including squares
  std::vector<Matrix> ops = {dense(fs.psi(0, 0)), dense(fs.psi(1, 0)),
                             dense(fs.psibar(0, 0)), dense(fs.psibar(1, 0))};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      EXPECT_EQ((ops[a] * ops[b] + ops[b] * ops[a]).cwiseAbs().maxCoeff(), 0.0);
      EXPECT_EQ((ops[2 + a] * ops[2 + b] + ops[2 + b] * ops[2 + a])
                    .cwiseAbs()
                    .maxCoeff(),
                0.0);
    }
  }
}

TEST(Fermions, CrossIndexAnticommutator) {
  const FermionicSpace fs = build_fermionic_space(2);
  const Matrix psi = dense(fs.psi(0, 0));
  const Matrix bar = dense(fs.psibar(1, 1));
  EXPECT_EQ((psi * bar + bar * psi).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Fermions, AllRelationsExact) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_LE(anticommutator_defect(build_fermionic_space(n)), 1e-13);
  }
}

TEST(Fermions, MatchesKroneckerConstruction) {
  for (int n = 1; n <= 2; ++n) {
    const FermionicSpace fs = build_fermionic_space(n);
    const auto kron = oracle::kron_annihilators(2 * n);
    for (int a = 0; a < 2; ++a) {
      for (int j = 0; j < n; ++j) {
        EXPECT_EQ(dense(fs.psi(a, j)), kron[a * n + j]);
        EXPECT_EQ(dense(fs.psibar(a, j)),
                  Matrix(-0.5 * kron[a * n + j].transpose()));
      }
    }
  }
}

TEST(Fermions, DimensionCap) {
  EXPECT_THROW(build_fermionic_space(kMaxFermionParticles + 1),
               PreconditionError);
  EXPECT_THROW(build_fermionic_space(0), PreconditionError);
}

TEST(Phi, ZeroMultiplicities) {
  const FermionicSpace fs = build_fermionic_space(2);
  const Configuration c = build_bcn(BCnParameters(0, 0, 0, {1, 1}));
  EXPECT_EQ(phi_matrix(c, vec({0.7, 0.3}), fs).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Phi, BruteForceOracle) {
  Rng rng(5, "phi");
  {
    const FermionicSpace fs = build_fermionic_space(1);
    Configuration c(1, {{vec({1}), 1.3}});
    const Vector x = vec({0.6});
    EXPECT_LE((phi_matrix(c, x, fs) - oracle::phi_brute_force(c, x))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-13);
  }
  for (int n = 1; n <= 2; ++n) {
    const FermionicSpace fs = build_fermionic_space(n);
    for (int t = 0; t < 5; ++t) {
      const BCnParameters p = oracle::random_parameters(rng, n);
      const Configuration h = build_hat_configuration(p).members;
      const Vector xh = sample_admissible(rng, h, SampleBox{}, 0.3);
      const Matrix got = phi_matrix(h, xh, fs);
      const Matrix want = oracle::phi_brute_force(h, xh);
      EXPECT_LE((got - want).cwiseAbs().maxCoeff(),
                1e-13 * std::max(1.0, want.cwiseAbs().maxCoeff()));
    }
  }
}

TEST(Phi, CommutesWithScalars) {
  const FermionicSpace fs = build_fermionic_space(2);
  const Configuration c = build_bcn(BCnParameters(1, 0, 1, {1, 1}));
  const Matrix phi = phi_matrix(c, vec({0.7, 0.3}), fs);
  const Matrix g = 2.5 * Matrix::Identity(fs.dim(), fs.dim());
  EXPECT_LT((phi * g - g * phi).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Gauge, ConstantFunction) {
  const Configuration c = build_bcn(BCnParameters(0, 0, 1, {1, 1}));
  const ScalarField one{"one", [](const Vector&) { return 1.0; }};
  const GaugeTerms g = gauge_terms(c, vec({1.2, 0.5}), one, 1e-3);
  EXPECT_EQ(g.second_form, 0.0);
  EXPECT_LT(g.residual, 1e-4);
}

TEST(Gauge, FamiliesAndSecondOrder) {
  const Configuration c = build_bcn(BCnParameters(0, 0, 1, {1, 1}));
  Rng rng(6, "gauge");
  for (int t = 0; t < 10; ++t) {
    const Vector x0 = sample_admissible(rng, c, SampleBox{}, kGaugeSampleMargin);
    const std::vector<ScalarField> fields = {
        gaussian_field(x0, 0.5), sinh_product_field(), polynomial_field(2)};
    for (const auto& phi : fields) {
      const double coarse = gauge_residual(c, x0, phi, 1e-3);
      const double fine = gauge_residual(c, x0, phi, 5e-4);
      EXPECT_LT(coarse, 1e-4) << phi.name;
      if (coarse > 1e-8) {
        EXPECT_NEAR(std::log2(coarse / fine), 2.0, 0.3) << phi.name;
      }
    }
  }
}

TEST(Gauge, WorksWithLongAndShortRoots) {
  // constraint-satisfying family with all three root lengths present
  const BCnParameters p(-3, 0.25, 0.5, {1, 1});
  const Configuration c = build_hat_configuration(p).members;
  const Vector x0 = vec({1.4, 0.6});
  EXPECT_LT(gauge_residual(c, x0, gaussian_field(x0, 0.5), 1e-3), 1e-4);
}

TEST(Gauge, LargeMultiplicitiesAreTruncationLimited) {
  // q m_i m_j = 12 on the pair members: the step-1e-3 residual is above the
  // finite-difference tolerance but shrinks at second order
  const BCnParameters p(-20, 1, 2, {2, 3});
  const Configuration c = build_hat_configuration(p).members;
  const Vector x0 = to_hat_coordinates(p, vec({1.3, 0.6}));
  const ScalarField phi = sinh_product_field();
  const double r1 = gauge_residual(c, x0, phi, 1e-3);
  const double r2 = gauge_residual(c, x0, phi, 5e-4);
  const double r3 = gauge_residual(c, x0, phi, 2.5e-4);
  EXPECT_NEAR(std::log2(r1 / r2), 2.0, 0.3);
  EXPECT_NEAR(std::log2(r2 / r3), 2.0, 0.3);
}

TEST(Gauge, Preconditions) {
  const Configuration c = build_bcn(BCnParameters(0, 0, 1, {1, 1}));
  const ScalarField phi = sinh_product_field();
  EXPECT_THROW(gauge_residual(c, vec({0.7, 0.3}), phi, 0.0), PreconditionError);
  EXPECT_THROW(gauge_residual(c, vec({0.7, 0.3}), phi, 0.3), PreconditionError);
  EXPECT_THROW(gauge_residual(c, vec({0.7, 0.7}), phi, 1e-3), SingularityError);
}

TEST(Fields, Values) {
  const Vector x = vec({0.5, 1.0});
  EXPECT_NEAR(gaussian_field(vec({0.5, 0.0}), 2.0).eval(x),
              std::exp(-1.0 / 8.0), 1e-15);
  EXPECT_NEAR(sinh_product_field().eval(x), std::sinh(0.5) * std::sinh(1.0),
              1e-15);
  EXPECT_NEAR(polynomial_field(2).eval(x),
              1 + 0.2 * 0.5 + 0.4 * 1.0 + 0.5 + 0.0625, 1e-15);
}

TEST(Levi, Civita) {
  EXPECT_EQ(levi_civita(0, 1), 1);
  EXPECT_EQ(levi_civita(1, 0), -1);
  EXPECT_EQ(levi_civita(1, 1), 0);
}

}  // namespace
}  // namespace trigwdvv
