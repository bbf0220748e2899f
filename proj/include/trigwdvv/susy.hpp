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

// Supersymmetric mechanics built from the rescaled BC_n(r, s, q; m)
// prepotential: rescaled configuration and tensor, bosonic potential,
// fermionic Fock-space operators, the fermionic term Phi, and a
// finite-difference check of the gauge relation between the two Hamiltonians.

#ifndef TRIGWDVV_SUSY_HPP_
#define TRIGWDVV_SUSY_HPP_

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Sparse>

#include "trigwdvv/configuration.hpp"
#include "trigwdvv/prepotential.hpp"

namespace trigwdvv {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Largest supported number of particles for the Fock space (dim 2^(2n)).
inline constexpr int kMaxFermionParticles = 5;

/// Admissibility margin for points where the gauge relation is checked by
/// finite differences. The second-order truncation error grows like
/// step^2 / (alpha, x)^4, so points closer to the mirrors than this are not
/// resolved at step 1e-3.
inline constexpr double kGaugeSampleMargin = 0.5;

/// Configuration in coordinates x^_i = m_i^{1/2} x_i: members
/// m_i^{-1/2} e_i, 2 m_i^{-1/2} e_i and m_i^{-1/2} e_i +- m_j^{-1/2} e_j with
/// the BC_n(r, s, q; m) multiplicities.
struct RescaledConfiguration {
  BCnParameters base;
  Configuration members;
};

/// Throws PreconditionError unless every m_i > 0.
RescaledConfiguration build_hat_configuration(const BCnParameters& p);

/// x^ = Lambda x with Lambda = diag(m_i^{1/2}).
Vector to_hat_coordinates(const BCnParameters& p, const Vector& x);
Vector from_hat_coordinates(const BCnParameters& p, const Vector& x_hat);

/// Third derivatives of F^(x^) = F(Lambda^-1 x^), summed over the rescaled
/// configuration.
ThirdDerivativeTensor hat_tensor(const BCnParameters& p, const Vector& x_hat,
                                 double threshold = kDefaultThreshold);

/// Same tensor from the closed form at x = Lambda^-1 x^:
/// F^_klt = F_klt / (m_k m_l m_t)^{1/2}.
ThirdDerivativeTensor hat_tensor_by_conjugation(
    const BCnParameters& p, const Vector& x_hat,
    double threshold = kDefaultThreshold);

/// B^ = sum_k m_k^{1/2} sinh(2 m_k^{-1/2} x^_k) F^_k.
Matrix hat_metric(const BCnParameters& p, const ThirdDerivativeTensor& t_hat,
                  const Vector& x_hat);

/// V = 1/2 sum_a c_a (a,a)^2 / sinh^2(a,x)
///   + 1/4 sum_{a,b} c_a c_b (a,a)(b,b)(a,b) coth(a,x) coth(b,x),
/// the double sum including a == b.
double bosonic_potential(const Configuration& config, const Vector& x_hat,
                         double threshold = kDefaultThreshold);

/// epsilon_ab for a, b in {0, 1} (0-based), epsilon_01 = 1.
constexpr int levi_civita(int a, int b) { return a == b ? 0 : (a < b ? 1 : -1); }

/// Fermionic operators psi^{aj} and psibar_a^j on the 2^(2n)-dimensional Fock
/// space of 2n modes. Mode order is (a = 0, j = 0..n-1) then (a = 1, ...);
/// Jordan-Wigner strings follow that order. psi is the annihilator and
/// psibar = -1/2 times the creator, so {psi^{aj}, psibar_b^k} = -1/2 d_jk d_ab.
class FermionicSpace {
 public:
  explicit FermionicSpace(int n);

  int n() const { return n_; }
  int dim() const { return dim_; }
  int mode(int a, int j) const { return a * n_ + j; }

  const SparseMatrix& psi(int a, int j) const {
    return psi_[static_cast<std::size_t>(mode(a, j))];
  }
  const SparseMatrix& psibar(int a, int j) const {
    return psibar_[static_cast<std::size_t>(mode(a, j))];
  }

 private:
  int n_;
  int dim_;
  std::vector<SparseMatrix> psi_;
  std::vector<SparseMatrix> psibar_;
};

FermionicSpace build_fermionic_space(int n);

/// Largest entrywise deviation from {psi, psibar} = -1/2 delta delta and
/// {psi, psi} = {psibar, psibar} = 0 over all mode pairs.
double anticommutator_defect(const FermionicSpace& fs);

/// Phi = sum_a (2 c_a a_i a_j / sinh^2(a,x)) (a_l a_k eps_bc eps_ad
///       psi^{bi} psi^{cj} psibar_d^l psibar_a^k + (a,a) psi^{ai} psibar_a^j).
Matrix phi_matrix(const Configuration& config, const Vector& x_hat,
                  const FermionicSpace& fs,
                  double threshold = kDefaultThreshold);

/// Smooth test function for operator checks.
struct ScalarField {
  std::string name;
  std::function<double(const Vector&)> eval;
};

/// exp(-|x - center|^2 / (2 sigma^2)).
ScalarField gaussian_field(Vector center, double sigma);
/// prod_i sinh(x_i).
ScalarField sinh_product_field();
/// 1 + sum_i c_i x_i + x_0 x_{n-1} + x_0^2 / 4 with c_i = (i + 1) / 5.
ScalarField polynomial_field(int n);

/// g = prod_a |sinh(a,x)|^{c_a (a,a)/2} as log g.
double log_gauge_factor(const Configuration& config, const Vector& x_hat);

struct GaugeTerms {
  double first_form = 0.0;   // g (-Laplacian + V)(g^-1 phi) at x0
  double second_form = 0.0;  // (-Laplacian + sum c (a,a) coth d_a) phi at x0
  double residual = 0.0;     // |first - second| / max(1, |second|)
};

/// Evaluates both sides of H2 = g H1 g^-1 applied to phi (without the
/// fermionic term, which commutes with g) by second-order central finite
/// differences. Requires |(a, x0)| >= 2 step sqrt(n) for every member with
/// nonzero multiplicity (PreconditionError otherwise).
GaugeTerms gauge_terms(const Configuration& config, const Vector& x0,
                       const ScalarField& phi, double step,
                       double threshold = kDefaultThreshold);

double gauge_residual(const Configuration& config, const Vector& x0,
                      const ScalarField& phi, double step,
                      double threshold = kDefaultThreshold);

}  // namespace trigwdvv

#endif  // TRIGWDVV_SUSY_HPP_
