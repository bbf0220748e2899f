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

// The commutative multiplication u * v = sum c_a (a,u)(a,v) coth(a,x) a on the
// tangent space, and its restriction to the block-constant subspace W_B of
// the BC_N root system.

#ifndef TRIGWDVV_ALGEBRA_HPP_
#define TRIGWDVV_ALGEBRA_HPP_

#include <vector>

#include "trigwdvv/configuration.hpp"
#include "trigwdvv/prepotential.hpp"

namespace trigwdvv {

/// Tolerance for block-constancy of tangent vectors.
inline constexpr double kBlockTolerance = 1e-12;

class ProductContext {
 public:
  /// Throws SingularityError unless x is admissible for `config` with the
  /// given margin. A threshold of 0 rejects only exact mirror points.
  ProductContext(Configuration config, Vector x,
                 double threshold = kDefaultThreshold);

  const Configuration& config() const { return config_; }
  const Vector& x() const { return x_; }

 private:
  Configuration config_;
  Vector x_;
};

/// u * v. Zero-multiplicity members and members with (a,u)(a,v) == 0 are
/// skipped, so mirrors of such members never enter.
Vector multiply(const ProductContext& ctx, const Vector& u, const Vector& v);

/// ||(u*v)*w - u*(v*w)||_inf / max(1, ||(u*v)*w||_inf, ||u*(v*w)||_inf).
double associativity_residual(const ProductContext& ctx, const Vector& u,
                              const Vector& v, const Vector& w);

/// Associativity defect of structure constants C (product e_i e_j =
/// sum_k C_ijk e_k): max over i,j,k,p of |sum_l C_ijl C_lkp - C_jkl C_ilp|,
/// relatively scaled by max(1, max|C|^2).
double structure_associativity_residual(const Tensor3& C);

/// Block-constant point x~ in f-basis coordinates on W_B inside BC_N(r, s, q).
class RestrictionContext {
 public:
  /// Throws SingularityError unless the embedded point is admissible for every
  /// member outside the subsystem B.
  RestrictionContext(double r, double s, double q, Partition part,
                     Vector x_tilde, double threshold = kDefaultThreshold);

  const Configuration& ambient_config() const { return ambient_; }
  const Partition& part() const { return part_; }
  const Vector& x_tilde() const { return x_tilde_; }
  /// sum_i x~_i f_i in ambient coordinates.
  const Vector& x0() const { return x0_; }
  double r() const { return r_; }
  double s() const { return s_; }
  double q() const { return q_; }
  /// Whether ambient member i belongs to the subsystem B.
  bool in_subsystem(std::size_t i) const { return in_subsystem_[i]; }
  bool subsystem_empty() const;

  /// BC_n(r, s, q; m = blocks).
  BCnParameters projected_parameters() const;
  /// The projected configuration (equal to build_bcn(projected_parameters())).
  Configuration projected_config() const;

 private:
  double r_, s_, q_;
  Configuration ambient_;
  Partition part_;
  Vector x_tilde_;
  Vector x0_;
  std::vector<bool> in_subsystem_;
};

/// Embeds f-basis coordinates as the ambient vector sum_i c_i f_i.
Vector embed(const Vector& coords, const Partition& part);

bool is_block_constant(const Vector& u, const Partition& part,
                       double tol = kBlockTolerance);

/// The limit of u * v as x -> x0 along W_B: sum over a not in B of
/// c_a (a,u)(a,v) coth(a,x0) a, with the unprojected a.
Vector limit_product(const RestrictionContext& rctx, const Vector& u,
                     const Vector& v);

/// Same sum with every a replaced by its projection onto W_B. u and v must be
/// block-constant (PreconditionError otherwise).
Vector restricted_multiply(const RestrictionContext& rctx, const Vector& u,
                           const Vector& v);

/// |sum_{b not in B} c_b (b,u)(b,v)(alpha,b) coth(b,x0)| divided by
/// max(1, sum of |terms|). alpha must be a member of B.
double tangency_residual(const RestrictionContext& rctx, const Vector& u,
                         const Vector& v, const Vector& alpha);

/// C[i][j][k] = f-basis coordinate k of restricted_multiply(f_i, f_j).
Tensor3 structure_constants(const RestrictionContext& rctx);

/// Third-derivative tensor of the projected prepotential at x~.
ThirdDerivativeTensor projected_tensor(const RestrictionContext& rctx);

/// ||diag(m) - sum_i h^-1 sinh(2 x~_i) F~_i||_max / max(1, max m_i), with
/// h = h(x~) of the projected parameters. Throws PreconditionError for
/// |h| < 1e-6.
double h_b_decomposition_residual(const RestrictionContext& rctx);

/// Unit direction orthogonal to W_B, drawn from `gaussian` (any vector with
/// a nonzero B-component): the input is projected onto W_B^perp and
/// normalised.
Vector orthogonal_direction(const Partition& part, const Vector& gaussian);

/// ||multiply(x0 + eps d; u, v) - limit_product(u, v)||_inf for each eps.
std::vector<double> limit_path_errors(const RestrictionContext& rctx,
                                      const Vector& u, const Vector& v,
                                      const Vector& direction,
                                      const std::vector<double>& eps);

}  // namespace trigwdvv

#endif  // TRIGWDVV_ALGEBRA_HPP_
