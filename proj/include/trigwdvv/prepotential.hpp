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

// The trigonometric prepotential F = sum_alpha c_alpha f((alpha, x)) with
// f''' = coth: its third-derivative tensor (summed over the configuration, or
// in closed form for BC_n(r, s, q; m)), the metric B = sum_k sinh(2x_k) F_k
// and the hyperbolic helper functions that make B diagonal.

#ifndef TRIGWDVV_PREPOTENTIAL_HPP_
#define TRIGWDVV_PREPOTENTIAL_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "trigwdvv/configuration.hpp"

namespace trigwdvv {

/// Default admissibility margin: |(alpha, x)| and |sinh 2x_k| must be >= this.
inline constexpr double kDefaultThreshold = 0.05;

/// Dense n x n x n array. Used both for third-derivative tensors (fully
/// symmetric) and for structure constants (symmetric in the first two slots).
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n)
      : n_(n), data_(static_cast<std::size_t>(n) * n * n, 0.0) {}

  int n() const { return n_; }

  double& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
  double operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }

  /// The matrix (F_i)_{jk} = F_{ijk}.
  Matrix slice(int i) const;

  /// Largest |F_ijk - F_sigma(ijk)| over all index permutations.
  double symmetry_defect() const;

  /// Largest |entry|.
  double max_abs() const;

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }

  int n_ = 0;
  std::vector<double> data_;
};

using ThirdDerivativeTensor = Tensor3;

/// Li_3(w) = sum_{k>=1} w^k / k^3 for |w| < 1, truncated once a term drops
/// below 1e-16.
double polylog3(double w);

/// f(z) = z^3/6 - Li_3(e^{-2z}) / 4, defined here for z > 0 only.
double eval_f(double z);

/// F(x) = sum_alpha c_alpha f(|(alpha, x)|). Using |.| keeps the Li_3 series
/// convergent and changes F only by a piecewise quadratic, so third
/// derivatives are unaffected away from the mirrors. Zero pairings throw.
/// Only used as an oracle for the third-derivative tensor.
double eval_prepotential(const Configuration& c, const Vector& x);

struct HyperbolicHelpers {
  Vector b;        // coth x_i
  Vector b_tilde;  // coth 2x_i
  Matrix b_pair;   // coth(x_i + x_j) + coth(x_i - x_j), zero diagonal
};

HyperbolicHelpers hyperbolic_helpers(const Vector& x,
                                     double threshold = kDefaultThreshold);

/// Residuals of
///   A_k b_kj + A_j b_jk - 2(cosh 2x_k + cosh 2x_j)   (k != j)
///   A_k b_jk + A_j b_kj
/// with A_k = sinh 2x_k. The first entry is 0 when k == j.
std::pair<double, double> identity_residuals(
    const Vector& x, int k, int j, double threshold = kDefaultThreshold);

/// F_ijk = sum_alpha c_alpha alpha_i alpha_j alpha_k coth(alpha, x), summed
/// in member order. Members with c_alpha == 0 are skipped.
ThirdDerivativeTensor tensor_generic(const Configuration& c, const Vector& x,
                                     double threshold = kDefaultThreshold);

/// Closed form of the BC_n(r, s, q; m) third derivatives in terms of b_k,
/// b~_k and b_kj.
ThirdDerivativeTensor tensor_closed_form(const BCnParameters& p,
                                         const Vector& x,
                                         double threshold = kDefaultThreshold);

/// B = sum_k sinh(2 x_k) F_k.
Matrix metric_B(const ThirdDerivativeTensor& t, const Vector& x);

/// h(x) = 2q sum_k m_k cosh 2x_k + r.
double h_function(const BCnParameters& p, const Vector& x);

/// |(alpha, x)| >= theta for every member with nonzero multiplicity, and
/// |sinh 2x_k| >= theta for every k.
bool is_admissible(const Configuration& c, const Vector& x, double theta);

/// Throws SingularityError naming the first member with nonzero multiplicity
/// whose pairing with x is below `threshold` (or exactly zero).
void require_admissible(const Configuration& c, const Vector& x,
                        double threshold);

}  // namespace trigwdvv

#endif  // TRIGWDVV_PREPOTENTIAL_HPP_
