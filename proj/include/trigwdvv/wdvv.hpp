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

// Residuals for the WDVV-type conditions on a third-derivative tensor:
// F_i B^-1 F_j = F_j B^-1 F_i, the generalized form with F_k as pivot, plain
// commutativity F_i F_j = F_j F_i, and the diagonal structure of B.

#ifndef TRIGWDVV_WDVV_HPP_
#define TRIGWDVV_WDVV_HPP_

#include <vector>

#include "trigwdvv/configuration.hpp"
#include "trigwdvv/prepotential.hpp"

namespace trigwdvv {

/// Matrices with condition number above this are treated as singular by the
/// sampling drivers (the point is discarded and resampled).
inline constexpr double kConditionCap = 1e8;

struct WdvvResidualRecord {
  Vector point;
  std::vector<int> indices;
  double residual = 0.0;          // relative max-abs norm, >= 0
  double condition_number = 1.0;  // 2-norm condition of the inverted matrix
};

/// 2-norm condition number via SVD; +inf for an exactly singular matrix.
double condition_number(const Matrix& m);

/// ||F_i B^-1 F_j - F_j B^-1 F_i||_max / max(1, ||F_i|| ||B^-1|| ||F_j||),
/// norms max-abs. Throws SingularMatrixError when the smallest singular value
/// of B is below 1e-10 times the largest.
WdvvResidualRecord wdvv_residual(const ThirdDerivativeTensor& t,
                                 const Matrix& B, int i, int j);

/// Same with F_k in place of B.
WdvvResidualRecord generalized_wdvv_residual(const ThirdDerivativeTensor& t,
                                             int i, int j, int k);

/// ||F_i F_j - F_j F_i||_max / max(1, ||F_i|| ||F_j||).
double commuting_residual(const ThirdDerivativeTensor& t, int i, int j);

struct DiagonalityReport {
  double offdiag_max = 0.0;     // max_{l != t} |B_lt|
  double diag_deviation = 0.0;  // max_l |B_ll - m_l h(x)|
  double b_norm = 0.0;          // max-abs norm of B
};

DiagonalityReport diagonality_report(const ThirdDerivativeTensor& t,
                                     const BCnParameters& p, const Vector& x);

/// Largest wdvv_residual over all pairs i < j (B = metric_B(t, x)).
WdvvResidualRecord max_wdvv_residual(const ThirdDerivativeTensor& t,
                                     const Vector& x);

/// Largest generalized_wdvv_residual over all i < j and every pivot k.
WdvvResidualRecord max_generalized_wdvv_residual(const ThirdDerivativeTensor& t);

/// Largest commuting_residual over all pairs i < j.
double max_commuting_residual(const ThirdDerivativeTensor& t);

}  // namespace trigwdvv

#endif  // TRIGWDVV_WDVV_HPP_
