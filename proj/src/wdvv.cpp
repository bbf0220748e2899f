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

#include "trigwdvv/wdvv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "trigwdvv/errors.hpp"

namespace trigwdvv {

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

void check_index(const ThirdDerivativeTensor& t, int i, const char* what) {
  if (i < 0 || i >= t.n()) {
    throw DimensionError(std::string(what) + ": index " + std::to_string(i) +
                         " out of range for n = " + std::to_string(t.n()));
  }
}

struct Inverse {
  Matrix inverse;
  double condition;
};

Inverse invert(const Matrix& m, const char* what) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  const double largest = sv(0);
  const double smallest = sv(sv.size() - 1);
  if (!(smallest >= 1e-10 * largest) || largest == 0.0) {
    throw SingularMatrixError(std::string(what) +
                              " is numerically singular (sigma_min = " +
                              std::to_string(smallest) + ")");
  }
  return {m.partialPivLu().inverse(), largest / smallest};
}

// ||X A^-1 Y - Y A^-1 X||_max, relatively scaled.
double sandwich_residual(const Matrix& X, const Matrix& A_inv,
                         const Matrix& Y) {
  const Matrix diff = X * A_inv * Y - Y * A_inv * X;
  const double scale =
      std::max(1.0, max_abs(A_inv) * (max_abs(X) * max_abs(Y)));
  return max_abs(diff) / scale;
}

}  // namespace

double condition_number(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  if (smallest == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smallest;
}

WdvvResidualRecord wdvv_residual(const ThirdDerivativeTensor& t,
                                 const Matrix& B, int i, int j) {
  check_index(t, i, "wdvv_residual");
  check_index(t, j, "wdvv_residual");
  if (B.rows() != t.n() || B.cols() != t.n()) {
    throw DimensionError("wdvv_residual: metric has wrong shape");
  }
  const Inverse inv = invert(B, "metric B");
  WdvvResidualRecord rec;
  rec.indices = {i, j};
  rec.condition_number = inv.condition;
  rec.residual =
      i == j ? 0.0 : sandwich_residual(t.slice(i), inv.inverse, t.slice(j));
  return rec;
}

WdvvResidualRecord generalized_wdvv_residual(const ThirdDerivativeTensor& t,
                                             int i, int j, int k) {
  check_index(t, i, "generalized_wdvv_residual");
  check_index(t, j, "generalized_wdvv_residual");
  check_index(t, k, "generalized_wdvv_residual");
  const Inverse inv = invert(t.slice(k), "pivot F_k");
  WdvvResidualRecord rec;
  rec.indices = {i, j, k};
  rec.condition_number = inv.condition;
  rec.residual =
      i == j ? 0.0 : sandwich_residual(t.slice(i), inv.inverse, t.slice(j));
  return rec;
}

double commuting_residual(const ThirdDerivativeTensor& t, int i, int j) {
  check_index(t, i, "commuting_residual");
  check_index(t, j, "commuting_residual");
  if (i == j) return 0.0;
  const Matrix Fi = t.slice(i);
  const Matrix Fj = t.slice(j);
  return max_abs(Fi * Fj - Fj * Fi) / std::max(1.0, max_abs(Fi) * max_abs(Fj));
}

DiagonalityReport diagonality_report(const ThirdDerivativeTensor& t,
                                     const BCnParameters& p, const Vector& x) {
  if (p.n() != t.n()) {
    throw DimensionError("diagonality_report: parameter / tensor mismatch");
  }
  const Matrix B = metric_B(t, x);
  const double h = h_function(p, x);
  DiagonalityReport rep;
  rep.b_norm = max_abs(B);
  for (int l = 0; l < t.n(); ++l) {
    for (int u = 0; u < t.n(); ++u) {
      if (l == u) {
        rep.diag_deviation =
            std::max(rep.diag_deviation, std::abs(B(l, l) - p.m(l) * h));
      } else {
        rep.offdiag_max = std::max(rep.offdiag_max, std::abs(B(l, u)));
      }
    }
  }
  return rep;
}

WdvvResidualRecord max_wdvv_residual(const ThirdDerivativeTensor& t,
                                     const Vector& x) {
  const Matrix B = metric_B(t, x);
  WdvvResidualRecord worst = wdvv_residual(t, B, 0, 0);
  for (int i = 0; i < t.n(); ++i) {
    for (int j = i + 1; j < t.n(); ++j) {
      const WdvvResidualRecord rec = wdvv_residual(t, B, i, j);
      if (rec.residual >= worst.residual) worst = rec;
    }
  }
  worst.point = x;
  return worst;
}

WdvvResidualRecord max_generalized_wdvv_residual(
    const ThirdDerivativeTensor& t) {
  WdvvResidualRecord worst;
  worst.indices = {0, 0, 0};
  for (int k = 0; k < t.n(); ++k) {
    for (int i = 0; i < t.n(); ++i) {
      for (int j = i + 1; j < t.n(); ++j) {
        const WdvvResidualRecord rec = generalized_wdvv_residual(t, i, j, k);
        if (rec.residual >= worst.residual) worst = rec;
      }
    }
    worst.condition_number =
        std::max(worst.condition_number, condition_number(t.slice(k)));
  }
  return worst;
}

double max_commuting_residual(const ThirdDerivativeTensor& t) {
  double worst = 0.0;
  for (int i = 0; i < t.n(); ++i) {
    for (int j = i + 1; j < t.n(); ++j) {
      worst = std::max(worst, commuting_residual(t, i, j));
    }
  }
  return worst;
}

}  // namespace trigwdvv
