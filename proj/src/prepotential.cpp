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

#include "trigwdvv/prepotential.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include "trigwdvv/errors.hpp"

namespace trigwdvv {

namespace {

std::string describe(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v(i);
  os << ')';
  return os.str();
}

double checked_coth(double z, double threshold, const char* what) {
  if (std::abs(z) < threshold || z == 0.0) {
    throw SingularityError(std::string(what) + " argument " +
                           std::to_string(z) + " below admissibility threshold");
  }
  return 1.0 / std::tanh(z);
}

}  // namespace

Matrix Tensor3::slice(int i) const {
  Matrix out(n_, n_);
  for (int j = 0; j < n_; ++j) {
    for (int k = 0; k < n_; ++k) out(j, k) = (*this)(i, j, k);
  }
  return out;
}

double Tensor3::symmetry_defect() const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      for (int k = 0; k < n_; ++k) {
        const double v = (*this)(i, j, k);
        const std::array<double, 5> others = {(*this)(i, k, j), (*this)(j, i, k),
                                              (*this)(j, k, i), (*this)(k, i, j),
                                              (*this)(k, j, i)};
        for (double o : others) worst = std::max(worst, std::abs(v - o));
      }
    }
  }
  return worst;
}

double Tensor3::max_abs() const {
  double worst = 0.0;
  for (double v : data_) worst = std::max(worst, std::abs(v));
  return worst;
}

double polylog3(double w) {
  if (!(std::abs(w) < 1.0)) {
    throw DomainError("polylog3 series needs |w| < 1, got " + std::to_string(w));
  }
  double sum = 0.0;
  double power = w;
  for (int k = 1;; ++k) {
    const double term = power / (static_cast<double>(k) * k * k);
    sum += term;
    if (std::abs(term) < 1e-16) break;
    power *= w;
  }
  return sum;
}

double eval_f(double z) {
  if (!(z > 0.0)) {
    throw DomainError("eval_f is defined for z > 0 only, got " +
                      std::to_string(z));
  }
  return z * z * z / 6.0 - 0.25 * polylog3(std::exp(-2.0 * z));
}

double eval_prepotential(const Configuration& c, const Vector& x) {
  if (x.size() != c.dimension()) {
    throw DimensionError("eval_prepotential: point dimension mismatch");
  }
  double total = 0.0;
  for (const auto& m : c.members()) {
    if (m.multiplicity == 0.0) continue;
    const double z = m.vector.dot(x);
    if (z == 0.0) {
      throw SingularityError("eval_prepotential: point on mirror of " +
                             describe(m.vector));
    }
    total += m.multiplicity * eval_f(std::abs(z));
  }
  return total;
}

HyperbolicHelpers hyperbolic_helpers(const Vector& x, double threshold) {
  const Eigen::Index n = x.size();
  if (n < 1) throw DimensionError("hyperbolic_helpers: empty point");
  HyperbolicHelpers h{Vector(n), Vector(n), Matrix::Zero(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    h.b(i) = checked_coth(x(i), threshold, "coth x_i");
    h.b_tilde(i) = checked_coth(2.0 * x(i), threshold, "coth 2x_i");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      h.b_pair(i, j) = checked_coth(x(i) + x(j), threshold, "coth(x_i + x_j)") +
                       checked_coth(x(i) - x(j), threshold, "coth(x_i - x_j)");
    }
  }
  return h;
}

std::pair<double, double> identity_residuals(const Vector& x, int k, int j,
                                             double threshold) {
  if (k < 0 || j < 0 || k >= x.size() || j >= x.size()) {
    throw DimensionError("identity_residuals: index out of range");
  }
  const HyperbolicHelpers h = hyperbolic_helpers(x, threshold);
  const double Ak = std::sinh(2.0 * x(k));
  const double Aj = std::sinh(2.0 * x(j));
  const double first =
      k == j ? 0.0
             : Ak * h.b_pair(k, j) + Aj * h.b_pair(j, k) -
                   2.0 * (std::cosh(2.0 * x(k)) + std::cosh(2.0 * x(j)));
  const double second = Ak * h.b_pair(j, k) + Aj * h.b_pair(k, j);
  return {first, second};
}

void require_admissible(const Configuration& c, const Vector& x,
                        double threshold) {
  if (x.size() != c.dimension()) {
    throw DimensionError("point of dimension " + std::to_string(x.size()) +
                         " for configuration of dimension " +
                         std::to_string(c.dimension()));
  }
  if (!x.allFinite()) throw DomainError("point has non-finite coordinates");
  for (const auto& m : c.members()) {
    if (m.multiplicity == 0.0) continue;
    const double z = m.vector.dot(x);
    if (std::abs(z) < threshold || z == 0.0) {
      throw SingularityError("point too close to the mirror of " +
                             describe(m.vector) + ": (alpha, x) = " +
                             std::to_string(z));
    }
  }
}

ThirdDerivativeTensor tensor_generic(const Configuration& c, const Vector& x,
                                     double threshold) {
  require_admissible(c, x, threshold);
  const int n = c.dimension();
  ThirdDerivativeTensor t(n);
  for (const auto& m : c.members()) {
    if (m.multiplicity == 0.0) continue;
    const Vector& a = m.vector;
    const double w = m.multiplicity / std::tanh(a.dot(x));
    for (int i = 0; i < n; ++i) {
      if (a(i) == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        if (a(j) == 0.0) continue;
        for (int k = 0; k < n; ++k) t(i, j, k) += w * a(i) * a(j) * a(k);
      }
    }
  }
  return t;
}

ThirdDerivativeTensor tensor_closed_form(const BCnParameters& p,
                                         const Vector& x, double threshold) {
  const int n = p.n();
  if (x.size() != n) {
    throw DimensionError("tensor_closed_form: point dimension mismatch");
  }
  const HyperbolicHelpers h = hyperbolic_helpers(x, threshold);
  const double r = p.r();
  const double s = p.s();
  const double q = p.q();
  ThirdDerivativeTensor t(n);
  for (int k = 0; k < n; ++k) {
    const double mk = p.m(k);
    double pair_sum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != k) pair_sum += p.m(j) * mk * h.b_pair(k, j);
    }
    t(k, k, k) += r * mk * h.b(k) +
                  4.0 * (2.0 * s * mk + q * mk * (mk - 1.0)) * h.b_tilde(k) +
                  q * pair_sum;
    for (int l = 0; l < n; ++l) {
      for (int u = 0; u < n; ++u) {
        // Pair terms; b_pair has a zero diagonal so k == u etc. drop out.
        if (k == l) t(k, l, u) += q * p.m(u) * mk * h.b_pair(u, k);
        if (k == u) t(k, l, u) += q * p.m(l) * mk * h.b_pair(l, k);
        if (l == u) t(k, l, u) += q * mk * p.m(l) * h.b_pair(k, l);
      }
    }
  }
  return t;
}

Matrix metric_B(const ThirdDerivativeTensor& t, const Vector& x) {
  if (x.size() != t.n()) {
    throw DimensionError("metric_B: tensor and point dimensions differ");
  }
  Matrix B = Matrix::Zero(t.n(), t.n());
  for (int k = 0; k < t.n(); ++k) B += std::sinh(2.0 * x(k)) * t.slice(k);
  return B;
}

double h_function(const BCnParameters& p, const Vector& x) {
  if (x.size() != p.n()) {
    throw DimensionError("h_function: point dimension mismatch");
  }
  double sum = 0.0;
  for (int k = 0; k < p.n(); ++k) sum += p.m(k) * std::cosh(2.0 * x(k));
  return 2.0 * p.q() * sum + p.r();
}

bool is_admissible(const Configuration& c, const Vector& x, double theta) {
  if (x.size() != c.dimension() || !x.allFinite()) return false;
  for (const auto& m : c.members()) {
    if (m.multiplicity == 0.0) continue;
    const double z = m.vector.dot(x);
    if (std::abs(z) < theta || z == 0.0) return false;
  }
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    const double a = std::sinh(2.0 * x(k));
    if (std::abs(a) < theta || a == 0.0) return false;
  }
  return true;
}

}  // namespace trigwdvv
