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

#include "trigwdvv/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "trigwdvv/errors.hpp"

namespace trigwdvv {

namespace {

void check_dim(const Vector& v, int dim, const char* what) {
  if (v.size() != dim) {
    throw DimensionError(std::string(what) + ": vector of length " +
                         std::to_string(v.size()) + ", expected " +
                         std::to_string(dim));
  }
}

double coth_checked(double z) {
  if (z == 0.0) throw SingularityError("coth evaluated on a mirror");
  return 1.0 / std::tanh(z);
}

double inf_norm(const Vector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

}  // namespace

ProductContext::ProductContext(Configuration config, Vector x,
                               double threshold)
    : config_(std::move(config)), x_(std::move(x)) {
  require_admissible(config_, x_, threshold);
}

Vector multiply(const ProductContext& ctx, const Vector& u, const Vector& v) {
  const int dim = ctx.config().dimension();
  check_dim(u, dim, "multiply");
  check_dim(v, dim, "multiply");
  Vector out = Vector::Zero(dim);
  for (const auto& m : ctx.config().members()) {
    const double weight = m.multiplicity * (m.vector.dot(u) * m.vector.dot(v));
    if (weight == 0.0) continue;
    out += weight * coth_checked(m.vector.dot(ctx.x())) * m.vector;
  }
  return out;
}

double associativity_residual(const ProductContext& ctx, const Vector& u,
                              const Vector& v, const Vector& w) {
  const Vector left = multiply(ctx, multiply(ctx, u, v), w);
  const Vector right = multiply(ctx, u, multiply(ctx, v, w));
  const double scale = std::max({1.0, inf_norm(left), inf_norm(right)});
  return inf_norm(left - right) / scale;
}

double structure_associativity_residual(const Tensor3& C) {
  const int n = C.n();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int p = 0; p < n; ++p) {
          double diff = 0.0;
          for (int l = 0; l < n; ++l) {
            diff += C(i, j, l) * C(l, k, p) - C(j, k, l) * C(i, l, p);
          }
          worst = std::max(worst, std::abs(diff));
        }
      }
    }
  }
  const double c = C.max_abs();
  return worst / std::max(1.0, c * c);
}

RestrictionContext::RestrictionContext(double r, double s, double q,
                                       Partition part, Vector x_tilde,
                                       double threshold)
    : r_(r),
      s_(s),
      q_(q),
      ambient_(build_bcN_root_system(part.N(), r, s, q)),
      part_(std::move(part)),
      x_tilde_(std::move(x_tilde)) {
  check_dim(x_tilde_, part_.n(), "RestrictionContext");
  x0_ = embed(x_tilde_, part_);
  for (const auto& m : ambient_.members()) {
    const bool inside = orthogonal_to_subspace(m.vector, part_);
    in_subsystem_.push_back(inside);
    if (inside || m.multiplicity == 0.0) continue;
    const double z = m.vector.dot(x0_);
    if (std::abs(z) < threshold || z == 0.0) {
      throw SingularityError("restricted point too close to a mirror: (alpha, x0) = " +
                             std::to_string(z));
    }
  }
}

bool RestrictionContext::subsystem_empty() const {
  return std::none_of(in_subsystem_.begin(), in_subsystem_.end(),
                      [](bool b) { return b; });
}

BCnParameters RestrictionContext::projected_parameters() const {
  return {r_, s_, q_, part_.as_multiplicities()};
}

Configuration RestrictionContext::projected_config() const {
  return project_configuration(ambient_, part_);
}

Vector embed(const Vector& coords, const Partition& part) {
  check_dim(coords, part.n(), "embed");
  Vector out(part.N());
  for (int k = 0; k < part.n(); ++k) {
    out.segment(part.offset(k), part.block(k)).setConstant(coords(k));
  }
  return out;
}

bool is_block_constant(const Vector& u, const Partition& part, double tol) {
  check_dim(u, part.N(), "is_block_constant");
  for (int k = 0; k < part.n(); ++k) {
    const auto seg = u.segment(part.offset(k), part.block(k));
    if (seg.maxCoeff() - seg.minCoeff() > tol) return false;
  }
  return true;
}

Vector limit_product(const RestrictionContext& rctx, const Vector& u,
                     const Vector& v) {
  const Configuration& a = rctx.ambient_config();
  check_dim(u, a.dimension(), "limit_product");
  check_dim(v, a.dimension(), "limit_product");
  Vector out = Vector::Zero(a.dimension());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (rctx.in_subsystem(i)) continue;
    const auto& m = a[i];
    const double weight = m.multiplicity * (m.vector.dot(u) * m.vector.dot(v));
    if (weight == 0.0) continue;
    out += weight * coth_checked(m.vector.dot(rctx.x0())) * m.vector;
  }
  return out;
}

Vector restricted_multiply(const RestrictionContext& rctx, const Vector& u,
                           const Vector& v) {
  const Configuration& a = rctx.ambient_config();
  check_dim(u, a.dimension(), "restricted_multiply");
  check_dim(v, a.dimension(), "restricted_multiply");
  if (!is_block_constant(u, rctx.part()) || !is_block_constant(v, rctx.part())) {
    throw PreconditionError(
        "restricted_multiply: arguments must be tangent to W_B (block-constant)");
  }
  Vector out = Vector::Zero(a.dimension());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (rctx.in_subsystem(i)) continue;
    const auto& m = a[i];
    const double weight = m.multiplicity * (m.vector.dot(u) * m.vector.dot(v));
    if (weight == 0.0) continue;
    out += weight * coth_checked(m.vector.dot(rctx.x0())) *
           project_to_subspace(m.vector, rctx.part());
  }
  return out;
}

double tangency_residual(const RestrictionContext& rctx, const Vector& u,
                         const Vector& v, const Vector& alpha) {
  const Configuration& a = rctx.ambient_config();
  check_dim(u, a.dimension(), "tangency_residual");
  check_dim(v, a.dimension(), "tangency_residual");
  check_dim(alpha, a.dimension(), "tangency_residual");
  if (rctx.subsystem_empty()) {
    throw PreconditionError("tangency_residual: subsystem B is empty");
  }
  const int at = a.find(alpha);
  if (at < 0 || !rctx.in_subsystem(static_cast<std::size_t>(at))) {
    throw PreconditionError("tangency_residual: alpha is not a member of B");
  }
  double sum = 0.0;
  double magnitude = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (rctx.in_subsystem(i)) continue;
    const auto& b = a[i];
    const double term = b.multiplicity * (b.vector.dot(u) * b.vector.dot(v)) *
                        alpha.dot(b.vector);
    if (term == 0.0) continue;
    const double value = term * coth_checked(b.vector.dot(rctx.x0()));
    sum += value;
    magnitude += std::abs(value);
  }
  return std::abs(sum) / std::max(1.0, magnitude);
}

Tensor3 structure_constants(const RestrictionContext& rctx) {
  const Partition& part = rctx.part();
  const int n = part.n();
  Tensor3 C(n);
  for (int i = 0; i < n; ++i) {
    const Vector fi = part.indicator(i);
    for (int j = 0; j < n; ++j) {
      const Vector product =
          restricted_multiply(rctx, fi, part.indicator(j));
      const Vector coords = project_vector(product, part);
      for (int k = 0; k < n; ++k) C(i, j, k) = coords(k);
    }
  }
  return C;
}

ThirdDerivativeTensor projected_tensor(const RestrictionContext& rctx) {
  return tensor_generic(rctx.projected_config(), rctx.x_tilde(), 0.0);
}

double h_b_decomposition_residual(const RestrictionContext& rctx) {
  const BCnParameters p = rctx.projected_parameters();
  const Vector& xt = rctx.x_tilde();
  const double h = h_function(p, xt);
  if (std::abs(h) < 1e-6) {
    throw PreconditionError("h_b_decomposition_residual: h(x~) = " +
                            std::to_string(h) + " is too close to zero");
  }
  const ThirdDerivativeTensor F = projected_tensor(rctx);
  Matrix combo = Matrix::Zero(p.n(), p.n());
  for (int i = 0; i < p.n(); ++i) {
    combo += (std::sinh(2.0 * xt(i)) / h) * F.slice(i);
  }
  Matrix H = Matrix::Zero(p.n(), p.n());
  double m_max = 0.0;
  for (int i = 0; i < p.n(); ++i) {
    H(i, i) = p.m(i);
    m_max = std::max(m_max, std::abs(p.m(i)));
  }
  return (H - combo).cwiseAbs().maxCoeff() / std::max(1.0, m_max);
}

Vector orthogonal_direction(const Partition& part, const Vector& gaussian) {
  check_dim(gaussian, part.N(), "orthogonal_direction");
  Vector d = gaussian - project_to_subspace(gaussian, part);
  const double norm = d.norm();
  if (norm == 0.0) {
    throw PreconditionError(
        "orthogonal_direction: W_B has no orthogonal complement or the draw "
        "lies in W_B");
  }
  return d / norm;
}

std::vector<double> limit_path_errors(const RestrictionContext& rctx,
                                      const Vector& u, const Vector& v,
                                      const Vector& direction,
                                      const std::vector<double>& eps) {
  const Vector limit = limit_product(rctx, u, v);
  std::vector<double> errors;
  errors.reserve(eps.size());
  for (double e : eps) {
    const ProductContext ctx(rctx.ambient_config(), rctx.x0() + e * direction,
                             0.0);
    errors.push_back(inf_norm(multiply(ctx, u, v) - limit));
  }
  return errors;
}

}  // namespace trigwdvv
