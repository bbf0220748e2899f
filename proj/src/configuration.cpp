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

#include "trigwdvv/configuration.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "trigwdvv/errors.hpp"

namespace trigwdvv {

namespace {

Vector unit(int dim, int i, double scale = 1.0) {
  Vector v = Vector::Zero(dim);
  v(i) = scale;
  return v;
}

bool coincide(const Vector& a, const Vector& b, double tol) {
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

Configuration::Configuration(int dimension) : dimension_(dimension) {
  if (dimension < 1) {
    throw DimensionError("configuration dimension must be >= 1, got " +
                         std::to_string(dimension));
  }
}

Configuration::Configuration(int dimension, std::vector<WeightedVector> members)
    : Configuration(dimension) {
  for (auto& m : members) add(m.vector, m.multiplicity);
}

void Configuration::add(const Vector& v, double multiplicity) {
  if (v.size() != dimension_) {
    throw DimensionError("member of length " + std::to_string(v.size()) +
                         " in configuration of dimension " +
                         std::to_string(dimension_));
  }
  if (!v.allFinite() || !std::isfinite(multiplicity)) {
    throw DomainError("configuration member has non-finite entries");
  }
  if (v.isZero(0.0)) {
    throw DomainError("configuration members must be nonzero vectors");
  }
  const int at = find(v);
  if (at >= 0) {
    members_[static_cast<std::size_t>(at)].multiplicity += multiplicity;
  } else {
    members_.push_back({v, multiplicity});
  }
}

int Configuration::find(const Vector& v, double tol) const {
  if (v.size() != dimension_) return -1;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (coincide(members_[i].vector, v, tol)) return static_cast<int>(i);
  }
  return -1;
}

double Configuration::total_multiplicity() const {
  double total = 0.0;
  for (const auto& m : members_) total += m.multiplicity;
  return total;
}

bool same_members(const Configuration& a, const Configuration& b, double tol) {
  if (a.dimension() != b.dimension() || a.size() != b.size()) return false;
  for (const auto& m : a.members()) {
    const int at = b.find(m.vector);
    if (at < 0) return false;
    if (std::abs(b[static_cast<std::size_t>(at)].multiplicity -
                 m.multiplicity) > tol) {
      return false;
    }
  }
  return true;
}

BCnParameters::BCnParameters(double r, double s, double q,
                             std::vector<double> m)
    : r_(r), s_(s), q_(q), m_(std::move(m)), N_(0.0) {
  if (m_.empty()) throw DimensionError("BC_n parameters need n >= 1");
  for (double mi : m_) {
    if (!std::isfinite(mi)) throw DomainError("non-finite multiplicity m_i");
    N_ += mi;
  }
  if (!std::isfinite(r_) || !std::isfinite(s_) || !std::isfinite(q_)) {
    throw DomainError("non-finite r, s or q");
  }
}

Partition::Partition(std::vector<int> blocks)
    : blocks_(std::move(blocks)), N_(0) {
  if (blocks_.empty()) throw PreconditionError("partition has no blocks");
  for (int b : blocks_) {
    if (b < 1) {
      throw PreconditionError("partition blocks must be >= 1, got " +
                              std::to_string(b));
    }
    const int index = static_cast<int>(offsets_.size());
    offsets_.push_back(N_);
    owner_.insert(owner_.end(), static_cast<std::size_t>(b), index);
    N_ += b;
  }
}

Vector Partition::indicator(int i) const {
  Vector f = Vector::Zero(N_);
  f.segment(offset(i), block(i)).setOnes();
  return f;
}

std::vector<double> Partition::as_multiplicities() const {
  return {blocks_.begin(), blocks_.end()};
}

double constraint_residual(const BCnParameters& p) {
  return p.r() + 8.0 * p.s() + 2.0 * p.q() * (p.N() - 2.0);
}

double constrained_r(double s, double q, const std::vector<double>& m) {
  double N = 0.0;
  for (double mi : m) N += mi;
  return -8.0 * s - 2.0 * q * (N - 2.0);
}

Configuration build_bcn(const BCnParameters& p) {
  const int n = p.n();
  Configuration c(n);
  for (int i = 0; i < n; ++i) c.add(unit(n, i), p.r() * p.m(i));
  for (int i = 0; i < n; ++i) {
    const double mi = p.m(i);
    c.add(unit(n, i, 2.0), p.s() * mi + 0.5 * p.q() * mi * (mi - 1.0));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double mult = p.q() * p.m(i) * p.m(j);
      Vector plus = unit(n, i) + unit(n, j);
      Vector minus = unit(n, i) - unit(n, j);
      c.add(plus, mult);
      c.add(minus, mult);
    }
  }
  return c;
}

Configuration build_bcN_root_system(int N, double r, double s, double q) {
  if (N < 1) throw DimensionError("root system rank must be >= 1");
  return build_bcn(
      BCnParameters(r, s, q, std::vector<double>(static_cast<std::size_t>(N), 1.0)));
}

Vector project_vector(const Vector& u, const Partition& part) {
  if (u.size() != part.N()) {
    throw DimensionError("project_vector: vector of length " +
                         std::to_string(u.size()) + ", partition of " +
                         std::to_string(part.N()));
  }
  Vector out(part.n());
  for (int k = 0; k < part.n(); ++k) {
    out(k) = u.segment(part.offset(k), part.block(k)).sum() / part.block(k);
  }
  return out;
}

Vector project_to_subspace(const Vector& u, const Partition& part) {
  const Vector coords = project_vector(u, part);
  Vector out(part.N());
  for (int k = 0; k < part.n(); ++k) {
    out.segment(part.offset(k), part.block(k)).setConstant(coords(k));
  }
  return out;
}

bool orthogonal_to_subspace(const Vector& alpha, const Partition& part) {
  if (alpha.size() != part.N()) {
    throw DimensionError("orthogonal_to_subspace: dimension mismatch");
  }
  for (int k = 0; k < part.n(); ++k) {
    if (alpha.segment(part.offset(k), part.block(k)).sum() != 0.0) return false;
  }
  return true;
}

Configuration project_configuration(const Configuration& ambient,
                                    const Partition& part) {
  if (ambient.dimension() != part.N()) {
    throw DimensionError("project_configuration: ambient dimension " +
                         std::to_string(ambient.dimension()) +
                         " != partition total " + std::to_string(part.N()));
  }
  Configuration out(part.n());
  for (const auto& m : ambient.members()) {
    if (orthogonal_to_subspace(m.vector, part)) continue;
    // (alpha, f_k) = m_k * alpha~_k
    Vector image = project_vector(m.vector, part);
    for (int k = 0; k < part.n(); ++k) image(k) *= part.block(k);
    out.add(image, m.multiplicity);
  }
  return out;
}

Configuration restrict_configuration(int N, double r, double s, double q,
                                     const Partition& part) {
  if (N != part.N()) {
    throw DimensionError("restrict_configuration: N = " + std::to_string(N) +
                         " but partition sums to " + std::to_string(part.N()));
  }
  return project_configuration(build_bcN_root_system(N, r, s, q), part);
}

}  // namespace trigwdvv
