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

// Weighted vector configurations: the BC_n(r, s, q; m) family, the BC_N root
// system with invariant multiplicities, and orthogonal projection onto the
// block-constant subspace W_B.

#ifndef TRIGWDVV_CONFIGURATION_HPP_
#define TRIGWDVV_CONFIGURATION_HPP_

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace trigwdvv {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Absolute coordinate tolerance used when merging coinciding vectors.
inline constexpr double kMergeTolerance = 1e-12;

struct WeightedVector {
  Vector vector;
  double multiplicity = 0.0;
};

/// A finite list of weighted covectors of a fixed dimension.
///
/// Construction merges members whose vectors coincide (to kMergeTolerance) by
/// summing multiplicities; the first occurrence fixes the position. Members
/// of multiplicity zero are kept.
class Configuration {
 public:
  explicit Configuration(int dimension);
  Configuration(int dimension, std::vector<WeightedVector> members);

  int dimension() const { return dimension_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<WeightedVector>& members() const { return members_; }
  const WeightedVector& operator[](std::size_t i) const { return members_[i]; }

  /// Adds a member, merging into an existing coinciding vector if present.
  void add(const Vector& v, double multiplicity);

  /// Index of the member equal to `v` (within tolerance), or -1.
  int find(const Vector& v, double tol = kMergeTolerance) const;

  /// Sum of all multiplicities.
  double total_multiplicity() const;

 private:
  int dimension_;
  std::vector<WeightedVector> members_;
};

/// Order-insensitive comparison: same vector set, multiplicities within `tol`.
bool same_members(const Configuration& a, const Configuration& b,
                  double tol = 0.0);

/// Parameters of the BC_n(r, s, q; m) family. N = sum(m) is cached.
class BCnParameters {
 public:
  BCnParameters(double r, double s, double q, std::vector<double> m);

  int n() const { return static_cast<int>(m_.size()); }
  double r() const { return r_; }
  double s() const { return s_; }
  double q() const { return q_; }
  const std::vector<double>& m() const { return m_; }
  double m(int i) const { return m_[static_cast<std::size_t>(i)]; }
  double N() const { return N_; }

  /// Copy with a different r.
  BCnParameters with_r(double r) const { return {r, s_, q_, m_}; }

 private:
  double r_;
  double s_;
  double q_;
  std::vector<double> m_;
  double N_;
};

/// Ordered block sizes of a partition of N coordinates.
class Partition {
 public:
  explicit Partition(std::vector<int> blocks);

  int N() const { return N_; }
  int n() const { return static_cast<int>(blocks_.size()); }
  const std::vector<int>& blocks() const { return blocks_; }
  int block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
  /// First ambient coordinate of block i.
  int offset(int i) const { return offsets_[static_cast<std::size_t>(i)]; }
  /// Block containing ambient coordinate a.
  int block_of(int a) const { return owner_[static_cast<std::size_t>(a)]; }

  /// Indicator vector f_i of block i, in ambient coordinates.
  Vector indicator(int i) const;

  /// Multiplicities (m_1, ..., m_n) = block sizes as reals.
  std::vector<double> as_multiplicities() const;

 private:
  std::vector<int> blocks_;
  std::vector<int> offsets_;
  std::vector<int> owner_;
  int N_;
};

/// r + 8s + 2q(N - 2); zero iff the multiplicity constraint holds.
double constraint_residual(const BCnParameters& p);

/// r solving the constraint for given s, q, m.
double constrained_r(double s, double q, const std::vector<double>& m);

/// BC_n(r, s, q; m): e_i (r m_i), 2e_i (s m_i + q m_i (m_i - 1)/2), and for
/// i < j the pair e_i + e_j, e_i - e_j (q m_i m_j). Order: e block, 2e block,
/// pair block.
Configuration build_bcn(const BCnParameters& p);

/// Positive half of BC_N with invariant multiplicities r, s, q.
Configuration build_bcN_root_system(int N, double r, double s, double q);

/// Coordinates of the orthogonal projection of u onto W_B in the f-basis:
/// u~_k = (u, f_k) / m_k.
Vector project_vector(const Vector& u, const Partition& part);

/// Full ambient-space projection sum_k u~_k f_k.
Vector project_to_subspace(const Vector& u, const Partition& part);

/// True when alpha is orthogonal to W_B, i.e. (alpha, f_k) == 0 for every
/// block. For BC_N these are exactly the members of the subsystem B.
bool orthogonal_to_subspace(const Vector& alpha, const Partition& part);

/// Projects every member not orthogonal to W_B and expresses the image in
/// the coordinates where m_i^{-1} f_i maps to e_i, i.e. the new vector has
/// components (alpha, f_k). Coinciding images are merged.
Configuration project_configuration(const Configuration& ambient,
                                    const Partition& part);

/// project_configuration applied to BC_N(r, s, q). Requires N == part.N().
Configuration restrict_configuration(int N, double r, double s, double q,
                                     const Partition& part);

}  // namespace trigwdvv

#endif  // TRIGWDVV_CONFIGURATION_HPP_
