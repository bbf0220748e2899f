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

#include "trigwdvv/susy.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "trigwdvv/errors.hpp"

namespace trigwdvv {

namespace {

void require_positive_m(const BCnParameters& p) {
  for (int i = 0; i < p.n(); ++i) {
    if (!(p.m(i) > 0.0)) {
      throw PreconditionError("rescaled coordinates need m_i > 0, got m_" +
                              std::to_string(i + 1) + " = " +
                              std::to_string(p.m(i)));
    }
  }
}

// Annihilator of mode p on the 2^modes-dimensional Fock space. Basis states
// are bit masks; the sign counts occupied modes below p.
SparseMatrix annihilator(int modes, int p) {
  const int dim = 1 << modes;
  SparseMatrix op(dim, dim);
  std::vector<Eigen::Triplet<double>> entries;
  for (int state = 0; state < dim; ++state) {
    if (!(state & (1 << p))) continue;
    const int below = __builtin_popcount(static_cast<unsigned>(state & ((1 << p) - 1)));
    entries.emplace_back(state ^ (1 << p), state, (below % 2) ? -1.0 : 1.0);
  }
  op.setFromTriplets(entries.begin(), entries.end());
  return op;
}

}  // namespace

RescaledConfiguration build_hat_configuration(const BCnParameters& p) {
  require_positive_m(p);
  const int n = p.n();
  Vector scale(n);
  for (int i = 0; i < n; ++i) scale(i) = 1.0 / std::sqrt(p.m(i));
  // Same member order and multiplicities as build_bcn, with e_i -> m_i^{-1/2} e_i.
  const Configuration base = build_bcn(p);
  Configuration hat(n);
  for (const auto& m : base.members()) {
    hat.add(m.vector.cwiseProduct(scale), m.multiplicity);
  }
  return {p, std::move(hat)};
}

Vector to_hat_coordinates(const BCnParameters& p, const Vector& x) {
  require_positive_m(p);
  if (x.size() != p.n()) throw DimensionError("to_hat_coordinates: size");
  Vector out(p.n());
  for (int i = 0; i < p.n(); ++i) out(i) = std::sqrt(p.m(i)) * x(i);
  return out;
}

Vector from_hat_coordinates(const BCnParameters& p, const Vector& x_hat) {
  require_positive_m(p);
  if (x_hat.size() != p.n()) throw DimensionError("from_hat_coordinates: size");
  Vector out(p.n());
  for (int i = 0; i < p.n(); ++i) out(i) = x_hat(i) / std::sqrt(p.m(i));
  return out;
}

ThirdDerivativeTensor hat_tensor(const BCnParameters& p, const Vector& x_hat,
                                 double threshold) {
  return tensor_generic(build_hat_configuration(p).members, x_hat, threshold);
}

ThirdDerivativeTensor hat_tensor_by_conjugation(const BCnParameters& p,
                                                const Vector& x_hat,
                                                double threshold) {
  const Vector x = from_hat_coordinates(p, x_hat);
  const ThirdDerivativeTensor F = tensor_closed_form(p, x, threshold);
  const int n = p.n();
  ThirdDerivativeTensor out(n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      for (int t = 0; t < n; ++t) {
        out(k, l, t) = F(k, l, t) / std::sqrt(p.m(k) * p.m(l) * p.m(t));
      }
    }
  }
  return out;
}

Matrix hat_metric(const BCnParameters& p, const ThirdDerivativeTensor& t_hat,
                  const Vector& x_hat) {
  require_positive_m(p);
  if (t_hat.n() != p.n() || x_hat.size() != p.n()) {
    throw DimensionError("hat_metric: dimension mismatch");
  }
  Matrix B = Matrix::Zero(p.n(), p.n());
  for (int k = 0; k < p.n(); ++k) {
    const double root = std::sqrt(p.m(k));
    B += root * std::sinh(2.0 * x_hat(k) / root) * t_hat.slice(k);
  }
  return B;
}

double bosonic_potential(const Configuration& config, const Vector& x_hat,
                         double threshold) {
  require_admissible(config, x_hat, threshold);
  double single = 0.0;
  double pair = 0.0;
  const auto& members = config.members();
  for (const auto& a : members) {
    if (a.multiplicity == 0.0) continue;
    const double aa = a.vector.squaredNorm();
    const double sh = std::sinh(a.vector.dot(x_hat));
    single += a.multiplicity * aa * aa / (sh * sh);
    const double ca = a.multiplicity * aa / std::tanh(a.vector.dot(x_hat));
    for (const auto& b : members) {
      if (b.multiplicity == 0.0) continue;
      pair += ca * b.multiplicity * b.vector.squaredNorm() *
              a.vector.dot(b.vector) / std::tanh(b.vector.dot(x_hat));
    }
  }
  return 0.5 * single + 0.25 * pair;
}

FermionicSpace::FermionicSpace(int n) : n_(n), dim_(0) {
  if (n < 1 || n > kMaxFermionParticles) {
    throw PreconditionError("fermionic space supports 1 <= n <= " +
                            std::to_string(kMaxFermionParticles) + ", got " +
                            std::to_string(n));
  }
  const int modes = 2 * n;
  dim_ = 1 << modes;
  for (int p = 0; p < modes; ++p) {
    SparseMatrix c = annihilator(modes, p);
    SparseMatrix c_dag = c.transpose();
    psi_.push_back(std::move(c));
    psibar_.push_back(-0.5 * c_dag);
  }
}

FermionicSpace build_fermionic_space(int n) { return FermionicSpace(n); }

double anticommutator_defect(const FermionicSpace& fs) {
  const int modes = 2 * fs.n();
  auto op = [&](bool bar, int mode) -> const SparseMatrix& {
    const int a = mode / fs.n();
    const int j = mode % fs.n();
    return bar ? fs.psibar(a, j) : fs.psi(a, j);
  };
  const SparseMatrix identity = [&] {
    SparseMatrix id(fs.dim(), fs.dim());
    id.setIdentity();
    return id;
  }();
  double worst = 0.0;
  auto record = [&](const SparseMatrix& x, const SparseMatrix& y,
                    double expected) {
    const SparseMatrix anti = x * y + y * x - expected * identity;
    for (int k = 0; k < anti.outerSize(); ++k) {
      for (SparseMatrix::InnerIterator it(anti, k); it; ++it) {
        worst = std::max(worst, std::abs(it.value()));
      }
    }
  };
  for (int p = 0; p < modes; ++p) {
    for (int q = 0; q < modes; ++q) {
      record(op(false, p), op(true, q), p == q ? -0.5 : 0.0);
      if (q >= p) {
        record(op(false, p), op(false, q), 0.0);
        record(op(true, p), op(true, q), 0.0);
      }
    }
  }
  return worst;
}

Matrix phi_matrix(const Configuration& config, const Vector& x_hat,
                  const FermionicSpace& fs, double threshold) {
  if (config.dimension() != fs.n()) {
    throw DimensionError("phi_matrix: configuration and Fock space differ in n");
  }
  require_admissible(config, x_hat, threshold);
  const int n = fs.n();
  SparseMatrix phi(fs.dim(), fs.dim());
  for (const auto& m : config.members()) {
    if (m.multiplicity == 0.0) continue;
    const Vector& a = m.vector;
    const double sh = std::sinh(a.dot(x_hat));
    const double weight = 2.0 * m.multiplicity / (sh * sh);
    // Contract the root into the mode index: Psi^b = sum_i a_i psi^{bi}.
    SparseMatrix Psi[2];
    SparseMatrix PsiBar[2];
    for (int b = 0; b < 2; ++b) {
      Psi[b] = SparseMatrix(fs.dim(), fs.dim());
      PsiBar[b] = SparseMatrix(fs.dim(), fs.dim());
      for (int i = 0; i < n; ++i) {
        if (a(i) == 0.0) continue;
        Psi[b] += a(i) * fs.psi(b, i);
        PsiBar[b] += a(i) * fs.psibar(b, i);
      }
    }
    SparseMatrix term(fs.dim(), fs.dim());
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        const int ebc = levi_civita(b, c);
        if (ebc == 0) continue;
        for (int A = 0; A < 2; ++A) {
          for (int d = 0; d < 2; ++d) {
            const int ead = levi_civita(A, d);
            if (ead == 0) continue;
            term += static_cast<double>(ebc * ead) *
                    SparseMatrix(Psi[b] * Psi[c] * PsiBar[d] * PsiBar[A]);
          }
        }
      }
    }
    const double aa = a.squaredNorm();
    for (int A = 0; A < 2; ++A) term += aa * SparseMatrix(Psi[A] * PsiBar[A]);
    phi += weight * term;
  }
  return Matrix(phi);
}

ScalarField gaussian_field(Vector center, double sigma) {
  const double inv = 1.0 / (2.0 * sigma * sigma);
  return {"gaussian", [center = std::move(center), inv](const Vector& x) {
            return std::exp(-(x - center).squaredNorm() * inv);
          }};
}

ScalarField sinh_product_field() {
  return {"sinh_product", [](const Vector& x) {
            double prod = 1.0;
            for (Eigen::Index i = 0; i < x.size(); ++i) prod *= std::sinh(x(i));
            return prod;
          }};
}

ScalarField polynomial_field(int n) {
  return {"polynomial", [n](const Vector& x) {
            double value = 1.0;
            for (int i = 0; i < n; ++i) value += (i + 1) / 5.0 * x(i);
            return value + x(0) * x(n - 1) + 0.25 * x(0) * x(0);
          }};
}

double log_gauge_factor(const Configuration& config, const Vector& x_hat) {
  double total = 0.0;
  for (const auto& m : config.members()) {
    if (m.multiplicity == 0.0) continue;
    total += 0.5 * m.multiplicity * m.vector.squaredNorm() *
             std::log(std::abs(std::sinh(m.vector.dot(x_hat))));
  }
  return total;
}

GaugeTerms gauge_terms(const Configuration& config, const Vector& x0,
                       const ScalarField& phi, double step, double threshold) {
  if (!(step > 0.0)) throw PreconditionError("gauge check needs step > 0");
  require_admissible(config, x0, threshold);
  const int n = config.dimension();
  const double margin = 2.0 * step * std::sqrt(static_cast<double>(n));
  for (const auto& m : config.members()) {
    if (m.multiplicity == 0.0) continue;
    if (std::abs(m.vector.dot(x0)) < margin) {
      throw PreconditionError(
          "gauge check: point within 2 step sqrt(n) of a mirror");
    }
  }

  const double log_g0 = log_gauge_factor(config, x0);
  // g(x0) g^-1(y) phi(y); equals phi at x0.
  auto conjugated = [&](const Vector& y) {
    return std::exp(log_g0 - log_gauge_factor(config, y)) * phi.eval(y);
  };

  const double phi0 = phi.eval(x0);
  const double h2 = step * step;
  double lap_conj = 0.0;
  double lap_phi = 0.0;
  Vector grad(n);
  for (int i = 0; i < n; ++i) {
    Vector up = x0;
    Vector down = x0;
    up(i) += step;
    down(i) -= step;
    lap_conj += (conjugated(up) - 2.0 * phi0 + conjugated(down)) / h2;
    const double fu = phi.eval(up);
    const double fd = phi.eval(down);
    lap_phi += (fu - 2.0 * phi0 + fd) / h2;
    grad(i) = (fu - fd) / (2.0 * step);
  }

  double drift = 0.0;
  for (const auto& m : config.members()) {
    if (m.multiplicity == 0.0) continue;
    drift += m.multiplicity * m.vector.squaredNorm() /
             std::tanh(m.vector.dot(x0)) * m.vector.dot(grad);
  }

  GaugeTerms out;
  out.first_form = -lap_conj + bosonic_potential(config, x0, threshold) * phi0;
  out.second_form = -lap_phi + drift;
  out.residual = std::abs(out.first_form - out.second_form) /
                 std::max(1.0, std::abs(out.second_form));
  return out;
}

double gauge_residual(const Configuration& config, const Vector& x0,
                      const ScalarField& phi, double step, double threshold) {
  return gauge_terms(config, x0, phi, step, threshold).residual;
}

}  // namespace trigwdvv
