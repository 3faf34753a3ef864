// Copyright 2026 torwig contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "torwig/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "torwig/wigner.hpp"

namespace torwig {
namespace {

CMatrix matrix_power(const CMatrix& u, long t) {
  const long n = u.rows();
  CMatrix acc = CMatrix::Identity(n, n);
  CMatrix base = u;
  long e = t;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

void check_capacity(long n, long capacity, const char* what) {
  if (n > capacity)
    throw CapacityError(std::string(what) + ": N = " + std::to_string(n) +
                        " exceeds the N^2 x N^2 capacity guard (" +
                        std::to_string(capacity) + ")");
}

// All W_{alpha beta} = T_W[|alpha><beta|] grids, flattened row-major.
std::vector<CVector> eigen_wigner_grids(const SpectralDecomposition& sd) {
  const long n = sd.n;
  std::vector<CVector> grids(static_cast<size_t>(n) * n);
  CMatrix op(n, n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
          op(i, j) = sd.vectors(i, a) * std::conj(sd.vectors(j, b));
      CMatrix w = fourier_cut_transform(op);
      CVector flat(n * n);
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) flat(i * n + j) = w(i, j);
      grids[a * n + b] = std::move(flat);
    }
  return grids;
}

}  // namespace

double unitarity_defect(const CMatrix& u) {
  require_square(u, "unitarity_defect");
  const long n = u.rows();
  return (u.adjoint() * u - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

SpectralDecomposition eigendecompose(const CMatrix& u, double tol) {
  require_square(u, "eigendecompose");
  const double defect = unitarity_defect(u);
  if (defect > tol)
    throw std::invalid_argument(
        "eigendecompose: input not unitary, defect = " + std::to_string(defect));
  const long n = u.rows();

  // Schur form of a normal matrix is diagonal; the Schur basis is exactly
  // orthonormal, which Eq.-style spectral sums rely on.
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u, /*computeU=*/true);
  Eigen::MatrixXcd tmat = schur.matrixT();
  Eigen::MatrixXcd q = schur.matrixU();

  SpectralDecomposition sd;
  sd.n = n;
  sd.phases.resize(n);
  std::vector<long> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<double> ph(n);
  for (long a = 0; a < n; ++a) {
    double phi = -std::arg(tmat(a, a));
    if (phi < 0) phi += 2.0 * std::numbers::pi;
    if (phi >= 2.0 * std::numbers::pi) phi -= 2.0 * std::numbers::pi;
    ph[a] = phi;
  }
  std::stable_sort(idx.begin(), idx.end(),
                   [&](long a, long b) { return ph[a] < ph[b]; });
  sd.vectors.resize(n, n);
  for (long a = 0; a < n; ++a) {
    sd.phases[a] = ph[idx[a]];
    sd.vectors.col(a) = q.col(idx[a]);
  }
  double res = 0.0;
  for (long a = 0; a < n; ++a) {
    Complex ev = std::exp(Complex(0, -sd.phases[a]));
    res = std::max(res,
                   (u * sd.vectors.col(a) - ev * sd.vectors.col(a))
                       .cwiseAbs()
                       .maxCoeff());
  }
  sd.residual = res;
  return sd;
}

DensityPropagator density_propagator(const CMatrix& u, long t, long capacity) {
  require_square(u, "density_propagator");
  if (t < 0) throw std::invalid_argument("density_propagator: t < 0");
  const long n = u.rows();
  check_capacity(n, capacity, "density_propagator");
  CMatrix ut = matrix_power(u, t);
  DensityPropagator k;
  k.n = n;
  k.steps = t;
  k.matrix.resize(n * n, n * n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c)
        for (long d = 0; d < n; ++d)
          k.matrix(a * n + b, c * n + d) = ut(a, c) * std::conj(ut(b, d));
  return k;
}

CMatrix apply_density(const DensityPropagator& k, const CMatrix& rho) {
  const long n = k.n;
  if (rho.rows() != n || rho.cols() != n)
    throw std::invalid_argument("apply_density: dimension mismatch");
  CVector v(n * n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) v(i * n + j) = rho(i, j);
  CVector out = k.matrix * v;
  CMatrix res(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) res(i, j) = out(i * n + j);
  return res;
}

WignerPropagator wigner_propagator_direct(const CMatrix& u, long t,
                                          long capacity) {
  require_square(u, "wigner_propagator_direct");
  if (t < 0) throw std::invalid_argument("wigner_propagator_direct: t < 0");
  const long n = u.rows();
  check_capacity(n, capacity, "wigner_propagator_direct");
  DensityPropagator kden = density_propagator(u, t, capacity);
  CMatrix tw = transform_matrix(n);
  CMatrix tw_inv = transform_matrix_inverse(tw);
  WignerPropagator kw;
  kw.n = n;
  kw.steps = t;
  kw.matrix = tw * kden.matrix * tw_inv;
  return kw;
}

WignerPropagator wigner_propagator_spectral(const CMatrix& u, long t,
                                            long capacity) {
  require_square(u, "wigner_propagator_spectral");
  if (t < 0) throw std::invalid_argument("wigner_propagator_spectral: t < 0");
  const long n = u.rows();
  check_capacity(n, capacity, "wigner_propagator_spectral");
  SpectralDecomposition sd = eigendecompose(u);
  auto grids = eigen_wigner_grids(sd);
  WignerPropagator kw;
  kw.n = n;
  kw.steps = t;
  kw.matrix = CMatrix::Zero(n * n, n * n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      // phase factor fixed against the conjugation route
      Complex ph = std::exp(Complex(0, (sd.phases[a] - sd.phases[b]) * t));
      const CVector& w = grids[a * n + b];
      kw.matrix.noalias() += ph * w.conjugate() * w.transpose();
    }
  kw.matrix *= static_cast<double>(n);
  return kw;
}

CMatrix propagate_wigner(const WignerPropagator& k, const CMatrix& w) {
  const long n = k.n;
  if (w.rows() != n || w.cols() != n)
    throw std::invalid_argument("propagate_wigner: dimension mismatch");
  CVector v(n * n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) v(i * n + j) = w(i, j);
  CVector out = k.matrix * v;
  CMatrix res(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) res(i, j) = out(i * n + j);
  return res;
}

CMatrix propagator_column(const CMatrix& u, long m_lambda, long m_n, long t,
                          ColumnRoute route) {
  require_square(u, "propagator_column");
  const long n = u.rows();
  if (m_lambda < 0 || m_lambda >= n || m_n < 0 || m_n >= n)
    throw std::invalid_argument("propagator_column: m' out of range");
  if (t < 0) throw std::invalid_argument("propagator_column: t < 0");

  if (route == ColumnRoute::Direct) {
    CMatrix delta = CMatrix::Zero(n, n);
    delta(m_lambda, m_n) = 1.0;
    CMatrix rho0 = wigner_inverse(delta);
    CMatrix ut = matrix_power(u, t);
    CMatrix rho_t = ut * rho0 * ut.adjoint();
    return fourier_cut_transform(rho_t);
  }

  SpectralDecomposition sd = eigendecompose(u);
  auto grids = eigen_wigner_grids(sd);
  CVector col = CVector::Zero(n * n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      const CVector& w = grids[a * n + b];
      Complex ph = std::exp(Complex(0, (sd.phases[a] - sd.phases[b]) * t));
      col += ph * w(m_lambda * n + m_n) * w.conjugate();
    }
  CMatrix res(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      res(i, j) = static_cast<double>(n) * col(i * n + j);
  return res;
}

}  // namespace torwig
