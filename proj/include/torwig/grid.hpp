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

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace torwig {

using Complex = std::complex<double>;

// All grid-valued quantities live in row-major complex matrices; storage
// order matters only for raw serialization, the math is index-based.
using CMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVector = Eigen::VectorXcd;
using RMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Canonical centered representative of k mod M, in [-ceil(M/2), floor(M/2)-1].
inline long reduce_centered(long k, long modulus) {
  if (modulus < 1) throw std::invalid_argument("reduce_centered: modulus < 1");
  long r = k % modulus;
  if (r < 0) r += modulus;        // [0, M)
  if (r >= modulus / 2) r -= modulus;
  return r;
}

inline long positive_mod(long k, long modulus) {
  long r = k % modulus;
  return r < 0 ? r + modulus : r;
}

inline bool all_finite(const CMatrix& g) {
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      if (!std::isfinite(g(i, j).real()) || !std::isfinite(g(i, j).imag()))
        return false;
  return true;
}

inline void require_square(const CMatrix& m, const std::string& what) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw std::invalid_argument(what + ": expected a square non-empty matrix");
}

/// max_ij |rho - rho^H|
inline double hermiticity_defect(const CMatrix& rho) {
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

/// Smallest eigenvalue of the Hermitian part; meaningful when the caller
/// asserts a physical state.
inline double min_eigenvalue(const CMatrix& rho) {
  Eigen::MatrixXcd h = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  return es.eigenvalues().minCoeff();
}

struct StateValidation {
  double hermiticity;
  Complex trace;
  double min_eigenvalue;
};

inline StateValidation validate_density(const CMatrix& rho) {
  require_square(rho, "density matrix");
  return {hermiticity_defect(rho), rho.trace(), min_eigenvalue(rho)};
}

/// |psi><psi| for a pure state.
inline CMatrix projector(const CVector& psi) {
  CMatrix rho(psi.size(), psi.size());
  for (Eigen::Index i = 0; i < psi.size(); ++i)
    for (Eigen::Index j = 0; j < psi.size(); ++j)
      rho(i, j) = psi(i) * std::conj(psi(j));
  return rho;
}

}  // namespace torwig
