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

#include <stdexcept>
#include <vector>

#include "torwig/grid.hpp"

namespace torwig {

/// Full N^2 x N^2 storage refused above this dimension.
inline constexpr long kDefaultCapacity = 64;

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double unitarity_defect(const CMatrix& u);

/// Eigenphases and an orthonormal eigenbasis of a unitary map, convention
/// U |alpha> = e^{-i phi_alpha} |alpha>, phases sorted ascending in [0, 2pi).
/// Built from the complex Schur form, so the basis stays orthonormal even
/// across degenerate eigenphases.
struct SpectralDecomposition {
  long n = 0;
  std::vector<double> phases;
  CMatrix vectors;        // column alpha = |alpha>
  double residual = 0.0;  // max elementwise |U v - e^{-i phi} v|
};

SpectralDecomposition eigendecompose(const CMatrix& u, double tol = 1e-10);

/// K(n1'', n2''; n1', n2') = (U^t)(n1'',n1') conj((U^t)(n2'',n2')), stored
/// as an N^2 x N^2 matrix over row-major vec indices.
struct DensityPropagator {
  long n = 0;
  long steps = 0;
  CMatrix matrix;
};

DensityPropagator density_propagator(const CMatrix& u, long t,
                                     long capacity = kDefaultCapacity);

CMatrix apply_density(const DensityPropagator& k, const CMatrix& rho);

struct WignerPropagator {
  long n = 0;
  long steps = 0;
  CMatrix matrix;  // K_W(m''; m'), row-major vec indices m = lambda*N + n
};

/// Conjugation route: K_W = T_W K T_W^{-1}.
WignerPropagator wigner_propagator_direct(const CMatrix& u, long t,
                                          long capacity = kDefaultCapacity);

/// Spectral route over Wigner eigenfunctions of the map; agrees with the
/// direct route to machine precision.
WignerPropagator wigner_propagator_spectral(const CMatrix& u, long t,
                                            long capacity = kDefaultCapacity);

CMatrix propagate_wigner(const WignerPropagator& k, const CMatrix& w);

enum class ColumnRoute { Direct, Spectral };

/// K_W(.; m') as an N x N grid, without materializing the full operator.
CMatrix propagator_column(const CMatrix& u, long m_lambda, long m_n, long t,
                          ColumnRoute route = ColumnRoute::Direct);

}  // namespace torwig
