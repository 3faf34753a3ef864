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

#include <vector>

#include "torwig/grid.hpp"

namespace torwig {

/// Redundancy-removal kernel on the doubled lattice.
///
/// `closed_form` is the textbook box-function transform
///   s_k = delta_{k mod 2N}            (k even)
///   s_k = sin(pi k/2) / (N sin(pi k/2N)) * e^{-i pi k / 2N}   (k odd)
/// for centered k in [-N, N-1].
///
/// `taps` is the symmetrized variant actually used by the transform: the
/// same centered Brillouin window with conjugate-paired edge weights
/// (1 -+ i)/2 at kappa = +-N/2 for even N, and the crisp centered box of
/// width N for odd N. Real taps keep Hermitian inputs on real grids and
/// make the transform a scaled orthogonal map (invertible for every N).
struct BoxKernel {
  long n = 0;
  std::vector<Complex> closed_form;  // indexed by k mod 2N
  std::vector<double> taps;          // indexed by k mod 2N

  Complex closed_at(long k) const {
    return closed_form[positive_mod(k, 2 * n)];
  }
  double tap_at(long k) const { return taps[positive_mod(k, 2 * n)]; }
  /// Product kernel S(m) = s_lambda * s_n over the window taps.
  double tap_product(long k_lambda, long k_n) const {
    return tap_at(k_lambda) * tap_at(k_n);
  }
};

BoxKernel build_kernel(long n);

/// Frequency window behind the taps: 1 inside the centered block,
/// (1 -+ i)/2 on the two edge bins for even N, 0 outside.
std::vector<Complex> cut_window(long n);

/// Global scale fixed so that sum_m W(m) = Tr rho; equals (2N)^{-1/2}.
double normalization_constant(long n);

/// Measured bilinear overlap constant: sum_m W1(m) W2(m) = kappa_N Tr(rho1 rho2),
/// kappa_N = 1/N under this normalization.
double overlap_constant(long n);

/// Sum/difference-coordinate embedding on the 2N x 2N lattice followed by the
/// size-2N transform along the difference axis. Result indexed (lambda, nu).
CMatrix to_doubled(const CMatrix& rho);

/// Exact read-back of the density matrix from a doubled grid.
CMatrix from_doubled(const CMatrix& w_double);

/// T_W by direct centered convolution of the doubled grid with the window
/// taps, decimated to the N x N lattice. Reference route, O(N^4).
CMatrix wigner_transform(const CMatrix& rho);

/// T_W by the Fourier-block-cut route: transform the doubled grid, multiply
/// by the centered window, fold, and undo with a size-N transform.
/// Production route, O(N^2 log N); agrees with wigner_transform to 1e-10.
CMatrix fourier_cut_transform(const CMatrix& rho);

/// Exact inverse of the transform. Uses the structural identity
/// T^{-1} = N * SWAP o T^T (a consequence of the bilinear overlap rule), so
/// it costs the same as a forward transform.
CMatrix wigner_inverse(const CMatrix& w);

/// W of the projector |psi><psi|.
CMatrix wigner_of_state(const CVector& psi);

/// T_W applied to M(n1,n2) = conj(a(n1)) b(n2).
CMatrix cross_eigen_wigner(const CVector& a, const CVector& b);

/// Dense N^2 x N^2 matrix of T_W (columns are transforms of basis matrices,
/// row-major vec convention) and its exact inverse.
CMatrix transform_matrix(long n);
CMatrix transform_matrix_inverse(const CMatrix& t_matrix);

}  // namespace torwig
