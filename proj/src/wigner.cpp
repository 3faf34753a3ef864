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

#include "torwig/wigner.hpp"

#include <cmath>
#include <numbers>

#include "torwig/dft.hpp"

namespace torwig {
namespace {

constexpr double kPi = std::numbers::pi;

// sin(pi k/2) / (N sin(pi k/2N)) for odd k.
double odd_ratio(long k, long n) {
  return std::sin(kPi * k / 2.0) /
         (static_cast<double>(n) * std::sin(kPi * k / (2.0 * n)));
}

// Window taps as a 2N-periodic real sequence.
std::vector<double> window_taps(long n) {
  std::vector<double> t(2 * n, 0.0);
  for (long kk = 0; kk < 2 * n; ++kk) {
    long k = reduce_centered(kk, 2 * n);
    if (k % 2 == 0) {
      t[kk] = (k == 0) ? 1.0 : 0.0;
    } else {
      double r = odd_ratio(k, n);
      if (n % 2 == 0) {
        double th = kPi * k / (2.0 * n);
        t[kk] = r * (std::cos(th) - std::sin(th));
      } else {
        t[kk] = r;
      }
    }
  }
  return t;
}

// Per-axis window convolution + decimation: (A f)(m) = sum_k f(2m - k) tap_k.
// Operates on every line along `axis` of a 2N x 2N grid, producing N lines.
CMatrix axis_cut(const CMatrix& g, const std::vector<Complex>& window,
                 Axis axis) {
  const long m2 = (axis == Axis::Rows) ? g.rows() : g.cols();
  const long n = m2 / 2;
  const double root2 = std::sqrt(2.0);
  CMatrix out(axis == Axis::Rows ? n : g.rows(),
              axis == Axis::Rows ? g.cols() : n);
  std::vector<Complex> line(m2), folded(n);
  const long lines = (axis == Axis::Rows) ? g.cols() : g.rows();
  for (long i = 0; i < lines; ++i) {
    for (long j = 0; j < m2; ++j)
      line[j] = (axis == Axis::Rows) ? g(j, i) : g(i, j);
    auto f = dft(line, Direction::Forward);
    for (long r = 0; r < n; ++r)
      folded[r] = window[r] * f[r] + window[r + n] * f[r + n];
    auto u = dft(folded, Direction::Inverse);
    for (long j = 0; j < n; ++j) {
      Complex v = root2 * u[j];
      if (axis == Axis::Rows)
        out(j, i) = v;
      else
        out(i, j) = v;
    }
  }
  return out;
}

// Transpose of the window convolution: (A^T h)(l) = sum_m tap(2m - l) h(m),
// mapping N lines back to 2N lines.
CMatrix axis_cut_transpose(const CMatrix& h, const std::vector<double>& taps,
                           Axis axis) {
  const long n = (axis == Axis::Rows) ? h.rows() : h.cols();
  const long m2 = 2 * n;
  std::vector<Complex> tapv(taps.begin(), taps.end());
  auto tap_hat = dft(tapv, Direction::Forward);
  const double root = std::sqrt(static_cast<double>(m2));
  CMatrix out(axis == Axis::Rows ? m2 : h.rows(),
              axis == Axis::Rows ? h.cols() : m2);
  std::vector<Complex> up(m2);
  const long lines = (axis == Axis::Rows) ? h.cols() : h.rows();
  for (long i = 0; i < lines; ++i) {
    std::fill(up.begin(), up.end(), Complex(0, 0));
    for (long j = 0; j < n; ++j)
      up[2 * j] = (axis == Axis::Rows) ? h(j, i) : h(i, j);
    auto f = dft(up, Direction::Forward);
    for (long k = 0; k < m2; ++k) f[k] *= std::conj(tap_hat[k]);
    auto c = dft(f, Direction::Inverse);
    for (long j = 0; j < m2; ++j) {
      Complex v = root * c[j];
      if (axis == Axis::Rows)
        out(j, i) = v;
      else
        out(i, j) = v;
    }
  }
  return out;
}

}  // namespace

BoxKernel build_kernel(long n) {
  if (n < 1) throw std::invalid_argument("build_kernel: N must be positive");
  BoxKernel k;
  k.n = n;
  k.closed_form.resize(2 * n);
  for (long kk = 0; kk < 2 * n; ++kk) {
    long c = reduce_centered(kk, 2 * n);
    if (c % 2 == 0) {
      k.closed_form[kk] = (c == 0) ? Complex(1, 0) : Complex(0, 0);
    } else {
      double th = kPi * c / (2.0 * n);
      k.closed_form[kk] =
          odd_ratio(c, n) * Complex(std::cos(th), -std::sin(th));
    }
  }
  k.taps = window_taps(n);
  return k;
}

std::vector<Complex> cut_window(long n) {
  std::vector<Complex> w(2 * n, Complex(0, 0));
  for (long kk = 0; kk < 2 * n; ++kk) {
    long c = reduce_centered(kk, 2 * n);
    if (n % 2 == 0) {
      if (std::labs(c) < n / 2)
        w[kk] = Complex(1, 0);
      else if (c == n / 2)
        w[kk] = Complex(0.5, 0.5);
      else if (c == -n / 2)
        w[kk] = Complex(0.5, -0.5);
    } else {
      if (std::labs(c) <= (n - 1) / 2) w[kk] = Complex(1, 0);
    }
  }
  return w;
}

double normalization_constant(long n) {
  return 1.0 / std::sqrt(2.0 * static_cast<double>(n));
}

double overlap_constant(long n) { return 1.0 / static_cast<double>(n); }

CMatrix to_doubled(const CMatrix& rho) {
  require_square(rho, "to_doubled");
  if (!all_finite(rho)) throw std::invalid_argument("to_doubled: non-finite input");
  const long n = rho.rows();
  const long m = 2 * n;
  CMatrix c = CMatrix::Zero(m, m);  // (nu, mu)
  for (long nu = 0; nu < m; ++nu)
    for (long mu = 0; mu < m; ++mu)
      if ((nu + mu) % 2 == 0) {
        long n1 = ((nu + mu) / 2) % n;
        long n2 = (positive_mod(nu - mu, m) / 2) % n;
        c(nu, mu) = rho(n1, n2);
      }
  // transform along the difference axis; result indexed (lambda, nu)
  CMatrix t = dft_axis(c, Axis::Cols, Direction::Forward);
  return t.transpose();
}

CMatrix from_doubled(const CMatrix& w_double) {
  require_square(w_double, "from_doubled");
  const long m = w_double.rows();
  if (m % 2 != 0)
    throw std::invalid_argument("from_doubled: grid must be 2N x 2N");
  const long n = m / 2;
  CMatrix ct = dft_axis(CMatrix(w_double.transpose()), Axis::Cols,
                        Direction::Inverse);  // (nu, mu)
  CMatrix rho(n, n);
  for (long n1 = 0; n1 < n; ++n1)
    for (long n2 = 0; n2 < n; ++n2)
      rho(n1, n2) = ct(positive_mod(n1 + n2, m), positive_mod(n1 - n2, m));
  return rho;
}

CMatrix wigner_transform(const CMatrix& rho) {
  require_square(rho, "wigner_transform");
  const long n = rho.rows();
  const long m = 2 * n;
  BoxKernel kern = build_kernel(n);
  CMatrix wd = to_doubled(rho);

  // only k = 0 and odd k carry weight
  std::vector<long> support;
  support.push_back(0);
  for (long k = -n; k < n; ++k)
    if (k % 2 != 0) support.push_back(k);

  const double c_n = normalization_constant(n);
  CMatrix w(n, n);
  for (long lam = 0; lam < n; ++lam) {
    for (long pos = 0; pos < n; ++pos) {
      Complex acc(0, 0);
      for (long kl : support) {
        const double tl = kern.tap_at(kl);
        const long row = positive_mod(2 * lam - kl, m);
        for (long kn : support) {
          acc += wd(row, positive_mod(2 * pos - kn, m)) * (tl * kern.tap_at(kn));
        }
      }
      w(lam, pos) = c_n * acc;
    }
  }
  return w;
}

CMatrix fourier_cut_transform(const CMatrix& rho) {
  require_square(rho, "fourier_cut_transform");
  const long n = rho.rows();
  auto window = cut_window(n);
  CMatrix wd = to_doubled(rho);
  CMatrix w = axis_cut(axis_cut(wd, window, Axis::Rows), window, Axis::Cols);
  return normalization_constant(n) * w;
}

CMatrix wigner_inverse(const CMatrix& w) {
  require_square(w, "wigner_inverse");
  const long n = w.rows();
  const long m = 2 * n;
  auto taps = window_taps(n);
  // T^T: transpose of each forward stage, applied in reverse order.
  CMatrix x = axis_cut_transpose(axis_cut_transpose(w, taps, Axis::Rows), taps,
                                 Axis::Cols);            // (lambda, nu)
  CMatrix y = dft_axis(x, Axis::Rows, Direction::Forward);  // (mu, nu)
  CMatrix ct = y.transpose();                               // (nu, mu)
  const double c_n = normalization_constant(n);
  CMatrix rho_t(n, n);
  for (long n1 = 0; n1 < n; ++n1)
    for (long n2 = 0; n2 < n; ++n2) {
      long nu = positive_mod(n1 + n2, m);
      long mu = positive_mod(n1 - n2, m);
      rho_t(n1, n2) = c_n * (ct(nu, mu) + ct(positive_mod(nu + n, m),
                                             positive_mod(mu + n, m)));
    }
  // T^{-1} = N * SWAP o T^T
  return static_cast<double>(n) * rho_t.transpose();
}

CMatrix wigner_of_state(const CVector& psi) {
  if (psi.size() < 1) throw std::invalid_argument("wigner_of_state: empty state");
  return fourier_cut_transform(projector(psi));
}

CMatrix cross_eigen_wigner(const CVector& a, const CVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("cross_eigen_wigner: dimension mismatch");
  const long n = a.size();
  CMatrix m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m(i, j) = std::conj(a(i)) * b(j);
  return fourier_cut_transform(m);
}

CMatrix transform_matrix(long n) {
  if (n < 1) throw std::invalid_argument("transform_matrix: N must be positive");
  CMatrix t(n * n, n * n);
  CMatrix basis = CMatrix::Zero(n, n);
  for (long n1 = 0; n1 < n; ++n1)
    for (long n2 = 0; n2 < n; ++n2) {
      basis(n1, n2) = 1.0;
      CMatrix w = fourier_cut_transform(basis);
      basis(n1, n2) = 0.0;
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) t(i * n + j, n1 * n + n2) = w(i, j);
    }
  return t;
}

CMatrix transform_matrix_inverse(const CMatrix& t_matrix) {
  const long nn = t_matrix.rows();
  const long n = static_cast<long>(std::lround(std::sqrt(double(nn))));
  CMatrix inv(nn, nn);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      inv.row(a * n + b) =
          static_cast<double>(n) * t_matrix.col(b * n + a).transpose();
  return inv;
}

}  // namespace torwig
