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

#include "torwig/dft.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace torwig {
namespace {

bool is_pow2(size_t n) { return n && (n & (n - 1)) == 0; }

size_t next_pow2(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// In-place iterative radix-2, unnormalized; inverse = conjugate kernel.
void fft_pow2(std::vector<Complex>& a, bool inverse) {
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang =
        (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
    const Complex wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      Complex w(1.0, 0.0);
      for (size_t j = 0; j < len / 2; ++j) {
        Complex u = a[i + j];
        Complex v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

struct BluesteinPlan {
  size_t m = 0;
  size_t l = 0;
  std::vector<Complex> chirp;      // e^{-i pi k^2 / m}, k = 0..m-1
  std::vector<Complex> chirp_fft;  // FFT of the zero-padded conjugate chirp
};

const BluesteinPlan& plan_for(size_t m) {
  thread_local std::map<size_t, BluesteinPlan> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  BluesteinPlan p;
  p.m = m;
  p.l = next_pow2(2 * m - 1);
  p.chirp.resize(m);
  for (size_t k = 0; k < m; ++k) {
    // exponent pi k^2 / m reduced with k^2 mod 2m (exact integer arithmetic)
    unsigned long long k2 = (static_cast<unsigned long long>(k) * k) % (2 * m);
    double ang = -std::numbers::pi * static_cast<double>(k2) /
                 static_cast<double>(m);
    p.chirp[k] = Complex(std::cos(ang), std::sin(ang));
  }
  std::vector<Complex> b(p.l, Complex(0, 0));
  b[0] = std::conj(p.chirp[0]);
  for (size_t k = 1; k < m; ++k) {
    b[k] = std::conj(p.chirp[k]);
    b[p.l - k] = std::conj(p.chirp[k]);
  }
  fft_pow2(b, false);
  p.chirp_fft = std::move(b);
  return cache.emplace(m, std::move(p)).first->second;
}

// Unnormalized forward DFT of arbitrary size via chirp-z.
std::vector<Complex> bluestein_forward(const std::vector<Complex>& x) {
  const size_t m = x.size();
  const BluesteinPlan& p = plan_for(m);
  std::vector<Complex> a(p.l, Complex(0, 0));
  for (size_t k = 0; k < m; ++k) a[k] = x[k] * p.chirp[k];
  fft_pow2(a, false);
  for (size_t k = 0; k < p.l; ++k) a[k] *= p.chirp_fft[k];
  fft_pow2(a, true);
  const double inv_l = 1.0 / static_cast<double>(p.l);
  std::vector<Complex> out(m);
  for (size_t k = 0; k < m; ++k) out[k] = a[k] * inv_l * p.chirp[k];
  return out;
}

std::vector<Complex> forward_unnormalized(const std::vector<Complex>& v) {
  if (is_pow2(v.size())) {
    std::vector<Complex> a = v;
    fft_pow2(a, false);
    return a;
  }
  return bluestein_forward(v);
}

}  // namespace

std::vector<Complex> dft(const std::vector<Complex>& v, Direction dir) {
  if (v.empty()) throw std::invalid_argument("dft: zero-length input");
  const size_t m = v.size();
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  std::vector<Complex> out;
  if (dir == Direction::Forward) {
    out = forward_unnormalized(v);
  } else {
    std::vector<Complex> c(m);
    for (size_t k = 0; k < m; ++k) c[k] = std::conj(v[k]);
    out = forward_unnormalized(c);
    for (auto& z : out) z = std::conj(z);
  }
  for (auto& z : out) z *= scale;
  return out;
}

CMatrix dft_axis(const CMatrix& g, Axis axis, Direction dir) {
  if (g.rows() < 1 || g.cols() < 1)
    throw std::invalid_argument("dft_axis: empty grid");
  CMatrix out(g.rows(), g.cols());
  if (axis == Axis::Cols) {
    std::vector<Complex> line(g.cols());
    for (Eigen::Index r = 0; r < g.rows(); ++r) {
      for (Eigen::Index c = 0; c < g.cols(); ++c) line[c] = g(r, c);
      auto t = dft(line, dir);
      for (Eigen::Index c = 0; c < g.cols(); ++c) out(r, c) = t[c];
    }
  } else {
    std::vector<Complex> line(g.rows());
    for (Eigen::Index c = 0; c < g.cols(); ++c) {
      for (Eigen::Index r = 0; r < g.rows(); ++r) line[r] = g(r, c);
      auto t = dft(line, dir);
      for (Eigen::Index r = 0; r < g.rows(); ++r) out(r, c) = t[r];
    }
  }
  return out;
}

}  // namespace torwig
