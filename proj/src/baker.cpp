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

#include "torwig/baker.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <set>
#include <stdexcept>

namespace torwig {
namespace {

CMatrix fourier_matrix(long m) {
  CMatrix f(m, m);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (long r = 0; r < m; ++r)
    for (long c = 0; c < m; ++c) {
      // exact reduction of r*c mod m keeps phases clean for large m
      long rc = (r * c) % m;
      double ang = -2.0 * std::numbers::pi * static_cast<double>(rc) /
                   static_cast<double>(m);
      f(r, c) = scale * Complex(std::cos(ang), std::sin(ang));
    }
  return f;
}

Rational floor_rational(const Rational& x) {
  long long q = x.numerator() / x.denominator();
  if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
  return Rational(q);
}

}  // namespace

CMatrix build_baker(long n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("build_baker: N must be even and >= 2");
  CMatrix half = fourier_matrix(n / 2);
  CMatrix block = CMatrix::Zero(n, n);
  block.topLeftCorner(n / 2, n / 2) = half;
  block.bottomRightCorner(n / 2, n / 2) = half;
  CMatrix fn = fourier_matrix(n);
  return fn.adjoint() * block;  // F_N is unitary, so F_N^{-1} = F_N^dagger
}

PhasePoint classical_step(const PhasePoint& x) {
  const Rational &q = x.first, &p = x.second;
  if (q < Rational(0) || q >= Rational(1) || p < Rational(0) ||
      p >= Rational(1))
    throw std::invalid_argument("classical_step: point outside [0,1)^2");
  Rational two_q = Rational(2) * q;
  Rational fl = floor_rational(two_q);
  return {two_q - fl, (p + fl) / Rational(2)};
}

std::vector<ClassicalOrbit> enumerate_orbits(long k) {
  if (k < 1) throw std::invalid_argument("enumerate_orbits: k must be >= 1");
  if (k > 20) throw std::invalid_argument("enumerate_orbits: k > 20 guard");
  const long long denom = (1LL << k) - 1;
  std::set<std::vector<int>> seen;
  std::vector<ClassicalOrbit> orbits;
  // the all-ones code is the boundary copy of the origin fixed point
  for (long long code = 0; code < denom; ++code) {
    std::vector<int> bits(k);
    for (long i = 0; i < k; ++i) bits[i] = (code >> (k - 1 - i)) & 1;

    bool lower_period = false;
    for (long d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      bool repeats = true;
      for (long i = 0; i < k && repeats; ++i)
        repeats = bits[i] == bits[(i + d) % k];
      if (repeats) {
        lower_period = true;
        break;
      }
    }
    if (lower_period) continue;

    std::vector<int> canon = bits;
    for (long r = 1; r < k; ++r) {
      std::vector<int> rot(bits.begin() + r, bits.end());
      rot.insert(rot.end(), bits.begin(), bits.begin() + r);
      canon = std::min(canon, rot);
    }
    if (!seen.insert(canon).second) continue;

    long long rcode = 0;
    for (long i = 0; i < k; ++i) rcode = (rcode << 1) | bits[k - 1 - i];

    ClassicalOrbit orbit;
    orbit.period = k;
    PhasePoint x{Rational(code, denom), Rational(rcode, denom)};
    orbit.points.push_back(x);
    for (long j = 1; j < k; ++j) {
      x = classical_step(x);
      orbit.points.push_back(x);
    }
    if (classical_step(orbit.points.back()) != orbit.points.front())
      throw std::logic_error("enumerate_orbits: cycle failed to close");
    std::set<PhasePoint> distinct(orbit.points.begin(), orbit.points.end());
    if (static_cast<long>(distinct.size()) != k)
      throw std::logic_error("enumerate_orbits: repeated point in cycle");
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

namespace {

// round(x * n) mod n, exactly in integer arithmetic; x = a/b >= 0
long round_scaled(const Rational& x, long n) {
  long long a = x.numerator(), b = x.denominator();
  long long r = (2 * a * n + b) / (2 * b);  // floor(a n / b + 1/2)
  return static_cast<long>(r % n);
}

}  // namespace

std::pair<long, long> point_to_pixel(const PhasePoint& x, long n,
                                     AxisConvention axis) {
  long nq = round_scaled(x.first, n);
  long np = round_scaled(x.second, n);
  return axis == AxisConvention::PQ ? std::make_pair(np, nq)
                                    : std::make_pair(nq, np);
}

std::vector<std::pair<long, long>> orbit_to_pixels(const ClassicalOrbit& orbit,
                                                   long n,
                                                   AxisConvention axis) {
  if (n < 1) throw std::invalid_argument("orbit_to_pixels: N must be positive");
  std::vector<std::pair<long, long>> px;
  px.reserve(orbit.points.size());
  for (const auto& pt : orbit.points) px.push_back(point_to_pixel(pt, n, axis));
  return px;
}

ScarReport scar_score(const CMatrix& w,
                      const std::vector<std::pair<long, long>>& pixels,
                      long radius) {
  require_square(w, "scar_score");
  if (pixels.empty())
    throw std::invalid_argument("scar_score: empty pixel list");
  const long n = w.rows();
  double mean = 0.0;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) mean += w(i, j).real();
  mean /= static_cast<double>(n * n);
  double var = 0.0;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      double d = w(i, j).real() - mean;
      var += d * d;
    }
  var /= static_cast<double>(n * n);
  const double sd = std::sqrt(var);

  ScarReport rep;
  rep.pixels = pixels;
  rep.grid_mean = mean;
  rep.grid_stddev = sd;
  double acc = 0.0;
  for (const auto& [pl, pn] : pixels) {
    if (pl < 0 || pn < 0)
      throw std::invalid_argument("scar_score: negative pixel index");
    double best = -std::numeric_limits<double>::infinity();
    for (long dl = -radius; dl <= radius; ++dl)
      for (long dn = -radius; dn <= radius; ++dn)
        best = std::max(best, w(positive_mod(pl + dl, n),
                                positive_mod(pn + dn, n))
                                  .real());
    rep.pixel_values.push_back(best);
    acc += best;
  }
  acc /= static_cast<double>(pixels.size());
  // constant grids have no contrast to score against
  double scale = std::max(1.0, std::abs(mean));
  rep.score = sd > 1e-12 * scale ? (acc - mean) / sd : 0.0;
  return rep;
}

}  // namespace torwig
