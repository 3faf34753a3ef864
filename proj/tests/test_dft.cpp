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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "torwig/dft.hpp"

using namespace torwig;

namespace {

// Independent oracle: literal O(M^2) kernel sum with the unitary convention.
std::vector<Complex> naive_dft(const std::vector<Complex>& v, Direction dir) {
  const size_t m = v.size();
  const double sign = dir == Direction::Forward ? -1.0 : 1.0;
  std::vector<Complex> out(m, Complex(0, 0));
  for (size_t k = 0; k < m; ++k) {
    for (size_t j = 0; j < m; ++j) {
      double ang = sign * 2.0 * std::numbers::pi *
                   static_cast<double>((k * j) % m) / static_cast<double>(m);
      out[k] += v[j] * Complex(std::cos(ang), std::sin(ang));
    }
    out[k] /= std::sqrt(static_cast<double>(m));
  }
  return out;
}

std::vector<Complex> random_vector(size_t m, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> v(m);
  for (auto& z : v) z = Complex(g(rng), g(rng));
  return v;
}

}  // namespace

TEST_CASE("dft of a delta is uniform") {
  std::vector<Complex> v{1, 0, 0, 0};
  auto f = dft(v, Direction::Forward);
  for (auto& z : f) CHECK(std::abs(z - Complex(0.5, 0)) < 1e-15);
}

TEST_CASE("dft of the uniform vector is a delta") {
  std::vector<Complex> v{0.5, 0.5, 0.5, 0.5};
  auto f = dft(v, Direction::Forward);
  CHECK(std::abs(f[0] - Complex(1, 0)) < 1e-15);
  for (size_t k = 1; k < 4; ++k) CHECK(std::abs(f[k]) < 1e-15);
}

TEST_CASE("dft M=2 kernel evaluation") {
  std::vector<Complex> v{1, 0};
  auto f = dft(v, Direction::Forward);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(f[0] - Complex(r, 0)) < 1e-15);
  CHECK(std::abs(f[1] - Complex(r, 0)) < 1e-15);
}

TEST_CASE("dft rejects empty input") {
  CHECK_THROWS_AS(dft({}, Direction::Forward), std::invalid_argument);
}

TEST_CASE("fast dft agrees with the naive kernel sum for M <= 64") {
  std::mt19937_64 rng(7);
  for (size_t m = 1; m <= 64; ++m) {
    auto v = random_vector(m, rng);
    for (auto dir : {Direction::Forward, Direction::Inverse}) {
      auto fast = dft(v, dir);
      auto slow = naive_dft(v, dir);
      double err = 0;
      for (size_t k = 0; k < m; ++k) err = std::max(err, std::abs(fast[k] - slow[k]));
      CAPTURE(m);
      CHECK(err < 1e-10);
    }
  }
}

TEST_CASE("dft is unitary and invertible up to M = 512") {
  std::mt19937_64 rng(8);
  for (size_t m : {1ul, 2ul, 3ul, 12ul, 100ul, 200ul, 257ul, 400ul, 512ul}) {
    auto v = random_vector(m, rng);
    auto f = dft(v, Direction::Forward);
    double nv = 0, nf = 0;
    for (size_t k = 0; k < m; ++k) {
      nv += std::norm(v[k]);
      nf += std::norm(f[k]);
    }
    CHECK(std::abs(std::sqrt(nv) - std::sqrt(nf)) < 1e-12);
    auto back = dft(f, Direction::Inverse);
    double err = 0;
    for (size_t k = 0; k < m; ++k) err = std::max(err, std::abs(back[k] - v[k]));
    CHECK(err < 1e-12);
  }
}

TEST_CASE("dft_axis transforms one axis only") {
  CMatrix g = CMatrix::Zero(2, 2);
  g(0, 0) = 1.0;
  CMatrix t = dft_axis(g, Axis::Cols, Direction::Forward);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(t(0, 0) - Complex(r, 0)) < 1e-15);
  CHECK(std::abs(t(0, 1) - Complex(r, 0)) < 1e-15);
  CHECK(std::abs(t(1, 0)) < 1e-15);
  CHECK(std::abs(t(1, 1)) < 1e-15);

  CMatrix id = CMatrix::Identity(2, 2);
  CMatrix round = dft_axis(dft_axis(id, Axis::Cols, Direction::Forward),
                           Axis::Cols, Direction::Inverse);
  CHECK((round - id).cwiseAbs().maxCoeff() < 1e-14);

  CMatrix z = CMatrix::Zero(3, 5);
  CHECK(dft_axis(z, Axis::Rows, Direction::Forward).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("reduce_centered canonical values") {
  CHECK(reduce_centered(5, 4) == 1);
  CHECK(reduce_centered(-3, 4) == 1);
  CHECK(reduce_centered(2, 4) == -2);
}

TEST_CASE("reduce_centered is idempotent and congruent") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> ks(-1000, 1000), ms(1, 64);
  for (int it = 0; it < 2000; ++it) {
    long k = ks(rng), m = ms(rng);
    long r = reduce_centered(k, m);
    CHECK(reduce_centered(r, m) == r);
    CHECK(positive_mod(r - k, m) == 0);
    CHECK(r >= -((m + 1) / 2));
    CHECK(r <= m / 2 - 1);
  }
}
