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

#include "torwig/baker.hpp"
#include "torwig/propagator.hpp"
#include "torwig/wigner.hpp"

using namespace torwig;

namespace {

CMatrix random_unitary(long n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  Eigen::MatrixXcd q = qr.householderQ();
  return q;
}

CMatrix random_complex(long n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

TEST_CASE("eigendecompose: identity, diagonal phases, Hadamard") {
  SUBCASE("identity") {
    auto sd = eigendecompose(CMatrix::Identity(3, 3));
    for (double p : sd.phases) CHECK(std::abs(p) < 1e-12);
  }
  SUBCASE("diag(1, i) gives phases {0, 3pi/2}") {
    CMatrix u = CMatrix::Zero(2, 2);
    u(0, 0) = 1.0;
    u(1, 1) = Complex(0, 1);
    auto sd = eigendecompose(u);
    CHECK(std::abs(sd.phases[0] - 0.0) < 1e-12);
    CHECK(std::abs(sd.phases[1] - 1.5 * std::numbers::pi) < 1e-12);
  }
  SUBCASE("B2 has eigenvalues +1 and -1") {
    auto sd = eigendecompose(build_baker(2));
    CHECK(std::abs(sd.phases[0] - 0.0) < 1e-10);
    CHECK(std::abs(sd.phases[1] - std::numbers::pi) < 1e-10);
  }
  SUBCASE("rejects non-unitary input") {
    CMatrix m = CMatrix::Identity(3, 3) * 2.0;
    CHECK_THROWS_AS(eigendecompose(m), std::invalid_argument);
  }
}

TEST_CASE("eigendecompose: orthonormal basis, eigen-residual small") {
  std::mt19937_64 rng(20);
  CMatrix u = random_unitary(7, rng);
  auto sd = eigendecompose(u);
  CHECK(sd.residual < 1e-8);
  CHECK((sd.vectors.adjoint() * sd.vectors - CMatrix::Identity(7, 7))
            .cwiseAbs()
            .maxCoeff() < 1e-8);
  for (long a = 1; a < 7; ++a) CHECK(sd.phases[a] >= sd.phases[a - 1]);
}

TEST_CASE("density_propagator: identity at t=0, Hadamard at t=1, composition") {
  std::mt19937_64 rng(21);
  SUBCASE("t=0") {
    auto k = density_propagator(random_unitary(3, rng), 0);
    CHECK((k.matrix - CMatrix::Identity(9, 9)).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("B2 spreads the ground projector uniformly") {
    auto k = density_propagator(build_baker(2), 1);
    CMatrix rho = CMatrix::Zero(2, 2);
    rho(0, 0) = 1.0;
    CMatrix out = apply_density(k, rho);
    CHECK((out - CMatrix::Constant(2, 2, Complex(0.5, 0))).cwiseAbs().maxCoeff() <
          1e-12);
  }
  SUBCASE("two steps compose") {
    CMatrix u = random_unitary(4, rng);
    auto k1 = density_propagator(u, 1);
    auto k2 = density_propagator(u, 2);
    CMatrix rho = random_complex(4, rng);
    CMatrix once = apply_density(k1, apply_density(k1, rho));
    CMatrix twice = apply_density(k2, rho);
    CHECK((once - twice).cwiseAbs().maxCoeff() < 1e-10);
    // against explicit matrix arithmetic
    CMatrix direct = u * u * rho * (u * u).adjoint();
    CHECK((twice - direct).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("wigner_propagator_direct: identity, column sums, commuting square") {
  std::mt19937_64 rng(22);
  SUBCASE("t=0 identity") {
    auto k = wigner_propagator_direct(random_unitary(4, rng), 0);
    CHECK((k.matrix - CMatrix::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("column sums are one") {
    auto k = wigner_propagator_direct(random_unitary(4, rng), 1);
    for (long c = 0; c < 16; ++c)
      CHECK(std::abs(k.matrix.col(c).sum() - Complex(1, 0)) < 1e-8);
  }
  SUBCASE("commuting square with the transform") {
    const long n = 6;
    CMatrix u = random_unitary(n, rng);
    auto k = wigner_propagator_direct(u, 1);
    for (int rep = 0; rep < 20; ++rep) {
      CMatrix rho = random_complex(n, rng);
      CMatrix lhs = fourier_cut_transform(u * rho * u.adjoint());
      CMatrix rhs = propagate_wigner(k, fourier_cut_transform(rho));
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-8);
    }
  }
}

TEST_CASE("wigner_propagator_spectral: identity, route agreement, periods") {
  std::mt19937_64 rng(23);
  SUBCASE("t=0 identity for any unitary") {
    auto k = wigner_propagator_spectral(random_unitary(4, rng), 0);
    CHECK((k.matrix - CMatrix::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-8);
  }
  SUBCASE("agreement with the conjugation route on B4") {
    CMatrix u = build_baker(4);
    for (long t : {1, 2, 3}) {
      auto kd = wigner_propagator_direct(u, t);
      auto ks = wigner_propagator_spectral(u, t);
      CHECK((kd.matrix - ks.matrix).cwiseAbs().maxCoeff() < 1e-8);
    }
  }
  SUBCASE("period recovery for roots of unity") {
    const long n = 5, period = 4;
    CMatrix u = CMatrix::Zero(n, n);
    for (long j = 0; j < n; ++j) {
      double ang = -kTwoPi * static_cast<double>(j % period) / period;
      u(j, j) = Complex(std::cos(ang), std::sin(ang));
    }
    auto k = wigner_propagator_spectral(u, period);
    CHECK((k.matrix - CMatrix::Identity(n * n, n * n)).cwiseAbs().maxCoeff() <
          1e-8);
  }
}

TEST_CASE("semigroup property of the Wigner propagator") {
  std::mt19937_64 rng(24);
  CMatrix u = random_unitary(5, rng);
  auto k1 = wigner_propagator_direct(u, 1);
  auto k2 = wigner_propagator_direct(u, 2);
  auto k3 = wigner_propagator_direct(u, 3);
  CHECK((k3.matrix - k2.matrix * k1.matrix).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("propagate_wigner: identity, weight conservation, reality") {
  std::mt19937_64 rng(25);
  const long n = 4;
  CMatrix u = random_unitary(n, rng);
  auto k0 = wigner_propagator_direct(u, 0);
  auto k = wigner_propagator_direct(u, 1);
  CMatrix rho = random_complex(n, rng);
  rho = rho + rho.adjoint().eval();
  CMatrix w = fourier_cut_transform(rho);
  CHECK((propagate_wigner(k0, w) - w).cwiseAbs().maxCoeff() < 1e-10);
  CMatrix w1 = propagate_wigner(k, w);
  CHECK(std::abs(w1.sum() - w.sum()) < 1e-8);
  double im = 0;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) im = std::max(im, std::abs(w1(i, j).imag()));
  CHECK(im < 1e-8);
  CMatrix bad(3, 3);
  CHECK_THROWS_AS(propagate_wigner(k, bad), std::invalid_argument);
}

TEST_CASE("propagator_column: delta at t=0, matches full column, both routes") {
  std::mt19937_64 rng(26);
  const long n = 6;
  CMatrix u = random_unitary(n, rng);
  SUBCASE("t=0 delta") {
    CMatrix col = propagator_column(u, 2, 3, 0, ColumnRoute::Direct);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        Complex want = (i == 2 && j == 3) ? Complex(1, 0) : Complex(0, 0);
        CHECK(std::abs(col(i, j) - want) < 1e-10);
      }
  }
  SUBCASE("column equals the full-matrix column") {
    auto k = wigner_propagator_direct(u, 2);
    CMatrix col = propagator_column(u, 1, 4, 2, ColumnRoute::Direct);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        CHECK(std::abs(col(i, j) - k.matrix(i * n + j, 1 * n + 4)) < 1e-8);
  }
  SUBCASE("direct and spectral columns agree") {
    CMatrix a = propagator_column(u, 0, 5, 3, ColumnRoute::Direct);
    CMatrix b = propagator_column(u, 0, 5, 3, ColumnRoute::Spectral);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-8);
  }
  SUBCASE("out of range m'") {
    CHECK_THROWS_AS(propagator_column(u, 6, 0, 1), std::invalid_argument);
  }
}

TEST_CASE("capacity guard refuses oversized dense propagators") {
  CMatrix u = CMatrix::Identity(65, 65);
  CHECK_THROWS_AS(wigner_propagator_direct(u, 1), CapacityError);
  CHECK_THROWS_AS(wigner_propagator_spectral(u, 1), CapacityError);
}
