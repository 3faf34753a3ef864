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

#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "torwig/grid.hpp"

namespace torwig {

using Rational = boost::rational<long long>;
using PhasePoint = std::pair<Rational, Rational>;  // (q, p) in [0,1)^2

/// Quantum baker map B_N = F_N^{-1} (F_{N/2} (+) F_{N/2}); N must be even.
CMatrix build_baker(long n);

/// One step of the classical baker map, exact rational arithmetic:
/// (q, p) -> (2q mod 1, (p + floor(2q)) / 2).
PhasePoint classical_step(const PhasePoint& x);

struct ClassicalOrbit {
  long period = 0;
  std::vector<PhasePoint> points;  // closed cycle, step maps j -> j+1
};

/// All distinct orbits of exact period k, from cyclic binary sequences;
/// every orbit is verified by k applications of classical_step.
std::vector<ClassicalOrbit> enumerate_orbits(long k);

enum class AxisConvention { PQ, QP };  // PQ: (lambda, n) = (round(pN), round(qN))

std::pair<long, long> point_to_pixel(const PhasePoint& x, long n,
                                     AxisConvention axis);

std::vector<std::pair<long, long>> orbit_to_pixels(const ClassicalOrbit& orbit,
                                                   long n,
                                                   AxisConvention axis);

struct ScarReport {
  std::vector<std::pair<long, long>> pixels;
  std::vector<double> pixel_values;  // max of Re W over each +-1 neighborhood
  double grid_mean = 0.0;
  double grid_stddev = 0.0;
  double score = 0.0;
};

/// z-score of the orbit-pixel ridge against the grid background:
/// (mean of neighborhood maxima - grid mean) / grid stddev of Re W.
ScarReport scar_score(const CMatrix& w,
                      const std::vector<std::pair<long, long>>& pixels,
                      long radius = 1);

}  // namespace torwig
