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

enum class Direction { Forward, Inverse };
enum class Axis { Rows, Cols };

/// Unitary DFT of arbitrary length M.
/// Forward kernel M^{-1/2} e^{-2 pi i m n / M}; inverse is its conjugate.
/// Radix-2 for powers of two, Bluestein otherwise; O(M log M) throughout.
std::vector<Complex> dft(const std::vector<Complex>& v, Direction dir);

/// Transform every line along the chosen axis independently.
/// Axis::Cols transforms across the column index (each row is one line);
/// Axis::Rows transforms down the row index (each column is one line).
CMatrix dft_axis(const CMatrix& g, Axis axis, Direction dir);

}  // namespace torwig
