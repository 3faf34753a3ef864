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
#include <string>

#include "torwig/grid.hpp"

namespace torwig {

inline constexpr const char* kVersion = "0.1.0";

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Grid CSV: one '#' header line with provenance, then rows of interleaved
/// (Re, Im) column pairs printed with 17 significant digits.
void write_grid_csv(const std::string& path, const CMatrix& grid,
                    const std::string& provenance);

/// Reads a grid CSV (header optional). Throws IoError with the line number
/// on malformed content.
CMatrix read_grid_csv(const std::string& path);

/// State CSV rows: n, Re, Im.
void write_state_csv(const std::string& path, const CVector& psi,
                     const std::string& provenance);
CVector read_state_csv(const std::string& path);

/// 8-bit binary PGM (P5, maxval 255) of Re W. Linear min -> 0, max -> 255;
/// with `symmetric`, zero maps to mid-grey and the scale is +-max|Re W|.
void write_pgm(const std::string& path, const CMatrix& grid, bool symmetric);

std::string format_double(double v);

}  // namespace torwig
