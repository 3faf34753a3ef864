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

#include "torwig/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace torwig {
namespace {

std::vector<double> parse_numeric_line(const std::string& line,
                                       const std::string& path, long lineno) {
  std::vector<double> vals;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    try {
      size_t pos = 0;
      double v = std::stod(field, &pos);
      while (pos < field.size() && std::isspace(field[pos])) ++pos;
      if (pos != field.size()) throw std::invalid_argument(field);
      vals.push_back(v);
    } catch (const std::exception&) {
      throw IoError(path + ":" + std::to_string(lineno) +
                    ": cannot parse numeric field '" + field + "'");
    }
  }
  return vals;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_grid_csv(const std::string& path, const CMatrix& grid,
                    const std::string& provenance) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "# torwig " << kVersion << " rows=" << grid.rows()
      << " cols=" << grid.cols() << " layout=re,im " << provenance << "\n";
  for (Eigen::Index r = 0; r < grid.rows(); ++r) {
    for (Eigen::Index c = 0; c < grid.cols(); ++c) {
      if (c) out << ',';
      out << format_double(grid(r, c).real()) << ','
          << format_double(grid(r, c).imag());
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

CMatrix read_grid_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto vals = parse_numeric_line(line, path, lineno);
    if (vals.size() % 2 != 0)
      throw IoError(path + ":" + std::to_string(lineno) +
                    ": odd field count, expected interleaved re,im pairs");
    if (!rows.empty() && vals.size() != rows.front().size())
      throw IoError(path + ":" + std::to_string(lineno) +
                    ": inconsistent column count");
    rows.push_back(std::move(vals));
  }
  if (rows.empty()) throw IoError(path + ": no data rows");
  CMatrix g(rows.size(), rows.front().size() / 2);
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c * 2 < rows[r].size(); ++c)
      g(r, c) = Complex(rows[r][2 * c], rows[r][2 * c + 1]);
  return g;
}

void write_state_csv(const std::string& path, const CVector& psi,
                     const std::string& provenance) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "# torwig " << kVersion << " n,re,im " << provenance << "\n";
  for (Eigen::Index i = 0; i < psi.size(); ++i)
    out << i << ',' << format_double(psi(i).real()) << ','
        << format_double(psi(i).imag()) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

CVector read_state_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  std::vector<std::pair<long, Complex>> entries;
  std::string line;
  long lineno = 0;
  long max_idx = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto vals = parse_numeric_line(line, path, lineno);
    if (vals.size() != 3)
      throw IoError(path + ":" + std::to_string(lineno) +
                    ": expected 3 fields (n, re, im)");
    long idx = static_cast<long>(std::llround(vals[0]));
    if (idx < 0 || std::abs(vals[0] - idx) > 0)
      throw IoError(path + ":" + std::to_string(lineno) +
                    ": first field must be a non-negative integer index");
    entries.emplace_back(idx, Complex(vals[1], vals[2]));
    max_idx = std::max(max_idx, idx);
  }
  if (entries.empty()) throw IoError(path + ": no data rows");
  CVector psi = CVector::Zero(max_idx + 1);
  for (auto& [idx, v] : entries) psi(idx) = v;
  return psi;
}

void write_pgm(const std::string& path, const CMatrix& grid, bool symmetric) {
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  const long rows = grid.rows(), cols = grid.cols();
  double lo = grid(0, 0).real(), hi = lo;
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) {
      double v = grid(r, c).real();
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  if (symmetric) {
    double a = std::max(std::abs(lo), std::abs(hi));
    lo = -a;
    hi = a;
  }
  out << "P5\n" << cols << ' ' << rows << "\n255\n";
  std::vector<unsigned char> row(cols);
  const double span = hi - lo;
  for (long r = 0; r < rows; ++r) {
    for (long c = 0; c < cols; ++c) {
      double v = grid(r, c).real();
      double g = span > 0 ? 255.0 * (v - lo) / span : 0.0;
      long q = std::lround(g);
      row[c] = static_cast<unsigned char>(std::clamp(q, 0L, 255L));
    }
    out.write(reinterpret_cast<const char*>(row.data()), cols);
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace torwig
