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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "torwig/baker.hpp"
#include "torwig/dft.hpp"
#include "torwig/grid.hpp"
#include "torwig/io.hpp"
#include "torwig/propagator.hpp"
#include "torwig/wigner.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace torwig;

namespace {

long thread_cap() {
  long hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TORUS_WIGNER_THREADS")) {
    long v = std::atol(env);
    if (v >= 1) return std::min(v, hw);
  }
  return hw;
}

// Static chunking over [0, total); bodies write to disjoint slots only.
void parallel_for(long total, const std::function<void(long)>& body) {
  long nt = std::min(thread_cap(), total);
  if (nt <= 1) {
    for (long i = 0; i < total; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (long w = 0; w < nt; ++w)
    pool.emplace_back([&, w] {
      for (long i = w; i < total; i += nt) body(i);
    });
  for (auto& th : pool) th.join();
}

std::string out_path(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

AxisConvention parse_axis(const std::string& s) {
  if (s == "pq") return AxisConvention::PQ;
  if (s == "qp") return AxisConvention::QP;
  throw CLI::ValidationError("--axis-convention must be pq or qp");
}

CMatrix imag_part_grid(const CMatrix& w) {
  CMatrix g(w.rows(), w.cols());
  for (Eigen::Index i = 0; i < w.rows(); ++i)
    for (Eigen::Index j = 0; j < w.cols(); ++j)
      g(i, j) = Complex(w(i, j).imag(), 0.0);
  return g;
}

CMatrix real_part_grid(const CMatrix& w) {
  CMatrix g(w.rows(), w.cols());
  for (Eigen::Index i = 0; i < w.rows(); ++i)
    for (Eigen::Index j = 0; j < w.cols(); ++j)
      g(i, j) = Complex(w(i, j).real(), 0.0);
  return g;
}

void emit_grid(const CMatrix& g, const std::string& dir,
               const std::string& stem, const std::string& provenance,
               const std::string& format, bool symmetric) {
  if (format == "csv" || format == "both")
    write_grid_csv(out_path(dir, stem + ".csv"), g, provenance);
  if (format == "pgm" || format == "both")
    write_pgm(out_path(dir, stem + ".pgm"), g, symmetric);
}

std::pair<long, long> parse_point(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--m-prime expects 'lambda,n'");
  return {std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
  return out;
}

std::string rational_str(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json orbit_json(const ClassicalOrbit& orbit, long n, AxisConvention axis) {
  json points = json::array();
  for (const auto& pt : orbit.points) {
    auto px = point_to_pixel(pt, n, axis);
    points.push_back({{"q", rational_str(pt.first)},
                      {"p", rational_str(pt.second)},
                      {"pixel", {px.first, px.second}}});
  }
  return {{"period", orbit.period}, {"points", points}};
}

// ---------------------------------------------------------------------------

int cmd_kernel(long n, const std::string& dir) {
  BoxKernel k = build_kernel(n);
  std::string path = out_path(dir, "kernel_N" + std::to_string(n) + ".csv");
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "# torwig " << kVersion << " kernel N=" << n << " columns=k,re,im\n";
  for (long k_c = -n; k_c < n; ++k_c) {
    Complex v = k.closed_at(k_c);
    out << k_c << ',' << format_double(v.real()) << ','
        << format_double(v.imag()) << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
  std::cout << "wrote " << path << "\n";
  return 0;
}

int cmd_wigner(const std::string& state_file, const std::string& density_file,
               bool doubled, bool check, const std::string& format,
               bool symmetric, const std::string& dir) {
  CMatrix rho;
  if (!state_file.empty()) {
    CVector psi = read_state_csv(state_file);
    rho = projector(psi);
  } else {
    rho = read_grid_csv(density_file);
    require_square(rho, "density input");
  }
  const long n = rho.rows();
  std::ostringstream prov;
  prov << "command=wigner N=" << n << (doubled ? " double=1" : "");

  if (doubled) {
    CMatrix wd = to_doubled(rho);
    emit_grid(wd, dir, "wigner_double_N" + std::to_string(n), prov.str(),
              format, symmetric);
    std::cout << "wrote W_double (" << 2 * n << "x" << 2 * n << ")\n";
    return 0;
  }

  CMatrix w = fourier_cut_transform(rho);
  if (check) {
    CMatrix w_ref = wigner_transform(rho);
    double disc = (w - w_ref).cwiseAbs().maxCoeff();
    std::cout << "route-equivalence max discrepancy: " << format_double(disc)
              << "\n";
    if (disc > 1e-10) {
      std::cerr << "route check failed (tolerance 1e-10)\n";
      return 2;
    }
  }
  emit_grid(w, dir, "wigner_N" + std::to_string(n), prov.str(), format,
            symmetric);
  std::cout << "wrote W (" << n << "x" << n << ")\n";
  return 0;
}

int cmd_inverse(const std::string& grid_file, const std::string& dir) {
  CMatrix w = read_grid_csv(grid_file);
  require_square(w, "grid input");
  const long n = w.rows();
  CMatrix rho = wigner_inverse(w);
  write_grid_csv(out_path(dir, "density_N" + std::to_string(n) + ".csv"), rho,
                 "command=inverse N=" + std::to_string(n));
  std::cout << "wrote density (" << n << "x" << n << ")\n";
  return 0;
}

int cmd_baker_eigen(long n, bool all, long alpha, long beta, long top_scar,
                    long period, const std::string& axis_str,
                    const std::string& format, bool symmetric,
                    const std::string& dir) {
  AxisConvention axis = parse_axis(axis_str);
  CMatrix b = build_baker(n);
  SpectralDecomposition sd = eigendecompose(b);

  auto orbits = enumerate_orbits(period);
  std::vector<std::vector<std::pair<long, long>>> orbit_px;
  for (const auto& o : orbits) orbit_px.push_back(orbit_to_pixels(o, n, axis));

  std::vector<long> selection;
  if (all || top_scar > 0)
    for (long a = 0; a < n; ++a) selection.push_back(a);
  else if (alpha >= 0)
    selection.push_back(alpha);
  if (selection.empty())
    throw std::invalid_argument("baker-eigen: select --all, --alpha or --top-scar");
  for (long a : selection)
    if (a >= n) throw std::invalid_argument("baker-eigen: alpha out of range");

  // diagonal Wigner eigenfunctions + scar scores (parallel over eigenstates)
  std::vector<CMatrix> grids(selection.size());
  std::vector<std::vector<double>> scores(selection.size());
  parallel_for(static_cast<long>(selection.size()), [&](long i) {
    long a = selection[i];
    CVector va = sd.vectors.col(a);
    CMatrix w = wigner_of_state(va);
    std::vector<double> s;
    for (const auto& px : orbit_px) s.push_back(scar_score(w, px).score);
    grids[i] = std::move(w);
    scores[i] = std::move(s);
  });

  json report;
  report["n"] = n;
  report["period"] = period;
  report["axis_convention"] = axis_str;
  report["orbits"] = json::array();
  for (const auto& o : orbits) report["orbits"].push_back(orbit_json(o, n, axis));
  report["eigenstates"] = json::array();
  for (size_t i = 0; i < selection.size(); ++i)
    report["eigenstates"].push_back({{"alpha", selection[i]},
                                     {"phase", sd.phases[selection[i]]},
                                     {"scar_scores", scores[i]}});

  // files to emit: either the explicit selection or the top-scar ranking
  std::vector<long> to_write = selection;
  if (top_scar > 0) {
    std::vector<size_t> idx(selection.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](size_t x, size_t y) {
      double bx = *std::max_element(scores[x].begin(), scores[x].end());
      double by = *std::max_element(scores[y].begin(), scores[y].end());
      return bx > by;
    });
    json ranking = json::array();
    for (size_t r = 0; r < idx.size(); ++r) {
      double best = *std::max_element(scores[idx[r]].begin(),
                                      scores[idx[r]].end());
      ranking.push_back({{"alpha", selection[idx[r]]}, {"score", best}});
    }
    report["ranking"] = ranking;
    to_write.clear();
    for (long r = 0; r < std::min<long>(top_scar, idx.size()); ++r)
      to_write.push_back(selection[idx[r]]);
  }

  for (long a : to_write) {
    size_t i = std::find(selection.begin(), selection.end(), a) -
               selection.begin();
    std::string stem =
        "baker_N" + std::to_string(n) + "_alpha" + std::to_string(a);
    emit_grid(grids[i], dir, stem,
              "command=baker-eigen N=" + std::to_string(n) +
                  " alpha=" + std::to_string(a),
              format, symmetric);
  }

  if (beta >= 0) {
    if (alpha < 0) throw std::invalid_argument("baker-eigen: --beta needs --alpha");
    if (beta >= n) throw std::invalid_argument("baker-eigen: beta out of range");
    CMatrix op(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        op(i, j) = sd.vectors(i, alpha) * std::conj(sd.vectors(j, beta));
    CMatrix w = fourier_cut_transform(op);
    std::string stem = "baker_N" + std::to_string(n) + "_alpha" +
                       std::to_string(alpha) + "_beta" + std::to_string(beta);
    std::string prov = "command=baker-eigen N=" + std::to_string(n) +
                       " alpha=" + std::to_string(alpha) +
                       " beta=" + std::to_string(beta);
    emit_grid(real_part_grid(w), dir, stem + "_re", prov + " part=re", format,
              symmetric);
    emit_grid(imag_part_grid(w), dir, stem + "_im", prov + " part=im", format,
              symmetric);
  }

  std::string rpath =
      out_path(dir, "scar_report_N" + std::to_string(n) + "_k" +
                        std::to_string(period) + ".json");
  std::ofstream out(rpath, std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + rpath);
  out << report.dump(2) << "\n";
  std::cout << "wrote " << rpath << "\n";
  return 0;
}

int cmd_propagate(long n, const std::string& unitary_file,
                  const std::string& m_prime, const std::string& t_list,
                  const std::string& route, const std::string& format,
                  bool symmetric, const std::string& dir) {
  CMatrix u;
  if (!unitary_file.empty()) {
    u = read_grid_csv(unitary_file);
    require_square(u, "unitary input");
    n = u.rows();
    double defect = unitarity_defect(u);
    if (defect > 1e-10)
      throw std::invalid_argument("propagate: input unitary defect " +
                                  std::to_string(defect));
  } else {
    u = build_baker(n);
  }
  auto [ml, mn] = parse_point(m_prime);
  auto ts = parse_long_list(t_list);
  for (long t : ts) {
    CMatrix col_d, col_s;
    if (route == "direct" || route == "both")
      col_d = propagator_column(u, ml, mn, t, ColumnRoute::Direct);
    if (route == "spectral" || route == "both")
      col_s = propagator_column(u, ml, mn, t, ColumnRoute::Spectral);
    if (route == "both") {
      double disc = (col_d - col_s).cwiseAbs().maxCoeff();
      std::cout << "t=" << t << " route discrepancy: " << format_double(disc)
                << "\n";
    }
    const CMatrix& col = (route == "spectral") ? col_s : col_d;
    std::string stem = "propcol_N" + std::to_string(n) + "_m" +
                       std::to_string(ml) + "-" + std::to_string(mn) + "_t" +
                       std::to_string(t);
    emit_grid(col, dir, stem,
              "command=propagate N=" + std::to_string(n) + " m=(" +
                  std::to_string(ml) + "," + std::to_string(mn) +
                  ") t=" + std::to_string(t) + " route=" + route,
              format, symmetric);
  }
  std::cout << "wrote " << ts.size() << " propagator column grid(s)\n";
  return 0;
}

int cmd_orbits(long k, long n, const std::string& axis_str,
               const std::string& dir) {
  AxisConvention axis = parse_axis(axis_str);
  auto orbits = enumerate_orbits(k);
  json j;
  j["period"] = k;
  j["n"] = n;
  j["axis_convention"] = axis_str;
  j["orbits"] = json::array();
  for (const auto& o : orbits) j["orbits"].push_back(orbit_json(o, n, axis));
  std::string path = out_path(dir, "orbits_k" + std::to_string(k) + "_N" +
                                       std::to_string(n) + ".json");
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << j.dump(2) << "\n";
  std::cout << "wrote " << path << " (" << orbits.size() << " orbits)\n";
  return 0;
}

int cmd_selftest(long n_max) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok, double value) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " (max "
              << format_double(value) << ")\n";
    if (!ok) ++failures;
  };
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> gauss;
  auto random_matrix = [&](long n) {
    CMatrix m(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
  };

  double worst = 0;
  for (long m = 1; m <= 64; ++m) {
    std::vector<Complex> v(m);
    for (auto& z : v) z = Complex(gauss(rng), gauss(rng));
    auto f = dft(v, Direction::Forward);
    double n0 = 0, n1 = 0;
    for (long i = 0; i < m; ++i) {
      n0 += std::norm(v[i]);
      n1 += std::norm(f[i]);
    }
    worst = std::max(worst, std::abs(std::sqrt(n1) - std::sqrt(n0)));
  }
  check("dft unitarity (M<=64)", worst < 1e-12, worst);

  worst = 0;
  for (long n = 1; n <= n_max; ++n) {
    CMatrix rho = random_matrix(n);
    worst = std::max(worst, (wigner_inverse(fourier_cut_transform(rho)) - rho)
                                .cwiseAbs()
                                .maxCoeff());
  }
  check("transform round trip", worst < 1e-10, worst);

  worst = 0;
  for (long n = 1; n <= n_max; ++n) {
    CMatrix rho = random_matrix(n);
    worst = std::max(worst, (wigner_transform(rho) - fourier_cut_transform(rho))
                                .cwiseAbs()
                                .maxCoeff());
  }
  check("route equivalence", worst < 1e-10, worst);

  worst = 0;
  for (long n = 1; n <= n_max; ++n) {
    CMatrix rho = random_matrix(n);
    rho = rho + rho.adjoint().eval();
    CMatrix w = fourier_cut_transform(rho);
    worst = std::max(worst, imag_part_grid(w).cwiseAbs().maxCoeff());
    worst = std::max(worst, std::abs(w.sum() - rho.trace()));
  }
  check("reality and normalization", worst < 1e-10, worst);

  worst = 0;
  for (long n = 2; n <= std::max<long>(n_max, 8); n += 2)
    worst = std::max(worst, unitarity_defect(build_baker(n)));
  check("baker unitarity", worst < 1e-10, worst);

  {
    CMatrix u = build_baker(4);
    auto kd = wigner_propagator_direct(u, 2);
    auto ks = wigner_propagator_spectral(u, 2);
    double d = (kd.matrix - ks.matrix).cwiseAbs().maxCoeff();
    check("propagator route equivalence (B4, t=2)", d < 1e-8, d);
  }

  {
    bool ok = true;
    for (long k = 1; k <= 6; ++k) {
      for (const auto& orbit : enumerate_orbits(k)) {
        PhasePoint x = orbit.points.front();
        for (long j = 0; j < k; ++j) x = classical_step(x);
        ok = ok && x == orbit.points.front();
      }
    }
    check("classical orbit closure (k<=6)", ok, 0.0);
  }

  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete Wigner functions, propagators and the quantum baker "
               "map on the N x N torus"};
  app.require_subcommand(1);

  std::string dir = ".";
  app.add_option("--out", dir, "output directory")->capture_default_str();

  long n = 0, alpha = -1, beta = -1, top_scar = 0, period = 3, k = 3,
       n_max = 8;
  bool doubled = false, check = false, symmetric = false, all = false;
  std::string state_file, density_file, grid_file, unitary_file;
  std::string format = "csv", axis = "pq", route = "direct";
  std::string m_prime = "0,0", t_list = "1";

  auto* sk = app.add_subcommand("kernel", "emit the box kernel table");
  sk->add_option("--n", n, "Hilbert dimension")->required();

  auto* sw = app.add_subcommand("wigner", "transform a state or density");
  sw->add_option("--state", state_file, "state CSV (n, re, im)");
  sw->add_option("--density", density_file, "density CSV (re,im pairs)");
  sw->add_flag("--double", doubled, "emit the 2N x 2N doubled grid");
  sw->add_flag("--check", check, "run both routes, report discrepancy");
  sw->add_option("--format", format)->check(CLI::IsMember({"csv", "pgm", "both"}));
  sw->add_flag("--symmetric", symmetric, "zero maps to mid-grey in PGM");

  auto* si = app.add_subcommand("inverse", "invert a Wigner grid");
  si->add_option("--grid", grid_file, "Wigner grid CSV")->required();

  auto* sb = app.add_subcommand("baker-eigen", "baker eigenstates and scars");
  sb->add_option("--n", n, "Hilbert dimension (even)")->required();
  sb->add_flag("--all", all, "emit every diagonal eigenfunction");
  sb->add_option("--alpha", alpha, "eigenstate index");
  sb->add_option("--beta", beta, "second index for off-diagonal W");
  sb->add_option("--top-scar", top_scar, "emit the K best-scarred eigenstates");
  sb->add_option("--period", period, "orbit period for scar scoring");
  sb->add_option("--axis-convention", axis)->check(CLI::IsMember({"pq", "qp"}));
  sb->add_option("--format", format)->check(CLI::IsMember({"csv", "pgm", "both"}));
  sb->add_flag("--symmetric", symmetric);

  auto* sp = app.add_subcommand("propagate", "propagator column at m'");
  sp->add_option("--n", n, "Hilbert dimension (even, baker)");
  sp->add_option("--unitary", unitary_file, "unitary CSV instead of baker");
  sp->add_option("--m-prime", m_prime, "initial point 'lambda,n'")->required();
  sp->add_option("--t", t_list, "comma-separated step counts");
  sp->add_option("--route", route)->check(CLI::IsMember({"direct", "spectral", "both"}));
  sp->add_option("--format", format)->check(CLI::IsMember({"csv", "pgm", "both"}));
  sp->add_flag("--symmetric", symmetric);

  auto* so = app.add_subcommand("orbits", "classical periodic orbits");
  so->add_option("--period", k, "orbit period")->required();
  so->add_option("--n", n, "lattice size for pixels")->required();
  so->add_option("--axis-convention", axis)->check(CLI::IsMember({"pq", "qp"}));

  auto* st = app.add_subcommand("selftest", "internal consistency checks");
  st->add_option("--n-max", n_max, "largest dimension in the sweep");

  CLI11_PARSE(app, argc, argv);

  try {
    fs::create_directories(dir);
    if (sk->parsed()) return cmd_kernel(n, dir);
    if (sw->parsed()) {
      if (state_file.empty() == density_file.empty())
        throw std::invalid_argument("wigner: give exactly one of --state / --density");
      return cmd_wigner(state_file, density_file, doubled, check, format,
                        symmetric, dir);
    }
    if (si->parsed()) return cmd_inverse(grid_file, dir);
    if (sb->parsed())
      return cmd_baker_eigen(n, all, alpha, beta, top_scar, period, axis,
                             format, symmetric, dir);
    if (sp->parsed())
      return cmd_propagate(n, unitary_file, m_prime, t_list, route, format,
                           symmetric, dir);
    if (so->parsed()) return cmd_orbits(k, n, axis, dir);
    if (st->parsed()) return cmd_selftest(n_max);
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 3;
  } catch (const CapacityError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
