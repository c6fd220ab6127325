// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdtn/coeff_io.hpp"
#include "sdtn/dtn.hpp"
#include "sdtn/exterior.hpp"
#include "sdtn/format.hpp"
#include "sdtn/friedrichs.hpp"
#include "sdtn/modulus.hpp"
#include "sdtn/spectral.hpp"
#include "parallel.hpp"

namespace {

using sdtn::cplx;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cplx parse_wavenumber(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ConfigError("wavenumber must be 're,im'");
  const double re = sdtn::parse_double(text.substr(0, comma));
  const double im = sdtn::parse_double(text.substr(comma + 1));
  if (re < 0.0) throw ConfigError("wavenumber must satisfy Re s >= 0");
  return {re, im};
}

struct GridSpec {
  double start, stop;
  int count;
};

GridSpec parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw ConfigError("grid must be 'start:stop:count'");
  GridSpec g;
  g.start = sdtn::parse_double(text.substr(0, c1));
  g.stop = sdtn::parse_double(text.substr(c1 + 1, c2 - c1 - 1));
  g.count = std::stoi(text.substr(c2 + 1));
  if (g.count < 1) throw ConfigError("grid count must be positive");
  return g;
}

std::vector<double> linear_points(const GridSpec& g) {
  std::vector<double> pts(g.count);
  for (int i = 0; i < g.count; ++i)
    pts[i] = g.count == 1 ? g.start : g.start + (g.stop - g.start) * i / (g.count - 1);
  return pts;
}

std::vector<double> log_points(const GridSpec& g) {
  if (!(g.start > 0.0) || !(g.stop > 0.0)) throw ConfigError("log grid needs positive endpoints");
  std::vector<double> pts(g.count);
  const double la = std::log(g.start), lb = std::log(g.stop);
  for (int i = 0; i < g.count; ++i)
    pts[i] = g.count == 1 ? g.start : std::exp(la + (lb - la) * i / (g.count - 1));
  return pts;
}

// Full content is assembled first, written to a temp file, then renamed, so
// an error never leaves a partial output behind.
void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

// deterministic uniform double from raw engine bits
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double uniform(double a, double b) {
    return a + (b - a) * ((eng() >> 11) * 0x1.0p-53);
  }
  cplx uniform_complex() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }
};

sdtn::BoundaryCoefficients random_band_limited(Rng& rng, int n, double R, int band) {
  sdtn::BoundaryCoefficients g;
  g.n = n;
  g.R = R;
  for (int m = 0; m <= band; ++m) {
    const long long mult = sdtn::multiplicity(m, n);
    for (int j = 1; j <= std::min<long long>(mult, 5); ++j) g.set(m, j, rng.uniform_complex());
  }
  return g;
}

cplx bilinear_pairing(const sdtn::BoundaryCoefficients& a, const sdtn::BoundaryCoefficients& b) {
  cplx sum(0.0);
  for (const auto& [idx, v] : a.entries) sum += v * b.get(idx.m, idx.j);
  return std::pow(a.R, a.n - 1) * sum;
}

// ---------------------------------------------------------------- coeffs ---

struct CoeffsConfig {
  int dim = 3;
  double radius = 1.0;
  std::string wavenumber = "0,0";
  int max_m = 10;
  std::string output;
  std::string format = "csv";
};

int cmd_coeffs(const CoeffsConfig& cfg) {
  if (cfg.dim < 2) throw ConfigError("dimension must be at least 2");
  if (!(cfg.radius > 0.0)) throw ConfigError("radius must be positive");
  if (cfg.max_m < 0) throw ConfigError("max-m must be nonnegative");
  if (cfg.format != "csv" && cfg.format != "json") throw ConfigError("format must be csv or json");
  const cplx s = parse_wavenumber(cfg.wavenumber);

  std::vector<cplx> zvals(cfg.max_m + 1);
  for (int m = 0; m <= cfg.max_m; ++m)
    zvals[m] = sdtn::z_coefficient(sdtn::Mode(m, cfg.dim), s * cfg.radius);

  const double nu = 0.5 * (cfg.dim - 2);
  std::string out;
  if (cfg.format == "csv") {
    out = "# n=" + std::to_string(cfg.dim) + " R=" + sdtn::format_double(cfg.radius) +
          " s=" + sdtn::format_double(s.real()) + "," + sdtn::format_double(s.imag()) + "\n";
    out += "m,nu,re_z,im_z\n";
    for (int m = 0; m <= cfg.max_m; ++m)
      out += std::to_string(m) + "," + sdtn::format_double(nu) + "," +
             sdtn::format_double(zvals[m].real()) + "," + sdtn::format_double(zvals[m].imag()) +
             "\n";
  } else {
    nlohmann::json j;
    j["n"] = cfg.dim;
    j["R"] = cfg.radius;
    j["s"] = {s.real(), s.imag()};
    j["rows"] = nlohmann::json::array();
    for (int m = 0; m <= cfg.max_m; ++m)
      j["rows"].push_back(
          {{"m", m}, {"nu", nu}, {"re_z", zvals[m].real()}, {"im_z", zvals[m].imag()}});
    out = j.dump(2) + "\n";
  }
  emit(cfg.output, out);
  return 0;
}

// ---------------------------------------------------------------- bounds ---

struct BoundsConfig {
  std::vector<int> dims = {2, 3, 4, 5, 6, 7};
  int max_m = 30;
  std::string rho = "1e-3:1e3:13";
  double tolerance = 1e-9;
  int corpus = 200;
  std::uint64_t seed = 20240601;
  bool modulus = false;
  double inject_z_offset = 0.0;
  std::string output;
};

int cmd_bounds(const BoundsConfig& cfg) {
  for (int n : cfg.dims)
    if (n < 2) throw ConfigError("dimension must be at least 2");
  if (cfg.max_m < 0) throw ConfigError("max-m must be nonnegative");
  if (!(cfg.tolerance > 0.0)) throw ConfigError("tolerance must be positive");

  const double c2 = sdtn::calibrate_c2(1.0);
  std::string out = "# bound sweep report\n";
  out += "suite,n,m,re_s,im_s,check,margin\n";
  long long checked = 0, violations = 0;
  auto record = [&](const char* suite, int n, double m, cplx s, const char* check, double margin,
                    bool ok) {
    ++checked;
    if (!ok) {
      ++violations;
      out += std::string(suite) + "," + std::to_string(n) + "," + sdtn::format_double(m) + "," +
             sdtn::format_double(s.real()) + "," + sdtn::format_double(s.imag()) + "," + check +
             "," + sdtn::format_double(margin) + "\n";
    }
  };

  // coefficient bounds sweep
  std::vector<cplx> svals{cplx(0.0, 0.0)};
  for (double rho : log_points(parse_grid(cfg.rho)))
    for (double deg : {-90.0, -45.0, 0.0, 45.0, 90.0}) {
      const double th = deg * M_PI / 180.0;
      cplx s(rho * std::cos(th), rho * std::sin(th));
      if (deg == 90.0) s = cplx(0.0, rho);  // keep axis points exactly imaginary
      if (deg == -90.0) s = cplx(0.0, -rho);
      svals.push_back(s);
    }
  for (int n : cfg.dims) {
    for (int m = 0; m <= cfg.max_m; ++m) {
      const sdtn::Mode mode(m, n);
      for (const cplx& s : svals) {
        const cplx z = sdtn::z_coefficient(mode, s) + cfg.inject_z_offset;
        const auto rep = sdtn::check_bounds_value(mode, s, z, c2);
        record("thm-coeff", n, m, s, "re_low", rep.re_low_margin,
               rep.re_low_margin >= -cfg.tolerance);
        record("thm-coeff", n, m, s, "re_high", rep.re_high_margin,
               rep.re_high_margin >= -cfg.tolerance);
        if (std::abs(s.imag()) >= 1e-6) {
          record("thm-coeff", n, m, s, "im_bound", rep.im_high_margin,
                 rep.im_high_margin >= -cfg.tolerance);
          const bool resolvable = std::abs(rep.im_strict) > 1e-12 * std::max(1.0, std::abs(z));
          record("thm-coeff", n, m, s, "im_sign", rep.im_strict,
                 rep.im_strict >= -cfg.tolerance && (!resolvable || rep.im_strict > 0.0));
        }
      }
    }
  }

  // modulus inequality chain
  for (double mu2 = 0.0; mu2 <= 10.0; mu2 += 1.0) {
    const double mu = 0.5 * mu2;
    const sdtn::Order order(mu);
    for (double x : log_points({1e-2, 50.0, 40})) {
      const auto p = sdtn::hankel_modulus_sq(order, x);
      const double q = -x * p.dm_sq;
      const double lo = std::min(1.0, 2.0 * mu) * p.m_sq;
      const double hi = std::max(1.0, 2.0 * mu) * p.m_sq;
      record("modulus-chain", 2, mu, cplx(x, 0.0), "lower", (q - lo) / p.m_sq,
             q - lo >= -cfg.tolerance * p.m_sq);
      record("modulus-chain", 2, mu, cplx(x, 0.0), "upper", (hi - q) / p.m_sq,
             hi - q >= -cfg.tolerance * p.m_sq);
      if (cfg.modulus) {
        const double oracle = sdtn::nicholson_modulus_sq(order, x);
        const double gap = std::abs(oracle - p.m_sq);
        record("modulus-oracle", 2, mu, cplx(x, 0.0), "nicholson", gap,
               gap <= 1e-8 * std::max(1.0, p.m_sq));
      }
    }
  }

  // quadratic form suite on a random band-limited corpus at R = 1
  Rng rng(cfg.seed);
  for (int n : cfg.dims) {
    if (n > 4) continue;  // corpus suite covers the point-evaluable range and n = 4
    double fitted = 0.0;
    for (int i = 0; i < cfg.corpus; ++i) {
      auto g = random_band_limited(rng, n, 1.0, 8);
      auto h = random_band_limited(rng, n, 1.0, 8);
      const double pick = rng.uniform(0.0, 1.0);
      const cplx s = pick < 0.25   ? cplx(0.0, 0.0)
                     : pick < 0.5  ? cplx(rng.uniform(0.0, 10.0), 0.0)
                     : pick < 0.75 ? cplx(rng.uniform(0.0, 5.0), rng.uniform(0.1, 10.0))
                                   : cplx(rng.uniform(0.0, 5.0), -rng.uniform(0.1, 10.0));
      const auto kind = sdtn::DtnKind::helmholtz(s);
      const cplx form = sdtn::dtn_form(kind, g, h).value;
      const cplx via_apply = sdtn::surface_pairing(sdtn::apply_dtn(kind, g), h);
      sdtn::BoundaryCoefficients hconj = h;
      for (auto& [idx, v] : hconj.entries) v = std::conj(v);
      const cplx via_swap = bilinear_pairing(g, sdtn::apply_dtn(kind, hconj));
      const double scale = std::max(1.0, std::abs(form));
      record("form", n, i, s, "diagonal", std::abs(via_apply - form),
             std::abs(via_apply - form) <= 1e-12 * scale);
      record("form", n, i, s, "symmetry", std::abs(via_swap - form),
             std::abs(via_swap - form) <= 1e-12 * scale);
      const auto def = sdtn::definiteness_report(kind, g);
      record("form", n, i, s, "re_lower", def.lower_margin,
             def.lower_margin >= -1e-12 * std::max(1.0, def.l2_sq));
      if (std::abs(s.imag()) >= 1e-3)
        record("form", n, i, s, "im_sign", def.im_part * def.im_expected_sign,
               def.im_part * def.im_expected_sign > 0.0);
      fitted = std::max(fitted, std::abs(form) / (sdtn::indexed_trace_norm(g, s) *
                                                  sdtn::indexed_trace_norm(h, s)));
    }
    out += "# fitted C(" + std::to_string(n) + ") = " + sdtn::format_double(fitted) + "\n";
  }

  out += "# summary: checked=" + std::to_string(checked) +
         " violations=" + std::to_string(violations) + "\n";
  emit(cfg.output, out);
  return violations == 0 ? 0 : 1;
}

// ----------------------------------------------------------------- solve ---

struct SolveConfig {
  std::string input;
  std::string kind = "helmholtz";
  std::string wavenumber = "0,0";
  std::string r_grid = "1:2:5";
  std::string output;
};

int cmd_solve(const SolveConfig& cfg) {
  if (cfg.input.empty()) throw ConfigError("solve requires --input");
  const auto g = sdtn::read_coefficients_file(cfg.input);
  if (g.n != 2 && g.n != 3) throw ConfigError("point evaluation requires dimension 2 or 3");

  sdtn::DtnKind kind;
  if (cfg.kind == "helmholtz") {
    kind = sdtn::DtnKind::helmholtz(parse_wavenumber(cfg.wavenumber));
  } else if (cfg.kind == "laplace") {
    kind = sdtn::DtnKind::laplace();
  } else if (cfg.kind == "laplace-log") {
    if (g.n != 2 || g.R == 1.0) throw ConfigError("laplace-log requires n = 2 and R != 1");
    kind = sdtn::DtnKind::laplace_log();
  } else {
    throw ConfigError("kind must be helmholtz, laplace, or laplace-log");
  }

  const auto grid = sdtn::SurfaceGrid::make(g.n, std::max(0, g.band()));
  const auto radii = linear_points(parse_grid(cfg.r_grid));
  for (double r : radii)
    if (r < g.R) throw ConfigError("r grid must lie outside the sphere (r >= R)");

  std::vector<sdtn::ExteriorPoint> points;
  points.reserve(radii.size() * grid.points.size());
  for (double r : radii)
    for (const auto& p : grid.points) points.push_back({r, p[0], p[1]});
  const auto values = sdtn::evaluate_exterior({g, kind}, points);

  std::string out = "# n=" + std::to_string(g.n) + " R=" + sdtn::format_double(g.R) +
                    " kind=" + cfg.kind + "\n";
  out += (g.n == 2) ? "r,theta,re_u,im_u\n" : "r,theta,phi,re_u,im_u\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    out += sdtn::format_double(points[i].r) + "," + sdtn::format_double(points[i].theta);
    if (g.n == 3) out += "," + sdtn::format_double(points[i].phi);
    out += "," + sdtn::format_double(values[i].real()) + "," +
           sdtn::format_double(values[i].imag()) + "\n";
  }
  // Neumann trace for cross-checking the boundary coupling
  out += "# neumann trace coefficients\n";
  out += "m,j,re,im\n";
  for (const auto& [idx, v] : sdtn::apply_dtn(kind, g).entries)
    out += std::to_string(idx.m) + "," + std::to_string(idx.j) + "," +
           sdtn::format_double(v.real()) + "," + sdtn::format_double(v.imag()) + "\n";
  emit(cfg.output, out);
  return 0;
}

// ------------------------------------------------------------- friedrichs ---

struct FriedrichsConfig {
  int dim = 3;
  double radius = 1.0;
  std::string s_grid = "0:50:26";
  int max_m = 10;
  std::string families = "poly,layer";
  bool observe_only = false;
  std::string output;
  std::string summary;
};

double sweep_max(int n, double R, const std::vector<cplx>& sgrid, int m_max,
                 const std::vector<sdtn::ModalFamily>& fams, bool observe_only,
                 std::vector<sdtn::SweepRow>* rows) {
  struct Task {
    int m;
    cplx s;
    sdtn::ModalFamily family;
  };
  std::vector<Task> tasks;
  for (int m = 0; m <= m_max; ++m)
    for (const cplx& s : sgrid)
      for (auto f : fams) tasks.push_back({m, s, f});
  std::vector<double> ratios(tasks.size());
  if (!observe_only && n < 3)
    throw ConfigError("the Friedrichs harness asserts bounds only for n >= 3; "
                      "pass --observe-only for n = 2");
  sdtn::tools::parallel_for(tasks.size(), [&](std::size_t i) {
    const auto v = sdtn::build_modal(sdtn::Mode(tasks[i].m, n), tasks[i].s, R, tasks[i].family);
    ratios[i] = sdtn::friedrichs_ratio(v);
  });
  double max_ratio = 0.0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    max_ratio = std::max(max_ratio, ratios[i]);
    if (rows)
      rows->push_back({n, R, tasks[i].m, tasks[i].family, tasks[i].s, ratios[i]});
  }
  return max_ratio;
}

int cmd_friedrichs(const FriedrichsConfig& cfg) {
  if (cfg.dim < 2) throw ConfigError("dimension must be at least 2");
  if (cfg.dim == 2 && !cfg.observe_only)
    throw ConfigError("the Friedrichs inequality is asserted for n >= 3 only; "
                      "use --observe-only to run n = 2 without assertions");
  if (!(cfg.radius > 0.0)) throw ConfigError("radius must be positive");
  if (cfg.max_m < 0) throw ConfigError("max-m must be nonnegative");

  std::vector<sdtn::ModalFamily> fams;
  if (cfg.families.find("poly") != std::string::npos)
    fams.push_back(sdtn::ModalFamily::polynomial);
  if (cfg.families.find("layer") != std::string::npos)
    fams.push_back(sdtn::ModalFamily::boundary_layer);
  if (fams.empty()) throw ConfigError("families must mention poly and/or layer");

  const GridSpec gs = parse_grid(cfg.s_grid);
  std::vector<cplx> sgrid;
  for (double x : linear_points(gs)) sgrid.push_back(cplx(x, 0.0));
  std::vector<cplx> refined;
  for (double x : linear_points({gs.start, gs.stop, 2 * gs.count - 1}))
    refined.push_back(cplx(x, 0.0));

  std::vector<sdtn::SweepRow> rows;
  const double coarse =
      sweep_max(cfg.dim, cfg.radius, sgrid, cfg.max_m, fams, cfg.observe_only, &rows);
  const double fine =
      sweep_max(cfg.dim, cfg.radius, refined, cfg.max_m, fams, cfg.observe_only, nullptr);
  const double stability = std::abs(fine - coarse) / std::max(coarse, 1e-300);

  std::string out = "n,R,m,family,re_s,im_s,ratio\n";
  for (const auto& row : rows)
    out += std::to_string(row.n) + "," + sdtn::format_double(row.R) + "," +
           std::to_string(row.m) + "," +
           (row.family == sdtn::ModalFamily::polynomial ? "poly" : "layer") + "," +
           sdtn::format_double(row.s.real()) + "," + sdtn::format_double(row.s.imag()) + "," +
           sdtn::format_double(row.ratio) + "\n";
  emit(cfg.output, out);

  nlohmann::json summary;
  summary["n"] = cfg.dim;
  summary["R"] = cfg.radius;
  summary["max_m"] = cfg.max_m;
  summary["families"] = cfg.families;
  summary["max_ratio"] = coarse;
  summary["refined_max_ratio"] = fine;
  summary["refinement_rel_change"] = stability;
  summary["observe_only"] = cfg.observe_only;
  const std::string summary_text = summary.dump(2) + "\n";
  if (!cfg.summary.empty())
    emit(cfg.summary, summary_text);
  else if (!cfg.output.empty())
    std::cout << summary_text;

  if (cfg.observe_only) return 0;
  return stability <= 0.05 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical Dirichlet-to-Neumann tables, bound sweeps, and exterior fields"};
  app.require_subcommand(1);

  CoeffsConfig coeffs;
  auto* sc_coeffs = app.add_subcommand("coeffs", "table of DtN coefficients z_{m,nu}(sR)");
  sc_coeffs->add_option("--dim", coeffs.dim, "ambient dimension n >= 2");
  sc_coeffs->add_option("--radius", coeffs.radius, "sphere radius R > 0");
  sc_coeffs->add_option("--wavenumber", coeffs.wavenumber, "wavenumber re,im with Re >= 0");
  sc_coeffs->add_option("--max-m", coeffs.max_m, "largest angular frequency");
  sc_coeffs->add_option("--output", coeffs.output, "output path (stdout when omitted)");
  sc_coeffs->add_option("--format", coeffs.format, "csv or json");

  BoundsConfig bounds;
  auto* sc_bounds = app.add_subcommand("bounds", "verify the coefficient and form bounds");
  sc_bounds->add_option("--dim", bounds.dims, "dimensions to sweep");
  sc_bounds->add_option("--max-m", bounds.max_m, "largest angular frequency");
  sc_bounds->add_option("--rho", bounds.rho, "log grid start:stop:count for |s|");
  sc_bounds->add_option("--tolerance", bounds.tolerance, "margin tolerance");
  sc_bounds->add_option("--corpus", bounds.corpus, "random test functions per dimension");
  sc_bounds->add_option("--seed", bounds.seed, "RNG seed");
  sc_bounds->add_flag("--modulus", bounds.modulus, "also run the Nicholson oracle comparison");
  sc_bounds->add_option("--inject-z-offset", bounds.inject_z_offset,
                        "testing hook: perturb every coefficient by this offset")
      ->group("");
  sc_bounds->add_option("--output", bounds.output, "output path (stdout when omitted)");

  SolveConfig solve;
  auto* sc_solve = app.add_subcommand("solve", "evaluate the exterior field for Dirichlet data");
  sc_solve->add_option("--input", solve.input, "coefficients file (.csv or .json)")->required();
  sc_solve->add_option("--kind", solve.kind, "helmholtz, laplace, or laplace-log");
  sc_solve->add_option("--wavenumber", solve.wavenumber, "wavenumber re,im (helmholtz)");
  sc_solve->add_option("--r-grid", solve.r_grid, "radial grid start:stop:count");
  sc_solve->add_option("--output", solve.output, "output path (stdout when omitted)");

  FriedrichsConfig fried;
  auto* sc_fried = app.add_subcommand("friedrichs", "Friedrichs-type inequality sweep");
  sc_fried->add_option("--dim", fried.dim, "ambient dimension");
  sc_fried->add_option("--radius", fried.radius, "ball radius");
  sc_fried->add_option("--s-grid", fried.s_grid, "real wavenumber grid start:stop:count");
  sc_fried->add_option("--max-m", fried.max_m, "largest angular frequency");
  sc_fried->add_option("--families", fried.families, "test families: poly,layer");
  sc_fried->add_flag("--observe-only", fried.observe_only, "record ratios without asserting");
  sc_fried->add_option("--output", fried.output, "sweep CSV path (stdout when omitted)");
  sc_fried->add_option("--summary", fried.summary, "summary JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sc_coeffs->parsed()) return cmd_coeffs(coeffs);
    if (sc_bounds->parsed()) return cmd_bounds(bounds);
    if (sc_solve->parsed()) return cmd_solve(solve);
    if (sc_fried->parsed()) return cmd_friedrichs(fried);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
