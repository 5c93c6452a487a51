#include "nhf/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nhf/config.hpp"
#include "nhf/diagnostics.hpp"
#include "nhf/divide.hpp"
#include "nhf/jsonio.hpp"
#include "nhf/normal_form.hpp"
#include "nhf/rng.hpp"
#include "nhf/transforms.hpp"

namespace nhf {

namespace {

SpectralField random_spectral(int K, Basis basis, Rng* rng) {
  SpectralField f(K, basis);
  for (auto& v : f.coeffs) v = rng->box();
  return f;
}

struct Check {
  std::string name;
  double measured = 0;
  double tolerance = 0;
  bool pass = false;
};

json checks_to_json(const std::vector<Check>& checks) {
  json arr = json::array();
  for (const auto& c : checks) {
    json row;
    row["name"] = c.name;
    row["measured"] = c.measured;
    row["tolerance"] = c.tolerance;
    row["pass"] = c.pass;
    arr.push_back(std::move(row));
  }
  return arr;
}

void add_check(std::vector<Check>* checks, const std::string& name,
               double measured, double tolerance) {
  checks->push_back(Check{name, measured, tolerance, measured <= tolerance});
}

double roundtrip_error(const BoundaryParams& h, int K, GridSpec grid,
                       Basis basis, int trials, Rng* rng) {
  double worst = 0;
  for (int t = 0; t < trials; ++t) {
    const SpectralField c = random_spectral(K, basis, rng);
    const GridField f = synthesize(c, h, grid);
    const SpectralField back =
        basis == Basis::L ? analyze(f, h, K) : analyze_star(f, h, K);
    worst = std::max(worst, spectral_linf_diff(c, back));
  }
  return worst;
}

// <u_xi, v_eta> depends only on d = xi - eta: the weights cancel and the
// quadrature mean of e^{2 pi i x.d} is exactly delta_{d,0} once |d_j| < n_j.
double biorthogonality_error(GridSpec grid, int K) {
  double worst = 0;
  for (long long d1 = -2 * K; d1 <= 2 * K; ++d1) {
    for (long long d2 = -2 * K; d2 <= 2 * K; ++d2) {
      long double acc_re = 0, acc_im = 0;
      for (int k1 = 0; k1 < grid.n1; ++k1) {
        const double ph1 = two_pi * static_cast<double>(d1) * grid.x1(k1);
        for (int k2 = 0; k2 < grid.n2; ++k2) {
          const double ph = ph1 + two_pi * static_cast<double>(d2) * grid.x2(k2);
          acc_re += std::cos(ph);
          acc_im += std::sin(ph);
        }
      }
      const double n = static_cast<double>(grid.size());
      const cplx mean(static_cast<double>(acc_re / n),
                      static_cast<double>(acc_im / n));
      const cplx expected = (d1 == 0 && d2 == 0) ? cplx(1, 0) : cplx(0, 0);
      worst = std::max(worst, std::abs(mean - expected));
    }
  }
  return worst;
}

double frame_envelope_overshoot(const FrameBounds& fb) {
  double over = 0;
  over = std::max(over, fb.env_lower - fb.lower);
  over = std::max(over, fb.upper - fb.env_upper);
  over = std::max(over, fb.env_lower_star - fb.lower_star);
  over = std::max(over, fb.upper_star - fb.env_upper_star);
  return std::max(over, 0.0);
}

std::vector<FreqIndex> sample_modes(int K) {
  std::vector<FreqIndex> modes{{0, 0}, {1, 0}, {0, 1}, {-1, 1}};
  modes.push_back({K, 0});
  modes.push_back({0, -K});
  modes.push_back({K, K});
  modes.push_back({-K, K / 2});
  return modes;
}

double laplacian_eigen_error(const BoundaryParams& h, int K, GridSpec grid) {
  double worst = 0;
  for (const FreqIndex& xi : sample_modes(K)) {
    SpectralField c(K, Basis::L);
    c.at(xi.xi1, xi.xi2) = 1.0;
    const GridField u = synthesize(c, h, grid);
    const GridField d11 =
        spectral_derivative(spectral_derivative(u, h, Axis::x1), h, Axis::x1);
    const GridField d22 =
        spectral_derivative(spectral_derivative(u, h, Axis::x2), h, Axis::x2);
    const cplx lambda = eigenvalue_2d(h, xi);
    double err = 0, scale = 0;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
      err = std::max(err, std::abs(d11.values[i] + d22.values[i] -
                                   lambda * u.values[i]));
      scale = std::max(scale, std::abs(lambda * u.values[i]));
    }
    worst = std::max(worst, err / std::max(scale, 1.0));
  }
  return worst;
}

double derivative_factor_error(const BoundaryParams& h, int K, GridSpec grid) {
  double worst = 0;
  for (const FreqIndex& xi : sample_modes(K)) {
    SpectralField c(K, Basis::L);
    c.at(xi.xi1, xi.xi2) = 1.0;
    const GridField u = synthesize(c, h, grid);
    for (Axis ax : {Axis::x1, Axis::x2}) {
      const GridField du = spectral_derivative(u, h, ax);
      const double lh = ax == Axis::x1 ? std::log(h.h1) : std::log(h.h2);
      const long long f = ax == Axis::x1 ? xi.xi1 : xi.xi2;
      const cplx factor(lh, two_pi * static_cast<double>(f));
      double err = 0, scale = 0;
      for (std::size_t i = 0; i < u.values.size(); ++i) {
        err = std::max(err, std::abs(du.values[i] - factor * u.values[i]));
        scale = std::max(scale, std::max(1.0, std::abs(factor * u.values[i])));
      }
      worst = std::max(worst, err / scale);
    }
  }
  return worst;
}

double intertwine_roundoff(const BoundaryParams& h, int K, GridSpec grid,
                           Rng* rng) {
  CoefficientFunction a;
  a.mean = 1.0;
  a.modes[1] = cplx(0.1, 0.0);
  a.modes[-1] = cplx(0.1, 0.0);
  const int cap = std::min(grid.n1 / 8, grid.n2 / 2 - 2);
  const int Kw = std::max(2, std::min(K, cap));
  const SpectralField c = random_spectral(Kw, Basis::L, rng);
  const GridField w = synthesize(c, h, grid);
  return intertwine_residual(a, h, w).residual;
}

}  // namespace

CommandOutcome run_validate(const json& cfg) {
  cfg_check_keys(cfg, {"command", "h1", "h2", "K", "n", "n1", "n2", "seed",
                       "trials", "out"});
  const BoundaryParams h = cfg_h(cfg);
  const int K = cfg_K(cfg);
  const GridSpec grid = cfg_grid(cfg, K);
  require(grid.n1 > 2 * K && grid.n2 > 2 * K, Status::parse,
          "grid must satisfy n > 2K in both axes");
  const auto seed = static_cast<std::uint64_t>(
      cfg_int(cfg, "seed", static_cast<long long>(kDefaultSeed)));
  const int trials = static_cast<int>(cfg_int(cfg, "trials", 100));
  require(trials >= 1 && trials <= 100000, Status::parse,
          "trials must be in [1, 100000]");

  Rng rng(seed);
  std::vector<Check> checks;
  add_check(&checks, "round-trip-L", roundtrip_error(h, K, grid, Basis::L, 5, &rng),
            1e-9);
  add_check(&checks, "round-trip-Lstar",
            roundtrip_error(h, K, grid, Basis::Lstar, 5, &rng), 1e-9);
  add_check(&checks, "biorthogonality", biorthogonality_error(grid, K), 1e-10);
  const FrameBounds fb = frame_bounds(h, trials, grid, K, seed);
  add_check(&checks, "frame-envelope", frame_envelope_overshoot(fb), 1e-9);
  add_check(&checks, "laplacian-eigenvalue", laplacian_eigen_error(h, K, grid),
            1e-8);
  add_check(&checks, "derivative-factor", derivative_factor_error(h, K, grid),
            1e-8);
  add_check(&checks, "intertwining-roundoff", intertwine_roundoff(h, K, grid, &rng),
            1e-8);

  bool all = true;
  for (const auto& c : checks) all = all && c.pass;

  CommandOutcome out;
  out.status = all ? Status::ok : Status::invariant;
  json& j = out.report;
  j["command"] = "validate";
  j["h"] = json::array({h.h1, h.h2});
  j["K"] = K;
  j["n"] = json::array({grid.n1, grid.n2});
  j["seed"] = seed;
  j["trials"] = trials;
  json fbj;
  fbj["lower"] = fb.lower;
  fbj["upper"] = fb.upper;
  fbj["lower_star"] = fb.lower_star;
  fbj["upper_star"] = fb.upper_star;
  fbj["envelope"] = json::array({fb.env_lower, fb.env_upper});
  fbj["envelope_star"] = json::array({fb.env_lower_star, fb.env_upper_star});
  j["frame_bounds"] = std::move(fbj);
  j["checks"] = checks_to_json(checks);
  j["all_pass"] = all;
  const std::string out_path = cfg_str(cfg, "out", "");
  if (!out_path.empty()) write_json_file(out_path, j);
  return out;
}

CommandOutcome run_diagnose(const json& cfg) {
  cfg_check_keys(cfg, {"command", "h1", "h2", "c_re", "c_im", "c_num", "c_den",
                       "qmax", "threshold", "tol", "exact_relation", "radii",
                       "zero_scan_radius", "out"});
  const BoundaryParams h = cfg_h(cfg);
  const cplx c = cfg_c(cfg);
  ClassifyOptions opts;
  opts.q_max = cfg_int(cfg, "qmax", opts.q_max);
  opts.threshold = cfg_num(cfg, "threshold", opts.threshold);
  opts.relation_tol = cfg_num(cfg, "tol", opts.relation_tol);
  opts.exact_relation = cfg_bool(cfg, "exact_relation", false);
  opts.radii = cfg_radii(cfg, opts.radii);
  opts.zero_scan_radius = cfg_int(cfg, "zero_scan_radius", opts.zero_scan_radius);
  opts.c_num = cfg_str(cfg, "c_num", "");
  opts.c_den = cfg_str(cfg, "c_den", "");
  opts.has_exact_c = !opts.c_num.empty() && !opts.c_den.empty();

  const DiagnosisReport rep = classify_constant_P(c, h, opts);
  CommandOutcome out;
  out.report = rep.to_json();
  out.report["command"] = "diagnose";
  out.report["h"] = json::array({h.h1, h.h2});
  out.report["c"] = json::array({c.real(), c.imag()});
  const std::string out_path = cfg_str(cfg, "out", "");
  if (!out_path.empty()) write_text_file(out_path, rep.curve.to_csv());
  return out;
}

CommandOutcome run_solve(const json& cfg) {
  cfg_check_keys(cfg, {"command", "h1", "h2", "c_re", "c_im", "K", "n", "n1",
                       "n2", "input", "out", "out_grid", "tol", "growth_guard",
                       "operator"});
  const BoundaryParams h = cfg_h(cfg);
  const int K = cfg_K(cfg);
  const std::string input = cfg_str(cfg, "input", "");
  require(!input.empty(), Status::parse, "solve needs --input (right-hand side)");

  SpectralField fhat;
  if (input.size() >= 4 && input.substr(input.size() - 4) == ".csv") {
    const GridField f = read_grid_csv(input);
    fhat = analyze(f, h, K);
  } else {
    fhat = read_spectral_json(input);
  }

  const std::string op_sh = cfg_str(cfg, "operator", "");
  const Symbol sigma = op_sh.empty()
                           ? symbol_constant_P(cfg_c(cfg), h)
                           : diff_symbol(OperatorSpec::from_shorthand(op_sh), h);

  SolveOptions sopts;
  sopts.zero_tol_rel = cfg_num(cfg, "tol", sopts.zero_tol_rel);
  sopts.growth_guard = cfg_opt_num(cfg, "growth_guard");
  sopts.h = h;
  const SolveResult sr = solve(sigma, fhat, sopts);
  const double residual = division_residual(sigma, sr.what, fhat);

  CommandOutcome out;
  json& j = out.report;
  j["command"] = "solve";
  j["h"] = json::array({h.h1, h.h2});
  j["K"] = fhat.K;
  j["admissibility"] = sr.adm.to_json();
  j["residual"] = residual;
  j["solution_l2"] = spectral_l2(sr.what);
  j["growth_guard_tripped"] = sr.growth_guard_tripped;
  j["guard_witness"] = sr.guard_witness;

  const std::string out_path = cfg_str(cfg, "out", "");
  if (!out_path.empty()) write_spectral_json(sr.what, out_path);
  const std::string out_grid = cfg_str(cfg, "out_grid", "");
  if (!out_grid.empty()) {
    const GridSpec grid = cfg_grid(cfg, fhat.K);
    require(grid.n1 > 2 * fhat.K && grid.n2 > 2 * fhat.K, Status::parse,
            "grid must satisfy n > 2K in both axes");
    write_grid_csv(synthesize(sr.what, h, grid), out_grid);
  }
  return out;
}

GridField finite_smoothness_probe(GridSpec spec) {
  spec.check();
  const auto beta = [](double t) {
    const double u = t - std::floor(t);
    const double b5 =
        ((((u - 2.5) * u + 5.0 / 3.0) * u) * u - 1.0 / 6.0) * u;
    const double scale = std::pow(two_pi, 5) / 120.0;
    return b5 * scale;
  };
  GridField w(spec);
  std::vector<double> bx1(static_cast<std::size_t>(spec.n1));
  std::vector<double> bx2(static_cast<std::size_t>(spec.n2));
  for (int k = 0; k < spec.n1; ++k) bx1[static_cast<std::size_t>(k)] = beta(spec.x1(k));
  for (int k = 0; k < spec.n2; ++k) bx2[static_cast<std::size_t>(k)] = beta(spec.x2(k));
  for (int k1 = 0; k1 < spec.n1; ++k1) {
    for (int k2 = 0; k2 < spec.n2; ++k2) {
      w.at(k1, k2) = bx1[static_cast<std::size_t>(k1)] *
                     bx2[static_cast<std::size_t>(k2)];
    }
  }
  return w;
}

namespace {

GridField normalform_probe(const std::string& probe, GridSpec spec, int K,
                           const BoundaryParams& h, std::uint64_t seed) {
  if (probe == "finite-smoothness") return finite_smoothness_probe(spec);
  if (probe == "band-limited") {
    Rng rng(seed);
    const int Kw = std::max(2, std::min(K, std::min(spec.n1, spec.n2) / 8));
    return synthesize(random_spectral(Kw, Basis::L, &rng), h, spec);
  }
  throw Error(Status::parse,
              "unknown probe \"" + probe +
                  "\" (expected finite-smoothness or band-limited)");
}

CoefficientFunction load_coefficient(const json& cfg) {
  const std::string csv = cfg_str(cfg, "a_csv", "");
  if (!csv.empty()) {
    const std::string text = read_text_file(csv);
    std::vector<cplx> samples;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      std::size_t pos = 0;
      const double v = [&] {
        try {
          return std::stod(line, &pos);
        } catch (const std::exception&) {
          throw Error(Status::parse, "bad coefficient sample at line " +
                                         std::to_string(lineno));
        }
      }();
      samples.push_back(cplx(v, 0.0));
    }
    return CoefficientFunction::from_samples(samples);
  }
  require(cfg.contains("a"), Status::parse,
          "normalform needs the coefficient series \"a\" or \"a_csv\"");
  return CoefficientFunction::from_json(cfg.at("a"));
}

}  // namespace

CommandOutcome run_normalform(const json& cfg) {
  cfg_check_keys(cfg, {"command", "h1", "h2", "K", "n", "n1", "n2", "a", "a_csv",
                       "probe", "input", "out", "out_grid", "tol", "qmax",
                       "threshold", "seed", "growth_guard"});
  const BoundaryParams h = cfg_h(cfg);
  const int K = cfg_K(cfg);
  const GridSpec grid = cfg_grid(cfg, K);
  require(grid.n1 > 2 * K && grid.n2 > 2 * K, Status::parse,
          "grid must satisfy n > 2K in both axes");
  const auto seed = static_cast<std::uint64_t>(
      cfg_int(cfg, "seed", static_cast<long long>(kDefaultSeed)));
  const CoefficientFunction a = load_coefficient(cfg);
  const std::string probe = cfg_str(cfg, "probe", "finite-smoothness");

  const GridSpec fine{2 * grid.n1, 2 * grid.n2};
  const GridField w_coarse = normalform_probe(probe, grid, K, h, seed);
  const GridField w_fine = normalform_probe(probe, fine, K, h, seed);
  const IntertwineReport r1 = intertwine_residual(a, h, w_coarse);
  const IntertwineReport r2 = intertwine_residual(a, h, w_fine);
  const bool gate = (r2.residual <= r1.residual / 4.0 + 1e-12) ||
                    (r2.residual < 1e-9);

  const ReducedForm red = reduce(a);

  CommandOutcome out;
  json& j = out.report;
  j["command"] = "normalform";
  j["h"] = json::array({h.h1, h.h2});
  j["K"] = K;
  j["n"] = json::array({grid.n1, grid.n2});
  j["coefficient"] = a.to_json();
  j["reduced"] = red.to_json();
  j["probe"] = probe;
  j["residual_coarse"] = r1.to_json();
  j["residual_fine"] = r2.to_json();
  j["ratio"] = r2.residual > 0 ? r1.residual / r2.residual : 0.0;
  j["convergence_gate"] = gate;

  if (a.mean != 0.0) {
    ClassifyOptions copts;
    copts.q_max = cfg_int(cfg, "qmax", copts.q_max);
    copts.threshold = cfg_num(cfg, "threshold", copts.threshold);
    j["diagnosis"] = classify_constant_P(cplx(a.mean, 0.0), h, copts).to_json();
  } else {
    j["diagnosis"] = nullptr;
  }

  const std::string input = cfg_str(cfg, "input", "");
  if (!input.empty()) {
    const GridField f = read_grid_csv(input);
    VariableSolveOptions vopts;
    vopts.K = K;
    vopts.zero_tol_rel = cfg_num(cfg, "tol", vopts.zero_tol_rel);
    vopts.growth_guard = cfg_opt_num(cfg, "growth_guard");
    const VariableSolve vs = solve_variable(a, h, f, vopts);
    json sj;
    sj["residual"] = vs.residual;
    sj["admissibility"] = vs.inner.adm.to_json();
    sj["growth_guard_tripped"] = vs.inner.growth_guard_tripped;
    j["solve"] = std::move(sj);
    const std::string out_grid = cfg_str(cfg, "out_grid", "");
    if (!out_grid.empty()) write_grid_csv(vs.w, out_grid);
  }

  const std::string out_path = cfg_str(cfg, "out", "");
  if (!out_path.empty()) write_json_file(out_path, j);

  out.status = gate ? Status::ok : Status::resolution;
  return out;
}

CommandOutcome run_transform(const json& cfg) {
  cfg_check_keys(cfg, {"command", "h1", "h2", "K", "n", "n1", "n2", "basis",
                       "inverse", "input", "out"});
  const BoundaryParams h = cfg_h(cfg);
  const int K = cfg_K(cfg);
  const Basis basis = basis_from_name(cfg_str(cfg, "basis", "L"));
  const bool inverse = cfg_bool(cfg, "inverse", false);
  const std::string input = cfg_str(cfg, "input", "");
  require(!input.empty(), Status::parse, "transform needs --input");
  const std::string out_path = cfg_str(cfg, "out", "");

  CommandOutcome out;
  json& j = out.report;
  j["command"] = "transform";
  j["h"] = json::array({h.h1, h.h2});
  j["basis"] = basis_name(basis);
  if (!inverse) {
    const GridField f = read_grid_csv(input);
    const SpectralField c =
        basis == Basis::L ? analyze(f, h, K) : analyze_star(f, h, K);
    j["direction"] = "forward";
    j["K"] = K;
    j["n"] = json::array({f.spec.n1, f.spec.n2});
    j["coeff_l2"] = spectral_l2(c);
    if (!out_path.empty()) write_spectral_json(c, out_path);
  } else {
    const SpectralField c = read_spectral_json(input);
    const GridSpec grid = cfg_grid(cfg, c.K);
    require(grid.n1 > 2 * c.K && grid.n2 > 2 * c.K, Status::parse,
            "grid must satisfy n > 2K in both axes");
    const GridField f = synthesize(c, h, grid);
    j["direction"] = "inverse";
    j["K"] = c.K;
    j["n"] = json::array({grid.n1, grid.n2});
    j["grid_l2"] = grid_l2(f);
    if (!out_path.empty()) write_grid_csv(f, out_path);
  }
  return out;
}

CommandOutcome run_command(const std::string& name, const json& cfg) {
  if (name == "validate") return run_validate(cfg);
  if (name == "diagnose") return run_diagnose(cfg);
  if (name == "solve") return run_solve(cfg);
  if (name == "normalform") return run_normalform(cfg);
  if (name == "transform") return run_transform(cfg);
  throw Error(Status::parse, "unknown command \"" + name + "\"");
}

}  // namespace nhf
