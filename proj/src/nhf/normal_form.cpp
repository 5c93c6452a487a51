#include "nhf/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "nhf/dft.hpp"

namespace nhf {

namespace {

void check_real_symmetry(std::map<long long, cplx>* modes) {
  double scale = 0;
  for (const auto& [k, v] : *modes) scale = std::max(scale, std::abs(v));
  const double tol = 1e-12 * std::max(scale, 1.0);
  std::vector<long long> keys;
  for (const auto& [k, v] : *modes) keys.push_back(k);
  for (long long k : keys) {
    const auto it = modes->find(-k);
    if (it == modes->end()) {
      (*modes)[-k] = std::conj(modes->at(k));
    } else {
      require(std::abs(it->second - std::conj(modes->at(k))) <= tol,
              Status::parse, "coefficient series is not real");
    }
  }
}

}  // namespace

CoefficientFunction CoefficientFunction::from_json(const json& j) {
  require(j.is_object(), Status::parse, "coefficient series must be an object");
  CoefficientFunction a;
  if (j.contains("mean")) {
    require(j["mean"].is_number(), Status::parse, "mean must be a number");
    a.mean = j["mean"].get<double>();
  }
  if (j.contains("modes")) {
    require(j["modes"].is_array(), Status::parse, "modes must be an array");
    for (const auto& row : j["modes"]) {
      require(row.is_object() && row.contains("k"), Status::parse,
              "each mode needs an integer k");
      require(row["k"].is_number_integer(), Status::parse,
              "mode index k must be an integer");
      const long long k = row["k"].get<long long>();
      require(k != 0, Status::parse,
              "mode k = 0 is the mean; give it as \"mean\"");
      require(std::llabs(k) <= (1 << 20), Status::parse,
              "mode index out of range");
      const double re = row.value("re", 0.0);
      const double im = row.value("im", 0.0);
      require(a.modes.find(k) == a.modes.end(), Status::parse,
              "duplicate mode index");
      a.modes[k] = cplx(re, im);
    }
  }
  check_real_symmetry(&a.modes);
  return a;
}

CoefficientFunction CoefficientFunction::from_samples(
    const std::vector<cplx>& samples) {
  const int n = static_cast<int>(samples.size());
  require(n >= 4, Status::parse, "coefficient sampling needs at least 4 points");
  double scale = 0, imag_max = 0;
  for (const cplx& v : samples) {
    scale = std::max(scale, std::abs(v));
    imag_max = std::max(imag_max, std::abs(v.imag()));
  }
  require(imag_max <= 1e-12 * std::max(scale, 1.0), Status::parse,
          "coefficient samples must be real");
  std::vector<cplx> work(samples);
  dft1_inplace(work, -1);
  CoefficientFunction a;
  a.mean = work[0].real() / n;
  const long long kmax = (n % 2 == 0) ? n / 2 - 1 : (n - 1) / 2;
  const double floor = 1e-14 * std::max(scale, 1.0);
  for (long long k = 1; k <= kmax; ++k) {
    // Average the two bins so conjugate symmetry is exact.
    const cplx plus = work[static_cast<std::size_t>(k)] / static_cast<double>(n);
    const cplx minus =
        work[static_cast<std::size_t>(n - k)] / static_cast<double>(n);
    const cplx ak = 0.5 * (plus + std::conj(minus));
    if (std::abs(ak) <= floor) continue;
    a.modes[k] = ak;
    a.modes[-k] = std::conj(ak);
  }
  return a;
}

CoefficientFunction CoefficientFunction::from_samples(
    const std::vector<double>& samples) {
  std::vector<cplx> c(samples.begin(), samples.end());
  return from_samples(c);
}

long long CoefficientFunction::max_mode() const {
  long long m = 0;
  for (const auto& [k, v] : modes) m = std::max(m, std::llabs(k));
  return m;
}

std::vector<double> CoefficientFunction::sample(int n) const {
  require(n >= 4, Status::parse, "sampling grid too small");
  require(static_cast<long long>(n) > 2 * max_mode(), Status::resolution,
          "sampling grid cannot resolve the coefficient series");
  std::vector<double> out(static_cast<std::size_t>(n), mean);
  for (const auto& [k, v] : modes) {
    if (k <= 0) continue;  // pair each k > 0 with its conjugate mirror
    for (int r = 0; r < n; ++r) {
      const double ph = two_pi * static_cast<double>(k) * r / n;
      out[static_cast<std::size_t>(r)] +=
          2.0 * (v.real() * std::cos(ph) - v.imag() * std::sin(ph));
    }
  }
  return out;
}

std::vector<double> CoefficientFunction::sample_primitive(int n) const {
  require(n >= 4, Status::parse, "sampling grid too small");
  require(static_cast<long long>(n) > 2 * max_mode(), Status::resolution,
          "sampling grid cannot resolve the coefficient series");
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (const auto& [k, v] : modes) {
    if (k <= 0) continue;
    const cplx Ak = v / cplx(0.0, two_pi * static_cast<double>(k));
    for (int r = 0; r < n; ++r) {
      const double ph = two_pi * static_cast<double>(k) * r / n;
      const cplx e(std::cos(ph) - 1.0, std::sin(ph));
      out[static_cast<std::size_t>(r)] += 2.0 * (Ak * e).real();
    }
  }
  return out;
}

json CoefficientFunction::to_json() const {
  json j;
  j["mean"] = mean;
  json arr = json::array();
  for (const auto& [k, v] : modes) {
    json row;
    row["k"] = k;
    row["re"] = v.real();
    row["im"] = v.imag();
    arr.push_back(std::move(row));
  }
  j["modes"] = std::move(arr);
  return j;
}

PrimitiveData mean_and_primitive(const CoefficientFunction& a, int n) {
  return PrimitiveData{a.mean, a.sample_primitive(n)};
}

GridField psi_apply(const CoefficientFunction& a, const BoundaryParams& h,
                    const GridField& w, PsiDirection dir, const PsiOptions& opts) {
  h.check();
  w.check();
  const int n1 = w.spec.n1;
  const int n2 = w.spec.n2;
  const int K2 = (n2 % 2 == 0) ? n2 / 2 - 1 : (n2 - 1) / 2;
  PartialField p = partial_analyze(w, h, Axis::x2, K2, Basis::L);
  const std::vector<double> A = a.sample_primitive(n1);
  const double sign = (dir == PsiDirection::forward) ? 1.0 : -1.0;
  const double lh2 = std::log(h.h2);
  for (int r = 0; r < n1; ++r) {
    const double sA = sign * A[static_cast<std::size_t>(r)];
    for (long long q = -K2; q <= K2; ++q) {
      // exp((log h2 + 2 pi i q) * s * A(x1)): the shear in the weighted basis
      const double mag = std::exp(lh2 * sA);
      const double ph = two_pi * static_cast<double>(q) * sA;
      p.at(r, q) *= cplx(mag * std::cos(ph), mag * std::sin(ph));
    }
  }
  GridField out = partial_synthesize(p, h);
  if (opts.check_aliasing) {
    const double mass = top_octave_mass(out, h, Axis::x1);
    if (mass > opts.top_octave_tol) {
      json details;
      details["top_octave_mass"] = mass;
      details["tolerance"] = opts.top_octave_tol;
      throw Error(Status::resolution,
                  "shear pushed energy into the top x1 octave; refine the x1 grid",
                  details);
    }
  }
  return out;
}

GridField apply_variable_P(const CoefficientFunction& a, const BoundaryParams& h,
                           const GridField& w) {
  const GridField d1 = spectral_derivative(w, h, Axis::x1);
  const GridField d2 = spectral_derivative(w, h, Axis::x2);
  const std::vector<double> as = a.sample(w.spec.n1);
  GridField out(w.spec);
  for (int r = 0; r < w.spec.n1; ++r) {
    const double ar = as[static_cast<std::size_t>(r)];
    for (int c = 0; c < w.spec.n2; ++c) {
      out.at(r, c) = d1.at(r, c) + ar * d2.at(r, c);
    }
  }
  return out;
}

IntertwineReport intertwine_residual(const CoefficientFunction& a,
                                     const BoundaryParams& h, const GridField& w,
                                     const PsiOptions& opts) {
  const GridField pw = apply_variable_P(a, h, w);
  const GridField lhs = psi_apply(a, h, pw, PsiDirection::forward, opts);
  const GridField psiw = psi_apply(a, h, w, PsiDirection::forward, opts);
  const GridField d1 = spectral_derivative(psiw, h, Axis::x1);
  const GridField d2 = spectral_derivative(psiw, h, Axis::x2);
  GridField rhs(psiw.spec);
  for (std::size_t i = 0; i < rhs.values.size(); ++i) {
    rhs.values[i] = d1.values[i] + a.mean * d2.values[i];
  }
  GridField diff(lhs.spec);
  for (std::size_t i = 0; i < diff.values.size(); ++i) {
    diff.values[i] = lhs.values[i] - rhs.values[i];
  }
  IntertwineReport rep;
  rep.residual = grid_l2(diff);
  rep.lhs_norm = grid_l2(lhs);
  rep.rhs_norm = grid_l2(rhs);
  return rep;
}

json IntertwineReport::to_json() const {
  json j;
  j["residual"] = residual;
  j["lhs_norm"] = lhs_norm;
  j["rhs_norm"] = rhs_norm;
  return j;
}

ReducedForm reduce(const CoefficientFunction& a) {
  ReducedForm r;
  r.mean = a.mean;
  if (a.mean != 0.0) {
    r.op = OperatorSpec::first_order(cplx(a.mean, 0.0));
  } else {
    r.op.terms.push_back(OpTerm{1, 0, cplx(1.0, 0.0)});
  }
  return r;
}

json ReducedForm::to_json() const {
  json j;
  j["mean"] = mean;
  j["operator"] = op.to_json();
  return j;
}

VariableSolve solve_variable(const CoefficientFunction& a, const BoundaryParams& h,
                             const GridField& f, const VariableSolveOptions& opts) {
  h.check();
  f.check();
  require(opts.K >= 1, Status::parse, "truncation K must be positive");
  const GridField fpsi = psi_apply(a, h, f, PsiDirection::forward, opts.psi);
  const SpectralField fhat = analyze(fpsi, h, opts.K);

  const ReducedForm red = reduce(a);
  const Symbol sigma0 = (a.mean != 0.0)
                            ? symbol_constant_P(cplx(a.mean, 0.0), h)
                            : diff_symbol(red.op, h);
  SolveOptions sopts;
  sopts.zero_tol_rel = opts.zero_tol_rel;
  sopts.growth_guard = opts.growth_guard;
  sopts.h = h;
  SolveResult inner = solve(sigma0, fhat, sopts);

  const GridField wpsi = synthesize(inner.what, h, f.spec);
  GridField w = psi_apply(a, h, wpsi, PsiDirection::inverse, opts.psi);

  const GridField pw = apply_variable_P(a, h, w);
  GridField diff(f.spec);
  for (std::size_t i = 0; i < diff.values.size(); ++i) {
    diff.values[i] = pw.values[i] - f.values[i];
  }
  VariableSolve out{std::move(w), std::move(inner), grid_l2(diff)};
  return out;
}

}  // namespace nhf
