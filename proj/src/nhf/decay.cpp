#include "nhf/decay.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace nhf {

json DecayReport::to_json() const {
  json j;
  j["class"] = klass;
  j["fitted_exponent"] = fitted_exponent;
  j["residual"] = residual;
  j["tail_exponent"] = tail_exponent;
  j["exceeds_tested_growth"] = exceeds_tested_growth;
  j["shells_used"] = shells_used;
  j["empty_tail_shells"] = empty_tail_shells;
  return j;
}

namespace {

struct Fit {
  double slope = 0, intercept = 0, rms = 0;
};

Fit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double d = n * sxx - sx * sx;
  Fit f;
  f.slope = d != 0.0 ? (n * sxy - sx * sy) / d : 0.0;
  f.intercept = (sy - f.slope * sx) / n;
  double ss = 0;
  for (size_t i = 0; i < n; ++i) {
    const double r = y[i] - (f.slope * x[i] + f.intercept);
    ss += r * r;
  }
  f.rms = std::sqrt(ss / n);
  return f;
}

}  // namespace

DecayReport decay_classify(const SpectralField& c, const BoundaryParams& h,
                           const DecayOptions& opts) {
  c.check();
  h.check();
  DecayReport rep;

  double cmax = 0.0;
  for (const cplx& z : c.coeffs) cmax = std::max(cmax, std::abs(z));
  // Shell index of the largest weight the truncation can reach.
  const double wmax = weight_2d(h, {c.K, c.K});
  const int s_edge = static_cast<int>(std::floor(std::log2(wmax)));
  require(s_edge >= 2, Status::parse,
          "decay classification needs a lattice spanning at least 3 dyadic shells");

  if (cmax == 0.0) {  // identically zero: decays faster than anything tested
    rep.klass = "rapid";
    rep.fitted_exponent = -static_cast<double>(opts.n_max);
    return rep;
  }
  const double floor_abs = opts.floor_rel * cmax;

  // Per-shell maximum and the weight at which it is attained.
  std::map<int, std::pair<double, double>> shells;  // s -> (max|c|, <xi> at argmax)
  for (size_t i = 0; i < c.coeffs.size(); ++i) {
    const double a = std::abs(c.coeffs[i]);
    if (a <= floor_abs) continue;
    const double w = weight_2d(h, c.freq_of(i));
    const int s = static_cast<int>(std::floor(std::log2(w)));
    auto it = shells.find(s);
    if (it == shells.end() || a > it->second.first) shells[s] = {a, w};
  }

  rep.shells_used = static_cast<int>(shells.size());
  const int s_last = shells.rbegin()->first;
  rep.empty_tail_shells = std::max(0, s_edge - s_last);

  if (rep.empty_tail_shells >= 2) {  // support dies well inside the lattice
    rep.klass = "rapid";
    rep.fitted_exponent = -static_cast<double>(opts.n_max);
    return rep;
  }

  if (shells.size() < 3) {  // support too thin near the edge to fit
    rep.klass = "indeterminate";
    return rep;
  }

  std::vector<double> lx, ly;
  for (const auto& [s, mv] : shells) {
    lx.push_back(std::log(mv.second));
    ly.push_back(std::log(mv.first));
  }
  const Fit fit = least_squares(lx, ly);
  rep.fitted_exponent = fit.slope;
  rep.residual = fit.rms;

  const std::vector<double> tx(lx.end() - 3, lx.end()), ty(ly.end() - 3, ly.end());
  rep.tail_exponent = least_squares(tx, ty).slope;

  const bool rapid = fit.slope <= -static_cast<double>(opts.n_max) &&
                     rep.tail_exponent <= -static_cast<double>(opts.n_max);
  const bool moderate = !rapid && fit.rms <= opts.resid_tol &&
                        std::abs(fit.slope) <= opts.e_max;
  rep.exceeds_tested_growth =
      fit.slope > 0.0 && (fit.slope > opts.e_max ||
                          (fit.rms > opts.resid_tol && rep.tail_exponent > fit.slope));
  rep.klass = rapid ? "rapid" : moderate ? "moderate" : "indeterminate";
  return rep;
}

}  // namespace nhf
