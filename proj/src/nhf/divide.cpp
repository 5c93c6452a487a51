#include "nhf/divide.hpp"

#include <algorithm>
#include <cmath>

#include "nhf/eigen.hpp"

namespace nhf {

namespace {

double max_abs_sigma_on(const Symbol& s, int K) {
  double m = 0;
  for (long long xi1 = -K; xi1 <= K; ++xi1) {
    for (long long xi2 = -K; xi2 <= K; ++xi2) {
      m = std::max(m, std::abs(s(FreqIndex{xi1, xi2})));
    }
  }
  return m;
}

}  // namespace

AdmissibilityReport admissibility(const SpectralField& fhat, const Symbol& s,
                                  const SolveOptions& opts) {
  fhat.check();
  require(opts.zero_tol_rel >= 0, Status::parse,
          "zero tolerance must be nonnegative");
  AdmissibilityReport rep;
  const int K = fhat.K;
  rep.max_abs_sigma = max_abs_sigma_on(s, K);
  rep.zero_tol_abs = opts.zero_tol_rel * rep.max_abs_sigma;
  for (long long xi1 = -K; xi1 <= K; ++xi1) {
    for (long long xi2 = -K; xi2 <= K; ++xi2) {
      const FreqIndex xi{xi1, xi2};
      const double as = std::abs(s(xi));
      if (as > rep.zero_tol_abs) continue;
      ++rep.zero_count;
      const double af = std::abs(fhat.at(xi1, xi2));
      if (af > rep.zero_tol_abs) {
        rep.violations.push_back(DivisionViolation{xi, as, af});
      }
    }
  }
  rep.admissible = rep.violations.empty();
  return rep;
}

json AdmissibilityReport::to_json() const {
  json j;
  j["admissible"] = admissible;
  j["zero_tol_abs"] = zero_tol_abs;
  j["max_abs_sigma"] = max_abs_sigma;
  j["zero_count"] = zero_count;
  json viol = json::array();
  const std::size_t cap = 64;
  for (std::size_t i = 0; i < violations.size() && i < cap; ++i) {
    const auto& v = violations[i];
    json row;
    row["xi1"] = v.xi.xi1;
    row["xi2"] = v.xi.xi2;
    row["abs_sigma"] = v.abs_sigma;
    row["abs_coeff"] = v.abs_coeff;
    viol.push_back(std::move(row));
  }
  j["violations"] = std::move(viol);
  j["violation_total"] = violations.size();
  return j;
}

SolveResult solve(const Symbol& s, const SpectralField& fhat,
                  const SolveOptions& opts) {
  AdmissibilityReport adm = admissibility(fhat, s, opts);
  if (!adm.admissible) {
    throw Error(Status::inadmissible,
                "right-hand side does not vanish on the symbol's near-zero set",
                adm.to_json());
  }
  const int K = fhat.K;
  SolveResult res{SpectralField(K, fhat.basis), std::move(adm), false,
                  json(nullptr)};
  double worst_excess = 0;
  for (long long xi1 = -K; xi1 <= K; ++xi1) {
    for (long long xi2 = -K; xi2 <= K; ++xi2) {
      const FreqIndex xi{xi1, xi2};
      const cplx sv = s(xi);
      const double as = std::abs(sv);
      cplx w = 0;
      if (as > res.adm.zero_tol_abs) {
        w = fhat.at(xi1, xi2) / sv;
      }
      res.what.at(xi1, xi2) = w;
      if (opts.growth_guard.has_value()) {
        const double cap = std::pow(weight_2d(opts.h, xi), *opts.growth_guard);
        const double excess = std::abs(w) / cap;
        if (excess > 1.0 && excess > worst_excess) {
          worst_excess = excess;
          res.growth_guard_tripped = true;
          json w_json;
          w_json["xi1"] = xi1;
          w_json["xi2"] = xi2;
          w_json["abs_coeff"] = std::abs(w);
          w_json["cap"] = cap;
          res.guard_witness = std::move(w_json);
        }
      }
    }
  }
  return res;
}

double division_residual(const Symbol& s, const SpectralField& what,
                         const SpectralField& fhat) {
  require(what.K == fhat.K, Status::parse,
          "residual needs matching truncations");
  double m = 0;
  const int K = fhat.K;
  for (long long xi1 = -K; xi1 <= K; ++xi1) {
    for (long long xi2 = -K; xi2 <= K; ++xi2) {
      const FreqIndex xi{xi1, xi2};
      m = std::max(m, std::abs(s(xi) * what.at(xi1, xi2) - fhat.at(xi1, xi2)));
    }
  }
  return m;
}

}  // namespace nhf
