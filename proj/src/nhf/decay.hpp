#pragma once

#include <vector>

#include "nhf/common.hpp"
#include "nhf/eigen.hpp"
#include "nhf/spectral.hpp"

namespace nhf {

struct DecayOptions {
  int n_max = 8;          // deepest polynomial decay order tested for "rapid"
  double e_max = 20.0;    // largest |exponent| a moderate power fit may report
  double resid_tol = 0.75;   // max RMS residual (log units) for a trusted fit
  double floor_rel = 1e-13;  // |c| <= floor_rel * max|c| counts as zero
};

struct DecayReport {
  std::string klass;           // "rapid" | "moderate" | "indeterminate"
  double fitted_exponent = 0;  // slope of log|c| vs log<xi> on shell maxima
  double residual = 0;         // RMS fit residual (log units)
  double tail_exponent = 0;    // slope over the last three nonempty shells
  bool exceeds_tested_growth = false;  // growth steeper than any trusted fit
  int shells_used = 0;
  int empty_tail_shells = 0;   // dyadic shells with no support before the edge
  json to_json() const;
};

// Shell statistic classifier: bins |c(xi)| by dyadic shells of <xi>, fits
// log max|c| against log <xi> at each shell's argmax, and labels the decay.
//  - rapid: all coefficients zero, or the support ends >= 2 shells before the
//    truncation edge, or both overall and tail slopes fall below -n_max;
//  - moderate: |slope| <= e_max with residual <= resid_tol;
//  - indeterminate otherwise.
// Requires the truncation lattice to span at least 3 dyadic shells.
DecayReport decay_classify(const SpectralField& c, const BoundaryParams& h,
                           const DecayOptions& opts = {});

}  // namespace nhf
