#pragma once

#include <optional>
#include <vector>

#include "nhf/eigen.hpp"
#include "nhf/spectral.hpp"
#include "nhf/symbol.hpp"

namespace nhf {

struct SolveOptions {
  // Absolute zero cutoff = zero_tol_rel * max |sigma| over the truncation.
  double zero_tol_rel = 1e-12;
  // When set, |w_hat(xi)| > <xi>^guard at any xi is flagged as evidence the
  // division only succeeds with unbounded loss at this truncation. The
  // weight <xi> is taken at these boundary parameters.
  std::optional<double> growth_guard;
  BoundaryParams h{1.0, 1.0};
};

struct DivisionViolation {
  FreqIndex xi{0, 0};
  double abs_sigma = 0;
  double abs_coeff = 0;
};

struct AdmissibilityReport {
  bool admissible = true;
  double zero_tol_abs = 0;
  double max_abs_sigma = 0;
  long long zero_count = 0;  // lattice points with |sigma| <= zero_tol_abs
  std::vector<DivisionViolation> violations;
  json to_json() const;
};

// A right-hand side divides by sigma on the truncation iff its coefficients
// vanish (below the zero cutoff) wherever sigma does.
AdmissibilityReport admissibility(const SpectralField& fhat, const Symbol& s,
                                  const SolveOptions& opts = {});

struct SolveResult {
  SpectralField what;
  AdmissibilityReport adm;
  bool growth_guard_tripped = false;
  json guard_witness;  // null unless tripped
};

// w_hat = f_hat / sigma off the near-zero set, 0 on it. Throws an
// inadmissible-status error carrying the violation list when the right-hand
// side does not vanish on the near-zero set.
SolveResult solve(const Symbol& s, const SpectralField& fhat,
                  const SolveOptions& opts = {});

// max |sigma * w_hat - f_hat| over the truncation.
double division_residual(const Symbol& s, const SpectralField& what,
                         const SpectralField& fhat);

}  // namespace nhf
