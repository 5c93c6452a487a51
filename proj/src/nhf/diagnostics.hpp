#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nhf/diophantine.hpp"
#include "nhf/eigen.hpp"
#include "nhf/symbol.hpp"

namespace nhf {

// Lattice points with |sigma| <= tol inside the box |xi_j| <= radius,
// lexicographically ordered. tol = 0 lists exact zeros only.
std::vector<FreqIndex> zero_set(const Symbol& s, long long radius, double tol);

// Truncation-bounded lower-bound gates. Both check |sigma(xi)| > <xi>^{-M}
// for every |xi_j| <= radius with <xi> >= M; the solvability variant exempts
// exact zeros (division skips them). Witness = lexicographically smallest
// failing index.
struct GateResult {
  bool pass = true;
  std::optional<FreqIndex> witness;
  double witness_abs_sigma = 0;
  double witness_bound = 0;
  long long checked = 0;
  json to_json() const;
};
GateResult ghe_gate(const Symbol& s, const BoundaryParams& h, long long radius,
                    double M);
GateResult gs_gate(const Symbol& s, const BoundaryParams& h, long long radius,
                   double M);

// Shell-wise minimum of |sigma| over nonzero entries, with the implied
// power-law exponent min|sigma| = <xi>^{-M_s} read off each shell.
struct ExponentShell {
  long long radius = 0;         // outer sup-norm radius of the shell
  bool empty = true;            // no nonzero entries in the shell
  double min_abs_sigma = 0;
  double min_weight = 0;        // smallest <xi> among nonzero entries
  FreqIndex argmin{0, 0};
  double implied_exponent = 0;  // -ln min|sigma| / ln min<xi>
  bool exponent_defined = false;
};
struct ExponentCurve {
  std::vector<ExponentShell> shells;
  json to_json() const;
  std::string to_csv() const;  // header R,min_abs_sigma,implied_M
};
ExponentCurve exponent_curve(const Symbol& s, const BoundaryParams& h,
                             const std::vector<long long>& radii);

struct ClassifyOptions {
  long long q_max = 10000;
  double threshold = 3.0;      // certified-exponent cutoff for the evidence flag
  double relation_tol = 1e-12; // relative tolerance on c*log(h2) + log(h1)
  bool exact_relation = false; // caller asserts the coefficient relation exactly
  bool has_exact_c = false;    // c is the exact rational c_num/c_den (real)
  std::string c_num, c_den;
  std::vector<long long> radii{8, 16, 32, 64, 128};
  long long zero_scan_radius = 32;
};

struct DiagnosisReport {
  std::string gh;  // "yes" | "no" | "unknown"
  std::string gs;
  bool evidence_based = false;  // verdict rests on a finite Diophantine scan
  std::string branch;           // the deciding condition, human-readable
  double relation_residual = 0;
  double relation_scale = 0;
  std::string relation_state;  // "holds" | "broken" | "ambiguous" | "asserted"
  std::vector<FreqIndex> zero_sample;
  ExponentCurve curve;
  std::optional<IrrationalityReport> diophantine;
  ClassifyOptions options;
  json to_json() const;
};

// Decision tree for the transport family P = d1 + c d2 on weights h:
// broken coefficient relation or Im(c) != 0 give both regularity and
// solvability; a real coefficient is classified by its rationality or by
// Diophantine evidence, never beyond what the scan can certify.
DiagnosisReport classify_constant_P(cplx c, const BoundaryParams& h,
                                    const ClassifyOptions& opts = {});

}  // namespace nhf
