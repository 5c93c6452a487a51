#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nhf/common.hpp"

namespace nhf {

// Continued-fraction expansion with convergents. Two engines share this
// carrier: a long-double engine for caller floats and an exact integer engine
// for constructed rationals whose structure exceeds float precision.
struct ContinuedFraction {
  std::string a0;
  std::vector<std::string> quotients;  // a_1, a_2, ...
  // Convergents p_n/q_n, n = 0.. (p_0 = a0, q_0 = 1), as decimal strings.
  std::vector<std::string> p, q;
  std::vector<double> q_log;     // ln q_n
  std::vector<double> dist_log;  // ln |q_n x - p_n|; quiet NaN if the distance is 0
  std::vector<double> dist_val;  // |q_n x - p_n| (0 when below double range)
  bool exact_rational = false;       // expansion terminated: x is this rational
  bool near_rational = false;        // rational at the working precision
  bool precision_exhausted = false;  // q_n^2 exceeded 1/(input precision)
  bool reached_qmax = false;         // stopped just past the requested depth
  bool depth_reached = false;        // quotient budget exhausted
  bool is_rational() const { return exact_rational || near_rational; }
};

// Long-double engine on a double input. Stops at `depth` quotients, when the
// expansion terminates, when q_n exceeds q_limit (after keeping one convergent
// past it, needed by the certified exponent), or when q_n^2 > 1/input_eps.
ContinuedFraction continued_fraction(double x, int depth,
                                     long long q_limit = 0,
                                     double input_eps = 2.220446049250313e-16);

// Exact engine on num/den given as decimal strings (den > 0).
ContinuedFraction continued_fraction_exact(const std::string& num,
                                           const std::string& den,
                                           long long q_limit);

// Per-convergent record of approximation quality.
struct DioRecord {
  double q = 0;         // q_n (exact for q <= 2^53)
  double dist = 0;      // |q_n x - p_n|
  double mu_dist = 0;   // -ln dist / ln q (distance exponent at this q)
  double mu_cert = 0;   // 1 + ln q_{n+1} / ln q_n (certified exponent)
  bool has_cert = false;
};

struct IrrationalityReport {
  long long q_max = 0;
  double threshold = 0;
  std::vector<DioRecord> records;  // convergents with 2 <= q_n <= q_max
  double running_max_mu_dist = 0;
  double max_mu_cert = 0;
  bool liouville_evidence = false;  // max_mu_cert >= threshold
  bool rational = false;
  bool rational_at_precision = false;  // rational only at working precision
  bool precision_exhausted = false;
  bool scan_complete = false;  // reached q_max (or a rational terminus) cleanly
  std::string engine;          // "long-double" | "exact-rational"
  json to_json() const;
};

// Evidence scan from continued-fraction convergents: only convergents achieve
// record distance exponents, so the scan is exhaustive over q <= q_max.
// Never a proof; precision exhaustion leaves the verdict open.
IrrationalityReport liouville_evidence(double x, long long q_max, double threshold);
IrrationalityReport liouville_evidence_exact(const std::string& num,
                                             const std::string& den,
                                             long long q_max, double threshold);

enum class DioVerdict { rational, liouville, non_liouville, unknown };
DioVerdict dio_verdict(const IrrationalityReport& rep);
std::string dio_verdict_name(DioVerdict v);

// min of q * dist(q x, Z) over q in [q_min, q_max], brute force and via
// convergents (the window minimum sits at its left convergent).
struct HurwitzResult {
  long long argmin_q = 0;
  double min_q_dist = 0;
};
HurwitzResult hurwitz_brute(double x, long long q_min, long long q_max);
HurwitzResult hurwitz_convergents(double x, long long q_min, long long q_max);

// max of -ln dist(q x, Z) / ln q over all q in [q_min, q_max], brute force.
struct ExponentScan {
  long long argmax_q = 0;
  double max_mu = 0;
};
ExponentScan mu_dist_brute(double x, long long q_min, long long q_max);

}  // namespace nhf
