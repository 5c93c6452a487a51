#include "nhf/diophantine.hpp"

#include <gmpxx.h>

#include <cfloat>
#include <cmath>
#include <cstdio>
#include <limits>

namespace nhf {

namespace {

std::string ld_to_intstring(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.0Lf", v);
  return std::string(buf);
}

// ln of a positive big integer through its top bits; exact to double rounding.
double mpz_ln(const mpz_class& z) {
  long e = 0;
  const double d = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(d) + static_cast<double>(e) * M_LN2;
}

}  // namespace

ContinuedFraction continued_fraction(double x, int depth, long long q_limit,
                                     double input_eps) {
  require(std::isfinite(x), Status::parse, "continued fraction input must be finite");
  require(depth >= 0, Status::parse, "continued fraction depth must be nonnegative");
  require(input_eps > 0 && input_eps < 1, Status::parse,
          "input precision must lie in (0,1)");

  ContinuedFraction cf;
  const long double xl = static_cast<long double>(x);
  // q_n^2 <= 1/input_eps is the range where convergents remain trustworthy.
  const long double prec_bound = std::sqrt(1.0L / static_cast<long double>(input_eps));
  const long double rational_qbound = std::sqrt(prec_bound);
  const long double exact_eps = 1e-18L;

  long double a0 = std::floor(xl);
  long double t = xl - a0;
  long double pm1 = 1.0L, qm1 = 0.0L;
  long double p0 = a0, q0 = 1.0L;

  cf.a0 = ld_to_intstring(a0);
  cf.p.push_back(ld_to_intstring(p0));
  cf.q.push_back("1");
  cf.q_log.push_back(0.0);
  {
    const long double d0 = std::fabs(q0 * xl - p0);
    cf.dist_log.push_back(d0 > 0 ? static_cast<double>(std::log(d0))
                                 : std::numeric_limits<double>::quiet_NaN());
    cf.dist_val.push_back(static_cast<double>(d0));
  }

  for (int iter = 0; iter < depth; ++iter) {
    if (t <= exact_eps) {
      cf.exact_rational = true;
      return cf;
    }
    const long double inv = 1.0L / t;
    const long double a = std::floor(inv);
    const long double qn = a * q0 + qm1;
    if (qn > prec_bound) {
      // The next convergent is beyond what the input precision supports. A
      // small current denominator means the input is rational at working
      // precision; otherwise the expansion is simply exhausted.
      if (q0 <= rational_qbound) {
        cf.near_rational = true;
      } else {
        cf.precision_exhausted = true;
      }
      return cf;
    }
    const long double pn = a * p0 + pm1;
    pm1 = p0;
    qm1 = q0;
    p0 = pn;
    q0 = qn;
    cf.quotients.push_back(ld_to_intstring(a));
    cf.p.push_back(ld_to_intstring(p0));
    cf.q.push_back(ld_to_intstring(q0));
    cf.q_log.push_back(static_cast<double>(std::log(q0)));
    const long double d = std::fabs(q0 * xl - p0);
    cf.dist_log.push_back(d > 0 ? static_cast<double>(std::log(d))
                                : std::numeric_limits<double>::quiet_NaN());
    cf.dist_val.push_back(static_cast<double>(d));
    if (q_limit > 0 && q0 > static_cast<long double>(q_limit)) {
      // Keep exactly one convergent past the scan limit; the certified
      // exponent of the last in-range convergent needs its denominator.
      cf.reached_qmax = true;
      return cf;
    }
    t = inv - a;
  }
  cf.depth_reached = true;
  return cf;
}

ContinuedFraction continued_fraction_exact(const std::string& num,
                                           const std::string& den,
                                           long long q_limit) {
  mpz_class NUM, DEN;
  require(NUM.set_str(num, 10) == 0, Status::parse, "invalid numerator string");
  require(DEN.set_str(den, 10) == 0, Status::parse, "invalid denominator string");
  require(sgn(DEN) > 0, Status::parse, "denominator must be positive");

  ContinuedFraction cf;
  mpz_class a0, r;
  mpz_fdiv_qr(a0.get_mpz_t(), r.get_mpz_t(), NUM.get_mpz_t(), DEN.get_mpz_t());

  mpz_class pm1 = 1, qm1 = 0, p0 = a0, q0 = 1;
  mpz_class rem = r, base = DEN;  // x - a0 = rem / base, 0 <= rem < base

  const auto push = [&](void) {
    cf.p.push_back(p0.get_str());
    cf.q.push_back(q0.get_str());
    cf.q_log.push_back(q0 == 1 ? 0.0 : mpz_ln(q0));
    const mpz_class err = abs(q0 * NUM - p0 * DEN);
    if (err == 0) {
      cf.dist_log.push_back(std::numeric_limits<double>::quiet_NaN());
      cf.dist_val.push_back(0.0);
    } else {
      const double dl = mpz_ln(err) - mpz_ln(DEN);
      cf.dist_log.push_back(dl);
      cf.dist_val.push_back(std::exp(dl));
    }
  };

  cf.a0 = a0.get_str();
  push();

  while (rem != 0) {
    mpz_class a, next;
    mpz_fdiv_qr(a.get_mpz_t(), next.get_mpz_t(), base.get_mpz_t(), rem.get_mpz_t());
    base = rem;
    rem = next;
    const mpz_class pn = a * p0 + pm1;
    const mpz_class qn = a * q0 + qm1;
    pm1 = p0;
    qm1 = q0;
    p0 = pn;
    q0 = qn;
    cf.quotients.push_back(a.get_str());
    push();
    if (q_limit > 0 && q0 > static_cast<long>(q_limit)) {
      cf.reached_qmax = true;
      return cf;
    }
  }
  cf.exact_rational = true;
  return cf;
}

namespace {

IrrationalityReport report_from_cf(const ContinuedFraction& cf, long long q_max,
                                   double threshold, const std::string& engine) {
  IrrationalityReport rep;
  rep.q_max = q_max;
  rep.threshold = threshold;
  rep.engine = engine;
  rep.rational = cf.is_rational();
  rep.rational_at_precision = cf.near_rational;
  rep.precision_exhausted = cf.precision_exhausted;
  rep.scan_complete = cf.reached_qmax || cf.is_rational();

  const std::size_t n = cf.q.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double q = std::strtod(cf.q[i].c_str(), nullptr);
    if (q < 2.0 || q > static_cast<double>(q_max)) continue;
    if (!(cf.dist_val[i] > 0.0) && std::isnan(cf.dist_log[i])) continue;
    DioRecord rec;
    rec.q = q;
    rec.dist = cf.dist_val[i];
    rec.mu_dist = -cf.dist_log[i] / cf.q_log[i];
    if (i + 1 < n) {
      rec.mu_cert = 1.0 + cf.q_log[i + 1] / cf.q_log[i];
      rec.has_cert = true;
      rep.max_mu_cert = std::max(rep.max_mu_cert, rec.mu_cert);
    }
    rep.running_max_mu_dist = std::max(rep.running_max_mu_dist, rec.mu_dist);
    rep.records.push_back(rec);
  }
  rep.liouville_evidence = rep.max_mu_cert >= threshold;
  return rep;
}

}  // namespace

IrrationalityReport liouville_evidence(double x, long long q_max, double threshold) {
  require(q_max >= 2, Status::parse, "q_max must be at least 2");
  require(threshold > 1.0, Status::parse, "exponent threshold must exceed 1");
  const ContinuedFraction cf = continued_fraction(x, 256, q_max);
  return report_from_cf(cf, q_max, threshold, "long-double");
}

IrrationalityReport liouville_evidence_exact(const std::string& num,
                                             const std::string& den,
                                             long long q_max, double threshold) {
  require(q_max >= 2, Status::parse, "q_max must be at least 2");
  require(threshold > 1.0, Status::parse, "exponent threshold must exceed 1");
  const ContinuedFraction cf = continued_fraction_exact(num, den, q_max);
  return report_from_cf(cf, q_max, threshold, "exact-rational");
}

DioVerdict dio_verdict(const IrrationalityReport& rep) {
  if (rep.rational) return DioVerdict::rational;
  if (rep.liouville_evidence) return DioVerdict::liouville;
  if (rep.scan_complete) return DioVerdict::non_liouville;
  return DioVerdict::unknown;
}

std::string dio_verdict_name(DioVerdict v) {
  switch (v) {
    case DioVerdict::rational: return "rational";
    case DioVerdict::liouville: return "liouville-evidence";
    case DioVerdict::non_liouville: return "no-liouville-evidence";
    case DioVerdict::unknown: return "unknown";
  }
  return "unknown";
}

json IrrationalityReport::to_json() const {
  json recs = json::array();
  for (const auto& r : records) {
    json row;
    row["q"] = r.q;
    row["dist"] = r.dist;
    row["mu_dist"] = r.mu_dist;
    if (r.has_cert) {
      row["mu_cert"] = r.mu_cert;
    } else {
      row["mu_cert"] = nullptr;
    }
    recs.push_back(std::move(row));
  }
  json j;
  j["engine"] = engine;
  j["q_max"] = q_max;
  j["threshold"] = threshold;
  j["rational"] = rational;
  j["rational_at_precision"] = rational_at_precision;
  j["precision_exhausted"] = precision_exhausted;
  j["scan_complete"] = scan_complete;
  j["liouville_evidence"] = liouville_evidence;
  j["max_mu_dist"] = running_max_mu_dist;
  j["max_mu_cert"] = max_mu_cert;
  j["verdict"] = dio_verdict_name(dio_verdict(*this));
  j["records"] = std::move(recs);
  return j;
}

HurwitzResult hurwitz_brute(double x, long long q_min, long long q_max) {
  require(q_min >= 1 && q_max >= q_min, Status::parse, "invalid q range");
  const long double xl = static_cast<long double>(x);
  HurwitzResult best;
  best.min_q_dist = std::numeric_limits<double>::infinity();
  for (long long q = q_min; q <= q_max; ++q) {
    const long double v = static_cast<long double>(q) * xl;
    const long double d = std::fabs(v - std::nearbyint(v));
    const double qd = static_cast<double>(static_cast<long double>(q) * d);
    if (qd < best.min_q_dist) {
      best.min_q_dist = qd;
      best.argmin_q = q;
    }
  }
  return best;
}

HurwitzResult hurwitz_convergents(double x, long long q_min, long long q_max) {
  require(q_min >= 1 && q_max >= q_min, Status::parse, "invalid q range");
  const ContinuedFraction cf = continued_fraction(x, 256, q_max);
  HurwitzResult best;
  best.min_q_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cf.q.size(); ++i) {
    const double q = std::strtod(cf.q[i].c_str(), nullptr);
    if (q < static_cast<double>(q_min) || q > static_cast<double>(q_max)) continue;
    if (!(cf.dist_val[i] > 0.0)) continue;
    const double qd = q * cf.dist_val[i];
    if (qd < best.min_q_dist) {
      best.min_q_dist = qd;
      best.argmin_q = static_cast<long long>(q + 0.5);
    }
  }
  return best;
}

ExponentScan mu_dist_brute(double x, long long q_min, long long q_max) {
  require(q_min >= 2 && q_max >= q_min, Status::parse,
          "exponent scan needs q >= 2");
  const long double xl = static_cast<long double>(x);
  ExponentScan best;
  best.max_mu = -std::numeric_limits<double>::infinity();
  for (long long q = q_min; q <= q_max; ++q) {
    const long double v = static_cast<long double>(q) * xl;
    const long double d = std::fabs(v - std::nearbyint(v));
    double mu;
    if (d <= 0.0L) {
      mu = std::numeric_limits<double>::infinity();
    } else {
      mu = static_cast<double>(-std::log(d) / std::log(static_cast<long double>(q)));
    }
    if (mu > best.max_mu) {
      best.max_mu = mu;
      best.argmax_q = q;
    }
  }
  return best;
}

}  // namespace nhf
