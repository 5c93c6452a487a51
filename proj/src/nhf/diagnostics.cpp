#include "nhf/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "nhf/parallel.hpp"

namespace nhf {

namespace {

constexpr long long kDenseScanCap = 4096;

bool lex_less(const FreqIndex& a, const FreqIndex& b) {
  if (a.xi1 != b.xi1) return a.xi1 < b.xi1;
  return a.xi2 < b.xi2;
}

}  // namespace

std::vector<FreqIndex> zero_set(const Symbol& s, long long radius, double tol) {
  require(radius >= 0 && radius <= kDenseScanCap, Status::resolution,
          "zero-set scan radius exceeds the dense-scan cap");
  require(tol >= 0, Status::parse, "zero-set tolerance must be nonnegative");
  const std::size_t side = static_cast<std::size_t>(2 * radius + 1);
  std::vector<std::vector<FreqIndex>> found(block_count(side));
  parallel_blocks(side, [&](std::size_t lo, std::size_t hi, std::size_t b) {
    for (std::size_t r = lo; r < hi; ++r) {
      const long long xi1 = static_cast<long long>(r) - radius;
      for (long long xi2 = -radius; xi2 <= radius; ++xi2) {
        const FreqIndex xi{xi1, xi2};
        if (std::abs(s(xi)) <= tol) found[b].push_back(xi);
      }
    }
  });
  std::vector<FreqIndex> out;
  for (const auto& part : found) out.insert(out.end(), part.begin(), part.end());
  return out;
}

namespace {

GateResult gate_scan(const Symbol& s, const BoundaryParams& h, long long radius,
                     double M, bool exempt_exact_zeros) {
  require(radius >= 0 && radius <= kDenseScanCap, Status::resolution,
          "gate scan radius exceeds the dense-scan cap");
  require(M > 0, Status::parse, "gate order M must be positive");
  h.check();
  const std::size_t side = static_cast<std::size_t>(2 * radius + 1);
  const std::size_t blocks = block_count(side);
  struct Hit {
    bool has = false;
    FreqIndex xi{0, 0};
    double abs_sigma = 0;
    double bound = 0;
  };
  std::vector<Hit> hits(blocks);
  std::vector<long long> counts(blocks, 0);
  parallel_blocks(side, [&](std::size_t lo, std::size_t hi, std::size_t b) {
    long long local = 0;
    for (std::size_t r = lo; r < hi && !hits[b].has; ++r) {
      const long long xi1 = static_cast<long long>(r) - radius;
      for (long long xi2 = -radius; xi2 <= radius; ++xi2) {
        const FreqIndex xi{xi1, xi2};
        const double w = weight_2d(h, xi);
        if (w < M) continue;
        ++local;
        const double as = std::abs(s(xi));
        if (exempt_exact_zeros && as == 0.0) continue;
        const double bound = std::pow(w, -M);
        if (!(as > bound)) {
          hits[b] = Hit{true, xi, as, bound};
          break;
        }
      }
    }
    counts[b] = local;
  });
  GateResult res;
  for (long long c : counts) res.checked += c;
  for (const auto& hit : hits) {
    if (!hit.has) continue;
    res.pass = false;
    res.witness = hit.xi;
    res.witness_abs_sigma = hit.abs_sigma;
    res.witness_bound = hit.bound;
    break;  // blocks cover ascending xi1, so the first hit is lexicographically least
  }
  // `checked` only counts points visited before a block stopped early; on
  // failure it is a lower bound, on pass it is the exact count.
  return res;
}

}  // namespace

GateResult ghe_gate(const Symbol& s, const BoundaryParams& h, long long radius,
                    double M) {
  return gate_scan(s, h, radius, M, false);
}

GateResult gs_gate(const Symbol& s, const BoundaryParams& h, long long radius,
                   double M) {
  return gate_scan(s, h, radius, M, true);
}

json GateResult::to_json() const {
  json j;
  j["pass"] = pass;
  j["checked"] = checked;
  if (witness.has_value()) {
    json w;
    w["xi1"] = witness->xi1;
    w["xi2"] = witness->xi2;
    w["abs_sigma"] = witness_abs_sigma;
    w["bound"] = witness_bound;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

namespace {

struct ShellAccum {
  bool any = false;
  double min_abs = std::numeric_limits<double>::infinity();
  double min_w = std::numeric_limits<double>::infinity();
  FreqIndex argmin{0, 0};
  void feed(const FreqIndex& xi, double as, double w) {
    if (as <= 0.0) return;
    any = true;
    if (as < min_abs || (as == min_abs && lex_less(xi, argmin))) {
      min_abs = as;
      argmin = xi;
    }
    min_w = std::min(min_w, w);
  }
  void merge(const ShellAccum& o) {
    if (!o.any) return;
    if (!any) {
      *this = o;
      return;
    }
    if (o.min_abs < min_abs || (o.min_abs == min_abs && lex_less(o.argmin, argmin))) {
      min_abs = o.min_abs;
      argmin = o.argmin;
    }
    min_w = std::min(min_w, o.min_w);
  }
};

ExponentShell finish_shell(long long radius, const ShellAccum& acc) {
  ExponentShell sh;
  sh.radius = radius;
  sh.empty = !acc.any;
  if (acc.any) {
    sh.min_abs_sigma = acc.min_abs;
    sh.min_weight = acc.min_w;
    sh.argmin = acc.argmin;
    if (acc.min_w > 1.0 + 1e-9) {
      sh.implied_exponent = -std::log(acc.min_abs) / std::log(acc.min_w);
      sh.exponent_defined = true;
    }
  }
  return sh;
}

// First-order transport symbols have |sigma|^2 = A(xi2)^2 + B(xi1, xi2)^2
// with A independent of xi1 and B linear in xi1, so the shell minimum over
// xi1 sits at the clamped rounding of the continuous minimizer. One pass
// over xi2 handles radii far beyond any dense scan.
bool is_first_order_family(const Symbol& s) {
  const json& d = s.descriptor();
  return d.is_object() && d.contains("kind") && d["kind"] == "first_order_family";
}

void scan_first_order_shell(const Symbol& s, long long inner, long long outer,
                            const BoundaryParams& h, ShellAccum* acc) {
  const auto feed = [&](long long xi1, long long xi2) {
    if (std::llabs(xi1) > outer) return;
    const FreqIndex xi{xi1, xi2};
    acc->feed(xi, std::abs(s(xi)), weight_2d(h, xi));
  };
  const auto feed_interval = [&](double target, long long lo, long long hi,
                                 long long xi2) {
    if (lo > hi) return;
    long long c = static_cast<long long>(std::llround(target));
    c = std::max(lo, std::min(hi, c));
    for (long long d = -1; d <= 1; ++d) {
      const long long cand = std::max(lo, std::min(hi, c + d));
      feed(cand, xi2);
    }
    feed(lo, xi2);
    feed(hi, xi2);
  };
  for (long long xi2 = -outer; xi2 <= outer; ++xi2) {
    // Continuous minimizer of the imaginary part over xi1 at this xi2. Read
    // it off two evaluations so the scan cannot drift from the evaluator.
    const double im_at0 = s(FreqIndex{0, xi2}).imag();
    const double slope = s(FreqIndex{1, xi2}).imag() - im_at0;  // = 2*pi
    const double target = -im_at0 / slope;
    if (std::llabs(xi2) > inner) {
      feed_interval(target, -outer, outer, xi2);
    } else {
      feed_interval(target, inner + 1, outer, xi2);
      feed_interval(target, -outer, -inner - 1, xi2);
    }
  }
}

void scan_dense_shell(const Symbol& s, long long inner, long long outer,
                      const BoundaryParams& h, ShellAccum* acc) {
  require(outer <= kDenseScanCap, Status::resolution,
          "exponent-curve radius exceeds the dense-scan cap for generic symbols");
  const std::size_t side = static_cast<std::size_t>(2 * outer + 1);
  const std::size_t blocks = block_count(side);
  std::vector<ShellAccum> parts(blocks);
  parallel_blocks(side, [&](std::size_t lo, std::size_t hi, std::size_t b) {
    for (std::size_t r = lo; r < hi; ++r) {
      const long long xi1 = static_cast<long long>(r) - outer;
      for (long long xi2 = -outer; xi2 <= outer; ++xi2) {
        if (std::llabs(xi1) <= inner && std::llabs(xi2) <= inner) continue;
        const FreqIndex xi{xi1, xi2};
        parts[b].feed(xi, std::abs(s(xi)), weight_2d(h, xi));
      }
    }
  });
  for (const auto& part : parts) acc->merge(part);
}

}  // namespace

ExponentCurve exponent_curve(const Symbol& s, const BoundaryParams& h,
                             const std::vector<long long>& radii) {
  h.check();
  require(!radii.empty(), Status::parse, "exponent curve needs at least one radius");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    require(radii[i] >= 1, Status::parse, "exponent-curve radii must be positive");
    if (i > 0) {
      require(radii[i] > radii[i - 1], Status::parse,
              "exponent-curve radii must be strictly increasing");
    }
  }
  const bool fast = is_first_order_family(s) && !s.conjugated();

  ExponentCurve curve;
  long long inner = -1;  // shell 0 includes the origin
  for (long long outer : radii) {
    ShellAccum acc;
    if (fast) {
      scan_first_order_shell(s, inner, outer, h, &acc);
    } else {
      scan_dense_shell(s, inner, outer, h, &acc);
    }
    curve.shells.push_back(finish_shell(outer, acc));
    inner = outer;
  }
  return curve;
}

json ExponentCurve::to_json() const {
  json arr = json::array();
  for (const auto& sh : shells) {
    json j;
    j["radius"] = sh.radius;
    j["empty"] = sh.empty;
    if (!sh.empty) {
      j["min_abs_sigma"] = sh.min_abs_sigma;
      j["min_weight"] = sh.min_weight;
      j["argmin"] = json::array({sh.argmin.xi1, sh.argmin.xi2});
      if (sh.exponent_defined) {
        j["implied_exponent"] = sh.implied_exponent;
      } else {
        j["implied_exponent"] = nullptr;
      }
    }
    arr.push_back(std::move(j));
  }
  json out;
  out["shells"] = std::move(arr);
  return out;
}

std::string ExponentCurve::to_csv() const {
  std::string out = "R,min_abs_sigma,implied_M\n";
  char buf[128];
  for (const auto& sh : shells) {
    if (sh.empty) continue;  // empty shells are skipped, not zero-filled
    const double m = sh.exponent_defined
                         ? sh.implied_exponent
                         : std::numeric_limits<double>::quiet_NaN();
    std::snprintf(buf, sizeof(buf), "%lld,%.17g,%.17g\n", sh.radius,
                  sh.min_abs_sigma, m);
    out += buf;
  }
  return out;
}

DiagnosisReport classify_constant_P(cplx c, const BoundaryParams& h,
                                    const ClassifyOptions& opts) {
  h.check();
  require(std::abs(c) > 0, Status::parse, "transport coefficient c must be nonzero");
  require(opts.q_max >= 2, Status::parse, "q_max must be at least 2");
  require(opts.threshold > 1.0, Status::parse, "threshold must exceed 1");
  require(opts.relation_tol > 0, Status::parse, "relation tolerance must be positive");

  DiagnosisReport rep;
  rep.options = opts;

  const double lh1 = std::log(h.h1);
  const double lh2 = std::log(h.h2);
  const cplx resid_c(c.real() * lh2 + lh1, c.imag() * lh2);
  rep.relation_residual = std::abs(resid_c);
  rep.relation_scale = std::abs(c) * std::abs(lh2) + std::abs(lh1);

  bool holds = false;
  if (opts.exact_relation) {
    const double rel = rep.relation_scale > 0
                           ? rep.relation_residual / rep.relation_scale
                           : 0.0;
    require(rel <= 1e-6, Status::parse,
            "exact coefficient relation asserted but the residual is large");
    rep.relation_state = "asserted";
    holds = true;
  } else if (rep.relation_scale == 0.0) {
    rep.relation_state = "holds";  // h = (1,1): the relation is vacuous
    holds = true;
  } else {
    const double rel = rep.relation_residual / rep.relation_scale;
    if (rel <= opts.relation_tol) {
      rep.relation_state = "holds";
      holds = true;
    } else if (rel > 100.0 * opts.relation_tol) {
      rep.relation_state = "broken";
    } else {
      rep.relation_state = "ambiguous";
    }
  }

  if (!holds && rep.relation_state == "broken") {
    rep.gh = "yes";
    rep.gs = "yes";
    rep.branch = "coefficient-relation-broken";
  } else if (!holds) {
    rep.gh = "unknown";
    rep.gs = "unknown";
    rep.branch = "coefficient-relation-ambiguous";
  } else if (std::abs(c.imag()) > 0) {
    // Relation holds with Im(c) != 0 forces log(h2) ~ 0; the nonreal part of
    // the symbol then never vanishes away from the real axis.
    require(std::abs(c.imag() * lh2) <=
                std::max(1.0, rep.relation_scale) * 1e-6,
            Status::internal, "inconsistent branch: Im(c) != 0 with h2 != 1");
    rep.gh = "yes";
    rep.gs = "yes";
    rep.branch = "imaginary-transport-component";
  } else {
    const double a = c.real();
    IrrationalityReport dio =
        opts.has_exact_c
            ? liouville_evidence_exact(opts.c_num, opts.c_den, opts.q_max,
                                       opts.threshold)
            : liouville_evidence(a, opts.q_max, opts.threshold);
    const DioVerdict v = dio_verdict(dio);
    switch (v) {
      case DioVerdict::rational:
        rep.gh = "no";
        rep.gs = "yes";
        rep.branch = "real-rational-coefficient";
        rep.evidence_based = dio.rational_at_precision;
        break;
      case DioVerdict::liouville:
        rep.gh = "no";
        rep.gs = "no";
        rep.branch = "liouville-type-evidence";
        rep.evidence_based = true;
        break;
      case DioVerdict::non_liouville:
        rep.gh = "yes";
        rep.gs = "yes";
        rep.branch = "no-liouville-evidence-at-depth";
        rep.evidence_based = true;
        break;
      case DioVerdict::unknown:
        rep.gh = "unknown";
        rep.gs = "unknown";
        rep.branch = "diophantine-scan-inconclusive";
        break;
    }
    rep.diophantine = std::move(dio);
  }

  const Symbol sigma = symbol_constant_P(c, h);
  rep.zero_sample = zero_set(sigma, opts.zero_scan_radius, 0.0);
  rep.curve = exponent_curve(sigma, h, opts.radii);
  return rep;
}

json DiagnosisReport::to_json() const {
  json j;
  j["gh"] = gh;
  j["gs"] = gs;
  j["evidence_based"] = evidence_based;
  j["branch"] = branch;
  json rel;
  rel["residual"] = relation_residual;
  rel["scale"] = relation_scale;
  rel["state"] = relation_state;
  rel["tolerance"] = options.relation_tol;
  j["relation"] = std::move(rel);
  json zs = json::array();
  const std::size_t zcap = 64;
  for (std::size_t i = 0; i < zero_sample.size() && i < zcap; ++i) {
    zs.push_back(json::array({zero_sample[i].xi1, zero_sample[i].xi2}));
  }
  j["zero_sample"] = std::move(zs);
  j["zero_sample_total"] = zero_sample.size();
  j["exponent_curve"] = curve.to_json();
  if (diophantine.has_value()) {
    j["diophantine"] = diophantine->to_json();
  } else {
    j["diophantine"] = nullptr;
  }
  json op;
  op["q_max"] = options.q_max;
  op["threshold"] = options.threshold;
  op["relation_tol"] = options.relation_tol;
  op["zero_scan_radius"] = options.zero_scan_radius;
  op["radii"] = options.radii;
  j["options"] = std::move(op);
  return j;
}

}  // namespace nhf
