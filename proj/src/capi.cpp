#include "nhfourier.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "nhf/commands.hpp"
#include "nhf/diagnostics.hpp"
#include "nhf/divide.hpp"
#include "nhf/jsonio.hpp"
#include "nhf/transforms.hpp"

using nhf::cplx;
using nhf::json;

struct nhf_grid {
  nhf::GridField field;
};
struct nhf_spectral {
  nhf::SpectralField field;
};
struct nhf_symbol {
  nhf::Symbol symbol;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_report(char** report_json, const json& j) {
  if (!report_json) return;
  *report_json = dup_string(nhf::dump_deterministic(j));
}

// Runs fn, translating exceptions into status codes and g_last_error.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const nhf::Error& e) {
    g_last_error = e.what();
    return static_cast<int>(e.status);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NHF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return NHF_ERR_INTERNAL;
  }
}

json parse_config(const char* config_json) {
  nhf::require(config_json != nullptr, nhf::Status::parse, "config is NULL");
  json cfg = json::parse(config_json, nullptr, false);
  nhf::require(!cfg.is_discarded(), nhf::Status::parse, "config is not valid JSON");
  return cfg;
}

int run_named(const char* command, const char* config_json, char** report_json) {
  return guarded([&] {
    nhf::require(command != nullptr, nhf::Status::parse, "command is NULL");
    const nhf::CommandOutcome out =
        nhf::run_command(command, parse_config(config_json));
    set_report(report_json, out.report);
    return static_cast<int>(out.status);
  });
}

}  // namespace

extern "C" {

const char* nhf_last_error(void) { return g_last_error.c_str(); }

void nhf_string_free(char* s) { std::free(s); }

int nhf_run(const char* command, const char* config_json, char** report_json) {
  return run_named(command, config_json, report_json);
}
int nhf_run_validate(const char* config_json, char** report_json) {
  return run_named("validate", config_json, report_json);
}
int nhf_run_diagnose(const char* config_json, char** report_json) {
  return run_named("diagnose", config_json, report_json);
}
int nhf_run_solve(const char* config_json, char** report_json) {
  return run_named("solve", config_json, report_json);
}
int nhf_run_normalform(const char* config_json, char** report_json) {
  return run_named("normalform", config_json, report_json);
}
int nhf_run_transform(const char* config_json, char** report_json) {
  return run_named("transform", config_json, report_json);
}

int nhf_eigenvalue(double h1, double h2, long long xi1, long long xi2,
                   double* re, double* im) {
  return guarded([&] {
    nhf::require(re && im, nhf::Status::parse, "output pointer is NULL");
    const nhf::BoundaryParams h{h1, h2};
    h.check();
    const cplx v = nhf::eigenvalue_2d(h, nhf::FreqIndex{xi1, xi2});
    *re = v.real();
    *im = v.imag();
    return NHF_OK;
  });
}

int nhf_weight(double h1, double h2, long long xi1, long long xi2, double* w) {
  return guarded([&] {
    nhf::require(w, nhf::Status::parse, "output pointer is NULL");
    const nhf::BoundaryParams h{h1, h2};
    h.check();
    *w = nhf::weight_2d(h, nhf::FreqIndex{xi1, xi2});
    return NHF_OK;
  });
}

nhf_grid* nhf_grid_create(long long n1, long long n2) {
  nhf_grid* g = nullptr;
  guarded([&] {
    nhf::require(n1 >= 4 && n1 <= (1 << 20) && n2 >= 4 && n2 <= (1 << 20),
                 nhf::Status::parse, "grid sides must be in [4, 2^20]");
    g = new nhf_grid{
        nhf::GridField(nhf::GridSpec{static_cast<int>(n1), static_cast<int>(n2)})};
    return NHF_OK;
  });
  return g;
}

void nhf_grid_free(nhf_grid* g) { delete g; }

int nhf_grid_shape(const nhf_grid* g, long long* n1, long long* n2) {
  return guarded([&] {
    nhf::require(g && n1 && n2, nhf::Status::parse, "NULL argument");
    *n1 = g->field.spec.n1;
    *n2 = g->field.spec.n2;
    return NHF_OK;
  });
}

int nhf_grid_set(nhf_grid* g, long long k1, long long k2, double re, double im) {
  return guarded([&] {
    nhf::require(g, nhf::Status::parse, "grid is NULL");
    nhf::require(k1 >= 0 && k1 < g->field.spec.n1 && k2 >= 0 &&
                     k2 < g->field.spec.n2,
                 nhf::Status::parse, "grid index out of range");
    g->field.at(static_cast<int>(k1), static_cast<int>(k2)) = cplx(re, im);
    return NHF_OK;
  });
}

int nhf_grid_get(const nhf_grid* g, long long k1, long long k2, double* re,
                 double* im) {
  return guarded([&] {
    nhf::require(g && re && im, nhf::Status::parse, "NULL argument");
    nhf::require(k1 >= 0 && k1 < g->field.spec.n1 && k2 >= 0 &&
                     k2 < g->field.spec.n2,
                 nhf::Status::parse, "grid index out of range");
    const cplx v = g->field.at(static_cast<int>(k1), static_cast<int>(k2));
    *re = v.real();
    *im = v.imag();
    return NHF_OK;
  });
}

nhf_spectral* nhf_spectral_create(long long K, const char* basis) {
  nhf_spectral* s = nullptr;
  guarded([&] {
    nhf::require(K >= 0 && K <= 4096, nhf::Status::parse, "K must be in [0, 4096]");
    nhf::require(basis != nullptr, nhf::Status::parse, "basis is NULL");
    s = new nhf_spectral{
        nhf::SpectralField(static_cast<int>(K), nhf::basis_from_name(basis))};
    return NHF_OK;
  });
  return s;
}

void nhf_spectral_free(nhf_spectral* s) { delete s; }

int nhf_spectral_truncation(const nhf_spectral* s, long long* K) {
  return guarded([&] {
    nhf::require(s && K, nhf::Status::parse, "NULL argument");
    *K = s->field.K;
    return NHF_OK;
  });
}

int nhf_spectral_set(nhf_spectral* s, long long xi1, long long xi2, double re,
                     double im) {
  return guarded([&] {
    nhf::require(s, nhf::Status::parse, "spectral field is NULL");
    s->field.at(xi1, xi2) = cplx(re, im);
    return NHF_OK;
  });
}

int nhf_spectral_get(const nhf_spectral* s, long long xi1, long long xi2,
                     double* re, double* im) {
  return guarded([&] {
    nhf::require(s && re && im, nhf::Status::parse, "NULL argument");
    const cplx v = s->field.at(xi1, xi2);
    *re = v.real();
    *im = v.imag();
    return NHF_OK;
  });
}

int nhf_analyze(const nhf_grid* f, double h1, double h2, long long K,
                const char* basis, nhf_spectral** out) {
  return guarded([&] {
    nhf::require(f && out && basis, nhf::Status::parse, "NULL argument");
    nhf::require(K >= 0 && K <= 4096, nhf::Status::parse, "K must be in [0, 4096]");
    const nhf::BoundaryParams h{h1, h2};
    const nhf::Basis b = nhf::basis_from_name(basis);
    nhf::SpectralField c = b == nhf::Basis::L
                               ? nhf::analyze(f->field, h, static_cast<int>(K))
                               : nhf::analyze_star(f->field, h, static_cast<int>(K));
    *out = new nhf_spectral{std::move(c)};
    return NHF_OK;
  });
}

int nhf_synthesize(const nhf_spectral* c, double h1, double h2, long long n1,
                   long long n2, nhf_grid** out) {
  return guarded([&] {
    nhf::require(c && out, nhf::Status::parse, "NULL argument");
    nhf::require(n1 >= 4 && n1 <= (1 << 20) && n2 >= 4 && n2 <= (1 << 20),
                 nhf::Status::parse, "grid sides must be in [4, 2^20]");
    const nhf::BoundaryParams h{h1, h2};
    nhf::GridField f = nhf::synthesize(
        c->field, h, nhf::GridSpec{static_cast<int>(n1), static_cast<int>(n2)});
    *out = new nhf_grid{std::move(f)};
    return NHF_OK;
  });
}

nhf_symbol* nhf_symbol_constant_p(double c_re, double c_im, double h1, double h2) {
  nhf_symbol* s = nullptr;
  guarded([&] {
    const nhf::BoundaryParams h{h1, h2};
    s = new nhf_symbol{nhf::symbol_constant_P(cplx(c_re, c_im), h)};
    return NHF_OK;
  });
  return s;
}

nhf_symbol* nhf_symbol_from_operator(const char* shorthand, double h1, double h2) {
  nhf_symbol* s = nullptr;
  guarded([&] {
    nhf::require(shorthand != nullptr, nhf::Status::parse, "operator is NULL");
    const nhf::BoundaryParams h{h1, h2};
    s = new nhf_symbol{
        nhf::diff_symbol(nhf::OperatorSpec::from_shorthand(shorthand), h)};
    return NHF_OK;
  });
  return s;
}

void nhf_symbol_free(nhf_symbol* s) { delete s; }

int nhf_symbol_eval(const nhf_symbol* s, long long xi1, long long xi2,
                    double* re, double* im) {
  return guarded([&] {
    nhf::require(s && re && im, nhf::Status::parse, "NULL argument");
    const cplx v = s->symbol(nhf::FreqIndex{xi1, xi2});
    *re = v.real();
    *im = v.imag();
    return NHF_OK;
  });
}

int nhf_solve(const nhf_symbol* s, const nhf_spectral* rhs, double zero_tol_rel,
              nhf_spectral** out, char** report_json) {
  return guarded([&] {
    nhf::require(s && rhs && out, nhf::Status::parse, "NULL argument");
    nhf::SolveOptions opts;
    opts.zero_tol_rel = zero_tol_rel;
    try {
      nhf::SolveResult sr = nhf::solve(s->symbol, rhs->field, opts);
      json rep;
      rep["admissibility"] = sr.adm.to_json();
      rep["residual"] = nhf::division_residual(s->symbol, sr.what, rhs->field);
      set_report(report_json, rep);
      *out = new nhf_spectral{std::move(sr.what)};
      return NHF_OK;
    } catch (const nhf::Error& e) {
      if (e.status == nhf::Status::inadmissible) set_report(report_json, e.details);
      throw;
    }
  });
}

int nhf_classify(double c_re, double c_im, double h1, double h2,
                 long long q_max, double threshold, char** report_json) {
  return guarded([&] {
    const nhf::BoundaryParams h{h1, h2};
    nhf::ClassifyOptions opts;
    opts.q_max = q_max;
    opts.threshold = threshold;
    const nhf::DiagnosisReport rep =
        nhf::classify_constant_P(cplx(c_re, c_im), h, opts);
    set_report(report_json, rep.to_json());
    return NHF_OK;
  });
}

int nhf_liouville_evidence(double x, long long q_max, double threshold,
                           char** report_json) {
  return guarded([&] {
    const nhf::IrrationalityReport rep =
        nhf::liouville_evidence(x, q_max, threshold);
    set_report(report_json, rep.to_json());
    return NHF_OK;
  });
}

}  // extern "C"
