#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <json.hpp>
#include <string>

#include "nhfourier.h"

using json = nlohmann::ordered_json;

namespace {

const double kPi = std::acos(-1.0);
const double kE = std::exp(1.0);

std::string take(char** s) {
  REQUIRE(*s != nullptr);
  std::string out(*s);
  nhf_string_free(*s);
  *s = nullptr;
  return out;
}

}  // namespace

TEST_CASE("scalar entry points match pinned values") {
  double w = 0.0;
  REQUIRE(nhf_weight(2.0, 3.0, 10, -7, &w) == NHF_OK);
  CHECK(w == doctest::Approx(76.685100489979630897).epsilon(1e-14));

  double re = 0.0, im = 0.0;
  REQUIRE(nhf_eigenvalue(kE, kE * kE, 1, 2, &re, &im) == NHF_OK);
  CHECK(re == doctest::Approx(-192.39208802178717238).epsilon(1e-13));
  CHECK(im == doctest::Approx(62.831853071795864769).epsilon(1e-13));

  REQUIRE(nhf_eigenvalue(1.0, 1.0, 3, 4, &re, &im) == NHF_OK);
  CHECK(re == doctest::Approx(-4.0 * kPi * kPi * 25.0).epsilon(1e-13));
  CHECK(im == doctest::Approx(0.0).epsilon(1e-12));

  CHECK(nhf_weight(0.0, 1.0, 0, 0, &w) == NHF_ERR_PARSE);
  CHECK(std::strlen(nhf_last_error()) > 0);
}

TEST_CASE("grid handles bound-check indices") {
  CHECK(nhf_grid_create(3, 8) == nullptr);

  nhf_grid* g = nhf_grid_create(8, 6);
  REQUIRE(g != nullptr);
  long long n1 = 0, n2 = 0;
  REQUIRE(nhf_grid_shape(g, &n1, &n2) == NHF_OK);
  CHECK(n1 == 8);
  CHECK(n2 == 6);

  REQUIRE(nhf_grid_set(g, 5, 4, 1.5, -2.5) == NHF_OK);
  double re = 0.0, im = 0.0;
  REQUIRE(nhf_grid_get(g, 5, 4, &re, &im) == NHF_OK);
  CHECK(re == 1.5);
  CHECK(im == -2.5);
  REQUIRE(nhf_grid_get(g, 0, 0, &re, &im) == NHF_OK);
  CHECK(re == 0.0);

  CHECK(nhf_grid_set(g, 8, 0, 0.0, 0.0) == NHF_ERR_PARSE);
  CHECK(nhf_grid_get(g, 0, -1, &re, &im) == NHF_ERR_PARSE);
  CHECK(std::strlen(nhf_last_error()) > 0);
  nhf_grid_free(g);
}

TEST_CASE("spectral handles bound-check frequencies") {
  CHECK(nhf_spectral_create(5000, "L") == nullptr);
  CHECK(nhf_spectral_create(4, "bogus") == nullptr);

  nhf_spectral* s = nhf_spectral_create(4, "L");
  REQUIRE(s != nullptr);
  long long K = 0;
  REQUIRE(nhf_spectral_truncation(s, &K) == NHF_OK);
  CHECK(K == 4);

  REQUIRE(nhf_spectral_set(s, -4, 4, 0.5, 0.25) == NHF_OK);
  double re = 0.0, im = 0.0;
  REQUIRE(nhf_spectral_get(s, -4, 4, &re, &im) == NHF_OK);
  CHECK(re == 0.5);
  CHECK(im == 0.25);

  CHECK(nhf_spectral_set(s, 5, 0, 1.0, 0.0) == NHF_ERR_PARSE);
  CHECK(std::strlen(nhf_last_error()) > 0);
  nhf_spectral_free(s);
}

TEST_CASE("analyze and synthesize round trip through the C API") {
  nhf_spectral* c = nhf_spectral_create(3, "L");
  REQUIRE(c != nullptr);
  for (long long x1 = -3; x1 <= 3; ++x1) {
    for (long long x2 = -3; x2 <= 3; ++x2) {
      const double re = std::sin(0.3 * static_cast<double>(3 * x1 + x2));
      const double im = std::cos(0.7 * static_cast<double>(x1 - 2 * x2));
      REQUIRE(nhf_spectral_set(c, x1, x2, re, im) == NHF_OK);
    }
  }

  nhf_grid* f = nullptr;
  REQUIRE(nhf_synthesize(c, 2.0, 3.0, 16, 12, &f) == NHF_OK);
  REQUIRE(f != nullptr);

  nhf_spectral* back = nullptr;
  REQUIRE(nhf_analyze(f, 2.0, 3.0, 3, "L", &back) == NHF_OK);
  REQUIRE(back != nullptr);

  double worst = 0.0;
  for (long long x1 = -3; x1 <= 3; ++x1) {
    for (long long x2 = -3; x2 <= 3; ++x2) {
      double ar = 0, ai = 0, br = 0, bi = 0;
      REQUIRE(nhf_spectral_get(c, x1, x2, &ar, &ai) == NHF_OK);
      REQUIRE(nhf_spectral_get(back, x1, x2, &br, &bi) == NHF_OK);
      worst = std::max(worst, std::hypot(ar - br, ai - bi));
    }
  }
  CHECK(worst < 1e-12);

  // Aliasing precondition: n must exceed 2K.
  nhf_spectral* tight = nullptr;
  CHECK(nhf_analyze(f, 2.0, 3.0, 8, "L", &tight) == NHF_ERR_PARSE);
  CHECK(tight == nullptr);

  nhf_spectral_free(back);
  nhf_grid_free(f);
  nhf_spectral_free(c);
}

TEST_CASE("symbol constructors and evaluation agree with closed forms") {
  nhf_symbol* s = nhf_symbol_constant_p(0.0, 1.0, 1.0, 1.0);
  REQUIRE(s != nullptr);
  double re = 0.0, im = 0.0;
  REQUIRE(nhf_symbol_eval(s, 3, -1, &re, &im) == NHF_OK);
  // For h = (1,1): sigma(xi) = 2 pi i (xi1 + c xi2); c = i gives 2pi + 6pi i.
  CHECK(re == doctest::Approx(2.0 * kPi).epsilon(1e-13));
  CHECK(im == doctest::Approx(6.0 * kPi).epsilon(1e-13));

  nhf_symbol* t = nhf_symbol_from_operator("d1 + i d2", 1.0, 1.0);
  REQUIRE(t != nullptr);
  double re2 = 0.0, im2 = 0.0;
  REQUIRE(nhf_symbol_eval(t, 3, -1, &re2, &im2) == NHF_OK);
  CHECK(re2 == doctest::Approx(re).epsilon(1e-13));
  CHECK(im2 == doctest::Approx(im).epsilon(1e-13));

  CHECK(nhf_symbol_from_operator("d3 + d1", 1.0, 1.0) == nullptr);
  CHECK(nhf_symbol_constant_p(0.0, 0.0, 1.0, 1.0) == nullptr);
  CHECK(std::strlen(nhf_last_error()) > 0);

  nhf_symbol_free(t);
  nhf_symbol_free(s);
}

TEST_CASE("division solver succeeds off the zero set and rejects bad data") {
  // c = -1 with matched weights: sigma vanishes exactly on xi1 == xi2.
  nhf_symbol* s = nhf_symbol_constant_p(-1.0, 0.0, kE, kE);
  REQUIRE(s != nullptr);

  nhf_spectral* rhs = nhf_spectral_create(3, "L");
  REQUIRE(rhs != nullptr);
  for (long long x1 = -3; x1 <= 3; ++x1) {
    for (long long x2 = -3; x2 <= 3; ++x2) {
      if (x1 == x2) continue;
      const std::complex<double> w_true(
          0.1 * static_cast<double>(x1) + 0.5,
          0.2 * static_cast<double>(x2) - 0.3);
      double sr = 0, si = 0;
      REQUIRE(nhf_symbol_eval(s, x1, x2, &sr, &si) == NHF_OK);
      const std::complex<double> v = std::complex<double>(sr, si) * w_true;
      REQUIRE(nhf_spectral_set(rhs, x1, x2, v.real(), v.imag()) == NHF_OK);
    }
  }

  nhf_spectral* w = nullptr;
  char* rep_text = nullptr;
  REQUIRE(nhf_solve(s, rhs, 1e-12, &w, &rep_text) == NHF_OK);
  REQUIRE(w != nullptr);
  const json rep = json::parse(take(&rep_text));
  CHECK(rep.at("admissibility").at("admissible") == true);
  CHECK(rep.at("residual").get<double>() < 1e-12);

  double wr = 0, wi = 0;
  REQUIRE(nhf_spectral_get(w, 2, -1, &wr, &wi) == NHF_OK);
  CHECK(wr == doctest::Approx(0.7).epsilon(1e-10));
  CHECK(wi == doctest::Approx(-0.5).epsilon(1e-10));
  REQUIRE(nhf_spectral_get(w, 1, 1, &wr, &wi) == NHF_OK);
  CHECK(wr == 0.0);
  CHECK(wi == 0.0);
  nhf_spectral_free(w);

  // Charge a resonant frequency: the solver must refuse and say where.
  REQUIRE(nhf_spectral_set(rhs, 2, 2, 1.0, 0.0) == NHF_OK);
  nhf_spectral* w2 = nullptr;
  char* bad_text = nullptr;
  CHECK(nhf_solve(s, rhs, 1e-12, &w2, &bad_text) == NHF_ERR_INADMISSIBLE);
  CHECK(w2 == nullptr);
  CHECK(std::strlen(nhf_last_error()) > 0);
  const json bad = json::parse(take(&bad_text));
  CHECK(bad.at("admissible") == false);
  CHECK(bad.at("violation_total") == 1);
  CHECK(bad.at("violations").at(0).at("xi1") == 2);
  CHECK(bad.at("violations").at(0).at("xi2") == 2);

  nhf_spectral_free(rhs);
  nhf_symbol_free(s);
}

TEST_CASE("classification and evidence scans report verdicts") {
  char* text = nullptr;
  REQUIRE(nhf_classify(0.0, 1.0, 1.0, 1.0, 1000, 3.0, &text) == NHF_OK);
  const json rep = json::parse(take(&text));
  CHECK(rep.at("gh") == "yes");
  CHECK(rep.at("gs") == "yes");
  CHECK(rep.at("branch") == "imaginary-transport-component");

  char* rat = nullptr;
  REQUIRE(nhf_liouville_evidence(0.5, 1000, 3.0, &rat) == NHF_OK);
  CHECK(json::parse(take(&rat)).at("verdict") == "rational");

  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  char* irr = nullptr;
  REQUIRE(nhf_liouville_evidence(phi, 10000, 3.0, &irr) == NHF_OK);
  const json pr = json::parse(take(&irr));
  CHECK(pr.at("verdict") == "no-liouville-evidence");
  CHECK(pr.at("scan_complete") == true);
}

TEST_CASE("command runners produce deterministic reports") {
  const std::string cfg =
      R"({"h1": 2.0, "h2": 3.0, "K": 5, "n": 32, "seed": 3, "trials": 5})";
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(nhf_run_validate(cfg.c_str(), &a) == NHF_OK);
  REQUIRE(nhf_run_validate(cfg.c_str(), &b) == NHF_OK);
  const std::string ta = take(&a);
  const std::string tb = take(&b);
  CHECK(ta == tb);
  const json rep = json::parse(ta);
  CHECK(rep.at("all_pass") == true);
  CHECK(rep.at("command") == "validate");

  char* d = nullptr;
  REQUIRE(nhf_run_diagnose(R"({"c_re": 0.5, "qmax": 100})", &d) == NHF_OK);
  CHECK(json::parse(take(&d)).at("branch") == "real-rational-coefficient");
}

TEST_CASE("command runners reject bad commands and configs") {
  char* out = nullptr;
  CHECK(nhf_run("frobnicate", "{}", &out) == NHF_ERR_PARSE);
  CHECK(out == nullptr);
  CHECK(nhf_run_validate("{not json", &out) == NHF_ERR_PARSE);
  CHECK(nhf_run_validate(nullptr, &out) == NHF_ERR_PARSE);
  CHECK(std::strlen(nhf_last_error()) > 0);
  CHECK(nhf_run_validate(R"({"bogus": 1})", &out) == NHF_ERR_PARSE);
}
