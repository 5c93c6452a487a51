#include <cmath>
#include <cstdio>
#include <doctest.h>
#include <limits>

#include "nhf/commands.hpp"
#include "nhf/config.hpp"
#include "nhf/divide.hpp"
#include "nhf/jsonio.hpp"
#include "nhf/normal_form.hpp"
#include "nhf/rng.hpp"
#include "nhf/spectral.hpp"
#include "nhf/transforms.hpp"

using nhf::json;

namespace {

const double kE = std::exp(1.0);

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("deterministic serializer fixes format, order, and non-finite values") {
  json j;
  j["b"] = 0.1;
  j["a"] = 3;
  j["bad"] = std::numeric_limits<double>::quiet_NaN();
  j["inf"] = std::numeric_limits<double>::infinity();
  j["s"] = "line\n\"quote\"";
  j["arr"] = json::array({1.0, 2.5});
  j["empty"] = json::object();
  const std::string text = nhf::dump_deterministic(j);
  CHECK(text ==
        "{\n"
        " \"b\": 0.10000000000000001,\n"
        " \"a\": 3,\n"
        " \"bad\": null,\n"
        " \"inf\": null,\n"
        " \"s\": \"line\\n\\\"quote\\\"\",\n"
        " \"arr\": [\n"
        "  1,\n"
        "  2.5\n"
        " ],\n"
        " \"empty\": {}\n"
        "}");
  CHECK(nhf::dump_deterministic(j) == text);  // stable across calls
}

TEST_CASE("json files round trip and reject malformed input") {
  TempFile tf("tmp_reports_io.json");
  json j;
  j["x"] = 1.25;
  j["y"] = json::array({1, 2, 3});
  nhf::write_json_file(tf.path, j);
  const json back = nhf::read_json_file(tf.path);
  CHECK(back.at("x") == 1.25);
  CHECK(back.at("y").size() == 3);

  nhf::write_text_file(tf.path, "{not json");
  CHECK_THROWS_AS(nhf::read_json_file(tf.path), nhf::Error);
  CHECK_THROWS_AS(nhf::read_text_file("no_such_file_here.txt"), nhf::Error);
}

TEST_CASE("config accessors validate types and reject unknown keys") {
  const json cfg{{"h1", 2.0}, {"h2", 3.0}, {"K", 8}, {"bogus", 1}};
  CHECK_THROWS_AS(nhf::cfg_check_keys(cfg, {"h1", "h2", "K"}), nhf::Error);
  try {
    nhf::cfg_check_keys(cfg, {"h1", "h2", "K"});
  } catch (const nhf::Error& e) {
    CHECK(std::string(e.what()).find("bogus") != std::string::npos);
  }

  CHECK(nhf::cfg_num(cfg, "h1", 1.0) == 2.0);
  CHECK(nhf::cfg_num(cfg, "missing", 7.5) == 7.5);
  CHECK_THROWS_AS(nhf::cfg_num(json{{"h1", "two"}}, "h1", 1.0), nhf::Error);
  CHECK_THROWS_AS(nhf::cfg_int(json{{"K", 2.5}}, "K", 1), nhf::Error);
  CHECK(nhf::cfg_int(json{{"K", nullptr}}, "K", 4) == 4);  // null reads as absent

  const nhf::BoundaryParams h = nhf::cfg_h(cfg);
  CHECK(h.h1 == 2.0);
  CHECK(h.h2 == 3.0);
  const nhf::GridSpec grid = nhf::cfg_grid(cfg, 8);
  CHECK(grid.n1 == 36);  // default 4K + 4
  CHECK(grid.n2 == 36);
  const nhf::GridSpec rect = nhf::cfg_grid(json{{"n1", 12}, {"n2", 20}}, 4);
  CHECK(rect.n1 == 12);
  CHECK(rect.n2 == 20);
}

TEST_CASE("validate command passes its invariant suite") {
  const json cfg{{"h1", 2.0}, {"h2", 3.0}, {"K", 6}, {"n", 32},
                 {"seed", 7},  {"trials", 20}};
  const auto out = nhf::run_validate(cfg);
  CHECK(out.status == nhf::Status::ok);
  CHECK(out.report.at("all_pass") == true);
  CHECK(out.report.at("checks").size() == 7);
  for (const auto& c : out.report.at("checks")) {
    INFO(c.at("name").get<std::string>());
    CHECK(c.at("pass") == true);
  }
  CHECK(out.report.at("frame_bounds").at("lower").get<double>() > 0.0);
}

TEST_CASE("validate command is deterministic for a fixed seed") {
  const json cfg{{"h1", 0.4}, {"h2", 1.7}, {"K", 5}, {"n", 24}, {"seed", 9},
                 {"trials", 10}};
  const auto a = nhf::run_validate(cfg);
  const auto b = nhf::run_validate(cfg);
  CHECK(nhf::dump_deterministic(a.report) == nhf::dump_deterministic(b.report));
}

TEST_CASE("validate command rejects unresolvable grids and unknown keys") {
  CHECK_THROWS_AS(nhf::run_validate(json{{"K", 6}, {"n", 12}}), nhf::Error);
  CHECK_THROWS_AS(nhf::run_validate(json{{"wat", 1}}), nhf::Error);
}

TEST_CASE("diagnose command reports the classification") {
  const json cfg{{"c_re", 0.0}, {"c_im", 1.0}, {"h1", 1.0}, {"h2", 1.0},
                 {"qmax", 100}};
  const auto out = nhf::run_diagnose(cfg);
  CHECK(out.status == nhf::Status::ok);
  CHECK(out.report.at("command") == "diagnose");
  CHECK(out.report.at("gh") == "yes");
  CHECK(out.report.at("gs") == "yes");
  CHECK(out.report.at("branch") == "imaginary-transport-component");

  TempFile curve("tmp_reports_curve.csv");
  const json cfg2{{"c_re", 0.5}, {"qmax", 100}, {"out", curve.path}};
  const auto out2 = nhf::run_diagnose(cfg2);
  CHECK(out2.report.at("branch") == "real-rational-coefficient");
  const std::string csv = nhf::read_text_file(curve.path);
  CHECK(csv.rfind("R,min_abs_sigma,implied_M\n", 0) == 0);
}

TEST_CASE("transform command round trips through files") {
  const nhf::BoundaryParams h{2.0, 3.0};
  nhf::SpectralField c(4, nhf::Basis::L);
  nhf::Rng rng(21u);
  for (auto& z : c.coeffs) z = rng.box();
  const nhf::GridField f = nhf::synthesize(c, h, {20, 20});

  TempFile grid_in("tmp_reports_grid_in.csv");
  TempFile spec_out("tmp_reports_spec.json");
  TempFile grid_out("tmp_reports_grid_out.csv");
  nhf::write_grid_csv(f, grid_in.path);

  const json fwd{{"h1", 2.0}, {"h2", 3.0}, {"K", 4},
                 {"input", grid_in.path}, {"out", spec_out.path}};
  const auto out1 = nhf::run_transform(fwd);
  CHECK(out1.status == nhf::Status::ok);
  CHECK(out1.report.at("direction") == "forward");
  CHECK(out1.report.at("coeff_l2").get<double>() > 0.0);

  const nhf::SpectralField back = nhf::read_spectral_json(spec_out.path);
  CHECK(nhf::spectral_linf_diff(c, back) < 1e-12);

  const json inv{{"h1", 2.0}, {"h2", 3.0}, {"n", 20},
                 {"inverse", true}, {"input", spec_out.path},
                 {"out", grid_out.path}};
  const auto out2 = nhf::run_transform(inv);
  CHECK(out2.status == nhf::Status::ok);
  const nhf::GridField f2 = nhf::read_grid_csv(grid_out.path);
  CHECK(nhf::grid_linf_diff(f, f2) < 1e-12);
}

TEST_CASE("solve command divides a manufactured right-hand side") {
  // sigma = 2 pi i (xi1 - xi2) for c = -1 on matched weights.
  const nhf::BoundaryParams h{kE, kE};
  const nhf::Symbol s = nhf::symbol_constant_P(nhf::cplx(-1.0, 0.0), h);
  nhf::SpectralField w_true(6, nhf::Basis::L);
  nhf::Rng rng(33u);
  for (size_t i = 0; i < w_true.coeffs.size(); ++i) {
    const auto xi = w_true.freq_of(i);
    if (xi.xi1 != xi.xi2) w_true.coeffs[i] = rng.box();
  }
  const nhf::SpectralField fhat = nhf::apply_multiplier(s, w_true);
  TempFile rhs("tmp_reports_rhs.json");
  TempFile sol("tmp_reports_sol.json");
  nhf::write_spectral_json(fhat, rhs.path);

  const json cfg{{"h1", kE}, {"h2", kE}, {"c_re", -1.0},
                 {"input", rhs.path}, {"out", sol.path}};
  const auto out = nhf::run_solve(cfg);
  CHECK(out.status == nhf::Status::ok);
  CHECK(out.report.at("residual").get<double>() < 1e-12);
  CHECK(out.report.at("admissibility").at("admissible") == true);
  const nhf::SpectralField w = nhf::read_spectral_json(sol.path);
  CHECK(nhf::spectral_linf_diff(w, w_true) < 1e-10);

  // Charge the resonant diagonal: the command must refuse.
  nhf::SpectralField bad = fhat;
  bad.at(3, 3) = nhf::cplx(1.0, 0.0);
  nhf::write_spectral_json(bad, rhs.path);
  try {
    nhf::run_solve(cfg);
    FAIL("expected an inadmissible-data error");
  } catch (const nhf::Error& e) {
    CHECK(e.status == nhf::Status::inadmissible);
    CHECK(e.details.at("violation_total").get<long long>() == 1);
  }
}

TEST_CASE("normalform command reduces and gates on convergence") {
  const json a{{"mean", 2.0},
               {"modes", json::array({json{{"k", 1}, {"re", 0.05}}})}};
  const json cfg{{"h1", 1.0}, {"h2", 1.0}, {"K", 8}, {"n", 48}, {"a", a},
                 {"qmax", 200}};
  const auto out = nhf::run_normalform(cfg);
  CHECK(out.status == nhf::Status::ok);
  CHECK(out.report.at("convergence_gate") == true);
  CHECK(out.report.at("reduced").at("mean") == 2.0);
  CHECK(out.report.at("probe") == "finite-smoothness");
  CHECK(out.report.at("diagnosis").at("branch") == "real-rational-coefficient");
  const double r1 =
      out.report.at("residual_coarse").at("residual").get<double>();
  const double r2 = out.report.at("residual_fine").at("residual").get<double>();
  CHECK(r2 < r1);
}

TEST_CASE("normalform command solves against a grid right-hand side") {
  const nhf::BoundaryParams h{1.0, 1.0};
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  nhf::CoefficientFunction a;
  a.mean = phi;
  a.modes[1] = nhf::cplx(0.05, 0.0);
  a.modes[-1] = nhf::cplx(0.05, 0.0);

  nhf::SpectralField c(5, nhf::Basis::L);
  nhf::Rng rng(44u);
  for (auto& z : c.coeffs) z = rng.box();
  const nhf::GridField w_true = nhf::synthesize(c, h, {64, 64});
  const nhf::GridField f = nhf::apply_variable_P(a, h, w_true);

  TempFile fin("tmp_reports_nf_rhs.csv");
  TempFile wout("tmp_reports_nf_sol.csv");
  nhf::write_grid_csv(f, fin.path);

  const json acfg{{"mean", phi},
                  {"modes", json::array({json{{"k", 1}, {"re", 0.05}}})}};
  const json cfg{{"h1", 1.0},  {"h2", 1.0},       {"K", 16},
                 {"n", 64},    {"a", acfg},       {"input", fin.path},
                 {"out_grid", wout.path}, {"qmax", 200}};
  const auto out = nhf::run_normalform(cfg);
  CHECK(out.status == nhf::Status::ok);
  REQUIRE(out.report.contains("solve"));
  CHECK(out.report.at("solve").at("residual").get<double>() < 1e-8);
  CHECK(out.report.at("solve").at("admissibility").at("admissible") == true);
  const nhf::GridField w = nhf::read_grid_csv(wout.path);
  CHECK(w.spec == f.spec);
}

TEST_CASE("command dispatch rejects unknown commands") {
  CHECK_THROWS_AS(nhf::run_command("frobnicate", json::object()), nhf::Error);
  const auto out = nhf::run_command("diagnose", json{{"c_im", 1.0}});
  CHECK(out.status == nhf::Status::ok);
}
