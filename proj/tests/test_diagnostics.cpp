#include <cmath>
#include <doctest.h>

#include "nhf/diagnostics.hpp"

using nhf::BoundaryParams;
using nhf::ClassifyOptions;
using nhf::FreqIndex;
using nhf::Symbol;

namespace {

const double kE = std::exp(1.0);
const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

Symbol resonant_line() {  // sigma = 2 pi i (xi1 + xi2)
  return nhf::symbol_constant_P(nhf::cplx(1.0, 0.0), {1.0, 1.0});
}

// Same values as sigma but under a generic descriptor, forcing dense scans.
Symbol densified(const Symbol& s) {
  return nhf::make_symbol([s](FreqIndex xi) { return s(xi); },
                          nhf::json{{"kind", "wrapped"}}, s.cache_radius());
}

}  // namespace

TEST_CASE("zero set lists the resonant line in lexicographic order") {
  const auto zeros = nhf::zero_set(resonant_line(), 8, 0.0);
  REQUIRE(zeros.size() == 17);
  CHECK(zeros.front() == FreqIndex{-8, 8});
  CHECK(zeros.back() == FreqIndex{8, -8});
  for (size_t i = 0; i < zeros.size(); ++i) {
    CHECK(zeros[i].xi1 + zeros[i].xi2 == 0);
    if (i > 0) CHECK(zeros[i].xi1 > zeros[i - 1].xi1);
  }
}

TEST_CASE("zero set with a tolerance picks up near zeros") {
  // sigma = 2 pi i (xi1 + phi xi2): |sigma| at (-1, 1) is 2 pi (phi - 1).
  const Symbol s = nhf::symbol_constant_P(nhf::cplx(kPhi, 0.0), {1.0, 1.0});
  const auto exact = nhf::zero_set(s, 16, 0.0);
  REQUIRE(exact.size() == 1);  // only the origin
  CHECK(exact[0] == FreqIndex{0, 0});
  const auto loose = nhf::zero_set(s, 16, 2.0 * M_PI * (kPhi - 1.0) + 1e-9);
  CHECK(loose.size() > 1);
}

TEST_CASE("dense scans refuse radii beyond the cap") {
  CHECK_THROWS_AS(nhf::zero_set(resonant_line(), 5000, 0.0), nhf::Error);
  try {
    nhf::zero_set(resonant_line(), 5000, 0.0);
  } catch (const nhf::Error& e) {
    CHECK(e.status == nhf::Status::resolution);
  }
}

TEST_CASE("regularity gate passes for the imaginary coefficient") {
  const Symbol s = nhf::symbol_constant_P(nhf::cplx(0.0, 1.0), {1.0, 1.0});
  const auto gate = nhf::ghe_gate(s, {1.0, 1.0}, 64, 2.0);
  CHECK(gate.pass);
  CHECK_FALSE(gate.witness.has_value());
  CHECK(gate.checked > 0);
}

TEST_CASE("regularity gate fails on the resonant line with the smallest witness") {
  const auto gate = nhf::ghe_gate(resonant_line(), {1.0, 1.0}, 64, 2.0);
  CHECK_FALSE(gate.pass);
  REQUIRE(gate.witness.has_value());
  CHECK(*gate.witness == FreqIndex{-64, 64});
  CHECK(gate.witness_abs_sigma == 0.0);
  CHECK(gate.witness_bound > 0.0);
}

TEST_CASE("solvability gate exempts exact zeros") {
  const auto gate = nhf::gs_gate(resonant_line(), {1.0, 1.0}, 64, 2.0);
  CHECK(gate.pass);
}

TEST_CASE("solvability gate still fails on small nonzero values") {
  const BoundaryParams h{1.0, 1.0};
  const Symbol s = nhf::make_symbol(
      [h](FreqIndex xi) {
        return nhf::cplx(std::pow(nhf::weight_2d(h, xi), -10.0), 0.0);
      },
      nhf::json{{"kind", "steep-decay"}});
  const auto gate = nhf::gs_gate(s, h, 16, 2.0);
  CHECK_FALSE(gate.pass);
  REQUIRE(gate.witness.has_value());
  CHECK(*gate.witness == FreqIndex{-16, -16});
}

TEST_CASE("gate report json names the witness") {
  const auto j = nhf::ghe_gate(resonant_line(), {1.0, 1.0}, 16, 2.0).to_json();
  CHECK(j.at("pass") == false);
  CHECK(j.at("witness").at("xi1") == -16);
  CHECK(j.at("witness").at("xi2") == 16);
}

TEST_CASE("exponent curve fast path agrees with the dense scan") {
  const BoundaryParams h{1.0, 1.0};
  const Symbol fast = nhf::symbol_constant_P(nhf::cplx(kPhi, 0.0), h);
  const Symbol dense = densified(fast);
  const std::vector<long long> radii{4, 8, 16, 32};
  const auto a = nhf::exponent_curve(fast, h, radii);
  const auto b = nhf::exponent_curve(dense, h, radii);
  REQUIRE(a.shells.size() == radii.size());
  REQUIRE(b.shells.size() == radii.size());
  for (size_t i = 0; i < radii.size(); ++i) {
    CHECK_FALSE(a.shells[i].empty);
    CHECK(a.shells[i].min_abs_sigma ==
          doctest::Approx(b.shells[i].min_abs_sigma).epsilon(1e-13));
    CHECK(a.shells[i].argmin == b.shells[i].argmin);
    CHECK(a.shells[i].implied_exponent ==
          doctest::Approx(b.shells[i].implied_exponent).epsilon(1e-12));
  }
}

TEST_CASE("fast path reaches radii the dense scan refuses") {
  const BoundaryParams h{1.0, 1.0};
  const Symbol fast = nhf::symbol_constant_P(nhf::cplx(kPhi, 0.0), h);
  const std::vector<long long> radii{8192};
  const auto curve = nhf::exponent_curve(fast, h, radii);
  REQUIRE(curve.shells.size() == 1);
  CHECK_FALSE(curve.shells[0].empty);
  CHECK(curve.shells[0].min_abs_sigma > 0.0);
  CHECK_THROWS_AS(nhf::exponent_curve(densified(fast), h, radii), nhf::Error);
}

TEST_CASE("exponent curve of a badly approximable coefficient stays near 1") {
  const BoundaryParams h{1.0, 1.0};
  const Symbol s = nhf::symbol_constant_P(nhf::cplx(kPhi, 0.0), h);
  // The implied exponent climbs toward 1 like ln q / ln(2 pi q); at these
  // radii it sits in the high 0.4s. Liouville-type symbols would blow past 2.
  const auto curve = nhf::exponent_curve(s, h, {32, 64, 128});
  for (const auto& shell : curve.shells) {
    REQUIRE(shell.exponent_defined);
    CHECK(shell.implied_exponent > 0.3);
    CHECK(shell.implied_exponent < 1.5);
  }
  const std::string csv = curve.to_csv();
  CHECK(csv.rfind("R,min_abs_sigma,implied_M\n", 0) == 0);
}

TEST_CASE("exponent curve validates its radii") {
  const Symbol s = resonant_line();
  CHECK_THROWS_AS(nhf::exponent_curve(s, {1.0, 1.0}, {}), nhf::Error);
  CHECK_THROWS_AS(nhf::exponent_curve(s, {1.0, 1.0}, {8, 8}), nhf::Error);
  CHECK_THROWS_AS(nhf::exponent_curve(s, {1.0, 1.0}, {8, 4}), nhf::Error);
  CHECK_THROWS_AS(nhf::exponent_curve(s, {1.0, 1.0}, {0, 4}), nhf::Error);
}

TEST_CASE("classification: imaginary coefficient gives both properties") {
  const auto rep = nhf::classify_constant_P(nhf::cplx(0.0, 1.0), {1.0, 1.0});
  CHECK(rep.gh == "yes");
  CHECK(rep.gs == "yes");
  CHECK(rep.branch == "imaginary-transport-component");
  CHECK_FALSE(rep.evidence_based);
  CHECK_FALSE(rep.diophantine.has_value());
}

TEST_CASE("classification: rational coefficient blocks regularity only") {
  const auto rep = nhf::classify_constant_P(nhf::cplx(0.5, 0.0), {1.0, 1.0});
  CHECK(rep.gh == "no");
  CHECK(rep.gs == "yes");
  CHECK(rep.branch == "real-rational-coefficient");
  CHECK_FALSE(rep.evidence_based);  // exactly rational in double
  REQUIRE(rep.diophantine.has_value());
  CHECK(rep.diophantine->rational);
}

TEST_CASE("classification: broken coefficient relation kills the zero set") {
  const auto rep = nhf::classify_constant_P(nhf::cplx(2.0, 0.0), {2.0, 1.0});
  CHECK(rep.gh == "yes");
  CHECK(rep.gs == "yes");
  CHECK(rep.branch == "coefficient-relation-broken");
  CHECK(rep.relation_state == "broken");
}

TEST_CASE("classification: matched weights with c = -1 are resonant") {
  const auto rep = nhf::classify_constant_P(nhf::cplx(-1.0, 0.0), {kE, kE});
  CHECK(rep.gh == "no");
  CHECK(rep.gs == "yes");
  CHECK(rep.branch == "real-rational-coefficient");
  CHECK(rep.relation_state == "holds");
  CHECK(!rep.zero_sample.empty());
}

TEST_CASE("classification: badly approximable coefficient passes on evidence") {
  const auto rep = nhf::classify_constant_P(nhf::cplx(kPhi, 0.0), {1.0, 1.0});
  CHECK(rep.gh == "yes");
  CHECK(rep.gs == "yes");
  CHECK(rep.branch == "no-liouville-evidence-at-depth");
  CHECK(rep.evidence_based);
  REQUIRE(rep.diophantine.has_value());
  CHECK(rep.diophantine->scan_complete);
}

TEST_CASE("classification: near miss of the coefficient relation is ambiguous") {
  const double cstar = -std::log(2.0) / std::log(3.0);
  const auto rep =
      nhf::classify_constant_P(nhf::cplx(cstar * (1.0 + 3e-12), 0.0), {2.0, 3.0});
  CHECK(rep.gh == "unknown");
  CHECK(rep.gs == "unknown");
  CHECK(rep.branch == "coefficient-relation-ambiguous");
  CHECK(rep.relation_state == "ambiguous");
}

TEST_CASE("classification: asserted relation overrides the float comparison") {
  const double cstar = -std::log(2.0) / std::log(3.0);
  ClassifyOptions opts;
  opts.exact_relation = true;
  const auto rep = nhf::classify_constant_P(nhf::cplx(cstar, 0.0), {2.0, 3.0}, opts);
  CHECK(rep.relation_state == "asserted");
  CHECK(rep.gh == "yes");  // log_3(2) shows no deep rational structure
  CHECK(rep.branch == "no-liouville-evidence-at-depth");

  ClassifyOptions bad = opts;
  CHECK_THROWS_AS(
      nhf::classify_constant_P(nhf::cplx(0.25, 0.0), {2.0, 3.0}, bad),
      nhf::Error);
}

TEST_CASE("classification: exact rational coefficient input") {
  ClassifyOptions opts;
  opts.has_exact_c = true;
  opts.c_num = "-1";
  opts.c_den = "2";
  const auto rep = nhf::classify_constant_P(nhf::cplx(-0.5, 0.0), {1.0, 1.0}, opts);
  CHECK(rep.gh == "no");
  CHECK(rep.gs == "yes");
  CHECK(rep.branch == "real-rational-coefficient");
  REQUIRE(rep.diophantine.has_value());
  CHECK(rep.diophantine->engine == "exact-rational");
  CHECK_FALSE(rep.evidence_based);
}

TEST_CASE("classification report json has the advertised shape") {
  const auto j = nhf::classify_constant_P(nhf::cplx(kPhi, 0.0), {1.0, 1.0}).to_json();
  CHECK(j.contains("gh"));
  CHECK(j.contains("gs"));
  CHECK(j.contains("evidence_based"));
  CHECK(j.contains("branch"));
  CHECK(j.at("relation").contains("state"));
  CHECK(j.at("zero_sample").is_array());
  CHECK(j.at("exponent_curve").at("shells").is_array());
  CHECK(j.at("diophantine").is_object());
  CHECK(j.at("options").at("q_max") == 10000);

  const auto ji = nhf::classify_constant_P(nhf::cplx(0.0, 1.0), {1.0, 1.0}).to_json();
  CHECK(ji.at("diophantine").is_null());
}

TEST_CASE("classification rejects degenerate inputs") {
  CHECK_THROWS_AS(nhf::classify_constant_P(nhf::cplx(0.0, 0.0), {1.0, 1.0}),
                  nhf::Error);
  ClassifyOptions opts;
  opts.q_max = 1;
  CHECK_THROWS_AS(nhf::classify_constant_P(nhf::cplx(0.5, 0.0), {1.0, 1.0}, opts),
                  nhf::Error);
}
