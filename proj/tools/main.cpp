// Command-line front end. All numerics live behind the C API in
// libnhfourier; this translator only builds the config JSON from a config
// file plus flag overrides, runs the command, and prints the report.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nhfourier.h"

namespace {

using json = nlohmann::ordered_json;

// Collects flag values for one subcommand and writes the ones the user set
// into the config object, so flags override config-file fields.
class Binder {
 public:
  explicit Binder(CLI::App* sub) : sub_(sub) {}

  template <typename T>
  void opt(const std::string& flag, const std::string& key,
           const std::string& desc) {
    auto val = std::make_shared<T>();
    CLI::Option* o = sub_->add_option(flag, *val, desc);
    finalizers_.push_back([o, val, key](json* cfg) {
      if (o->count() > 0) (*cfg)[key] = *val;
    });
  }

  void flag(const std::string& name, const std::string& key,
            const std::string& desc) {
    auto val = std::make_shared<bool>(false);
    CLI::Option* o = sub_->add_flag(name, *val, desc);
    finalizers_.push_back([o, val, key](json* cfg) {
      if (o->count() > 0) (*cfg)[key] = *val;
    });
  }

  void radii(const std::string& flag, const std::string& key,
             const std::string& desc) {
    auto val = std::make_shared<std::vector<long long>>();
    CLI::Option* o = sub_->add_option(flag, *val, desc)->delimiter(',');
    finalizers_.push_back([o, val, key](json* cfg) {
      if (o->count() > 0) (*cfg)[key] = *val;
    });
  }

  void inline_json(const std::string& flag, const std::string& key,
                   const std::string& desc) {
    auto val = std::make_shared<std::string>();
    CLI::Option* o = sub_->add_option(flag, *val, desc);
    finalizers_.push_back([o, val, key](json* cfg) {
      if (o->count() == 0) return;
      json parsed = json::parse(*val, nullptr, false);
      if (parsed.is_discarded()) {
        throw std::runtime_error("flag " + key + " is not valid JSON");
      }
      (*cfg)[key] = std::move(parsed);
    });
  }

  void config_file(const std::string& flag, const std::string& desc) {
    config_path_ = std::make_shared<std::string>();
    sub_->add_option(flag, *config_path_, desc);
  }

  json build() const {
    json cfg = json::object();
    if (config_path_ && !config_path_->empty()) {
      std::ifstream in(*config_path_, std::ios::binary);
      if (!in.good()) {
        throw std::runtime_error("cannot open config file " + *config_path_);
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      cfg = json::parse(ss.str(), nullptr, false);
      if (cfg.is_discarded() || !cfg.is_object()) {
        throw std::runtime_error("config file is not a JSON object");
      }
    }
    for (const auto& fn : finalizers_) fn(&cfg);
    return cfg;
  }

  CLI::App* sub() { return sub_; }

 private:
  CLI::App* sub_;
  std::shared_ptr<std::string> config_path_;
  std::vector<std::function<void(json*)>> finalizers_;
};

void add_common(Binder* b) {
  b->config_file("--config", "JSON config file; flags override its fields");
  b->opt<double>("--h1", "h1", "boundary weight in x1 (default 1)");
  b->opt<double>("--h2", "h2", "boundary weight in x2 (default 1)");
  b->opt<long long>("--K", "K", "spectral truncation (default 16)");
  b->opt<long long>("--n", "n", "grid side; default 4K+4");
  b->opt<long long>("--n1", "n1", "grid side in x1 (overrides --n)");
  b->opt<long long>("--n2", "n2", "grid side in x2 (overrides --n)");
  b->opt<std::string>("--out", "out", "output path for the command's artifact");
}

int run(const std::string& name, const Binder& b) {
  const json cfg = b.build();
  const std::string cfg_str = cfg.dump();
  char* report = nullptr;
  const int rc = nhf_run(name.c_str(), cfg_str.c_str(), &report);
  if (report != nullptr) {
    std::fputs(report, stdout);
    std::fputc('\n', stdout);
    nhf_string_free(report);
  }
  if (rc != 0) {
    const char* msg = nhf_last_error();
    if (msg != nullptr && msg[0] != '\0') {
      std::fprintf(stderr, "error (status %d): %s\n", rc, msg);
    }
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonharmonic Fourier analysis on the unit square"};
  app.require_subcommand(1);

  Binder validate(app.add_subcommand(
      "validate", "run the measured invariant suite and report each check"));
  add_common(&validate);
  validate.opt<std::uint64_t>("--seed", "seed", "RNG seed for trial fields");
  validate.opt<long long>("--trials", "trials", "random trials for frame bounds");

  Binder diagnose(app.add_subcommand(
      "diagnose", "classify d1 + c d2: regularity/solvability with evidence"));
  add_common(&diagnose);
  diagnose.opt<double>("--c-re", "c_re", "Re(c) of the transport coefficient");
  diagnose.opt<double>("--c-im", "c_im", "Im(c) of the transport coefficient");
  diagnose.opt<std::string>("--c-num", "c_num",
                            "exact rational c: decimal numerator");
  diagnose.opt<std::string>("--c-den", "c_den",
                            "exact rational c: decimal denominator");
  diagnose.opt<long long>("--qmax", "qmax", "Diophantine scan depth (default 10^4)");
  diagnose.opt<double>("--threshold", "threshold",
                       "certified-exponent cutoff (default 3)");
  diagnose.opt<double>("--tol", "tol", "coefficient-relation tolerance");
  diagnose.flag("--exact-relation", "exact_relation",
                "assert c log h2 = -log h1 exactly");
  diagnose.radii("--radii", "radii", "exponent-curve shell radii, comma list");
  diagnose.opt<long long>("--zero-scan-radius", "zero_scan_radius",
                          "radius of the exact zero-set scan");

  Binder solve(app.add_subcommand(
      "solve", "divide a right-hand side by the operator symbol"));
  add_common(&solve);
  solve.opt<double>("--c-re", "c_re", "Re(c) of the transport coefficient");
  solve.opt<double>("--c-im", "c_im", "Im(c) of the transport coefficient");
  solve.opt<std::string>("--operator", "operator",
                         "differential expression, e.g. \"d1 - d2\"");
  solve.opt<std::string>("--input", "input",
                         "right-hand side: spectral JSON or grid CSV");
  solve.opt<std::string>("--out-grid", "out_grid", "grid CSV path for w");
  solve.opt<double>("--tol", "tol", "relative zero cutoff (default 1e-12)");
  solve.opt<double>("--growth-guard", "growth_guard",
                    "flag |w_hat| above <xi>^g as blow-up evidence");

  Binder normalform(app.add_subcommand(
      "normalform", "reduce d1 + a(x1) d2 to its mean and verify intertwining"));
  add_common(&normalform);
  normalform.inline_json("--a", "a",
                         "coefficient series {\"mean\":..,\"modes\":[..]}");
  normalform.opt<std::string>("--a-csv", "a_csv",
                              "coefficient samples, one real per line");
  normalform.opt<std::string>("--probe", "probe",
                              "finite-smoothness (default) or band-limited");
  normalform.opt<std::string>("--input", "input", "right-hand side grid CSV");
  normalform.opt<std::string>("--out-grid", "out_grid", "grid CSV path for w");
  normalform.opt<double>("--tol", "tol", "relative zero cutoff for the division");
  normalform.opt<long long>("--qmax", "qmax", "Diophantine scan depth");
  normalform.opt<double>("--threshold", "threshold", "certified-exponent cutoff");
  normalform.opt<std::uint64_t>("--seed", "seed", "RNG seed for band-limited probe");
  normalform.opt<double>("--growth-guard", "growth_guard",
                         "flag |w_hat| above <xi>^g as blow-up evidence");

  Binder transform(app.add_subcommand(
      "transform", "analyze a grid field or synthesize coefficients"));
  add_common(&transform);
  transform.opt<std::string>("--basis", "basis", "L (default) or Lstar");
  transform.flag("--inverse", "inverse", "synthesize instead of analyze");
  transform.opt<std::string>("--input", "input",
                             "grid CSV (forward) or spectral JSON (inverse)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("validate")) return run("validate", validate);
    if (app.got_subcommand("diagnose")) return run("diagnose", diagnose);
    if (app.got_subcommand("solve")) return run("solve", solve);
    if (app.got_subcommand("normalform")) return run("normalform", normalform);
    if (app.got_subcommand("transform")) return run("transform", transform);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error (status 2): %s\n", e.what());
    return 2;
  }
  return 2;
}
