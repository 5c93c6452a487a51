#include "nhf/config.hpp"

#include <algorithm>

namespace nhf {

namespace {

const json* find(const json& cfg, const std::string& key) {
  if (!cfg.is_object()) return nullptr;
  const auto it = cfg.find(key);
  if (it == cfg.end() || it->is_null()) return nullptr;
  return &*it;
}

}  // namespace

double cfg_num(const json& cfg, const std::string& key, double fallback) {
  const json* v = find(cfg, key);
  if (!v) return fallback;
  require(v->is_number(), Status::parse, "config field \"" + key + "\" must be a number");
  return v->get<double>();
}

long long cfg_int(const json& cfg, const std::string& key, long long fallback) {
  const json* v = find(cfg, key);
  if (!v) return fallback;
  require(v->is_number_integer(), Status::parse,
          "config field \"" + key + "\" must be an integer");
  return v->get<long long>();
}

bool cfg_bool(const json& cfg, const std::string& key, bool fallback) {
  const json* v = find(cfg, key);
  if (!v) return fallback;
  require(v->is_boolean(), Status::parse,
          "config field \"" + key + "\" must be a boolean");
  return v->get<bool>();
}

std::string cfg_str(const json& cfg, const std::string& key,
                    const std::string& fallback) {
  const json* v = find(cfg, key);
  if (!v) return fallback;
  require(v->is_string(), Status::parse,
          "config field \"" + key + "\" must be a string");
  return v->get<std::string>();
}

void cfg_check_keys(const json& cfg, const std::vector<std::string>& allowed) {
  require(cfg.is_object(), Status::parse, "config must be a JSON object");
  for (auto it = cfg.begin(); it != cfg.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
      throw Error(Status::parse, "unknown config field \"" + it.key() + "\"");
    }
  }
}

BoundaryParams cfg_h(const json& cfg) {
  BoundaryParams h;
  h.h1 = cfg_num(cfg, "h1", 1.0);
  h.h2 = cfg_num(cfg, "h2", 1.0);
  h.check();
  return h;
}

cplx cfg_c(const json& cfg, cplx fallback) {
  return cplx(cfg_num(cfg, "c_re", fallback.real()),
              cfg_num(cfg, "c_im", fallback.imag()));
}

int cfg_K(const json& cfg, int fallback) {
  const long long K = cfg_int(cfg, "K", fallback);
  require(K >= 1 && K <= 4096, Status::parse, "K must be in [1, 4096]");
  return static_cast<int>(K);
}

GridSpec cfg_grid(const json& cfg, int K) {
  const long long def = 4LL * K + 4;
  long long n1 = cfg_int(cfg, "n", def);
  long long n2 = n1;
  n1 = cfg_int(cfg, "n1", n1);
  n2 = cfg_int(cfg, "n2", n2);
  require(n1 >= 4 && n1 <= (1 << 20) && n2 >= 4 && n2 <= (1 << 20),
          Status::parse, "grid sides must be in [4, 2^20]");
  GridSpec spec{static_cast<int>(n1), static_cast<int>(n2)};
  spec.check();
  return spec;
}

std::vector<long long> cfg_radii(const json& cfg,
                                 const std::vector<long long>& fallback) {
  const json* v = find(cfg, "radii");
  if (!v) return fallback;
  require(v->is_array() && !v->empty(), Status::parse,
          "config field \"radii\" must be a nonempty array");
  std::vector<long long> out;
  for (const auto& el : *v) {
    require(el.is_number_integer(), Status::parse,
            "config field \"radii\" must hold integers");
    out.push_back(el.get<long long>());
  }
  return out;
}

std::optional<double> cfg_opt_num(const json& cfg, const std::string& key) {
  const json* v = find(cfg, key);
  if (!v) return std::nullopt;
  require(v->is_number(), Status::parse,
          "config field \"" + key + "\" must be a number");
  return v->get<double>();
}

}  // namespace nhf
