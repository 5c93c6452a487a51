#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nhf/common.hpp"
#include "nhf/eigen.hpp"
#include "nhf/grid.hpp"

namespace nhf {

// Typed accessors over a JSON experiment config. Every getter validates the
// field's type and range and reports the offending key on failure.
double cfg_num(const json& cfg, const std::string& key, double fallback);
long long cfg_int(const json& cfg, const std::string& key, long long fallback);
bool cfg_bool(const json& cfg, const std::string& key, bool fallback);
std::string cfg_str(const json& cfg, const std::string& key,
                    const std::string& fallback);

// Rejects keys outside the allowed set; typo safety for config files.
void cfg_check_keys(const json& cfg, const std::vector<std::string>& allowed);

BoundaryParams cfg_h(const json& cfg);
cplx cfg_c(const json& cfg, cplx fallback = cplx(1.0, 0.0));
int cfg_K(const json& cfg, int fallback = 16);
// Grid from "n" (square) or "n1"/"n2"; default side = 4K + 4.
GridSpec cfg_grid(const json& cfg, int K);
std::vector<long long> cfg_radii(const json& cfg,
                                 const std::vector<long long>& fallback);
std::optional<double> cfg_opt_num(const json& cfg, const std::string& key);

inline constexpr std::uint64_t kDefaultSeed = 20240601;

}  // namespace nhf
