#pragma once

#include <string>
#include <vector>

#include "nhf/common.hpp"

namespace nhf {

// Uniform grid on [0,1)^2 with nodes (k1/n1, k2/n2).
struct GridSpec {
  int n1 = 0;
  int n2 = 0;
  void check() const {
    require(n1 >= 4 && n2 >= 4, Status::parse, "grid needs at least 4 samples per axis");
  }
  long long size() const { return static_cast<long long>(n1) * n2; }
  double x1(int k) const { return static_cast<double>(k) / n1; }
  double x2(int k) const { return static_cast<double>(k) / n2; }
  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Complex samples, row-major: values[k1 * n2 + k2].
struct GridField {
  GridSpec spec;
  std::vector<cplx> values;

  GridField() = default;
  explicit GridField(GridSpec s) : spec(s), values(static_cast<size_t>(s.size())) {
    s.check();
  }
  cplx& at(int k1, int k2) { return values[static_cast<size_t>(k1) * spec.n2 + k2]; }
  const cplx& at(int k1, int k2) const {
    return values[static_cast<size_t>(k1) * spec.n2 + k2];
  }
  void check() const {
    spec.check();
    require(values.size() == static_cast<size_t>(spec.size()), Status::parse,
            "grid field shape mismatch");
  }
};

// L2 norm in the plain-average quadrature convention: sqrt(mean |f|^2).
double grid_l2(const GridField& f);

// Max pointwise difference; shapes must match.
double grid_linf_diff(const GridField& a, const GridField& b);

// CSV: one grid row per line, 2*n2 numbers "re,im,re,im,...". No header.
void write_grid_csv(const GridField& f, const std::string& path);
GridField read_grid_csv(const std::string& path);

// Binary little-endian: int64 n1, int64 n2, then row-major interleaved
// float64 re,im.
void write_grid_bin(const GridField& f, const std::string& path);
GridField read_grid_bin(const std::string& path);

}  // namespace nhf
