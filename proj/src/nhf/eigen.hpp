#pragma once

#include "nhf/common.hpp"

namespace nhf {

// Boundary weight pair: h_j * f|_{x_j=0} = f|_{x_j=1}. h=(1,1) is the periodic case.
struct BoundaryParams {
  double h1 = 1.0;
  double h2 = 1.0;
  void check() const {
    require(h1 > 0.0 && h2 > 0.0, Status::parse, "boundary weights must be positive");
  }
};

struct FreqIndex {
  long long xi1 = 0;
  long long xi2 = 0;
  friend bool operator==(const FreqIndex&, const FreqIndex&) = default;
};

struct EigenData {
  cplx lambda;    // eigenvalue of the model operator at this frequency
  double weight;  // (1 + |lambda|^2)^{1/4}, always >= 1
};

struct EigenData1D {
  cplx lambda1d;    // -i log h_j + 2 pi xi_j
  double weight1d;  // (1 + |lambda1d|^2)^{1/2}, always >= 1
};

// lambda_xi = (log h1 + 2 pi i xi1)^2 + (log h2 + 2 pi i xi2)^2.
cplx eigenvalue_2d(const BoundaryParams& h, FreqIndex xi);

// <xi> = (1 + |lambda_xi|^2)^{1/4}; even in xi.
double weight_2d(const BoundaryParams& h, FreqIndex xi);

EigenData eigen_data(const BoundaryParams& h, FreqIndex xi);

// One-dimensional factor: lambda_{xi_j} = -i log h_j + 2 pi xi_j.
cplx eigenvalue_1d(double hj, long long xij);

// <xi_j> = (1 + |lambda_{xi_j}|^2)^{1/2}.
double weight_1d(double hj, long long xij);

EigenData1D eigen_data_1d(double hj, long long xij);

// u_xi(x) = h^x e^{2 pi i x.xi}; satisfies the boundary relation u(1,.) = h1 u(0,.).
cplx eval_u(const BoundaryParams& h, FreqIndex xi, double x1, double x2);

// v_xi(x) = h^{-x} e^{2 pi i x.xi}; dual family, v(1,.) = h1^{-1} v(0,.).
cplx eval_v(const BoundaryParams& h, FreqIndex xi, double x1, double x2);

}  // namespace nhf
