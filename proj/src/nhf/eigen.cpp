#include "nhf/eigen.hpp"

#include <cmath>

namespace nhf {

cplx eigenvalue_2d(const BoundaryParams& h, FreqIndex xi) {
  h.check();
  const cplx t1(std::log(h.h1), two_pi * static_cast<double>(xi.xi1));
  const cplx t2(std::log(h.h2), two_pi * static_cast<double>(xi.xi2));
  return t1 * t1 + t2 * t2;
}

double weight_2d(const BoundaryParams& h, FreqIndex xi) {
  const cplx lam = eigenvalue_2d(h, xi);
  return std::pow(1.0 + std::norm(lam), 0.25);
}

EigenData eigen_data(const BoundaryParams& h, FreqIndex xi) {
  const cplx lam = eigenvalue_2d(h, xi);
  return {lam, std::pow(1.0 + std::norm(lam), 0.25)};
}

cplx eigenvalue_1d(double hj, long long xij) {
  require(hj > 0.0, Status::parse, "boundary weight must be positive");
  return cplx(two_pi * static_cast<double>(xij), -std::log(hj));
}

double weight_1d(double hj, long long xij) {
  return std::sqrt(1.0 + std::norm(eigenvalue_1d(hj, xij)));
}

EigenData1D eigen_data_1d(double hj, long long xij) {
  const cplx lam = eigenvalue_1d(hj, xij);
  return {lam, std::sqrt(1.0 + std::norm(lam))};
}

cplx eval_u(const BoundaryParams& h, FreqIndex xi, double x1, double x2) {
  h.check();
  const double amp = std::pow(h.h1, x1) * std::pow(h.h2, x2);
  const double phase = two_pi * (x1 * static_cast<double>(xi.xi1) +
                                 x2 * static_cast<double>(xi.xi2));
  return amp * cplx(std::cos(phase), std::sin(phase));
}

cplx eval_v(const BoundaryParams& h, FreqIndex xi, double x1, double x2) {
  h.check();
  const double amp = std::pow(h.h1, -x1) * std::pow(h.h2, -x2);
  const double phase = two_pi * (x1 * static_cast<double>(xi.xi1) +
                                 x2 * static_cast<double>(xi.xi2));
  return amp * cplx(std::cos(phase), std::sin(phase));
}

}  // namespace nhf
