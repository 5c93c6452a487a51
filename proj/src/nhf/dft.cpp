#include "nhf/dft.hpp"

#include <fftw3.h>

#include <mutex>

namespace nhf {

namespace {
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}
// FFTW_ESTIMATE keeps plans deterministic (no runtime measurement).
constexpr unsigned kFlags = FFTW_ESTIMATE;
}  // namespace

void dft2_inplace(cplx* data, int n1, int n2, int sign) {
  require(n1 >= 1 && n2 >= 1, Status::parse, "grid dimensions must be positive");
  auto* buf = reinterpret_cast<fftw_complex*>(data);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_dft_2d(n1, n2, buf, buf,
                            sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, kFlags);
  }
  require(plan != nullptr, Status::internal, "dft planning failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
  }
}

void dft_axis_inplace(cplx* data, int n1, int n2, int axis, int sign) {
  require(n1 >= 1 && n2 >= 1, Status::parse, "grid dimensions must be positive");
  require(axis == 0 || axis == 1, Status::parse, "axis must be 0 or 1");
  auto* buf = reinterpret_cast<fftw_complex*>(data);
  const int len = axis == 0 ? n1 : n2;
  const int howmany = axis == 0 ? n2 : n1;
  const int stride = axis == 0 ? n2 : 1;
  const int dist = axis == 0 ? 1 : n2;
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_many_dft(1, &len, howmany, buf, nullptr, stride, dist,
                              buf, nullptr, stride, dist,
                              sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, kFlags);
  }
  require(plan != nullptr, Status::internal, "dft planning failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
  }
}

void dft1_inplace(std::vector<cplx>& data, int sign) {
  dft_axis_inplace(data.data(), 1, static_cast<int>(data.size()), 1, sign);
}

}  // namespace nhf
