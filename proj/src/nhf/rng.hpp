#pragma once

#include <cstdint>
#include <random>

#include "nhf/common.hpp"

namespace nhf {

// Deterministic uniform source; identical seeds give identical streams on all
// platforms (mt19937_64 output mapped to [0,1) with 53 bits).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  cplx box() {  // re, im independently uniform in [-1, 1)
    const double re = uniform(-1.0, 1.0);
    const double im = uniform(-1.0, 1.0);
    return {re, im};
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace nhf
