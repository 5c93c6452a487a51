#pragma once

#include <vector>

#include "nhf/common.hpp"

namespace nhf {

// Unnormalized DFT kernels. sign = -1: out[k] = sum_x in[x] e^{-2 pi i kx/n}
// (forward); sign = +1: backward. Callers own all normalization.
// Plan creation is serialized process-wide; execution is concurrent-safe.

// In-place 2-D transform of a row-major n1 x n2 array.
void dft2_inplace(cplx* data, int n1, int n2, int sign);

// In-place batched 1-D transforms of a row-major n1 x n2 array along one axis
// (axis 0: n2 transforms of length n1; axis 1: n1 transforms of length n2).
void dft_axis_inplace(cplx* data, int n1, int n2, int axis, int sign);

// 1-D convenience.
void dft1_inplace(std::vector<cplx>& data, int sign);

}  // namespace nhf
