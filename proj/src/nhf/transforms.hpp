#pragma once

#include <vector>

#include "nhf/common.hpp"
#include "nhf/eigen.hpp"
#include "nhf/grid.hpp"
#include "nhf/spectral.hpp"

namespace nhf {

// Multiply samples by h1^{s*x1} h2^{s*x2}, s = +1 or -1.
void apply_weight(GridField& f, const BoundaryParams& h, int sign);

// Forward transform onto the biorthogonal basis: coefficients against the dual
// family, computed as the normalized DFT of f * h^{-x}. The weighted field of
// a boundary-compatible f is 1-periodic, so the uniform-grid rule is spectrally
// accurate; exact when f * h^{-x} is a trigonometric polynomial resolved by the
// grid. Requires n_j > 2K.
SpectralField analyze(const GridField& f, const BoundaryParams& h, int K);

// Forward transform onto the dual side: DFT of f * h^{+x}; basis tag Lstar.
SpectralField analyze_star(const GridField& f, const BoundaryParams& h, int K);

// Inverse transform: sum of kept modes times the basis family selected by the
// tag (L: u_xi = h^x e^{2 pi i x.xi}; Lstar: v_xi = h^{-x} e^{2 pi i x.xi}).
GridField synthesize(const SpectralField& c, const BoundaryParams& h, GridSpec spec);

// 1-D versions on a circle of n samples (used by the partial transforms and
// the coefficient-series plumbing).
std::vector<cplx> analyze_1d(const std::vector<cplx>& samples, double hj, int K,
                             Basis basis);
std::vector<cplx> synthesize_1d(const std::vector<cplx>& coeffs, double hj, int n,
                                Basis basis);

enum class Axis { x1 = 0, x2 = 1 };

// Transform in one variable only; the other variable stays on the grid.
// Layout: retained index outer, frequency (-K..K) inner.
struct PartialField {
  Axis axis = Axis::x2;  // the transformed variable
  Basis basis = Basis::L;
  int K = 0;             // truncation in the transformed variable
  int n_retained = 0;    // grid samples in the retained variable
  int n_transformed = 0; // grid size the transform was taken on (for inversion)
  std::vector<cplx> data;

  int side() const { return 2 * K + 1; }
  cplx& at(int r, long long q) {
    return data[static_cast<size_t>(r) * side() + static_cast<size_t>(q + K)];
  }
  const cplx& at(int r, long long q) const {
    return data[static_cast<size_t>(r) * side() + static_cast<size_t>(q + K)];
  }
  void check() const {
    require(K >= 0 && n_retained >= 1 && n_transformed >= 1 &&
                data.size() == static_cast<size_t>(n_retained) * side(),
            Status::parse, "partial field shape mismatch");
  }
};

PartialField partial_analyze(const GridField& f, const BoundaryParams& h, Axis axis,
                             int K_axis, Basis basis);
GridField partial_synthesize(const PartialField& p, const BoundaryParams& h);

// Empirical frame statistics over random band-limited trial fields, plus the
// analytic envelope [inf h^{-x}, sup h^{-x}] that must contain them
// (coefficient energy equals ||f * h^{-x}||^2 by Parseval on the weighted field).
struct FrameBounds {
  double lower = 0, upper = 0;            // min/max of ||f*h^{-x}|| / ||f||
  double lower_star = 0, upper_star = 0;  // dual side, weight h^{+x}
  double env_lower = 0, env_upper = 0;
  double env_lower_star = 0, env_upper_star = 0;
  int trials = 0;
};
FrameBounds frame_bounds(const BoundaryParams& h, int trials, GridSpec grid, int K,
                         std::uint64_t seed = 20240601u);

// max over j <= k of (sum |lambda_xi^j c(xi)|^2)^{1/2}: spectral surrogate of
// the graded operator-power seminorms; nondecreasing in k.
double sobolev_seminorm(const SpectralField& c, const BoundaryParams& h, int k);

// 1-D derivative-sum seminorm on the plain circle: sum_{b<=k} ||d^b phi / dx^b||,
// derivatives taken spectrally on n uniform samples.
double p_seminorm_1d(const std::vector<cplx>& samples, int k);

// Full-band derivative in the weighted calculus along one axis:
// multiply the axis-weighted spectrum by (log h_j + 2 pi i xi_j).
// Signed bin convention: frequency m for m <= n/2, else m - n.
GridField spectral_derivative(const GridField& f, const BoundaryParams& h, Axis axis);

// Relative spectral energy of f * h^{-x} in the top octave (|freq| > n/4) of
// one axis; the aliasing evidence used by resolution gates.
double top_octave_mass(const GridField& f, const BoundaryParams& h, Axis axis);

}  // namespace nhf
