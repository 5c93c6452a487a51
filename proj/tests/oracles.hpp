// Slow, independent reference implementations used to cross-check the
// library. Everything here is written naively on purpose: direct quadrature
// sums, long double accumulation, brute-force scans. Nothing in this header
// calls into the transform or diagnostics code under test.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using cplxl = std::complex<long double>;
using cplx = std::complex<double>;

inline constexpr long double kTwoPi = 6.283185307179586476925286766559L;

// Eigenvalue of the model operator at frequency xi, recomputed in long
// double arithmetic: sum over axes of (log h_j + 2 pi i xi_j)^2.
inline cplxl eigenvalue(long double h1, long double h2, long long xi1,
                        long long xi2) {
  const cplxl m1(std::log(h1), kTwoPi * static_cast<long double>(xi1));
  const cplxl m2(std::log(h2), kTwoPi * static_cast<long double>(xi2));
  return m1 * m1 + m2 * m2;
}

// Anisotropic weight <xi> = (1 + |lambda_xi|^2)^(1/4).
inline long double weight(long double h1, long double h2, long long xi1,
                          long long xi2) {
  const long double a = std::abs(eigenvalue(h1, h2, xi1, xi2));
  return std::pow(1.0L + a * a, 0.25L);
}

// Grid inner product <f, g> = mean over nodes of f * conj(g), accumulated
// in long double.
inline cplxl grid_inner(const std::vector<cplx>& f, const std::vector<cplx>& g) {
  cplxl acc(0.0L, 0.0L);
  for (std::size_t k = 0; k < f.size(); ++k) {
    acc += cplxl(f[k]) * std::conj(cplxl(g[k]));
  }
  return acc / static_cast<long double>(f.size());
}

// Eigenfunction u_xi = h^x e^(2 pi i x.xi) sampled on the n1 x n2 grid,
// stored row-major with x2 varying fastest: out[k1 * n2 + k2].
inline std::vector<cplx> sample_u(double h1, double h2, long long xi1,
                                  long long xi2, int n1, int n2) {
  std::vector<cplx> out(static_cast<std::size_t>(n1) * n2);
  for (int k1 = 0; k1 < n1; ++k1) {
    const long double x1 = static_cast<long double>(k1) / n1;
    for (int k2 = 0; k2 < n2; ++k2) {
      const long double x2 = static_cast<long double>(k2) / n2;
      const long double mag =
          std::pow((long double)h1, x1) * std::pow((long double)h2, x2);
      const long double ph = kTwoPi * (x1 * xi1 + x2 * xi2);
      out[static_cast<std::size_t>(k1) * n2 + k2] =
          cplx(static_cast<double>(mag * std::cos(ph)),
               static_cast<double>(mag * std::sin(ph)));
    }
  }
  return out;
}

// Dual eigenfunction v_xi = h^(-x) e^(2 pi i x.xi).
inline std::vector<cplx> sample_v(double h1, double h2, long long xi1,
                                  long long xi2, int n1, int n2) {
  return sample_u(1.0 / h1, 1.0 / h2, xi1, xi2, n1, n2);
}

// Direct O(n^2 K^2) analysis: c_xi = <f, v_xi> by grid quadrature.
inline cplx analyze_one(const std::vector<cplx>& f, double h1, double h2,
                        long long xi1, long long xi2, int n1, int n2) {
  const std::vector<cplx> v = sample_v(h1, h2, xi1, xi2, n1, n2);
  const cplxl ip = grid_inner(f, v);
  return cplx(static_cast<double>(ip.real()), static_cast<double>(ip.imag()));
}

// Brute-force distance of q*x to the nearest integer.
inline long double dist_to_z(long double t) {
  const long double r = t - std::floor(t);
  return std::min(r, 1.0L - r);
}

struct BruteMin {
  long long argmin_q = 0;
  long double min_val = 0.0L;
};

// min over q in [q_min, q_max] of q * dist(q x, Z), long double brute force.
inline BruteMin hurwitz_brute(long double x, long long q_min, long long q_max) {
  BruteMin best;
  for (long long q = q_min; q <= q_max; ++q) {
    const long double v = static_cast<long double>(q) * dist_to_z(q * x);
    if (best.argmin_q == 0 || v < best.min_val) {
      best.argmin_q = q;
      best.min_val = v;
    }
  }
  return best;
}

// max over q in [q_min, q_max] of the local irrationality exponent
// -log dist(q x, Z) / log q.
inline BruteMin mu_brute(long double x, long long q_min, long long q_max) {
  BruteMin best;
  for (long long q = q_min; q <= q_max; ++q) {
    const long double d = dist_to_z(q * x);
    if (d <= 0.0L) continue;
    const long double mu = -std::log(d) / std::log((long double)q);
    if (best.argmin_q == 0 || mu > best.min_val) {
      best.argmin_q = q;
      best.min_val = mu;
    }
  }
  return best;
}

}  // namespace oracle
