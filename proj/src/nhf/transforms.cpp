#include "nhf/transforms.hpp"

#include <cmath>

#include "nhf/dft.hpp"
#include "nhf/rng.hpp"

namespace nhf {

namespace {

std::vector<double> weight_row(double hj, int n, int sign) {
  std::vector<double> w(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k)
    w[static_cast<size_t>(k)] = std::pow(hj, sign * static_cast<double>(k) / n);
  return w;
}

long long signed_freq(int m, int n) {  // bins 0..n-1 -> -n/2+1..n/2 (n even: +n/2)
  return m <= n / 2 ? m : m - n;
}

SpectralField analyze_impl(const GridField& f, const BoundaryParams& h, int K,
                           int wsign, Basis tag) {
  f.check();
  h.check();
  require(K >= 0, Status::parse, "truncation K must be nonnegative");
  const int n1 = f.spec.n1, n2 = f.spec.n2;
  require(n1 > 2 * K && n2 > 2 * K, Status::parse,
          "aliasing: grid must satisfy n_j > 2K");
  const auto w1 = weight_row(h.h1, n1, wsign);
  const auto w2 = weight_row(h.h2, n2, wsign);
  std::vector<cplx> buf(f.values);
  for (int k1 = 0; k1 < n1; ++k1)
    for (int k2 = 0; k2 < n2; ++k2)
      buf[static_cast<size_t>(k1) * n2 + k2] *=
          w1[static_cast<size_t>(k1)] * w2[static_cast<size_t>(k2)];
  dft2_inplace(buf.data(), n1, n2, -1);
  const double scale = 1.0 / (static_cast<double>(n1) * n2);
  SpectralField out(K, tag);
  for (long long x1 = -K; x1 <= K; ++x1) {
    const int m1 = static_cast<int>((x1 % n1 + n1) % n1);
    for (long long x2 = -K; x2 <= K; ++x2) {
      const int m2 = static_cast<int>((x2 % n2 + n2) % n2);
      out.at(x1, x2) = buf[static_cast<size_t>(m1) * n2 + m2] * scale;
    }
  }
  return out;
}

}  // namespace

void apply_weight(GridField& f, const BoundaryParams& h, int sign) {
  f.check();
  h.check();
  const auto w1 = weight_row(h.h1, f.spec.n1, sign);
  const auto w2 = weight_row(h.h2, f.spec.n2, sign);
  for (int k1 = 0; k1 < f.spec.n1; ++k1)
    for (int k2 = 0; k2 < f.spec.n2; ++k2)
      f.at(k1, k2) *= w1[static_cast<size_t>(k1)] * w2[static_cast<size_t>(k2)];
}

SpectralField analyze(const GridField& f, const BoundaryParams& h, int K) {
  return analyze_impl(f, h, K, -1, Basis::L);
}

SpectralField analyze_star(const GridField& f, const BoundaryParams& h, int K) {
  return analyze_impl(f, h, K, +1, Basis::Lstar);
}

GridField synthesize(const SpectralField& c, const BoundaryParams& h, GridSpec spec) {
  c.check();
  h.check();
  spec.check();
  require(spec.n1 > 2 * c.K && spec.n2 > 2 * c.K, Status::parse,
          "aliasing: grid must satisfy n_j > 2K");
  GridField out(spec);
  for (long long x1 = -c.K; x1 <= c.K; ++x1) {
    const int m1 = static_cast<int>((x1 % spec.n1 + spec.n1) % spec.n1);
    for (long long x2 = -c.K; x2 <= c.K; ++x2) {
      const int m2 = static_cast<int>((x2 % spec.n2 + spec.n2) % spec.n2);
      out.values[static_cast<size_t>(m1) * spec.n2 + m2] = c.at(x1, x2);
    }
  }
  dft2_inplace(out.values.data(), spec.n1, spec.n2, +1);
  // Basis L synthesizes against h^{+x} e^{2 pi i x.xi}; Lstar against h^{-x}.
  apply_weight(out, h, c.basis == Basis::L ? +1 : -1);
  return out;
}

std::vector<cplx> analyze_1d(const std::vector<cplx>& samples, double hj, int K,
                             Basis basis) {
  const int n = static_cast<int>(samples.size());
  require(n > 2 * K && K >= 0, Status::parse, "aliasing: need n > 2K");
  const auto w = weight_row(hj, n, basis == Basis::L ? -1 : +1);
  std::vector<cplx> buf(samples);
  for (int k = 0; k < n; ++k) buf[static_cast<size_t>(k)] *= w[static_cast<size_t>(k)];
  dft1_inplace(buf, -1);
  std::vector<cplx> out(static_cast<size_t>(2 * K + 1));
  for (long long q = -K; q <= K; ++q) {
    const int m = static_cast<int>((q % n + n) % n);
    out[static_cast<size_t>(q + K)] = buf[static_cast<size_t>(m)] / static_cast<double>(n);
  }
  return out;
}

std::vector<cplx> synthesize_1d(const std::vector<cplx>& coeffs, double hj, int n,
                                Basis basis) {
  const int K = (static_cast<int>(coeffs.size()) - 1) / 2;
  require(static_cast<int>(coeffs.size()) == 2 * K + 1, Status::parse,
          "coefficient vector must have odd length");
  require(n > 2 * K, Status::parse, "aliasing: need n > 2K");
  std::vector<cplx> buf(static_cast<size_t>(n));
  for (long long q = -K; q <= K; ++q) {
    const int m = static_cast<int>((q % n + n) % n);
    buf[static_cast<size_t>(m)] = coeffs[static_cast<size_t>(q + K)];
  }
  dft1_inplace(buf, +1);
  const auto w = weight_row(hj, n, basis == Basis::L ? +1 : -1);
  for (int k = 0; k < n; ++k) buf[static_cast<size_t>(k)] *= w[static_cast<size_t>(k)];
  return buf;
}

PartialField partial_analyze(const GridField& f, const BoundaryParams& h, Axis axis,
                             int K_axis, Basis basis) {
  f.check();
  h.check();
  const int n1 = f.spec.n1, n2 = f.spec.n2;
  const int nt = axis == Axis::x1 ? n1 : n2;
  const int nr = axis == Axis::x1 ? n2 : n1;
  require(K_axis >= 0 && nt > 2 * K_axis, Status::parse,
          "aliasing: transformed axis must satisfy n > 2K");
  const double hj = axis == Axis::x1 ? h.h1 : h.h2;
  const auto w = weight_row(hj, nt, basis == Basis::L ? -1 : +1);

  std::vector<cplx> buf(f.values);
  if (axis == Axis::x2) {
    for (int k1 = 0; k1 < n1; ++k1)
      for (int k2 = 0; k2 < n2; ++k2)
        buf[static_cast<size_t>(k1) * n2 + k2] *= w[static_cast<size_t>(k2)];
    dft_axis_inplace(buf.data(), n1, n2, 1, -1);
  } else {
    for (int k1 = 0; k1 < n1; ++k1)
      for (int k2 = 0; k2 < n2; ++k2)
        buf[static_cast<size_t>(k1) * n2 + k2] *= w[static_cast<size_t>(k1)];
    dft_axis_inplace(buf.data(), n1, n2, 0, -1);
  }

  PartialField p;
  p.axis = axis;
  p.basis = basis;
  p.K = K_axis;
  p.n_retained = nr;
  p.n_transformed = nt;
  p.data.assign(static_cast<size_t>(nr) * (2 * K_axis + 1), cplx(0, 0));
  const double scale = 1.0 / nt;
  for (int r = 0; r < nr; ++r)
    for (long long q = -K_axis; q <= K_axis; ++q) {
      const int m = static_cast<int>((q % nt + nt) % nt);
      const size_t src = axis == Axis::x2
                             ? static_cast<size_t>(r) * n2 + m
                             : static_cast<size_t>(m) * n2 + r;
      p.at(r, q) = buf[src] * scale;
    }
  return p;
}

GridField partial_synthesize(const PartialField& p, const BoundaryParams& h) {
  p.check();
  h.check();
  const int nt = p.n_transformed, nr = p.n_retained;
  require(nt > 2 * p.K, Status::parse, "aliasing: need n > 2K");
  const int n1 = p.axis == Axis::x1 ? nt : nr;
  const int n2 = p.axis == Axis::x1 ? nr : nt;
  GridField out(GridSpec{n1, n2});
  for (int r = 0; r < nr; ++r)
    for (long long q = -p.K; q <= p.K; ++q) {
      const int m = static_cast<int>((q % nt + nt) % nt);
      const size_t dst = p.axis == Axis::x2
                             ? static_cast<size_t>(r) * n2 + m
                             : static_cast<size_t>(m) * n2 + r;
      out.values[dst] = p.at(r, q);
    }
  dft_axis_inplace(out.values.data(), n1, n2, p.axis == Axis::x1 ? 0 : 1, +1);
  const double hj = p.axis == Axis::x1 ? h.h1 : h.h2;
  const auto w = weight_row(hj, nt, p.basis == Basis::L ? +1 : -1);
  for (int k1 = 0; k1 < n1; ++k1)
    for (int k2 = 0; k2 < n2; ++k2)
      out.at(k1, k2) *= w[static_cast<size_t>(p.axis == Axis::x1 ? k1 : k2)];
  return out;
}

FrameBounds frame_bounds(const BoundaryParams& h, int trials, GridSpec grid, int K,
                         std::uint64_t seed) {
  h.check();
  grid.check();
  require(trials >= 1, Status::parse, "need at least one trial");
  require(grid.n1 > 2 * K && grid.n2 > 2 * K, Status::parse,
          "aliasing: grid must satisfy n_j > 2K");
  FrameBounds fb;
  fb.env_lower = std::min(1.0, 1.0 / h.h1) * std::min(1.0, 1.0 / h.h2);
  fb.env_upper = std::max(1.0, 1.0 / h.h1) * std::max(1.0, 1.0 / h.h2);
  fb.env_lower_star = std::min(1.0, h.h1) * std::min(1.0, h.h2);
  fb.env_upper_star = std::max(1.0, h.h1) * std::max(1.0, h.h2);
  fb.lower = fb.lower_star = 1e300;
  fb.upper = fb.upper_star = 0.0;
  Rng rng(seed);
  int used = 0;
  for (int t = 0; t < trials; ++t) {
    SpectralField c(K, Basis::L);
    SpectralField cs(K, Basis::Lstar);
    for (size_t i = 0; i < c.coeffs.size(); ++i) {
      c.coeffs[i] = rng.box();
      cs.coeffs[i] = rng.box();
    }
    GridField f = synthesize(c, h, grid);
    GridField fs = synthesize(cs, h, grid);
    const double nf = grid_l2(f), nfs = grid_l2(fs);
    if (nf == 0.0 || nfs == 0.0) continue;  // degenerate draw carries no ratio
    GridField wf = f;
    apply_weight(wf, h, -1);  // coefficient energy of f equals ||f h^{-x}||^2
    GridField wfs = fs;
    apply_weight(wfs, h, +1);
    const double r = grid_l2(wf) / nf;
    const double rs = grid_l2(wfs) / nfs;
    fb.lower = std::min(fb.lower, r);
    fb.upper = std::max(fb.upper, r);
    fb.lower_star = std::min(fb.lower_star, rs);
    fb.upper_star = std::max(fb.upper_star, rs);
    ++used;
  }
  require(used >= 1, Status::invariant, "all frame trials degenerate");
  fb.trials = used;
  return fb;
}

double sobolev_seminorm(const SpectralField& c, const BoundaryParams& h, int k) {
  c.check();
  h.check();
  require(k >= 0, Status::parse, "order k must be nonnegative");
  std::vector<cplx> term(c.coeffs);
  double best = 0.0;
  for (int j = 0; j <= k; ++j) {
    if (j > 0)
      for (size_t i = 0; i < term.size(); ++i) {
        const FreqIndex xi = c.freq_of(i);
        term[i] *= eigenvalue_2d(h, xi);
      }
    long double acc = 0.0L;
    for (const cplx& z : term) acc += static_cast<long double>(std::norm(z));
    best = std::max(best, static_cast<double>(std::sqrt(acc)));
  }
  return best;
}

double p_seminorm_1d(const std::vector<cplx>& samples, int k) {
  const int n = static_cast<int>(samples.size());
  require(n >= 4 && k >= 0, Status::parse, "need n >= 4 samples and k >= 0");
  std::vector<cplx> hat(samples);
  dft1_inplace(hat, -1);
  for (cplx& z : hat) z /= static_cast<double>(n);
  double total = 0.0;
  for (int b = 0; b <= k; ++b) {
    long double acc = 0.0L;
    for (int m = 0; m < n; ++m) {
      const double mag2 = std::pow(
          std::pow(two_pi * static_cast<double>(signed_freq(m, n)), 2),
          static_cast<double>(b));  // |(2 pi i freq)^b|^2; b=0 gives 1 at freq 0
      acc += static_cast<long double>(mag2 * std::norm(hat[static_cast<size_t>(m)]));
    }
    total += static_cast<double>(std::sqrt(acc));
  }
  return total;
}

GridField spectral_derivative(const GridField& f, const BoundaryParams& h, Axis axis) {
  f.check();
  h.check();
  const int n1 = f.spec.n1, n2 = f.spec.n2;
  const int nt = axis == Axis::x1 ? n1 : n2;
  const double hj = axis == Axis::x1 ? h.h1 : h.h2;
  const double loghj = std::log(hj);
  GridField out = f;
  const auto wm = weight_row(hj, nt, -1);
  for (int k1 = 0; k1 < n1; ++k1)
    for (int k2 = 0; k2 < n2; ++k2)
      out.at(k1, k2) *= wm[static_cast<size_t>(axis == Axis::x1 ? k1 : k2)];
  dft_axis_inplace(out.values.data(), n1, n2, axis == Axis::x1 ? 0 : 1, -1);
  for (int k1 = 0; k1 < n1; ++k1)
    for (int k2 = 0; k2 < n2; ++k2) {
      const int m = axis == Axis::x1 ? k1 : k2;
      const cplx sym(loghj, two_pi * static_cast<double>(signed_freq(m, nt)));
      out.at(k1, k2) *= sym / static_cast<double>(nt);
    }
  dft_axis_inplace(out.values.data(), n1, n2, axis == Axis::x1 ? 0 : 1, +1);
  const auto wp = weight_row(hj, nt, +1);
  for (int k1 = 0; k1 < n1; ++k1)
    for (int k2 = 0; k2 < n2; ++k2)
      out.at(k1, k2) *= wp[static_cast<size_t>(axis == Axis::x1 ? k1 : k2)];
  return out;
}

double top_octave_mass(const GridField& f, const BoundaryParams& h, Axis axis) {
  f.check();
  h.check();
  GridField g = f;
  apply_weight(g, h, -1);
  dft2_inplace(g.values.data(), f.spec.n1, f.spec.n2, -1);
  const int nt = axis == Axis::x1 ? f.spec.n1 : f.spec.n2;
  long double total = 0.0L, top = 0.0L;
  for (int k1 = 0; k1 < f.spec.n1; ++k1)
    for (int k2 = 0; k2 < f.spec.n2; ++k2) {
      const long double e = static_cast<long double>(std::norm(g.at(k1, k2)));
      total += e;
      const int m = axis == Axis::x1 ? k1 : k2;
      if (std::llabs(signed_freq(m, nt)) > nt / 4) top += e;
    }
  if (total == 0.0L) return 0.0;
  return static_cast<double>(top / total);
}

}  // namespace nhf
