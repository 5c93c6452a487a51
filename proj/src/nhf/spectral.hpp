#pragma once

#include <string>
#include <vector>

#include "nhf/common.hpp"
#include "nhf/eigen.hpp"

namespace nhf {

enum class Basis { L, Lstar };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& s);

// Dense coefficient array over the square lattice |xi1|,|xi2| <= K.
// Storage order: xi1 = -K..K outer, xi2 = -K..K inner.
struct SpectralField {
  int K = 0;
  Basis basis = Basis::L;
  std::vector<cplx> coeffs;

  SpectralField() = default;
  SpectralField(int K_, Basis b)
      : K(K_), basis(b),
        coeffs(static_cast<size_t>(2 * K_ + 1) * static_cast<size_t>(2 * K_ + 1)) {
    require(K_ >= 0, Status::parse, "truncation K must be nonnegative");
  }

  int side() const { return 2 * K + 1; }
  size_t idx(long long xi1, long long xi2) const {
    require(std::llabs(xi1) <= K && std::llabs(xi2) <= K, Status::parse,
            "frequency outside truncation");
    return static_cast<size_t>(xi1 + K) * static_cast<size_t>(side()) +
           static_cast<size_t>(xi2 + K);
  }
  cplx& at(long long xi1, long long xi2) { return coeffs[idx(xi1, xi2)]; }
  const cplx& at(long long xi1, long long xi2) const { return coeffs[idx(xi1, xi2)]; }
  FreqIndex freq_of(size_t flat) const {
    const long long s = side();
    return {static_cast<long long>(flat) / s - K,
            static_cast<long long>(flat) % s - K};
  }
  void check() const {
    require(K >= 0, Status::parse, "truncation K must be nonnegative");
    require(coeffs.size() == static_cast<size_t>(side()) * static_cast<size_t>(side()),
            Status::parse, "spectral field shape mismatch");
  }
};

double spectral_linf_diff(const SpectralField& a, const SpectralField& b);
double spectral_l2(const SpectralField& a);

// JSON layout: {"K":k, "basis":"L"|"Lstar", "coeffs":[{"xi1":..,"xi2":..,"re":..,"im":..},...]}
// coeffs listed in storage order; absent entries read as zero.
json spectral_to_json(const SpectralField& f);
SpectralField spectral_from_json(const json& j);
void write_spectral_json(const SpectralField& f, const std::string& path);
SpectralField read_spectral_json(const std::string& path);

}  // namespace nhf
