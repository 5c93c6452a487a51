#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nhf/common.hpp"
#include "nhf/eigen.hpp"
#include "nhf/spectral.hpp"

namespace nhf {

// One differential monomial: coeff * d1^alpha1 d2^alpha2.
struct OpTerm {
  int alpha1 = 0;
  int alpha2 = 0;
  cplx coeff{0.0, 0.0};
};

// Constant-coefficient differential operator as a finite term list.
struct OperatorSpec {
  std::vector<OpTerm> terms;

  // {"terms":[{"alpha1":..,"alpha2":..,"re":..,"im":..},...]} or {"shorthand":"..."}.
  static OperatorSpec from_json(const json& j);
  // Grammar: terms joined by +/-; a term is coefficient factors (number,
  // number i, i, or a parenthesized complex) times optional d1/d2 powers,
  // e.g. "d1 + (0.5+1i) d2", "d1 - d2", "d1^2 + d2^2".
  static OperatorSpec from_shorthand(const std::string& text);
  // The first-order family d1 + c d2.
  static OperatorSpec first_order(cplx c);
  json to_json() const;
};

// Frequency-side evaluator with optional closed-form metadata and an eagerly
// built exact-zero cache. Immutable after construction; safe to share.
class Symbol {
 public:
  Symbol() = default;
  Symbol(std::function<cplx(FreqIndex)> eval, json descriptor, int cache_radius = 32);

  cplx operator()(FreqIndex xi) const {
    const cplx v = eval_(xi);
    return conjugated_ ? std::conj(v) : v;
  }
  const json& descriptor() const { return descriptor_; }
  bool conjugated() const { return conjugated_; }
  int cache_radius() const { return cache_radius_; }
  // Exact zeros (|sigma| == 0) over |xi_j| <= cache_radius, lexicographic.
  const std::vector<FreqIndex>& cached_zeros() const { return zeros_; }

  // Pointwise conjugate; an involution. Moduli, hence zero sets, are shared.
  Symbol adjoint() const;

 private:
  std::function<cplx(FreqIndex)> eval_;
  json descriptor_;
  bool conjugated_ = false;
  int cache_radius_ = 0;
  std::vector<FreqIndex> zeros_;
};

// sigma(xi) = sum over terms of coeff * prod_j (log h_j + 2 pi i xi_j)^alpha_j.
Symbol diff_symbol(const OperatorSpec& op, const BoundaryParams& h);

// Symbol of d1 + c d2 in split closed form:
// (log h1 + a log h2 - 2 pi b xi2) + i (b log h2 + 2 pi (xi1 + a xi2)), c = a+ib.
// Rejects c = 0. Agrees with diff_symbol(first_order(c), h).
Symbol symbol_constant_P(cplx c, const BoundaryParams& h);

// Wrap a caller-supplied evaluator.
Symbol make_symbol(std::function<cplx(FreqIndex)> eval, json descriptor,
                   int cache_radius = 32);

// Pointwise product in frequency space: out(xi) = s(xi) * c(xi).
SpectralField apply_multiplier(const Symbol& s, const SpectralField& c);

Symbol adjoint_symbol(const Symbol& s);

}  // namespace nhf
