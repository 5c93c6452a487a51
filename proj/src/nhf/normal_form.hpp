#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nhf/divide.hpp"
#include "nhf/grid.hpp"
#include "nhf/symbol.hpp"
#include "nhf/transforms.hpp"

namespace nhf {

// Real 1-periodic coefficient a(x1) held as a finite Fourier series.
// Conjugate symmetry a_{-k} = conj(a_k) is enforced on construction.
struct CoefficientFunction {
  double mean = 0;
  std::map<long long, cplx> modes;  // k != 0

  // {"mean": <num>, "modes": [{"k": <int>, "re": <num>, "im": <num>}, ...]}.
  // A mode given without its mirror is completed by conjugation; mirrors
  // given explicitly must be consistent.
  static CoefficientFunction from_json(const json& j);
  // Equispaced samples a(r/n); complex input must be real to 1e-12 relative.
  static CoefficientFunction from_samples(const std::vector<cplx>& samples);
  static CoefficientFunction from_samples(const std::vector<double>& samples);

  long long max_mode() const;
  std::vector<double> sample(int n) const;
  // A(x) = integral of (a - mean) from 0 to x; A(0) = A(1) = 0.
  std::vector<double> sample_primitive(int n) const;
  json to_json() const;
};

struct PrimitiveData {
  double mean = 0;
  std::vector<double> primitive;  // A on the n-point grid
};
PrimitiveData mean_and_primitive(const CoefficientFunction& a, int n);

enum class PsiDirection { forward, inverse };

struct PsiOptions {
  bool check_aliasing = true;
  double top_octave_tol = 1e-6;  // relative energy allowed in the top x1 octave
};

// Composition with the vertical shear x2 -> x2 + A(x1), realized as a
// per-column multiplier exp((log h2 + 2 pi i q) A(x1)) on the partial
// transform along x2. The inverse direction negates A.
GridField psi_apply(const CoefficientFunction& a, const BoundaryParams& h,
                    const GridField& w, PsiDirection dir,
                    const PsiOptions& opts = {});

// Grid-level action of P = d1 + a(x1) d2 through spectral derivatives.
GridField apply_variable_P(const CoefficientFunction& a, const BoundaryParams& h,
                           const GridField& w);

struct IntertwineReport {
  double residual = 0;  // || Psi(P w) - P0(Psi w) ||_2 on the grid
  double lhs_norm = 0;
  double rhs_norm = 0;
  json to_json() const;
};
IntertwineReport intertwine_residual(const CoefficientFunction& a,
                                     const BoundaryParams& h, const GridField& w,
                                     const PsiOptions& opts = {});

// The conjugated operator: P0 = d1 + mean(a) d2.
struct ReducedForm {
  double mean = 0;
  OperatorSpec op;
  json to_json() const;
};
ReducedForm reduce(const CoefficientFunction& a);

struct VariableSolveOptions {
  int K = 16;
  double zero_tol_rel = 1e-12;
  std::optional<double> growth_guard;
  PsiOptions psi;
};

struct VariableSolve {
  GridField w;
  SolveResult inner;      // the constant-coefficient division after conjugation
  double residual = 0;    // || P w - f ||_2 on the grid
};

// Solve (d1 + a(x1) d2) w = f by conjugating to the mean operator, dividing
// by its symbol, and conjugating back.
VariableSolve solve_variable(const CoefficientFunction& a, const BoundaryParams& h,
                             const GridField& f, const VariableSolveOptions& opts);

}  // namespace nhf
