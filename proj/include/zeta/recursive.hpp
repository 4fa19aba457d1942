#pragma once

// Representations of zeta(s) through values at shifted arguments zeta(s + k),
// k >= delta, and the self-contained double series that replaces the
// Euler-Maclaurin remainder integral by a convergent sum.
//
// The double series admits two formal limits (p -> 1 and p -> infinity)
// that reproduce the divergent asymptotic Euler-Maclaurin expansion; they
// are not computed here.

#include <cstdint>
#include <functional>
#include <limits>

#include "zeta/series.hpp"
#include "zeta/types.hpp"

namespace zeta {

struct RecursionParams {
  int delta = 1;  ///< correction order (>= 1 for the recursions, >= 0 for integral_free)
  int n = 3;      ///< odd head-sum length, integral_free only
  int p = 2;      ///< geometric base, integral_free only
  double tolerance = 1e-15;
  std::int64_t max_terms = 2000;
};

/// Provider of zeta at shifted arguments. Returns zeta(w) - 1 so that the
/// rapidly vanishing tail for large Re w keeps its relative accuracy.
struct ZetaUpRef {
  std::function<Complex(Complex)> zeta_minus_one;
  /// Arguments must satisfy Re w > min_real.
  double min_real = -std::numeric_limits<double>::infinity();

  Complex zeta(Complex w) const { return 1.0 + zeta_minus_one(w); }
};

/// Euler-Maclaurin with default parameters; valid on all of C \ {1}.
ZetaUpRef default_zeta_up();
/// Plain Dirichlet series, valid for Re w > 1.
ZetaUpRef dirichlet_zeta_up();

EvalOutcome zeta_stark(Complex s, const RecursionParams& r, const ZetaUpRef& up = default_zeta_up());
EvalOutcome zeta_ramaswami(Complex s, const SeriesParams& p = {}, const ZetaUpRef& up = default_zeta_up());
EvalOutcome zeta_ramaswami_general(Complex s, const RecursionParams& r,
                                   const ZetaUpRef& up = default_zeta_up());
EvalOutcome zeta_integral_free(Complex s, const RecursionParams& r);

/// Head of the integral-free series: sum_{j=1}^{n} j^{-s} plus
/// C(s+k-2, k) B_k / ((s-1) n^{s+k-1}) for k < delta.
Complex integral_free_head(Complex s, int n, int delta);

int default_stark_delta(Complex s);
/// Largest delta <= floor(1 - Re s) + 1 whose denominators 2^s - 2^{1-j}
/// (for B_j != 0) stay away from zero.
int default_ramaswami_general_delta(Complex s);
int default_integral_free_delta(Complex s);

}  // namespace zeta
