#pragma once

// Direct series representations of zeta(s): the Dirichlet series, the
// alternating eta series, grouped (difference-type) variants that reach
// further left, and Euler-Maclaurin summation with a rigorous tail bound.

#include <cstdint>

#include "zeta/numerics.hpp"
#include "zeta/types.hpp"

namespace zeta {

struct SeriesParams {
  double tolerance = 1e-13;
  std::int64_t max_terms = 1'000'000;

  void validate() const;
};

struct EulerMaclaurinParams {
  int n = 10;     ///< series cutoff
  int delta = 8;  ///< correction order

  void validate() const;
};

EvalOutcome zeta_dirichlet(Complex s, const SeriesParams& p = {});
EvalOutcome zeta_eta(Complex s, const SeriesParams& p = {});
EvalOutcome zeta_three_term(Complex s, const SeriesParams& p = {});
EvalOutcome zeta_four_term(Complex s, const SeriesParams& p = {});
/// (1 - 5/2^s + 5/3^s - 1/6^s) zeta(s) = sum_{i>=0} fourth differences; converges for Re s > -3.
EvalOutcome zeta_six_term_a(Complex s, const SeriesParams& p = {});
/// (4 - 5/2^s - 4/3^s - 1/6^s) zeta(s) = 4 - 2^-s - sum_{i>=1} ...; converges for Re s > -3.
EvalOutcome zeta_six_term_b(Complex s, const SeriesParams& p = {});

/// Euler-Maclaurin with explicit cutoff n and order delta. The error
/// estimate is the Lehmer bound on the omitted remainder integral.
EvalOutcome zeta_euler_maclaurin(Complex s, const EulerMaclaurinParams& q);
/// Euler-Maclaurin with parameters picked by default_euler_maclaurin_params.
EvalOutcome zeta_euler_maclaurin(Complex s);

/// n = max(10, ceil|Im s|); delta is the smallest even value >= max(4, ceil(2 - Re s) + 4)
/// whose remainder bound falls below 1e-16 relative (capped at 60). For
/// Re s < 0 a smaller n is used when its bound plus the head-sum rounding is
/// smaller.
EulerMaclaurinParams default_euler_maclaurin_params(Complex s);

/// Lehmer's bound on |B_delta(x)| for x in [0, 1].
double bernoulli_poly_sup_bound(int delta);

/// Remainder bound |C(-s, delta)| * sup|B_delta| * n^{1 - Re s - delta} / (Re s + delta - 1).
double euler_maclaurin_bound(Complex s, int n, int delta);

/// zeta(s) - 1 without cancellation for large Re s (Euler-Maclaurin with the
/// head sum starting at 2).
Complex zeta_minus_one(Complex s);

/// zeta(-n) = -B_{n+1}/(n+1), exactly.
Rational zeta_special_negative(int n);

}  // namespace zeta
