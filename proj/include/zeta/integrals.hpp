#pragma once

// Quadrature representations of the completed zeta function
// xi(s) = s (s-1) zeta(s) Gamma(s/2) / pi^{s/2}, the exponential-kernel
// integral for zeta(s), polynomial approximants of xi and its power series
// about s = 1/2.

#include <vector>

#include "zeta/quadrature.hpp"
#include "zeta/types.hpp"

namespace zeta {

struct XiValue {
  Complex s{};
  Complex xi{};
  double quadrature_error = 0.0;
  long nodes = 0;  ///< integrand evaluations
};

/// s (s-1) Gamma(s/2) pi^{-s/2}; throws PoleError at s = 0, -2, -4, ...
Complex xi_prefactor(Complex s);
/// zeta = xi / prefactor. Refused (PoleError) at s = 1 and s = 0, -2, -4, ...
Complex zeta_from_xi(Complex s, Complex xi);
/// xi = prefactor * zeta, with the same refusals.
Complex xi_from_zeta(Complex s, Complex zeta);

/// \int_0^inf t^{s/2-1} psi(t) dt, psi(t) = sum_{n>=1} exp(-n^2 pi t), times s (s-1).
/// Requires Re s > 1.
XiValue xi_theta_basic(Complex s, const QuadratureSpec& q = {});

/// \int_1^inf (u^{s/2-1} + u^{(1-s)/2-1}) theta~(u) du.
XiValue xi_theta_tilde(Complex s, const QuadratureSpec& q = {});
/// \int exp((x/2)(s-1/2)) e^{x/4} theta~(e^x) dx.
XiValue xi_symmetric(Complex s, const QuadratureSpec& q = {});
/// \int_0^1 (K(1-m)/K(m))^{(s-1/2)/2} U(m) dm, folded onto (0, 1/2].
XiValue xi_elliptic(Complex s, const QuadratureSpec& q = {});

enum class QForm { x_line, t_halfline, q_unit };
/// The U~ pullback integrals over x in R, t in (0, inf) or q in (0, 1).
XiValue xi_q_variants(Complex s, QForm form, const QuadratureSpec& q = {});

/// zeta(s) = 1 + (1/(s-1)) sum_{k<=delta} C(k+s-2, k) B_k + (1/Gamma(s)) *
/// \int_0^inf [1/(e^t-1) - sum_{k<=delta} B_k t^{k-1}/k!] e^{-t} t^{s-1} dt,
/// valid for Re s > -delta.
EvalOutcome zeta_exp_integral(Complex s, int delta, const QuadratureSpec& q = {});

enum class ApproxBasis { hermite, laguerre };
/// (-1)^n n!/(2n)! \int H_{2n}(x (s-1/2)/(4i sqrt n)) e^{x/4} theta~(e^x) dx, or
/// the same through L_n^{(-1/2)} scaled by 1/C(n-1/2, n).
XiValue xi_hermite_approx(Complex s, int n, ApproxBasis basis, const QuadratureSpec& q = {});

/// c_k = \int x^{2k} e^{x/4} theta~(e^x) dx / ((2k)! 4^k), k = 0..k_max, so
/// that xi(s) = sum_k c_k (s-1/2)^{2k}.
std::vector<double> xi_power_series_coeffs(int k_max, const QuadratureSpec& q = {});
/// Sum of the series with the given coefficients; `tail` receives the
/// magnitude of the last term.
Complex xi_power_series_eval(Complex s, const std::vector<double>& coeffs, double* tail = nullptr);

}  // namespace zeta
