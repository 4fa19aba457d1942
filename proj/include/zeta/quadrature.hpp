#pragma once

// Level-doubling quadrature for smooth integrands with complex values:
// tanh-sinh on finite intervals, exp-sinh on half-lines and the trapezoid
// rule on the real line. The Gauss-Legendre scheme applies 20-point panels
// in the same transformed variable.

#include <functional>
#include <vector>

#include "zeta/types.hpp"

namespace zeta {

struct QuadratureSpec {
  enum class Scheme { double_exponential, gauss_legendre_panels };
  Scheme scheme = Scheme::double_exponential;
  int level = 8;  ///< maximum number of step halvings (or panel doublings)
  double abs_tol = 1e-13;

  void validate() const;
};

struct QuadratureResult {
  Complex value{};
  double error = kNaN;  ///< |I_k - I_{k-1}| at the final level
  int levels_used = 0;
  long evaluations = 0;
  std::vector<double> level_errors;  ///< |I_k - I_{k-1}| for every level after the first
};

/// Integrand on a finite interval receiving x and the distance to the
/// upper endpoint b - x (accurate even where x rounds to b).
using EndpointIntegrand = std::function<Complex(double x, double gap_to_upper)>;
using Integrand = std::function<Complex(double x)>;

/// \int_a^b f. Endpoint singularities of logarithmic or mild power type are fine.
QuadratureResult integrate_interval(const EndpointIntegrand& f, double a, double b, const QuadratureSpec& q);
/// \int_a^inf f for f decaying at least exponentially.
QuadratureResult integrate_halfline(const Integrand& f, double a, const QuadratureSpec& q);
/// \int_{-inf}^{inf} f over a window [-X, X] grown until |f(+-X)| < abs_tol * 1e-2.
QuadratureResult integrate_line(const Integrand& f, const QuadratureSpec& q);

}  // namespace zeta
