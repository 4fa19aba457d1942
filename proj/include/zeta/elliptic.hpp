#pragma once

// Complete elliptic integrals (parameter-m convention), Jacobi theta
// constants, the nome and its inverse, the twice-differentiated theta
// combination theta~ and the symmetric weights U, U~.

#include "zeta/types.hpp"

namespace zeta {

/// K, E at m together with the complementary K' = K(1-m), E' = E(1-m).
struct EllipticPair {
  double m = 0.0;
  double K = 0.0;
  double E = 0.0;
  double Kp = 0.0;
  double Ep = 0.0;
};

/// Arithmetic-geometric mean of a, b >= 0.
double agm(double a, double b);

double elliptic_K(double m);
double elliptic_E(double m);
/// (E - (1-m) K) / m, with the hypergeometric series near m = 0.
double elliptic_B(double m);

/// Both integrals at m and 1 - m. `mc` is 1 - m supplied separately so
/// callers that know it to full relative precision can pass it through.
EllipticPair elliptic_pair(double m);
EllipticPair elliptic_pair(double m, double mc);

/// K(1-m)/K(m); logarithmic asymptote below m = 1e-12.
double k_ratio(double m);

/// q(m) = exp(-pi K(1-m)/K(m)).
double nome(double m);
/// m(q) = theta2(q)^4 / theta3(q)^4.
double inverse_nome(double q);
/// 1 - m(q) = theta4(q)^4 / theta3(q)^4, without cancellation.
double inverse_nome_complement(double q);

double theta2(double q);
double theta3(double q);
double theta4(double q);
/// theta4/theta3 via prod (1 - q^{2n+1})^2 / (1 + q^{2n+1})^2.
double theta4_over_theta3_product(double q);

/// sum_{n>=1} (4 (n^2 pi t)^2 - 6 n^2 pi t) exp(-n^2 pi t), using
/// theta~(t) = t^{-1/2} theta~(1/t) for t < 1.
double theta_tilde(double t);

/// U(m) = (K K')^{1/4} / (pi sqrt(2 pi) m (1-m)) times
/// 3(1-m) K E' + 3m E K' - 3 E E' - m(1-m) K K'.
double weight_U(double m);
double weight_U(double m, double mc);

/// U~(m) = sqrt(8 pi) m (1-m) pi^{-3} (K K')^{5/4} (2 K K' - 3 B B').
double weight_U_tilde(double m);
double weight_U_tilde(double m, double mc);
/// U~ through the four-term bracket scaled by 4 (K K')^{5/4} / (pi^2 sqrt(2 pi)).
double weight_U_tilde_bracket(double m);

/// U~ pulled back through the inverse nome at q = exp(-pi t); equals
/// t^{1/4} theta~(t). Returns 0 once m underflows.
double u_tilde_at_t(double t);

}  // namespace zeta
