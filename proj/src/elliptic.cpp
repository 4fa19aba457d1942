#include "zeta/elliptic.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace zeta {

namespace {

void require(bool ok, const char* who, double v) {
  if (!ok) throw DomainError(std::string(who) + ": argument out of range: " + std::to_string(v));
}

struct KE {
  double K;
  double E;
};

// K and E at parameter m given mc = 1 - m.
KE agm_KE(double m, double mc) {
  if (mc == 0.0) return {std::numeric_limits<double>::infinity(), 1.0};
  double a = 1.0;
  double b = std::sqrt(mc);
  double sum = 0.5 * m;  // 2^{-1} c_0^2
  double pow2 = 0.5;
  for (int i = 0; i < 64; ++i) {
    const double c = 0.5 * (a - b);
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    pow2 *= 2.0;
    sum += pow2 * c * c;
    a = an;
    b = bn;
    if (std::abs(c) <= 1e-15 * a) break;
  }
  const double K = kPi / (2.0 * a);
  return {K, K * (1.0 - sum)};
}

double hypergeometric_B(double m) {
  // (pi/4) 2F1(1/2, 1/2; 2; m)
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 40; ++k) {
    term *= (k + 0.5) * (k + 0.5) / ((k + 2.0) * (k + 1.0)) * m;
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return 0.25 * kPi * sum;
}

double B_from(double m, double mc, double K, double E) {
  if (m < 1e-4) return hypergeometric_B(m);
  if (mc == 0.0) return 1.0;
  return (E - mc * K) / m;
}

double q_pow(double q, double e) { return std::exp(e * std::log(q)); }

}  // namespace

double agm(double a, double b) {
  require(a >= 0.0 && b >= 0.0, "agm", a < 0.0 ? a : b);
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return 0.5 * (a + b);
}

double elliptic_K(double m) {
  require(m >= 0.0 && m < 1.0, "elliptic_K", m);
  return agm_KE(m, 1.0 - m).K;
}

double elliptic_E(double m) {
  require(m >= 0.0 && m <= 1.0, "elliptic_E", m);
  return agm_KE(m, 1.0 - m).E;
}

double elliptic_B(double m) {
  require(m >= 0.0 && m <= 1.0, "elliptic_B", m);
  if (m < 1e-4) return hypergeometric_B(m);
  if (m == 1.0) return 1.0;
  const KE ke = agm_KE(m, 1.0 - m);
  return B_from(m, 1.0 - m, ke.K, ke.E);
}

EllipticPair elliptic_pair(double m) { return elliptic_pair(m, 1.0 - m); }

EllipticPair elliptic_pair(double m, double mc) {
  require(m > 0.0 && mc > 0.0, "elliptic_pair", m);
  const KE a = agm_KE(m, mc);
  const KE b = agm_KE(mc, m);
  return {m, a.K, a.E, b.K, b.E};
}

double k_ratio(double m) {
  require(m > 0.0 && m < 1.0, "k_ratio", m);
  if (m < 1e-12) return std::log(16.0 / m) / kPi;
  if (1.0 - m < 1e-12) return kPi / std::log(16.0 / (1.0 - m));
  const EllipticPair p = elliptic_pair(m);
  return p.Kp / p.K;
}

double nome(double m) {
  require(m > 0.0 && m < 1.0, "nome", m);
  return std::exp(-kPi * k_ratio(m));
}

double theta3(double q) {
  require(q >= 0.0 && q < 1.0, "theta3", q);
  if (q == 0.0) return 1.0;
  double sum = 0.0;
  for (int n = 1;; ++n) {
    const double term = q_pow(q, static_cast<double>(n) * n);
    sum += term;
    if (term < 1e-17 * (1.0 + 2.0 * sum)) break;
  }
  return 1.0 + 2.0 * sum;
}

double theta2(double q) {
  require(q >= 0.0 && q < 1.0, "theta2", q);
  if (q == 0.0) return 0.0;
  double sum = 0.0;
  for (int n = 0;; ++n) {
    const double h = n + 0.5;
    const double term = q_pow(q, h * h);
    sum += term;
    if (term < 1e-17 * sum || term == 0.0) break;
  }
  return 2.0 * sum;
}

double theta4(double q) {
  require(q >= 0.0 && q < 1.0, "theta4", q);
  if (q == 0.0) return 1.0;
  double sum = 0.0;
  for (int n = 1;; ++n) {
    const double term = q_pow(q, static_cast<double>(n) * n);
    sum += (n % 2 == 1 ? -term : term);
    if (term < 1e-17) break;
  }
  return 1.0 + 2.0 * sum;
}

double theta4_over_theta3_product(double q) {
  require(q >= 0.0 && q < 1.0, "theta4_over_theta3_product", q);
  double prod = 1.0;
  for (int n = 0;; ++n) {
    const double x = q_pow(q, 2.0 * n + 1.0);
    prod *= (1.0 - x) / (1.0 + x);
    if (x < 1e-18) break;
  }
  return prod * prod;
}

double inverse_nome(double q) {
  require(q > 0.0 && q < 1.0, "inverse_nome", q);
  const double r = theta2(q) / theta3(q);
  return (r * r) * (r * r);
}

double inverse_nome_complement(double q) {
  require(q > 0.0 && q < 1.0, "inverse_nome_complement", q);
  const double r = theta4_over_theta3_product(q);
  return (r * r) * (r * r);
}

double theta_tilde(double t) {
  require(t > 0.0 && std::isfinite(t), "theta_tilde", t);
  if (t < 1.0) return theta_tilde(1.0 / t) / std::sqrt(t);
  double sum = 0.0;
  for (int n = 1;; ++n) {
    const double x = static_cast<double>(n) * n * kPi * t;
    const double term = (4.0 * x * x - 6.0 * x) * std::exp(-x);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum) || term == 0.0) break;
  }
  return sum;
}

double weight_U(double m) {
  require(m > 0.0 && m < 1.0, "weight_U", m);
  return weight_U(m, 1.0 - m);
}

double weight_U(double m, double mc) {
  const EllipticPair p = elliptic_pair(m, mc);
  const double kk = p.K * p.Kp;
  const double bb = B_from(m, mc, p.K, p.E) * B_from(mc, m, p.Kp, p.Ep);
  return std::pow(kk, 0.25) / (kPi * std::sqrt(2.0 * kPi)) * (2.0 * kk - 3.0 * bb);
}

double weight_U_tilde(double m) {
  require(m > 0.0 && m < 1.0, "weight_U_tilde", m);
  return weight_U_tilde(m, 1.0 - m);
}

double weight_U_tilde(double m, double mc) {
  const EllipticPair p = elliptic_pair(m, mc);
  const double kk = p.K * p.Kp;
  const double bb = B_from(m, mc, p.K, p.E) * B_from(mc, m, p.Kp, p.Ep);
  const double u = std::sqrt(8.0 * kPi) * m * mc / (kPi * kPi * kPi) * std::pow(kk, 1.25) * (2.0 * kk - 3.0 * bb);
#ifndef NDEBUG
  if (m > 1e-3 && mc > 1e-3) {
    const double alt = weight_U_tilde_bracket(m);
    assert(std::abs(u - alt) <= 1e-10 * std::abs(u));
  }
#endif
  return u;
}

double weight_U_tilde_bracket(double m) {
  require(m > 0.0 && m < 1.0, "weight_U_tilde_bracket", m);
  const double mc = 1.0 - m;
  const EllipticPair p = elliptic_pair(m, mc);
  const double kk = p.K * p.Kp;
  const double bracket = 3.0 * mc * p.K * p.Ep + 3.0 * m * p.E * p.Kp - 3.0 * p.E * p.Ep - m * mc * kk;
  return bracket * 4.0 * std::pow(kk, 1.25) / (kPi * kPi * std::sqrt(2.0 * kPi));
}

double u_tilde_at_t(double t) {
  require(t > 0.0 && std::isfinite(t), "u_tilde_at_t", t);
  const double T = t >= 1.0 ? t : 1.0 / t;
  const double q = std::exp(-kPi * T);
  if (q == 0.0) return 0.0;
  const double m = inverse_nome(q);
  if (!(m > 0.0) || !std::isnormal(m)) return 0.0;
  return weight_U_tilde(m, inverse_nome_complement(q));
}

}  // namespace zeta
