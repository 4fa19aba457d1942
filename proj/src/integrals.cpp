#include "zeta/integrals.hpp"

#include <cmath>
#include <string>

#include "zeta/detail/summation.hpp"
#include "zeta/elliptic.hpp"
#include "zeta/numerics.hpp"

namespace zeta {

using detail::kEps;

namespace {

Complex cpow(double t, Complex a) { return std::exp(a * std::log(t)); }

bool near_integer(double x, double tol) { return std::abs(x - std::round(x)) < tol; }

bool is_gamma_half_pole(Complex s) {
  return std::abs(s.imag()) < 1e-14 && s.real() < 0.5 && near_integer(s.real() * 0.5, 1e-14);
}

// sum_{n>=1} exp(-n^2 pi t), through 1 + 2 psi(t) = t^{-1/2} (1 + 2 psi(1/t)) for t < 1.
double psi(double t) {
  if (t < 1.0) return (psi(1.0 / t) + 0.5) / std::sqrt(t) - 0.5;
  double sum = 0.0;
  for (int n = 1;; ++n) {
    const double term = std::exp(-static_cast<double>(n) * n * kPi * t);
    sum += term;
    if (term < 1e-17 * sum || term == 0.0) break;
  }
  return sum;
}

// e^{x/4} theta~(e^x)
double symmetric_weight(double x) {
  const double t = std::exp(x);
  if (t == 0.0 || !std::isfinite(t)) return 0.0;
  return std::exp(0.25 * x) * theta_tilde(t);
}

XiValue make(Complex s, Complex xi, double err, long nodes) { return XiValue{s, xi, err, nodes}; }

}  // namespace

Complex xi_prefactor(Complex s) {
  if (is_gamma_half_pole(s)) {
    throw PoleError("xi prefactor: Gamma(s/2) has a pole at s = " + std::to_string(s.real()));
  }
  return s * (s - 1.0) * complex_gamma(0.5 * s) * std::exp(-0.5 * s * std::log(kPi));
}

Complex zeta_from_xi(Complex s, Complex xi) {
  if (std::abs(s - 1.0) < 1e-14) throw PoleError("zeta_from_xi: zeta has a pole at s = 1");
  return xi / xi_prefactor(s);
}

Complex xi_from_zeta(Complex s, Complex zeta) {
  if (std::abs(s - 1.0) < 1e-14) throw PoleError("xi_from_zeta: zeta has a pole at s = 1");
  return zeta * xi_prefactor(s);
}

XiValue xi_theta_basic(Complex s, const QuadratureSpec& q) {
  if (s.real() <= 1.0) throw DomainError("xi_theta_basic: requires Re s > 1");
  const Complex a = 0.5 * s - 1.0;
  const auto lower = integrate_interval([&](double t, double) { return cpow(t, a) * psi(t); }, 0.0, 1.0, q);
  const auto upper = integrate_halfline([&](double t) { return cpow(t, a) * psi(t); }, 1.0, q);
  const Complex f = s * (s - 1.0);
  return make(s, f * (lower.value + upper.value), std::abs(f) * (lower.error + upper.error),
              lower.evaluations + upper.evaluations);
}

XiValue xi_theta_tilde(Complex s, const QuadratureSpec& q) {
  const Complex a = 0.5 * s - 1.0;
  const Complex b = 0.5 * (1.0 - s) - 1.0;
  const auto r = integrate_halfline([&](double u) { return (cpow(u, a) + cpow(u, b)) * theta_tilde(u); }, 1.0, q);
  return make(s, r.value, r.error, r.evaluations);
}

XiValue xi_symmetric(Complex s, const QuadratureSpec& q) {
  const Complex a = 0.5 * (s - 0.5);
  const auto r = integrate_line([&](double x) { return std::exp(a * x) * symmetric_weight(x); }, q);
  return make(s, r.value, r.error, r.evaluations);
}

XiValue xi_elliptic(Complex s, const QuadratureSpec& q) {
  const Complex a = 0.5 * (s - 0.5);
  const auto r = integrate_interval(
      [&](double m, double gap) {
        const double k = k_ratio(m);
        const double mc = 0.5 + gap;  // 1 - m, exact on (0, 1/2]
        return (cpow(k, a) + cpow(k, -a)) * weight_U(m, mc);
      },
      0.0, 0.5, q);
  return make(s, r.value, r.error, r.evaluations);
}

XiValue xi_q_variants(Complex s, QForm form, const QuadratureSpec& q) {
  const Complex a = 0.5 * (s - 0.5);
  switch (form) {
    case QForm::x_line: {
      const auto r = integrate_line([&](double x) { return std::exp(a * x) * u_tilde_at_t(std::exp(x)); }, q);
      return make(s, r.value, r.error, r.evaluations);
    }
    case QForm::t_halfline: {
      auto f = [&](double t) { return cpow(t, a - 1.0) * u_tilde_at_t(t); };
      const auto lower = integrate_interval([&](double t, double) { return f(t); }, 0.0, 1.0, q);
      const auto upper = integrate_halfline(f, 1.0, q);
      return make(s, lower.value + upper.value, lower.error + upper.error, lower.evaluations + upper.evaluations);
    }
    case QForm::q_unit: {
      const auto r = integrate_interval(
          [&](double x, double gap) {
            const double t = x < 0.5 ? -std::log(x) / kPi : -std::log1p(-gap) / kPi;
            const double u = u_tilde_at_t(t);
            if (u == 0.0) return Complex(0.0);
            return cpow(t, a - 1.0) * (u / (kPi * x));
          },
          0.0, 1.0, q);
      return make(s, r.value, r.error, r.evaluations);
    }
  }
  throw DomainError("xi_q_variants: unknown form");
}

EvalOutcome zeta_exp_integral(Complex s, int delta, const QuadratureSpec& q) {
  if (delta < 0) throw DomainError("exp_integral: delta must be >= 0");
  if (std::abs(s - 1.0) < 1e-14) throw PoleError("exp_integral: pole at s = 1");
  if (s.real() <= -delta) {
    throw DomainError("exp_integral: requires Re s > -delta = " + std::to_string(-delta));
  }
  const Complex gamma = complex_gamma(s);  // PoleError at s = 0, -1, -2, ...

  // B_k / k! for the subtracted polynomial and for the small-t expansion
  constexpr int kSeriesTerms = 48;
  constexpr double kSeriesBelow = 2.0;
  std::vector<double> coef(static_cast<std::size_t>(delta + kSeriesTerms + 1));
  {
    Rational fact = 1;
    for (int k = 0; k < static_cast<int>(coef.size()); ++k) {
      if (k > 0) fact *= k;
      coef[static_cast<std::size_t>(k)] = to_double(bernoulli(k) / fact);
    }
  }
  auto bracket = [&](double t) {
    double sum = 0.0;
    if (t < kSeriesBelow) {
      // sum_{k>delta} B_k t^{k-1} / k!
      double tp = std::pow(t, delta);
      for (int k = delta + 1; k < static_cast<int>(coef.size()); ++k) {
        const double term = coef[static_cast<std::size_t>(k)] * tp;
        sum += term;
        tp *= t;
        if (term != 0.0 && std::abs(term) < 1e-18 * std::abs(sum)) break;
      }
      return sum;
    }
    sum = 1.0 / std::expm1(t);
    double tp = 1.0 / t;
    for (int k = 0; k <= delta; ++k) {
      sum -= coef[static_cast<std::size_t>(k)] * tp;
      tp *= t;
    }
    return sum;
  };
  const auto r = integrate_halfline(
      [&](double t) { return bracket(t) * std::exp(-t) * cpow(t, s - 1.0); }, 0.0, q);

  detail::CompensatedSum<Complex> head;
  for (int k = 0; k <= delta; ++k) {
    const double b = coef[static_cast<std::size_t>(k)];
    if (b == 0.0) continue;
    head.add(binomial(static_cast<double>(k) + s - 2.0, k) * bernoulli_double(k));
  }
  EvalOutcome out;
  out.value = 1.0 + head.value() / (s - 1.0) + r.value / gamma;
  out.error_estimate = r.error / std::abs(gamma) + 8.0 * kEps * (1.0 + head.magnitude() / std::abs(s - 1.0));
  out.terms_used = r.evaluations;
  out.strategy = StrategyId::exp_integral;
  out.truncation_reason = TruncationReason::tolerance_met;
  return out;
}

XiValue xi_hermite_approx(Complex s, int n, ApproxBasis basis, const QuadratureSpec& q) {
  if (n < 1) throw DomainError("xi_hermite_approx: n must be >= 1");
  const Complex z = (s - 0.5) / Complex(0.0, 4.0);
  const double root_n = std::sqrt(static_cast<double>(n));
  double scale = 1.0;
  if (basis == ApproxBasis::hermite) {
    // (-1)^n n! / (2n)!
    for (int i = n + 1; i <= 2 * n; ++i) scale /= i;
    if (n % 2 == 1) scale = -scale;
    const auto r = integrate_line(
        [&](double x) { return hermite(2 * n, x * z / root_n) * symmetric_weight(x); }, q);
    return make(s, scale * r.value, std::abs(scale) * r.error, r.evaluations);
  }
  // 1 / C(n - 1/2, n)
  for (int i = 1; i <= n; ++i) scale *= i / (i - 0.5);
  const Complex z2 = z * z / static_cast<double>(n);
  const auto r =
      integrate_line([&](double x) { return laguerre_half(n, x * x * z2) * symmetric_weight(x); }, q);
  return make(s, scale * r.value, scale * r.error, r.evaluations);
}

std::vector<double> xi_power_series_coeffs(int k_max, const QuadratureSpec& q) {
  if (k_max < 0) throw DomainError("xi_power_series_coeffs: k_max must be >= 0");
  std::vector<double> c;
  double scale = 1.0;  // 1 / ((2k)! 4^k)
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) scale /= (2.0 * k - 1.0) * (2.0 * k) * 4.0;
    const auto r = integrate_line(
        [&](double x) { return Complex(std::pow(x, 2 * k) * symmetric_weight(x)); }, q);
    c.push_back(scale * r.value.real());
  }
  return c;
}

Complex xi_power_series_eval(Complex s, const std::vector<double>& coeffs, double* tail) {
  const Complex w = (s - 0.5) * (s - 0.5);
  Complex power = 1.0;
  detail::CompensatedSum<Complex> sum;
  Complex last = 0.0;
  for (double c : coeffs) {
    last = c * power;
    sum.add(last);
    power *= w;
  }
  if (tail != nullptr) *tail = std::abs(last);
  return sum.value();
}

}  // namespace zeta
