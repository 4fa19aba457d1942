#include "zeta/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "zeta/detail/summation.hpp"

namespace zeta {

using detail::CompensatedSum;
using detail::kEps;

void SeriesParams::validate() const {
  if (!(tolerance > 0.0)) throw DomainError("SeriesParams: tolerance must be positive");
  if (max_terms < 1) throw DomainError("SeriesParams: max_terms must be >= 1");
}

void EulerMaclaurinParams::validate() const {
  if (n < 1) throw DomainError("EulerMaclaurinParams: n must be >= 1");
  if (delta < 0) throw DomainError("EulerMaclaurinParams: delta must be >= 0");
}

namespace {

bool is_one(Complex s) { return std::abs(s - 1.0) < 1e-14; }

std::string fmt(Complex s) {
  return "(" + std::to_string(s.real()) + ", " + std::to_string(s.imag()) + ")";
}

// A series of "groups" g_i, each a finite difference of x^{-s}; the groups
// decay like i^{-(Re s + order)}.
struct GroupedSeries {
  StrategyId id;
  Complex prefactor;     // multiplies zeta(s) on the left-hand side
  Complex constant;      // terms outside the grouped sum
  double sign;           // +1 or -1 in front of the grouped sum
  std::int64_t first;    // first group index
  int order;             // finite-difference order of each group
  /// Group i; adds the magnitude of its rounding error to `noise`.
  std::function<Complex(std::int64_t, double& noise)> group;
};

EvalOutcome run_grouped(Complex s, const SeriesParams& p, const GroupedSeries& g) {
  const double pref = std::abs(g.prefactor);
  if (pref < kSingularThreshold) {
    throw SingularPrefactorError(std::string(to_string(g.id)) + ": prefactor vanishes at s = " + fmt(s));
  }
  CompensatedSum<Complex> acc;
  acc.add(g.constant);
  double noise = 0.0;
  int quiet = 0;
  // Integral estimate of the groups after i, relative to |g_i|, doubled.
  const double decay = s.real() + g.order - 1.0;
  auto tail_factor = [&](std::int64_t i) {
    return 1.0 + (decay > 0.0 ? 2.0 * std::max(static_cast<double>(i), 1.0) / decay : HUGE_VAL);
  };
  Complex last = 0.0;
  double prev_mag = kNaN;
  double ratio = kNaN;
  std::int64_t count = 0;
  TruncationReason reason = TruncationReason::max_terms;
  for (std::int64_t i = g.first; count < p.max_terms; ++i) {
    last = g.sign * g.group(i, noise);
    acc.add(last);
    ++count;
    const double mag = std::abs(last);
    if (prev_mag > 0.0) ratio = mag / prev_mag;
    prev_mag = mag;
    if (mag * tail_factor(i) <= p.tolerance * std::abs(acc.value())) {
      if (++quiet >= 3) {
        reason = TruncationReason::tolerance_met;
        break;
      }
    } else {
      quiet = 0;
    }
  }
  double tail = std::abs(last) * tail_factor(g.first + count - 1);
  tail += 8.0 * kEps * acc.magnitude() + noise;
  EvalOutcome out;
  out.value = acc.value() / g.prefactor;
  out.error_estimate = tail / pref;
  out.terms_used = count;
  out.strategy = g.id;
  out.truncation_reason = reason;
  out.tail_ratio = ratio;
  return out;
}

Complex pw(double x, Complex s) { return int_pow_neg(x, s); }

// Central difference sum_j w_j (c+j)^{-s} with w = (1,-2,1) (order 2) or
// (1,-4,6,-4,1) (order 4). Far from the origin the direct form cancels
// catastrophically, so it is expanded as
// sum_{k even} (sum_j w_j j^k / k!) (s)_k c^{-s-k}.
Complex central_difference(double c, Complex s, int order, double& noise) {
  const int half = order / 2;
  if (c < 2.0 * std::abs(s) + 10.0) {
    static constexpr double w2[] = {1.0, -2.0, 1.0};
    static constexpr double w4[] = {1.0, -4.0, 6.0, -4.0, 1.0};
    const double* w = order == 2 ? w2 : w4;
    Complex acc = 0.0;
    double mag = 0.0;
    for (int j = -half; j <= half; ++j) {
      const Complex v = w[j + half] * pw(c + j, s);
      acc += v;
      mag += std::abs(v);
    }
    noise += 4.0 * kEps * mag * (1.0 + std::abs(s) * std::log(c + half));
    return acc;
  }
  const Complex base = pw(c, s);
  const double inv_c2 = 1.0 / (c * c);
  Complex poch = 1.0;  // (s)_k
  double cpow = 1.0;   // c^{-k}
  double fact = 1.0;   // k!
  Complex sum = 0.0;
  for (int k = 1; k <= 200; ++k) {
    poch *= s + static_cast<double>(k - 1);
    fact *= k;
    if (k % 2 == 1) continue;
    cpow *= inv_c2;
    if (k < order) continue;
    // sum_j w_j j^k: 2 for order 2; 2^{k+1} - 8 for order 4
    const double moment = order == 2 ? 2.0 : std::ldexp(1.0, k + 1) - 8.0;
    const Complex term = moment / fact * poch * cpow;
    sum += term;
    if (k > std::abs(s) && std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  const Complex r = base * sum;
  noise += 4.0 * kEps * std::abs(r) * (1.0 + std::abs(s) * std::log(c));
  return r;
}

}  // namespace

EvalOutcome zeta_dirichlet(Complex s, const SeriesParams& p) {
  p.validate();
  if (s.real() <= 1.0) throw DomainError("dirichlet: requires Re s > 1, got s = " + fmt(s));
  const double sigma = s.real();
  CompensatedSum<Complex> acc;
  std::int64_t n = 0;
  double bound = HUGE_VAL;
  TruncationReason reason = TruncationReason::max_terms;
  while (n < p.max_terms) {
    ++n;
    acc.add(pw(static_cast<double>(n), s));
    // sum_{i>N} i^{-sigma} <= N^{1-sigma}/(sigma-1)
    bound = std::pow(static_cast<double>(n), 1.0 - sigma) / (sigma - 1.0);
    if (bound < p.tolerance) {
      reason = TruncationReason::tolerance_met;
      break;
    }
  }
  EvalOutcome out;
  out.value = acc.value();
  out.error_estimate = bound + 8.0 * kEps * acc.magnitude();
  out.terms_used = n;
  out.strategy = StrategyId::dirichlet;
  out.truncation_reason = reason;
  return out;
}

EvalOutcome zeta_eta(Complex s, const SeriesParams& p) {
  p.validate();
  if (is_one(s)) {
    throw PoleError("eta: pole at s = 1 (the alternating sum tends to ln 2 while 1 - 2^{1-s} -> 0)");
  }
  if (s.real() <= 0.0) throw DomainError("eta: requires Re s > 0, got s = " + fmt(s));
  const Complex pref = 1.0 - std::exp((1.0 - s) * std::log(2.0));
  if (std::abs(pref) < kSingularThreshold) {
    throw SingularPrefactorError("eta: 1 - 2^{1-s} vanishes at s = " + fmt(s));
  }
  // Remainder after N terms is approximated by half the next term; what is
  // left is an alternating series of first differences.
  const double sigma = s.real();
  const double ss1 = std::abs(s * (s + 1.0));
  auto midpoint_bound = [&](std::int64_t n) {
    const double m = static_cast<double>(n + 1);
    const Complex d = pw(m, s) - pw(m + 1.0, s);
    return 0.5 * std::abs(d) + 0.5 * ss1 * std::pow(m, -sigma - 1.0) / (sigma + 1.0);
  };
  CompensatedSum<Complex> acc;
  std::int64_t n = 0;
  TruncationReason reason = TruncationReason::max_terms;
  while (n < p.max_terms) {
    ++n;
    const Complex term = pw(static_cast<double>(n), s);
    acc.add(n % 2 == 1 ? term : -term);
    if ((n % 16 == 0 || n < 16) && midpoint_bound(n) < p.tolerance * std::abs(acc.value())) {
      reason = TruncationReason::tolerance_met;
      break;
    }
  }
  const Complex next = pw(static_cast<double>(n + 1), s);
  acc.add(0.5 * (n % 2 == 0 ? next : -next));
  EvalOutcome out;
  out.value = acc.value() / pref;
  out.error_estimate = (midpoint_bound(n) + 8.0 * kEps * acc.magnitude()) / std::abs(pref);
  out.terms_used = n;
  out.strategy = StrategyId::eta;
  out.truncation_reason = reason;
  return out;
}

EvalOutcome zeta_three_term(Complex s, const SeriesParams& p) {
  p.validate();
  if (is_one(s)) throw PoleError("three_term: pole at s = 1");
  if (s.real() <= -1.0) throw DomainError("three_term: requires Re s > -1, got s = " + fmt(s));
  GroupedSeries g{StrategyId::three_term,
                  1.0 - std::exp((1.0 - s) * std::log(3.0)),
                  1.0,
                  1.0,
                  1,
                  2,
                  [s](std::int64_t i, double& noise) {
                    return central_difference(3.0 * static_cast<double>(i), s, 2, noise);
                  }};
  return run_grouped(s, p, g);
}

EvalOutcome zeta_four_term(Complex s, const SeriesParams& p) {
  p.validate();
  if (is_one(s)) throw PoleError("four_term: pole at s = 1");
  if (s.real() <= -1.0) throw DomainError("four_term: requires Re s > -1, got s = " + fmt(s));
  const Complex half = std::exp(-s * std::log(2.0));
  GroupedSeries g{StrategyId::four_term,
                  1.0 - half - 2.0 * half * half,
                  1.0,
                  1.0,
                  1,
                  2,
                  [s](std::int64_t i, double& noise) {
                    return central_difference(4.0 * static_cast<double>(i), s, 2, noise);
                  }};
  return run_grouped(s, p, g);
}

EvalOutcome zeta_six_term_a(Complex s, const SeriesParams& p) {
  p.validate();
  if (is_one(s)) throw PoleError("six_term_a: pole at s = 1");
  if (s.real() <= -3.0) throw DomainError("six_term_a: requires Re s > -3, got s = " + fmt(s));
  const Complex pref = 1.0 - 5.0 * pw(2.0, s) + 5.0 * pw(3.0, s) - pw(6.0, s);
  GroupedSeries g{StrategyId::six_term_a, pref, 0.0, 1.0, 0, 4, [s](std::int64_t i, double& noise) {
                    return central_difference(6.0 * static_cast<double>(i) + 3.0, s, 4, noise);
                  }};
  return run_grouped(s, p, g);
}

EvalOutcome zeta_six_term_b(Complex s, const SeriesParams& p) {
  p.validate();
  if (is_one(s)) throw PoleError("six_term_b: pole at s = 1");
  if (s.real() <= -3.0) throw DomainError("six_term_b: requires Re s > -3, got s = " + fmt(s));
  const Complex pref = 4.0 - 5.0 * pw(2.0, s) - 4.0 * pw(3.0, s) - pw(6.0, s);
  GroupedSeries g{StrategyId::six_term_b, pref, 4.0 - pw(2.0, s), -1.0, 1, 4, [s](std::int64_t i, double& noise) {
                    return central_difference(6.0 * static_cast<double>(i), s, 4, noise);
                  }};
  return run_grouped(s, p, g);
}

double bernoulli_poly_sup_bound(int delta) {
  if (delta == 0) return 1.0;
  if (delta == 1) return 0.5;
  double fact = 1.0;
  for (int k = 2; k <= delta; ++k) fact *= k;
  return 2.0 * fact / ((1.0 - std::pow(2.0, 1.0 - delta)) * std::pow(2.0 * kPi, delta));
}

double euler_maclaurin_bound(Complex s, int n, int delta) {
  const double c = std::abs(binomial(-s, delta));
  if (c == 0.0) return 0.0;
  const double expo = s.real() + delta - 1.0;
  if (expo <= 0.0) return HUGE_VAL;
  return c * bernoulli_poly_sup_bound(delta) * std::pow(static_cast<double>(n), -expo) / expo;
}

namespace {

// Euler-Maclaurin sum with the head sum starting at `first` (1 for zeta,
// 2 for zeta - 1).
EvalOutcome euler_maclaurin_from(Complex s, const EulerMaclaurinParams& q, int first) {
  q.validate();
  if (is_one(s)) throw PoleError("euler_maclaurin: pole at s = 1");
  const double bound = euler_maclaurin_bound(s, q.n, q.delta);
  if (s.real() <= 1.0 - q.delta && bound != 0.0) {
    throw DomainError("euler_maclaurin: requires Re s > 1 - delta (delta = " + std::to_string(q.delta) +
                      "), got s = " + fmt(s));
  }
  CompensatedSum<Complex> acc;
  for (int i = first; i < q.n; ++i) acc.add(pw(static_cast<double>(i), s));

  const double ln_n = std::log(static_cast<double>(q.n));
  const Complex n_pow = std::exp((1.0 - s) * ln_n);  // n^{1-s}
  const Complex inv_sm1 = 1.0 / (s - 1.0);
  Complex binom = 1.0;                                  // C(1-s, j), updated incrementally
  double n_neg_j = 1.0;                                 // n^{-j}
  for (int j = 0; j <= q.delta; ++j) {
    if (j > 0) {
      binom *= (1.0 - s - static_cast<double>(j - 1)) / static_cast<double>(j);
      n_neg_j /= q.n;
    }
    const double b = bernoulli_double(j);
    if (b == 0.0) continue;
    acc.add(b * n_pow * n_neg_j * binom * inv_sm1);
  }
  EvalOutcome out;
  out.value = acc.value();
  out.error_estimate = bound + 8.0 * kEps * acc.magnitude();
  out.terms_used = q.n - 1 + q.delta + 1;
  out.strategy = StrategyId::euler_maclaurin;
  out.truncation_reason = bound == 0.0 ? TruncationReason::exact : TruncationReason::tolerance_met;
  return out;
}

}  // namespace

EvalOutcome zeta_euler_maclaurin(Complex s, const EulerMaclaurinParams& q) { return euler_maclaurin_from(s, q, 1); }

Complex zeta_minus_one(Complex s) {
  EulerMaclaurinParams q = default_euler_maclaurin_params(s);
  q.n = std::max(q.n, 2);
  return euler_maclaurin_from(s, q, 2).value;
}

namespace {

// Smallest even delta >= d0 whose bound falls below 1e-16 relative, or the
// delta with the smallest bound (capped at 60).
std::pair<int, double> pick_delta(Complex s, int n, int d0) {
  const double scale =
      std::max(1e-300, std::abs(std::exp((1.0 - s) * std::log(static_cast<double>(n))) / (s - 1.0)));
  constexpr int kMaxDelta = 60;
  int best = d0;
  double best_bound = HUGE_VAL;
  for (int delta = d0; delta <= std::max(d0, kMaxDelta); delta += 2) {
    const double b = euler_maclaurin_bound(s, n, delta);
    if (b < best_bound) {
      best_bound = b;
      best = delta;
    }
    if (b <= 1e-16 * scale) break;
  }
  return {best, best_bound};
}

}  // namespace

EulerMaclaurinParams default_euler_maclaurin_params(Complex s) {
  const int n_im = static_cast<int>(std::ceil(std::abs(s.imag())));
  int d0 = std::max(4, static_cast<int>(std::ceil(2.0 - s.real())) + 4);
  if (d0 % 2 != 0) ++d0;
  EulerMaclaurinParams q;
  q.n = std::max(10, n_im);
  q.delta = pick_delta(s, q.n, d0).first;
  if (s.real() >= 0.0 || q.n == std::max(1, n_im)) return q;
  // Left of the critical strip the head sum grows like n^{1-Re s} and its
  // rounding dominates; trade a smaller cutoff for a larger order.
  auto total = [&](int n, double bound) {
    return bound + kEps * std::pow(static_cast<double>(n), 1.0 - s.real()) * (1.0 + 1.0 / std::abs(s - 1.0));
  };
  double best = total(q.n, euler_maclaurin_bound(s, q.n, q.delta));
  int d_min = std::max(2, static_cast<int>(std::floor(1.0 - s.real())) + 1);
  if (d_min % 2 != 0) ++d_min;
  const int n_max = q.n;
  for (int n = std::max(1, n_im); n < n_max; ++n) {
    const auto [d, b] = pick_delta(s, n, d_min);
    const double e = total(n, b);
    if (e < best) {
      best = e;
      q = {n, d};
    }
  }
  return q;
}

EvalOutcome zeta_euler_maclaurin(Complex s) { return zeta_euler_maclaurin(s, default_euler_maclaurin_params(s)); }

Rational zeta_special_negative(int n) {
  if (n < 1) throw DomainError("zeta_special_negative: n must be >= 1");
  Rational r = -bernoulli(n + 1) / (n + 1);
  r.canonicalize();
  return r;
}

}  // namespace zeta
