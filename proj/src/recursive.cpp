#include "zeta/recursive.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "zeta/detail/summation.hpp"
#include "zeta/numerics.hpp"

namespace zeta {

using detail::CompensatedSum;
using detail::kEps;

namespace {

bool is_one(Complex s) { return std::abs(s - 1.0) < 1e-14; }

std::string fmt(Complex s) {
  return "(" + std::to_string(s.real()) + ", " + std::to_string(s.imag()) + ")";
}

// C(w, m) * g(w + 1) where g is zeta or zeta - 1; both have a simple pole of
// residue 1 at w = 0, where the product tends to (-1)^{m-1}/m.
template <typename F>
Complex binomial_times_pole(Complex w, int m, F&& g) {
  if (std::abs(w) < 1e-12) return (m % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(m);
  const Complex c = binomial(w, m);
  if (c == 0.0) return 0.0;
  return c * g(w + 1.0);
}

// Tracks the "three consecutive small terms" stopping rule.
class QuietCounter {
 public:
  explicit QuietCounter(double tol) : tol_(tol) {}
  bool update(double term, double scale) {
    if (term <= tol_ * scale || term == 0.0) {
      ++quiet_;
    } else {
      quiet_ = 0;
    }
    return quiet_ >= 3;
  }

 private:
  double tol_;
  int quiet_ = 0;
};

double ratio_to_double(const BigInt& num, const BigInt& den) {
  if (sgn(num) == 0) return 0.0;
  long en = 0;
  long ed = 0;
  const double mn = mpz_get_d_2exp(&en, num.get_mpz_t());
  const double md = mpz_get_d_2exp(&ed, den.get_mpz_t());
  return std::ldexp(mn / md, static_cast<int>(en - ed));
}

void check_recursion_params(const RecursionParams& r, const char* who) {
  if (!(r.tolerance > 0.0)) throw DomainError(std::string(who) + ": tolerance must be positive");
  if (r.max_terms < 1) throw DomainError(std::string(who) + ": max_terms must be >= 1");
}

}  // namespace

ZetaUpRef default_zeta_up() {
  return ZetaUpRef{[](Complex w) { return zeta_minus_one(w); }, -std::numeric_limits<double>::infinity()};
}

ZetaUpRef dirichlet_zeta_up() {
  return ZetaUpRef{[](Complex w) {
                     if (w.real() <= 1.0) throw DomainError("dirichlet provider: requires Re w > 1");
                     const double sigma = w.real();
                     CompensatedSum<Complex> acc;
                     for (double k = 2.0;; k += 1.0) {
                       acc.add(int_pow_neg(k, w));
                       const double tail = std::pow(k, 1.0 - sigma) / (sigma - 1.0);
                       if (tail < 1e-17 * std::abs(acc.value()) || k > 1e7) break;
                     }
                     return acc.value();
                   },
                   1.0};
}

int default_stark_delta(Complex s) {
  return std::max(1, static_cast<int>(std::ceil(1.0 - s.real())) + 1);
}

EvalOutcome zeta_stark(Complex s, const RecursionParams& r, const ZetaUpRef& up) {
  check_recursion_params(r, "stark");
  if (is_one(s)) throw PoleError("stark: pole at s = 1");
  if (r.delta < 1) throw DomainError("stark: delta must be >= 1");
  if (s.real() + r.delta <= up.min_real) {
    throw DomainError("stark: zeta provider cannot serve Re(s + delta) = " + std::to_string(s.real() + r.delta));
  }
  const int delta = r.delta;
  const Complex inv = 1.0 / (s - 1.0);

  CompensatedSum<Complex> head;
  for (int k = 0; k < delta; ++k) {
    const double b = bernoulli_double(k);
    if (b != 0.0) head.add(binomial(s + static_cast<double>(k) - 2.0, k) * b);
  }

  CompensatedSum<Complex> tail;
  QuietCounter quiet(r.tolerance);
  Complex last = 0.0;
  double prev = kNaN;
  double ratio = kNaN;
  std::int64_t count = 0;
  TruncationReason reason = TruncationReason::max_terms;
  for (int i = delta; count < r.max_terms; ++i, ++count) {
    // sum_{k<delta} C(i+1, k) B_k, exactly
    Rational a = 0;
    for (int k = 0; k < delta; ++k) a += Rational(binomial_exact(i + 1, k)) * bernoulli(k);
    const double coeff = to_double(a);
    const Complex w = s + static_cast<double>(i) - 1.0;
    last = coeff == 0.0 ? Complex(0.0)
                        : coeff * binomial_times_pole(w, i + 1, [&](Complex z) { return up.zeta_minus_one(z); });
    tail.add(last);
    const double mag = std::abs(last);
    if (prev > 0.0) ratio = mag / prev;
    prev = mag;
    const Complex current = 1.0 + inv * (head.value() - tail.value());
    if (quiet.update(mag * std::abs(inv), std::abs(current))) {
      ++count;
      reason = TruncationReason::tolerance_met;
      break;
    }
  }
  EvalOutcome out;
  out.value = 1.0 + inv * (head.value() - tail.value());
  // Outer terms decay like 2^{-i}: the omitted tail is about one last term.
  out.error_estimate = std::abs(inv) * (2.0 * std::abs(last) + 8.0 * kEps * (head.magnitude() + tail.magnitude())) +
                       4.0 * kEps;
  out.terms_used = count;
  out.strategy = StrategyId::stark;
  out.truncation_reason = reason;
  out.tail_ratio = ratio;
  return out;
}

EvalOutcome zeta_ramaswami(Complex s, const SeriesParams& p, const ZetaUpRef& up) {
  p.validate();
  const Complex pref = std::exp(s * std::log(2.0)) - 2.0;
  if (std::abs(pref) < kSingularThreshold) {
    throw SingularPrefactorError("ramaswami: 2^s - 2 vanishes at s = " + fmt(s));
  }
  if (s.real() + 1.0 <= up.min_real) throw DomainError("ramaswami: zeta provider cannot serve Re(s + 1)");
  CompensatedSum<Complex> acc;
  QuietCounter quiet(p.tolerance);
  Complex last = 0.0;
  double prev = kNaN;
  double ratio = kNaN;
  double scale = 1.0;
  std::int64_t count = 0;
  TruncationReason reason = TruncationReason::max_terms;
  for (int k = 1; count < p.max_terms; ++k) {
    scale *= 0.5;
    const Complex w = s + static_cast<double>(k) - 1.0;
    last = scale * binomial_times_pole(w, k, [&](Complex z) { return up.zeta(z); });
    acc.add(last);
    ++count;
    const double mag = std::abs(last);
    if (prev > 0.0) ratio = mag / prev;
    prev = mag;
    if (quiet.update(mag, std::abs(acc.value()))) {
      reason = TruncationReason::tolerance_met;
      break;
    }
  }
  EvalOutcome out;
  out.value = acc.value() / pref;
  out.error_estimate = (2.0 * std::abs(last) + 8.0 * kEps * acc.magnitude()) / std::abs(pref);
  out.terms_used = count;
  out.strategy = StrategyId::ramaswami;
  out.truncation_reason = reason;
  out.tail_ratio = ratio;
  return out;
}

namespace {

// Rows j of B_j C(i+1, j)/(i+1) for j <= i < delta. Independent of s.
std::vector<std::vector<Rational>> ramaswami_coefficients(int delta) {
  std::vector<std::vector<Rational>> table(static_cast<std::size_t>(delta));
  for (int j = 0; j < delta; ++j) {
    auto& row = table[static_cast<std::size_t>(j)];
    row.resize(static_cast<std::size_t>(delta));
    for (int i = j; i < delta; ++i) {
      Rational c = bernoulli(j) * Rational(binomial_exact(i + 1, j)) / (i + 1);
      c.canonicalize();
      row[static_cast<std::size_t>(i)] = c;
    }
  }
  return table;
}

int singular_ramaswami_index(Complex s, int delta) {
  const Complex two_s = std::exp(s * std::log(2.0));
  for (int j = 0; j < delta; ++j) {
    if (bernoulli_double(j) == 0.0) continue;
    if (std::abs(two_s - std::pow(2.0, 1.0 - j)) < kSingularThreshold) return j;
  }
  return -1;
}

}  // namespace

int default_ramaswami_general_delta(Complex s) {
  int delta = std::max(1, static_cast<int>(std::floor(1.0 - s.real())) + 1);
  while (delta > 1 && singular_ramaswami_index(s, delta) >= 0) --delta;
  return delta;
}

EvalOutcome zeta_ramaswami_general(Complex s, const RecursionParams& r, const ZetaUpRef& up) {
  check_recursion_params(r, "ramaswami_general");
  if (is_one(s)) throw PoleError("ramaswami_general: pole at s = 1");
  if (r.delta < 1) throw DomainError("ramaswami_general: delta must be >= 1");
  if (s.real() + r.delta <= up.min_real) {
    throw DomainError("ramaswami_general: zeta provider cannot serve Re(s + delta)");
  }
  const int delta = r.delta;
  if (const int j = singular_ramaswami_index(s, delta); j >= 0) {
    throw SingularPrefactorError(
        "ramaswami_general: denominator 2^s - 2^{1-j} vanishes for j = " + std::to_string(j) + " at s = " + fmt(s), j);
  }
  const Complex two_s = std::exp(s * std::log(2.0));
  std::vector<Complex> inv_den(static_cast<std::size_t>(delta));
  for (int j = 0; j < delta; ++j) {
    if (bernoulli_double(j) == 0.0) continue;  // the row vanishes, and so may its denominator
    inv_den[static_cast<std::size_t>(j)] = 1.0 / (two_s - std::pow(2.0, 1.0 - j));
  }
  const auto table = ramaswami_coefficients(delta);

  CompensatedSum<Complex> acc;
  QuietCounter quiet(r.tolerance);
  Complex last = 0.0;
  double prev = kNaN;
  double ratio = kNaN;
  std::int64_t count = 0;
  TruncationReason reason = TruncationReason::max_terms;
  for (int k = delta; count < r.max_terms; ++k) {
    Complex weight = 0.0;
    for (int j = 0; j < delta; ++j) {
      if (inv_den[static_cast<std::size_t>(j)] == 0.0) continue;
      Rational a = 0;
      for (int i = j; i < delta; ++i) {
        a += Rational(binomial_exact(k, i)) * table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      }
      weight += to_double(a) * inv_den[static_cast<std::size_t>(j)];
    }
    const Complex w = s + static_cast<double>(k) - 1.0;
    last = std::ldexp(1.0, -k) * weight * binomial_times_pole(w, k, [&](Complex z) { return up.zeta(z); });
    acc.add(last);
    ++count;
    const double mag = std::abs(last);
    if (prev > 0.0) ratio = mag / prev;
    prev = mag;
    if (quiet.update(mag, std::abs(acc.value()))) {
      reason = TruncationReason::tolerance_met;
      break;
    }
  }
  EvalOutcome out;
  out.value = acc.value();
  out.error_estimate = 2.0 * std::abs(last) + 8.0 * kEps * acc.magnitude();
  out.terms_used = count;
  out.strategy = StrategyId::ramaswami_general;
  out.truncation_reason = reason;
  out.tail_ratio = ratio;
  return out;
}

// ---------------------------------------------------------------------------
// Integral-free double series.
//
// The inner sum over j of C(i+1, j) B_j (n(p-1))^{i+1-j} / (p^s - p^{1-j})
// cancels catastrophically in floating point once B_j outgrows (np)^i.
// Low j (up to `split`) are evaluated directly with exact coefficients; the
// remaining j use 1/(p^s - p^{1-j}) = p^{-s} sum_m (p^{1-s})^m p^{-jm}, whose
// m-th coefficient is an exact rational of moderate size.
// ---------------------------------------------------------------------------

namespace {

// Bernoulli numbers over a common denominator: B_j = numer[j] / denom.
class ScaledBernoulli {
 public:
  void ensure(int j) {
    while (static_cast<int>(numer_.size()) <= j) {
      const Rational b = bernoulli(static_cast<int>(numer_.size()));
      const BigInt den = b.get_den();
      BigInt l;
      mpz_lcm(l.get_mpz_t(), denom_.get_mpz_t(), den.get_mpz_t());
      if (l != denom_) {
        const BigInt factor = l / denom_;
        for (auto& v : numer_) v *= factor;
        denom_ = l;
      }
      numer_.push_back(b.get_num() * (denom_ / den));
    }
  }
  const BigInt& numer(int j) const { return numer_[static_cast<std::size_t>(j)]; }
  const BigInt& denom() const { return denom_; }

 private:
  BigInt denom_ = 1;
  std::vector<BigInt> numer_;
};

BigInt ipow(long base, long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

int default_integral_free_delta(Complex s) {
  return std::max(1, static_cast<int>(std::floor(1.0 - s.real())) + 2);
}

Complex integral_free_head(Complex s, int n, int delta) {
  CompensatedSum<Complex> acc;
  for (int j = 1; j <= n; ++j) acc.add(int_pow_neg(j, s));
  for (int k = 0; k < delta; ++k) {
    const double b = bernoulli_double(k);
    if (b == 0.0) continue;
    acc.add(binomial(s + static_cast<double>(k) - 2.0, k) / (s - 1.0) * b *
            std::exp((1.0 - s - static_cast<double>(k)) * std::log(static_cast<double>(n))));
  }
  return acc.value();
}

EvalOutcome zeta_integral_free(Complex s, const RecursionParams& r) {
  check_recursion_params(r, "integral_free");
  if (is_one(s)) throw PoleError("integral_free: pole at s = 1");
  if (r.n < 1 || r.n % 2 == 0) throw DomainError("integral_free: n must be an odd positive integer");
  if (r.p < 2) throw DomainError("integral_free: p must be >= 2");
  if (r.delta < 0) throw DomainError("integral_free: delta must be >= 0");
  const int delta = r.delta;
  const double min_re = delta == 0 ? 1.0 : 1.0 - delta;
  if (s.real() <= min_re) {
    throw DomainError("integral_free: requires Re s > " + std::to_string(min_re) + ", got s = " + fmt(s));
  }
  const long n = r.n;
  const long p = r.p;
  const long x = n * (p - 1);
  const double ln_p = std::log(static_cast<double>(p));
  const Complex p_s = std::exp(s * ln_p);
  const Complex p_neg_s = 1.0 / p_s;
  const Complex p_one_minus_s = std::exp((1.0 - s) * ln_p);

  // j in [delta, split] are summed directly; beyond that the geometric
  // expansion converges at least like p^{-2 ln 10 / ln p} = 1e-2 per step.
  const int split = std::max(delta - 1, static_cast<int>(std::ceil(2.0 * std::log(10.0) / ln_p - s.real())));
  std::vector<Complex> inv_den;
  for (int j = delta; j <= split; ++j) {
    const Complex den = p_s - std::pow(static_cast<double>(p), 1.0 - j);
    if (std::abs(den) < kSingularThreshold) {
      throw SingularDenominatorError(
          "integral_free: denominator p^s - p^{1-j} vanishes for j = " + std::to_string(j), j);
    }
    inv_den.push_back(1.0 / den);
  }

  const Complex head = integral_free_head(s, r.n, delta);
  double head_mag = 0.0;
  for (long j = 1; j <= n; ++j) head_mag += std::pow(static_cast<double>(j), -s.real());
  const double ln_n = std::log(static_cast<double>(n));
  const Complex outer_scale = 1.0 / ((s - 1.0) * std::exp(s * ln_n));

  ScaledBernoulli bern;
  CompensatedSum<Complex> outer;
  QuietCounter quiet(r.tolerance);
  Complex last = 0.0;
  double prev = kNaN;
  double ratio = kNaN;
  std::int64_t count = 0;
  TruncationReason reason = TruncationReason::max_terms;
  const BigInt np = n * p;
  BigInt np_pow = ipow(n * p, delta);  // (np)^i
  for (int i = delta; count < r.max_terms; ++i, np_pow *= np) {
    bern.ensure(i);
    const BigInt denom = bern.denom() * np_pow;
    // base_j = C(i+1, j) * numer_j * x^{i+1-j}, for j in [delta, i]
    std::vector<BigInt> base(static_cast<std::size_t>(i - delta + 1));
    {
      BigInt xp = 1;  // x^{i+1-j}, built from j = i downwards
      xp = x;
      for (int j = i; j >= delta; --j) {
        base[static_cast<std::size_t>(j - delta)] = binomial_exact(i + 1, j) * bern.numer(j) * xp;
        xp *= x;
      }
    }
    Complex inner = 0.0;
    for (int j = delta; j <= std::min(i, split); ++j) {
      inner += ratio_to_double(base[static_cast<std::size_t>(j - delta)], denom) *
               inv_den[static_cast<std::size_t>(j - delta)];
    }
    if (i > split) {
      Complex geo = 0.0;
      Complex weight = p_neg_s;  // p^{-s} (p^{1-s})^m
      BigInt pm = 1;             // p^m
      BigInt denom_m = denom;    // denom * p^{m i}
      const BigInt p_i = ipow(p, i);
      int small = 0;
      for (int m = 0; m < 200; ++m) {
        BigInt horner = 0;
        for (int j = split + 1; j <= i; ++j) horner = horner * pm + base[static_cast<std::size_t>(j - delta)];
        const Complex contrib = weight * ratio_to_double(horner, denom_m);
        geo += contrib;
        if (std::abs(contrib) <= 1e-18 * std::max(std::abs(geo), 1e-300)) {
          if (++small >= 2) break;
        } else {
          small = 0;
        }
        weight *= p_one_minus_s;
        pm *= p;
        denom_m *= p_i;
      }
      inner += geo;
    }
    last = binomial(static_cast<double>(i) + s - 1.0, i + 1) * inner;
    outer.add(last);
    ++count;
    const double mag = std::abs(last);
    if (prev > 0.0) ratio = mag / prev;
    prev = mag;
    const Complex current = head + outer_scale * outer.value();
    if (quiet.update(mag * std::abs(outer_scale), std::abs(current))) {
      reason = TruncationReason::tolerance_met;
      break;
    }
  }
  const double r_geo = 1.0 - 1.0 / static_cast<double>(p);
  EvalOutcome out;
  out.value = head + outer_scale * outer.value();
  out.error_estimate = std::abs(outer_scale) * (std::abs(last) * r_geo / (1.0 - r_geo) + 8.0 * kEps * outer.magnitude()) +
                       16.0 * kEps * (std::abs(head) + head_mag + std::abs(out.value));
  out.terms_used = count;
  out.strategy = StrategyId::integral_free;
  out.truncation_reason = reason;
  out.tail_ratio = ratio;
  return out;
}

}  // namespace zeta
