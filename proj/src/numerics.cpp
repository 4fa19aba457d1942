#include "zeta/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace zeta {

double to_double(const Rational& q) { return q.get_d(); }

struct BernoulliTable::Impl {
  mutable std::shared_mutex mutex;
  std::vector<Rational> exact;
  std::vector<double> rounded;
};

BernoulliTable::BernoulliTable() : impl_(new Impl) {
  impl_->exact.emplace_back(1);
  impl_->rounded.push_back(1.0);
}

BernoulliTable& BernoulliTable::instance() {
  static BernoulliTable table;
  return table;
}

int BernoulliTable::size() const {
  std::shared_lock lock(impl_->mutex);
  return static_cast<int>(impl_->exact.size());
}

void BernoulliTable::extend_to(int j) {
  std::unique_lock lock(impl_->mutex);
  auto& b = impl_->exact;
  while (static_cast<int>(b.size()) <= j) {
    const long d = static_cast<long>(b.size());
    // B_d = -1/(d+1) * sum_{k<d} C(d+1, k) B_k
    Rational acc = 0;
    BigInt c = 1;  // C(d+1, 0)
    for (long k = 0; k < d; ++k) {
      acc += Rational(c) * b[static_cast<std::size_t>(k)];
      c = c * (d + 1 - k) / (k + 1);
    }
    Rational next = -acc / (d + 1);
    next.canonicalize();
    impl_->rounded.push_back(to_double(next));
    b.push_back(std::move(next));
  }
}

Rational BernoulliTable::get(int j) {
  {
    std::shared_lock lock(impl_->mutex);
    if (j < static_cast<int>(impl_->exact.size())) return impl_->exact[static_cast<std::size_t>(j)];
  }
  extend_to(j);
  std::shared_lock lock(impl_->mutex);
  return impl_->exact[static_cast<std::size_t>(j)];
}

double BernoulliTable::get_double(int j) {
  {
    std::shared_lock lock(impl_->mutex);
    if (j < static_cast<int>(impl_->rounded.size())) return impl_->rounded[static_cast<std::size_t>(j)];
  }
  extend_to(j);
  std::shared_lock lock(impl_->mutex);
  return impl_->rounded[static_cast<std::size_t>(j)];
}

Rational bernoulli(int j) {
  if (j < 0) throw DomainError("bernoulli: negative index");
  return BernoulliTable::instance().get(j);
}

double bernoulli_double(int j) {
  if (j < 0) throw DomainError("bernoulli: negative index");
  return BernoulliTable::instance().get_double(j);
}

BigInt binomial_exact(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

double bernoulli_poly(int i, double x) {
  if (i < 0) throw DomainError("bernoulli_poly: negative degree");
  // Horner over x with coefficients C(i, j) B_{i-j}.
  double acc = 0.0;
  for (int j = i; j >= 0; --j) {
    const double coeff = binomial_exact(i, j).get_d() * bernoulli_double(i - j);
    acc = acc * x + coeff;
  }
  return acc;
}

Rational bernoulli_poly_exact(int i, const Rational& x) {
  Rational acc = 0;
  for (int j = i; j >= 0; --j) {
    acc = acc * x + Rational(binomial_exact(i, j)) * bernoulli(i - j);
  }
  return acc;
}

Complex binomial(Complex top, int bottom) {
  if (bottom < 0) throw DomainError("binomial: negative bottom index");
  Complex r = 1.0;
  for (int i = 0; i < bottom; ++i) {
    r *= (top - static_cast<double>(i)) / static_cast<double>(bottom - i);
  }
  return r;
}

bool binomial_symmetry_check(Complex s, int j) {
  const Complex lhs = binomial(1.0 - s, j);
  const Complex rhs = (j % 2 == 0 ? 1.0 : -1.0) * binomial(s + static_cast<double>(j) - 2.0, j);
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) <= 1e-12 * scale;
}

namespace {

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// sin(pi z) with argument reduction on the real part.
Complex sin_pi(Complex z) {
  double x = std::fmod(z.real(), 2.0);
  const double y = z.imag();
  const double sx = std::sin(kPi * x);
  const double cx = std::cos(kPi * x);
  return {sx * std::cosh(kPi * y), cx * std::sinh(kPi * y)};
}

}  // namespace

Complex log_gamma_right(Complex z) {
  z -= 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

Complex complex_gamma(Complex z) {
  const double nearest = std::round(z.real());
  if (nearest <= 0.0 && std::abs(z.real() - nearest) < 1e-14 && std::abs(z.imag()) < 1e-14) {
    throw PoleError("complex_gamma: pole at nonpositive integer " + std::to_string(static_cast<long>(nearest)));
  }
  if (z.real() < 0.5) {
    return kPi / (sin_pi(z) * std::exp(log_gamma_right(1.0 - z)));
  }
  // Exact factorials keep small integer arguments bit-exact.
  if (z.imag() == 0.0 && z.real() == nearest && nearest <= 20.0) {
    double f = 1.0;
    for (int k = 2; k < static_cast<int>(nearest); ++k) f *= k;
    return f;
  }
  return std::exp(log_gamma_right(z));
}

Rational faulhaber(std::int64_t n, int k) {
  if (n < 0 || k < 0) throw DomainError("faulhaber: negative argument");
  Rational r = (bernoulli_poly_exact(k + 1, Rational(BigInt(std::to_string(n + 1)))) - bernoulli(k + 1)) / (k + 1);
  // The Bernoulli-polynomial form counts the i = 0 term 0^0 = 1.
  if (k == 0) r -= 1;
  r.canonicalize();
  return r;
}

Complex hermite(int n, Complex x) {
  if (n < 0) throw DomainError("hermite: negative degree");
  if (n == 0) return 1.0;
  Complex prev = 1.0;
  Complex cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    Complex next = 2.0 * x * cur - 2.0 * static_cast<double>(k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex laguerre_half(int n, Complex x) {
  if (n < 0) throw DomainError("laguerre_half: negative degree");
  constexpr double alpha = -0.5;
  if (n == 0) return 1.0;
  Complex prev = 1.0;
  Complex cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double kd = k;
    Complex next = ((2.0 * kd + 1.0 + alpha - x) * cur - (kd + alpha) * prev) / (kd + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace zeta
