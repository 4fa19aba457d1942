#pragma once

// Exact and floating-point building blocks shared by every strategy.

#include <gmpxx.h>

#include <cstdint>

#include "zeta/types.hpp"

namespace zeta {

/// Exact rational in lowest terms with positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

double to_double(const Rational& q);

/// Memoized table of exact Bernoulli numbers (B_1 = -1/2 convention).
///
/// Reads are concurrent; extension takes an exclusive lock. Entries are
/// generated from sum_{k=0}^{d} C(d+1, k) B_k = 0.
class BernoulliTable {
 public:
  static BernoulliTable& instance();

  Rational get(int j);
  double get_double(int j);
  /// Number of entries currently materialized.
  int size() const;

 private:
  BernoulliTable();
  void extend_to(int j);

  struct Impl;
  Impl* impl_;
};

/// B_j as an exact rational.
Rational bernoulli(int j);
/// B_j rounded to double.
double bernoulli_double(int j);

/// B_i(x) = sum_j C(i, j) B_{i-j} x^j.
double bernoulli_poly(int i, double x);
/// Exact B_i(x) for rational x.
Rational bernoulli_poly_exact(int i, const Rational& x);

/// Integer binomial coefficient C(n, k) as a big integer; zero if k > n.
BigInt binomial_exact(long n, long k);

/// Generalized binomial C(z, n) = (z/n)((z-1)/(n-1))...((z-n+1)/1).
/// Exactly zero when z is a nonnegative integer smaller than n.
Complex binomial(Complex top, int bottom);

/// Checks C(1-s, j) == (-1)^j C(s+j-2, j) to relative tolerance 1e-12.
bool binomial_symmetry_check(Complex s, int j);

/// Gamma(z) for complex z. Throws PoleError at nonpositive integers.
Complex complex_gamma(Complex z);
/// Principal log Gamma(z) for Re z >= 1/2 (used internally by complex_gamma).
Complex log_gamma_right(Complex z);

/// sum_{i=1}^{n} i^k, exactly.
Rational faulhaber(std::int64_t n, int k);

/// Physicists' Hermite polynomial H_n(x).
Complex hermite(int n, Complex x);
/// Generalized Laguerre polynomial L_n^{(-1/2)}(x).
Complex laguerre_half(int n, Complex x);

/// i^{-s} via exp(-s ln i) for a positive integer i.
inline Complex int_pow_neg(double i, Complex s) { return std::exp(-s * std::log(i)); }

}  // namespace zeta
