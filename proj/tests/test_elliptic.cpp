#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/ellint_2.hpp>
#include <cmath>

#include "oracle_values.hpp"
#include "zeta/elliptic.hpp"

using namespace zeta;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const double kLegendreGrid[] = {0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85, 0.95};

double theta_tilde_brute(double t) {
  double sum = 0.0;
  for (int n = 1; n <= 100; ++n) {
    const double a = n * n * kPi * t;
    sum += (4.0 * a * a - 6.0 * a) * std::exp(-a);
  }
  return sum;
}

}  // namespace

TEST_CASE("complete integrals against mpmath and boost") {
  for (const auto& pt : oracle::kElliptic) {
    CHECK_MESSAGE(rel(elliptic_K(pt.m), pt.K) < 1e-13, "K at m = " << pt.m);
    CHECK_MESSAGE(rel(elliptic_E(pt.m), pt.E) < 1e-13, "E at m = " << pt.m);
  }
  for (double m = 0.01; m < 1.0; m += 0.07) {
    const double k = std::sqrt(m);
    CHECK(rel(elliptic_K(m), boost::math::ellint_1(k)) < 1e-13);
    CHECK(rel(elliptic_E(m), boost::math::ellint_2(k)) < 1e-13);
  }
  CHECK(elliptic_K(0.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(elliptic_E(1.0) == 1.0);
  CHECK(rel(elliptic_K(0.5), 1.8540746773013719) < 1e-15);
  CHECK(rel(elliptic_K(0.5), kPi / (2.0 * agm(1.0, std::sqrt(0.5)))) < 1e-15);
  CHECK_THROWS_AS(elliptic_K(1.0), DomainError);
  CHECK_THROWS_AS(elliptic_K(-0.1), DomainError);
  CHECK_THROWS_AS(elliptic_E(1.5), DomainError);
}

TEST_CASE("ordering K >= pi/2 >= E") {
  for (double m = 0.0; m < 1.0; m += 0.05) {
    CHECK(elliptic_K(m) >= kPi / 2 - 1e-15);
    CHECK(elliptic_E(m) <= kPi / 2 + 1e-15);
  }
}

TEST_CASE("legendre relation") {
  for (double m : kLegendreGrid) {
    const auto e = elliptic_pair(m);
    CHECK(std::abs(e.E * e.Kp + e.Ep * e.K - e.K * e.Kp - kPi / 2) < 1e-12);
  }
}

TEST_CASE("derivative identities by central differences") {
  const double h = 1e-6;
  for (double m : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double K = elliptic_K(m), E = elliptic_E(m);
    const double dK = (elliptic_K(m + h) - elliptic_K(m - h)) / (2 * h);
    const double dE = (elliptic_E(m + h) - elliptic_E(m - h)) / (2 * h);
    CHECK(std::abs(dK - (E - (1 - m) * K) / (2 * m * (1 - m))) < 1e-6);
    CHECK(std::abs(dE - (E - K) / (2 * m)) < 1e-6);
    const double dlogq = (std::log(nome(m + h)) - std::log(nome(m - h))) / (2 * h);
    CHECK(std::abs(dlogq - kPi * kPi / (4 * m * (1 - m) * K * K)) < 1e-6);
  }
}

TEST_CASE("theta q-derivative identities") {
  for (double m : {0.2, 0.5, 0.8}) {
    const double K = elliptic_K(m), E = elliptic_E(m);
    const double q = nome(m);
    double s1 = 0.0, s2 = 0.0;
    for (int n = 1; n <= 60; ++n) {
      const double a = n * n * kPi;
      const double w = std::pow(q, static_cast<double>(n) * n);
      s1 += a * w;
      s2 += a * a * w;
    }
    const double root = std::sqrt(2 * K / kPi);
    CHECK(std::abs(s1 - root * K / (2 * kPi) * (E - (1 - m) * K)) < 1e-10);
    CHECK(std::abs(s2 - root * K * K / (2 * kPi * kPi) *
                            (3 * E * E - 6 * (1 - m) * E * K + (3 - m) * (1 - m) * K * K)) < 1e-9);
    CHECK(std::abs(theta3(q) - root) < 1e-10);
  }
}

TEST_CASE("elliptic B") {
  CHECK(std::abs(elliptic_B(1e-12) - kPi / 4) < 1e-12);
  CHECK(std::abs(elliptic_B(1.0) - 1.0) < 1e-15);
  const double m = 0.5;
  CHECK(rel(elliptic_B(m), (elliptic_E(m) - (1 - m) * elliptic_K(m)) / m) < 1e-14);
  // both branches agree around the series switch
  for (double x : {5e-5, 9.9e-5, 1e-4, 1.01e-4, 2e-4}) {
    const double direct = (elliptic_E(x) - (1 - x) * elliptic_K(x)) / x;
    CHECK(rel(elliptic_B(x), direct) < 1e-10);
  }
  CHECK_THROWS_AS(elliptic_B(-0.1), DomainError);
}

TEST_CASE("nome and its inverse") {
  CHECK(std::abs(nome(0.5) - std::exp(-kPi)) < 1e-16);
  CHECK(std::abs(inverse_nome(std::exp(-kPi)) - 0.5) < 1e-12);
  CHECK(std::abs(inverse_nome(nome(0.1)) - 0.1) < 1e-11);
  double prev = 0.0;
  for (double m = 0.01; m < 1.0; m += 0.01) {
    const double q = nome(m);
    CHECK(q > prev);
    prev = q;
    CHECK(std::abs(inverse_nome(q) - m) < 1e-11);
    CHECK(std::abs(inverse_nome(q) + inverse_nome_complement(q) - 1.0) < 1e-14);
  }
  CHECK_THROWS_AS(nome(0.0), DomainError);
  CHECK_THROWS_AS(inverse_nome(1.0), DomainError);
}

TEST_CASE("theta functions") {
  CHECK(theta3(0.0) == 1.0);
  CHECK(theta4(0.0) == 1.0);
  CHECK(theta2(0.0) == 0.0);
  CHECK(std::abs(theta3(std::exp(-kPi)) - std::sqrt(2 * elliptic_K(0.5) / kPi)) < 1e-15);
  CHECK(std::abs(theta4(0.3) / theta3(0.3) - theta4_over_theta3_product(0.3)) < 1e-12);
  for (double q : {0.01, 0.2, 0.5, 0.8}) {
    // Jacobi: theta3^4 = theta2^4 + theta4^4
    CHECK(rel(std::pow(theta3(q), 4), std::pow(theta2(q), 4) + std::pow(theta4(q), 4)) < 1e-13);
  }
  CHECK_THROWS_AS(theta3(1.0), DomainError);
}

TEST_CASE("theta tilde") {
  CHECK(std::abs(theta_tilde(2.0) - theta_tilde_brute(2.0)) < 1e-15);
  CHECK(std::abs(theta_tilde(3.0) - theta_tilde_brute(3.0)) < 1e-16);
  CHECK(std::abs(theta_tilde(0.5) - std::sqrt(2.0) * theta_tilde(2.0)) < 1e-11);
  for (double t : {0.05, 0.3, 0.9, 1.0, 1.7, 4.0}) {
    CHECK(std::abs(theta_tilde(t) - theta_tilde(1 / t) / std::sqrt(t)) < 1e-11);
    CHECK(std::abs(theta_tilde(t) - theta_tilde_brute(t)) < 1e-11);
  }
  CHECK_THROWS_AS(theta_tilde(0.0), DomainError);
}

TEST_CASE("weights U and U~") {
  for (double m : {0.1, 0.3, 0.45}) CHECK(std::abs(weight_U(m) - weight_U(1 - m)) < 1e-11);
  const double m = 1e-8;
  const double L = std::log(16 / m);
  const double asym = (L - 1.5) * std::pow(L, 0.25) / (4 * std::pow(kPi, 0.25));
  CHECK(rel(weight_U(m), asym) < 0.01);
  for (double x : {0.05, 0.2, 0.5, 0.8}) CHECK(rel(weight_U_tilde(x), weight_U_tilde_bracket(x)) < 1e-10);
  const double t = 1.7;
  CHECK(std::abs(weight_U_tilde(inverse_nome(std::exp(-kPi * t))) - std::pow(t, 0.25) * theta_tilde(t)) < 1e-10);
  CHECK(std::abs(u_tilde_at_t(t) - std::pow(t, 0.25) * theta_tilde(t)) < 1e-12);
  CHECK_THROWS_AS(weight_U(0.0), DomainError);
  CHECK_THROWS_AS(weight_U_tilde(1.0), DomainError);
}

TEST_CASE("chain identity between theta tilde and U") {
  // t(m) = K'/K decreases, so dm and dt carry opposite orientation
  const double h = 1e-6;
  for (double m : {0.1, 0.3, 0.5, 0.7}) {
    const double t = k_ratio(m);
    const double dt = (k_ratio(m + h) - k_ratio(m - h)) / (2 * h);
    CHECK(std::abs(-theta_tilde(t) * dt * std::pow(t, -0.75) - weight_U(m)) < 1e-9);
  }
}

TEST_CASE("k ratio") {
  CHECK(std::abs(k_ratio(0.5) - 1.0) < 1e-15);
  CHECK(rel(k_ratio(1e-10), std::log(16 / 1e-10) / kPi) < 1e-6);
  CHECK(std::abs(k_ratio(0.2) * k_ratio(0.8) - 1.0) < 1e-12);
  CHECK(rel(k_ratio(1e-13), std::log(16 / 1e-13) / kPi) < 1e-9);
  CHECK_THROWS_AS(k_ratio(0.0), DomainError);
}
