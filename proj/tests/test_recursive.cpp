#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/zeta.hpp>
#include <cmath>

#include "oracle_values.hpp"
#include "test_support.hpp"
#include "zeta/recursive.hpp"

using namespace zeta;

namespace {

constexpr double kZeta2 = 1.6449340668482264;
constexpr double kZeta3 = 1.2020569031595943;

RecursionParams with_delta(int delta) {
  RecursionParams r;
  r.delta = delta;
  return r;
}

RecursionParams integral_free_params(int n, int p, int delta) {
  RecursionParams r;
  r.n = n;
  r.p = p;
  r.delta = delta;
  return r;
}

Complex em(Complex s) { return zeta_euler_maclaurin(s).value; }

const Complex kGrid[] = {{2.0, 0.0}, {0.5, 0.0}, {-0.5, 3.0}, {0.3, -7.0}, {-1.5, 2.0}};

}  // namespace

TEST_CASE("stark examples") {
  // sum_{i>=1} (zeta(2+i) - 1) = 2 - zeta(2), brute force
  double tail = 0.0;
  for (int i = 1; i <= 60; ++i) tail += boost::math::zeta(2.0 + i) - 1.0;
  CHECK(std::abs(tail - (2.0 - kZeta2)) < 1e-14);
  CHECK(std::abs(zeta_stark(2.0, with_delta(1)).value - kZeta2) < 1e-13);
  CHECK(std::abs(zeta_stark(-0.5, with_delta(3)).value - em(-0.5)) < 1e-10);
  CHECK(std::abs(zeta_stark(Complex(0.5, 6.0), with_delta(2)).value - em(Complex(0.5, 6.0))) < 1e-9);
  CHECK_THROWS_AS(zeta_stark(1.0, with_delta(1)), PoleError);
  CHECK_THROWS_AS(zeta_stark(2.0, with_delta(0)), DomainError);
  CHECK_THROWS_AS(zeta_stark(-0.5, with_delta(1), dirichlet_zeta_up()), DomainError);
  CHECK(std::abs(zeta_stark(-0.5, with_delta(3), dirichlet_zeta_up()).value - em(-0.5)) < 1e-10);
}

TEST_CASE("stark telescoping across delta") {
  for (Complex s : kGrid) {
    for (int d = 1; d <= 4; ++d) {
      if (s.real() + d <= 1.0 || s.real() + d + 1 <= 1.0) continue;
      const auto a = zeta_stark(s, with_delta(d));
      const auto b = zeta_stark(s, with_delta(d + 1));
      CHECK_MESSAGE(std::abs(a.value - b.value) <= a.error_estimate + b.error_estimate + 1e-14,
                    "s = " << s.real() << "+" << s.imag() << "i delta " << d);
    }
  }
}

TEST_CASE("ramaswami") {
  // 2 zeta(2) = sum_k (k+1) zeta(2+k) / 2^k, brute force
  double sum = 0.0;
  for (int k = 1; k <= 80; ++k) sum += (k + 1) * boost::math::zeta(2.0 + k) / std::ldexp(1.0, k);
  CHECK(std::abs(sum - 2.0 * kZeta2) < 1e-14);
  CHECK(std::abs(zeta_ramaswami(2.0).value - kZeta2) < 1e-13);
  CHECK(std::abs(zeta_ramaswami(3.0).value - kZeta3) < 1e-13);
  CHECK_THROWS_AS(zeta_ramaswami(1.0), SingularPrefactorError);
  CHECK_THROWS_AS(zeta_ramaswami(Complex(1.0, 2.0 * M_PI / std::log(2.0))), SingularPrefactorError);
}

TEST_CASE("ramaswami general") {
  CHECK(std::abs(zeta_ramaswami_general(2.0, with_delta(1)).value - zeta_ramaswami(2.0).value) < 1e-13);
  for (Complex s : kGrid) {
    if (s.real() <= 0.0) continue;
    CHECK(std::abs(zeta_ramaswami_general(s, with_delta(1)).value - zeta_ramaswami(s).value) < 1e-12);
  }
  CHECK(std::abs(zeta_ramaswami_general(0.25, with_delta(2)).value - em(0.25)) < 1e-10);
  CHECK(std::abs(zeta_ramaswami_general(-1.0, with_delta(2)).value - (-1.0 / 12.0)) < 1e-10);
  // 2^{-1} - 2^{1-j} vanishes at j = 2 and B_2 != 0
  try {
    zeta_ramaswami_general(-1.0, with_delta(3));
    FAIL("expected SingularPrefactorError");
  } catch (const SingularPrefactorError& e) {
    CHECK(e.index() == 2);
  }
  // j = 3 would vanish at s = -2, but B_3 = 0
  CHECK(std::abs(zeta_ramaswami_general(-2.0, with_delta(4)).value) < 1e-10);
  CHECK(default_ramaswami_general_delta(-1.0) == 2);
  CHECK(std::abs(zeta_ramaswami_general(-3.0, with_delta(default_ramaswami_general_delta(-3.0))).value -
                 1.0 / 120.0) < 1e-10);
  CHECK_THROWS_AS(zeta_ramaswami_general(1.0, with_delta(2)), PoleError);
}

TEST_CASE("integral-free examples") {
  CHECK(std::abs(zeta_integral_free(2.0, integral_free_params(1, 2, 1)).value - kZeta2) < 1e-10);
  CHECK(std::abs(zeta_integral_free(0.5, integral_free_params(3, 2, 4)).value - em(0.5)) < 1e-9);
  CHECK(std::abs(zeta_integral_free(-1.5, integral_free_params(1, 3, 4)).value -
                 zeta_stark(-1.5, with_delta(4)).value) < 1e-8);
  CHECK_THROWS_AS(zeta_integral_free(2.0, integral_free_params(2, 2, 1)), DomainError);
  CHECK_THROWS_AS(zeta_integral_free(2.0, integral_free_params(1, 1, 1)), DomainError);
  CHECK_THROWS_AS(zeta_integral_free(-0.5, integral_free_params(1, 2, 1)), DomainError);
  CHECK_THROWS_AS(zeta_integral_free(1.0, integral_free_params(1, 2, 1)), PoleError);
  CHECK_THROWS_AS(zeta_integral_free(0.9, integral_free_params(1, 2, 0)), DomainError);
  // p^s - p^{1-j} at j = delta = 2, just inside the domain
  try {
    zeta_integral_free(-1.0 + 1e-13, integral_free_params(1, 2, 2));
    FAIL("expected SingularDenominatorError");
  } catch (const SingularDenominatorError& e) {
    CHECK(e.index() == 2);
  }
}

TEST_CASE("integral-free head sums to n") {
  const Complex s(0.7, 2.0);
  for (int n : {1, 3, 5}) {
    Complex direct = 0.0;
    for (int j = 1; j <= n; ++j) direct += std::pow(static_cast<double>(j), -s);
    CHECK(std::abs(integral_free_head(s, n, 0) - direct) < 1e-14);
  }
  // At s = 2 the full series reproduces zeta for every delta; a head summed
  // only to n - 1 would be off by n^{-s} whenever delta <= 1.
  for (int delta = 0; delta <= 4; ++delta) {
    for (int n : {1, 3, 5}) {
      const auto r = zeta_integral_free(2.0, integral_free_params(n, 2, delta));
      CHECK_MESSAGE(std::abs(r.value - kZeta2) < 1e-11, "n = " << n << " delta = " << delta);
    }
  }
}

TEST_CASE("integral-free invariance under (n, p)") {
  const int pairs[][2] = {{1, 2}, {3, 2}, {1, 3}, {3, 3}};
  for (Complex s : {Complex(0.5, 0.0), Complex(-0.5, 3.0), Complex(2.0, 5.0), Complex(-2.5, 1.0)}) {
    const int delta = default_integral_free_delta(s);
    std::vector<EvalOutcome> outs;
    for (const auto& np : pairs) outs.push_back(zeta_integral_free(s, integral_free_params(np[0], np[1], delta)));
    for (std::size_t i = 0; i < outs.size(); ++i) {
      for (std::size_t j = i + 1; j < outs.size(); ++j) {
        CHECK(std::abs(outs[i].value - outs[j].value) <= outs[i].error_estimate + outs[j].error_estimate);
      }
    }
  }
}

TEST_CASE("integral-free decay ratio follows 1 - 1/p") {
  for (int p : {2, 3, 5, 7}) {
    for (Complex s : {Complex(0.5, 0.0), Complex(-0.5, 3.0)}) {
      const auto r = zeta_integral_free(s, integral_free_params(1, p, default_integral_free_delta(s)));
      const double expect = 1.0 - 1.0 / p;
      CHECK_MESSAGE(std::abs(r.tail_ratio - expect) <= 0.2 * expect, "p = " << p << " ratio " << r.tail_ratio);
    }
  }
}

TEST_CASE("recursive strategies match the oracle") {
  for (const auto& pt : oracle::kZeta) {
    if (std::abs(pt.s - 1.0) < 0.05) continue;
    const Complex s = pt.s;
    const auto st = zeta_stark(s, with_delta(default_stark_delta(s)));
    CHECK_MESSAGE(std::abs(st.value - pt.zeta) <= std::max(st.error_estimate, 1e-12),
                  "stark at " << s.real() << "+" << s.imag() << "i");
    if (s.real() > 1.0) {
      CHECK(std::abs(st.value - pt.zeta) < 1e-10);
      const auto ra = zeta_ramaswami(s);
      CHECK(std::abs(ra.value - pt.zeta) <= std::max(ra.error_estimate, 1e-10));
      if (std::abs(s.imag()) <= 14.0) CHECK(std::abs(ra.value - pt.zeta) < 1e-10);
    }
    const auto rg = zeta_ramaswami_general(s, with_delta(default_ramaswami_general_delta(s)));
    CHECK_MESSAGE(std::abs(rg.value - pt.zeta) <= std::max(rg.error_estimate, 1e-12),
                  "ramaswami_general at " << s.real() << "+" << s.imag() << "i");
    const auto inf = zeta_integral_free(s, integral_free_params(3, 2, default_integral_free_delta(s)));
    CHECK_MESSAGE(std::abs(inf.value - pt.zeta) <= std::max(inf.error_estimate, 1e-12),
                  "integral_free at " << s.real() << "+" << s.imag() << "i est " << inf.error_estimate);
  }
}
