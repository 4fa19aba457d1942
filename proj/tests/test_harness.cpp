#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "zeta/harness.hpp"

using namespace zeta;

namespace {

constexpr double kZeta2 = 1.6449340668482264;

double cell(const Table& t, std::size_t row, std::size_t col) { return std::stod(t.rows[row][col]); }

Complex valid_point(StrategyId id) {
  switch (id) {
    case StrategyId::dirichlet: return 4.0;
    default: return {0.5, 3.0};
  }
}

}  // namespace

TEST_CASE("strategy names round trip") {
  for (StrategyId id : kAllStrategies) {
    const auto back = strategy_from_string(to_string(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK_FALSE(strategy_from_string("nonsense").has_value());
}

TEST_CASE("evaluate examples") {
  const auto eta = evaluate({2.0, StrategyId::eta});
  CHECK(std::abs(eta.value - kZeta2) <= eta.error_estimate + 1e-15);
  CHECK(std::abs(evaluate({-1.0, StrategyId::euler_maclaurin}).value - (-1.0 / 12.0)) < 1e-13);
  for (StrategyId id : kAllStrategies) CHECK_THROWS_AS(evaluate({1.0, id}), PoleError);
  const auto xi1 = evaluate({1.0, StrategyId::xi_symmetric, {}, true});
  CHECK(std::abs(xi1.value - 1.0) < 1e-12);
  CHECK(std::abs(evaluate({2.0, StrategyId::euler_maclaurin, {}, true}).value - kPi / 3) < 1e-14);
}

TEST_CASE("errors carry the strategy name") {
  try {
    evaluate({0.5, StrategyId::dirichlet});
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::strncmp(e.what(), "dirichlet:", 10) == 0);
  }
  try {
    StrategyParams p;
    p.delta = 3;
    evaluate({-1.0, StrategyId::ramaswami_general, p});
    FAIL("expected SingularPrefactorError");
  } catch (const SingularPrefactorError& e) {
    CHECK(e.index() == 2);
    CHECK(std::string(e.what()).rfind("ramaswami_general:", 0) == 0);
  }
  StrategyParams bad;
  bad.tolerance = -1.0;
  CHECK_THROWS_AS(evaluate({2.0, StrategyId::euler_maclaurin, bad}), DomainError);
}

TEST_CASE("every strategy dispatches") {
  for (StrategyId id : kAllStrategies) {
    const Complex s = valid_point(id);
    EvalOutcome o;
    CHECK_NOTHROW(o = evaluate({s, id}));
    CHECK(o.strategy == id);
    CHECK(std::isfinite(o.value.real()));
    CHECK(o.terms_used >= 0);
    CHECK((o.error_estimate >= 0.0 || std::isnan(o.error_estimate)));
  }
}

TEST_CASE("evaluation is deterministic") {
  for (StrategyId id : kAllStrategies) {
    const Complex s = valid_point(id);
    const auto a = evaluate({s, id});
    const auto b = evaluate({s, id});
    CHECK(std::memcmp(&a.value, &b.value, sizeof(Complex)) == 0);
    CHECK(a.terms_used == b.terms_used);
  }
}

TEST_CASE("trivial zeros") {
  CHECK(is_trivial_zero(-2.0));
  CHECK(is_trivial_zero(-10.0));
  CHECK_FALSE(is_trivial_zero(0.0));
  CHECK_FALSE(is_trivial_zero(-3.0));
  CHECK_FALSE(is_trivial_zero(Complex(-2.0, 1.0)));
}

TEST_CASE("compare") {
  const auto all = compare(2.0, kAllStrategies);
  REQUIRE(all.consensus.has_value());
  CHECK(std::abs(*all.consensus - kZeta2) < 1e-13);
  CHECK(all.max_pairwise_disagreement < 1e-8);
  CHECK(all.admitted.size() >= 10);

  const StrategyId near_zero[] = {StrategyId::euler_maclaurin, StrategyId::stark, StrategyId::xi_symmetric};
  const auto z = compare(Complex(0.5, 14.134725), near_zero);
  REQUIRE(z.consensus.has_value());
  CHECK(std::abs(*z.consensus) < 1e-6);

  const StrategyId trivial[] = {StrategyId::euler_maclaurin, StrategyId::stark};
  const auto t = compare(-2.0, trivial);
  REQUIRE(t.consensus.has_value());
  CHECK(std::abs(*t.consensus) < 1e-10);

  const StrategyId only_dirichlet[] = {StrategyId::dirichlet};
  CHECK_THROWS_AS(compare(0.5, only_dirichlet), AllStrategiesFailed);
  const StrategyId one_works[] = {StrategyId::dirichlet, StrategyId::euler_maclaurin};
  const auto single = compare(0.5, one_works);
  CHECK_FALSE(single.consensus.has_value());
  CHECK_FALSE(single.rows[0].error.empty());
}

TEST_CASE("convergence studies") {
  SUBCASE("integral-free decay ratio per p") {
    const auto t = convergence_study(0.5, StrategyId::integral_free, {SweepParam::p, {2, 3, 5}});
    REQUIRE(t.rows.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(t.rows[i][9] == "ok");
      const double p = cell(t, i, 1);
      const double expect = 1.0 - 1.0 / p;
      CHECK(std::abs(cell(t, i, 7) - expect) <= 0.2 * expect);
      CHECK(cell(t, i, 5) < 1e-10);
    }
  }
  SUBCASE("euler-maclaurin order") {
    const auto t = convergence_study(0.5, StrategyId::euler_maclaurin,
                                     {SweepParam::delta, {2, 4, 6, 8, 10, 12, 14}});
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
      const double prev = cell(t, i - 1, 5);
      if (prev < 1e-14) break;
      CHECK(cell(t, i, 5) < prev);
    }
  }
  SUBCASE("hermite order") {
    const auto t = convergence_study(2.0, StrategyId::xi_hermite, {SweepParam::n, {2, 4, 8, 16}}, {}, true);
    for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(cell(t, i, 5) < cell(t, i - 1, 5));
  }
  SUBCASE("failed rows are marked") {
    const auto t = convergence_study(-0.5, StrategyId::integral_free, {SweepParam::delta, {1, 3}});
    CHECK(t.rows[0][9] == "error");
    CHECK(t.rows[1][9] == "ok");
  }
  CHECK_THROWS_AS(convergence_study(0.5, StrategyId::stark, {SweepParam::delta, {}}), DomainError);
}

TEST_CASE("grid scan") {
  SUBCASE("first zero on the critical line") {
    ScanOptions opts;
    opts.output_xi = true;
    const auto t = grid_scan({0.5, 0.5, 10.0, 16.0}, 0.05, StrategyId::xi_symmetric, opts);
    REQUIRE(t.rows.size() == 121);
    int changes = 0;
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
      const double a = cell(t, i - 1, 8), b = cell(t, i, 8);
      if ((a < 0) != (b < 0)) {
        ++changes;
        CHECK(cell(t, i - 1, 1) >= 14.10);
        CHECK(cell(t, i, 1) <= 14.17);
      }
    }
    CHECK(changes == 1);
  }
  SUBCASE("trivial zeros on the real axis") {
    const auto t = grid_scan({-6.0, -1.0, 0.0, 0.0}, 0.5, StrategyId::euler_maclaurin);
    REQUIRE(t.rows.size() == 11);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const double re = cell(t, i, 0);
      if (re == -2.0 || re == -4.0) {
        CHECK(std::abs(cell(t, i, 2)) < 1e-9);
        CHECK(t.rows[i][11] == "trivial_zero");
      }
    }
  }
  SUBCASE("empty region") {
    CHECK(grid_scan({1.0, 0.0, 0.0, 0.0}, 0.5, StrategyId::euler_maclaurin).rows.empty());
  }
  SUBCASE("failures are recorded") {
    const auto t = grid_scan({0.5, 1.0, 0.0, 0.0}, 0.5, StrategyId::dirichlet);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0][6] == "error");
    CHECK(t.rows[1][6] == "error");
  }
  SUBCASE("parallel equals sequential") {
    ScanOptions one, many;
    one.threads = 1;
    many.threads = 4;
    const Region r{-1.0, 2.0, -3.0, 3.0};
    CHECK(to_csv(grid_scan(r, 0.5, StrategyId::stark, one)) == to_csv(grid_scan(r, 0.5, StrategyId::stark, many)));
  }
  CHECK_THROWS_AS(grid_scan({0, 1, 0, 1}, 0.0, StrategyId::stark), DomainError);
}

TEST_CASE("thread count from the environment") {
  setenv("ZETA_FORGE_THREADS", "3", 1);
  CHECK(default_thread_count() == 3);
  setenv("ZETA_FORGE_THREADS", "junk", 1);
  CHECK(default_thread_count() >= 1);
  unsetenv("ZETA_FORGE_THREADS");
}

TEST_CASE("csv output") {
  Table t{{"a", "b"}, {{"1", "x,y"}, {"2", "q\"r"}}};
  CHECK(to_csv(t) == "a,b\n1,\"x,y\"\n2,\"q\"\"r\"\n");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(kNaN) == "nan");
}
