#pragma once

// Strategy registry and dispatch, cross-validation, convergence studies and
// lattice scans.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zeta/quadrature.hpp"
#include "zeta/types.hpp"

namespace zeta {

/// Overrides for a strategy's default parameters. Unset fields fall back to
/// the strategy's own heuristics; fields a strategy does not use are ignored.
struct StrategyParams {
  std::optional<int> delta;
  std::optional<int> n;  ///< cutoff (euler_maclaurin, integral_free) or order (xi_hermite, xi_power_series)
  std::optional<int> p;
  std::optional<double> tolerance;
  std::optional<std::int64_t> max_terms;
  std::optional<int> quad_level;
  std::optional<double> quad_tol;
  QuadratureSpec::Scheme scheme = QuadratureSpec::Scheme::double_exponential;

  void validate() const;
  QuadratureSpec quadrature() const;
};

struct EvalRequest {
  Complex s{};
  StrategyId strategy = StrategyId::euler_maclaurin;
  StrategyParams params;
  bool output_xi = false;  ///< report xi(s) instead of zeta(s)
};

/// Dispatches to the named strategy. Errors keep their type and gain the
/// strategy name as a prefix.
EvalOutcome evaluate(const EvalRequest& req);

/// True when s is a negative even integer.
bool is_trivial_zero(Complex s);

struct ComparisonRow {
  StrategyId strategy{};
  std::optional<EvalOutcome> outcome;
  std::string error;  ///< message when the strategy failed
  double wall_time_ms = 0.0;
};

struct ComparisonReport {
  Complex s{};
  std::vector<ComparisonRow> rows;
  /// Rows whose error estimate is at most `admit_error`; only these enter
  /// the consensus and the disagreement figures.
  std::vector<std::size_t> admitted;
  std::optional<Complex> consensus;
  std::optional<StrategyId> consensus_strategy;
  /// |v_i - v_j| over admitted rows, indexed like `rows`; NaN elsewhere.
  std::vector<std::vector<double>> disagreement;
  double max_pairwise_disagreement = 0.0;
};

struct CompareOptions {
  StrategyParams params;
  bool output_xi = false;
  double admit_error = 1e-8;
};

/// Runs every strategy at s. Consensus is the value of the admitted strategy
/// with the smallest error estimate among those agreeing with at least one
/// other admitted strategy within the sum of their estimates. Throws
/// AllStrategiesFailed when no strategy succeeds.
ComparisonReport compare(Complex s, std::span<const StrategyId> strategies, const CompareOptions& opts = {});

/// Plain table: header plus rows of already formatted cells.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t);
std::string format_double(double v);

enum class SweepParam { delta, n, p, tolerance, max_terms, quad_level };
std::optional<SweepParam> sweep_param_from_string(std::string_view name);

struct Sweep {
  SweepParam param = SweepParam::delta;
  std::vector<double> values;
};

/// One row per sweep value: the parameter, the result, its distance to the
/// cross-strategy consensus, terms used, tail ratio, wall time and status.
Table convergence_study(Complex s, StrategyId strategy, const Sweep& sweep, const StrategyParams& base = {},
                        bool output_xi = false);

struct Region {
  double re_min = 0.0;
  double re_max = 0.0;
  double im_min = 0.0;
  double im_max = 0.0;
};

struct ScanOptions {
  StrategyParams params;
  bool output_xi = false;
  /// Worker count; 0 reads ZETA_FORGE_THREADS, falling back to the hardware count.
  unsigned threads = 0;
};

/// Values on the lattice re_min + i*step, im_min + j*step. Rows on the
/// critical line carry xi(1/2 + it) columns. Failed points are recorded and
/// the scan continues.
Table grid_scan(const Region& region, double step, StrategyId strategy, const ScanOptions& opts = {});

/// Thread count from ZETA_FORGE_THREADS or the hardware.
unsigned default_thread_count();

}  // namespace zeta
