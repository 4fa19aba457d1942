#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zeta {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Threshold below which a prefactor or denominator is treated as vanishing.
inline constexpr double kSingularThreshold = 1e-12;

enum class StrategyId {
  dirichlet,
  eta,
  three_term,
  four_term,
  six_term_a,
  six_term_b,
  euler_maclaurin,
  stark,
  ramaswami,
  ramaswami_general,
  integral_free,
  exp_integral,
  xi_theta_tilde,
  xi_symmetric,
  xi_elliptic,
  xi_q_x,
  xi_q_t,
  xi_q_unit,
  xi_hermite,
  xi_power_series,
};

inline constexpr StrategyId kAllStrategies[] = {
    StrategyId::dirichlet,        StrategyId::eta,
    StrategyId::three_term,       StrategyId::four_term,
    StrategyId::six_term_a,       StrategyId::six_term_b,
    StrategyId::euler_maclaurin,  StrategyId::stark,
    StrategyId::ramaswami,        StrategyId::ramaswami_general,
    StrategyId::integral_free,    StrategyId::exp_integral,
    StrategyId::xi_theta_tilde,   StrategyId::xi_symmetric,
    StrategyId::xi_elliptic,      StrategyId::xi_q_x,
    StrategyId::xi_q_t,           StrategyId::xi_q_unit,
    StrategyId::xi_hermite,       StrategyId::xi_power_series,
};

std::string_view to_string(StrategyId id);
std::optional<StrategyId> strategy_from_string(std::string_view name);

enum class TruncationReason { tolerance_met, max_terms, exact };

std::string_view to_string(TruncationReason r);

/// Result of a single zeta (or xi) evaluation.
struct EvalOutcome {
  Complex value{};
  double error_estimate = kNaN;  ///< nonnegative, or NaN if unavailable
  std::int64_t terms_used = 0;
  StrategyId strategy = StrategyId::dirichlet;
  TruncationReason truncation_reason = TruncationReason::tolerance_met;
  /// Measured ratio of the last two outer-term magnitudes (NaN when the
  /// strategy has no outer series).
  double tail_ratio = kNaN;
};

// Error hierarchy. Every strategy failure derives from ZetaError so callers
// can catch one type and still map the kind to an exit code.

class ZetaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain where the representation converges.
class DomainError : public ZetaError {
 public:
  using ZetaError::ZetaError;
};

/// Evaluation at a pole (s = 1 for zeta, nonpositive integers for Gamma).
class PoleError : public ZetaError {
 public:
  using ZetaError::ZetaError;
};

/// A prefactor or denominator is numerically zero.
class SingularPrefactorError : public ZetaError {
 public:
  SingularPrefactorError(const std::string& what, int index = -1)
      : ZetaError(what), index_(index) {}
  /// Offending summation index (j), or -1 for a scalar prefactor.
  int index() const noexcept { return index_; }

 private:
  int index_;
};

using SingularDenominatorError = SingularPrefactorError;

class QuadratureFailure : public ZetaError {
 public:
  using ZetaError::ZetaError;
};

class AllStrategiesFailed : public ZetaError {
 public:
  using ZetaError::ZetaError;
};

}  // namespace zeta
