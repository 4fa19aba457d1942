#include "zeta/types.hpp"

#include <array>
#include <utility>

namespace zeta {

namespace {
constexpr std::array<std::pair<StrategyId, std::string_view>, 20> kNames = {{
    {StrategyId::dirichlet, "dirichlet"},
    {StrategyId::eta, "eta"},
    {StrategyId::three_term, "three_term"},
    {StrategyId::four_term, "four_term"},
    {StrategyId::six_term_a, "six_term_a"},
    {StrategyId::six_term_b, "six_term_b"},
    {StrategyId::euler_maclaurin, "euler_maclaurin"},
    {StrategyId::stark, "stark"},
    {StrategyId::ramaswami, "ramaswami"},
    {StrategyId::ramaswami_general, "ramaswami_general"},
    {StrategyId::integral_free, "integral_free"},
    {StrategyId::exp_integral, "exp_integral"},
    {StrategyId::xi_theta_tilde, "xi_theta_tilde"},
    {StrategyId::xi_symmetric, "xi_symmetric"},
    {StrategyId::xi_elliptic, "xi_elliptic"},
    {StrategyId::xi_q_x, "xi_q_x"},
    {StrategyId::xi_q_t, "xi_q_t"},
    {StrategyId::xi_q_unit, "xi_q_unit"},
    {StrategyId::xi_hermite, "xi_hermite"},
    {StrategyId::xi_power_series, "xi_power_series"},
}};
}  // namespace

std::string_view to_string(StrategyId id) {
  for (const auto& [key, name] : kNames) {
    if (key == id) return name;
  }
  return "unknown";
}

std::optional<StrategyId> strategy_from_string(std::string_view name) {
  for (const auto& [key, n] : kNames) {
    if (n == name) return key;
  }
  return std::nullopt;
}

std::string_view to_string(TruncationReason r) {
  switch (r) {
    case TruncationReason::tolerance_met: return "tolerance_met";
    case TruncationReason::max_terms: return "max_terms";
    case TruncationReason::exact: return "exact";
  }
  return "unknown";
}

}  // namespace zeta
