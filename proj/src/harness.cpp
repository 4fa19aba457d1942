#include "zeta/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "zeta/detail/summation.hpp"
#include "zeta/integrals.hpp"
#include "zeta/recursive.hpp"
#include "zeta/series.hpp"

namespace zeta {

using detail::kEps;

void StrategyParams::validate() const {
  if (tolerance && !(*tolerance > 0.0)) throw DomainError("tolerance must be positive");
  if (max_terms && *max_terms < 1) throw DomainError("max_terms must be >= 1");
  if (quad_level && *quad_level < 1) throw DomainError("quad_level must be >= 1");
  if (quad_tol && !(*quad_tol > 0.0)) throw DomainError("quad_tol must be positive");
  if (delta && *delta < 0) throw DomainError("delta must be >= 0");
}

QuadratureSpec StrategyParams::quadrature() const {
  QuadratureSpec q;
  q.scheme = scheme;
  if (quad_level) q.level = *quad_level;
  if (quad_tol) q.abs_tol = *quad_tol;
  return q;
}

bool is_trivial_zero(Complex s) {
  const double re = s.real();
  return s.imag() == 0.0 && re <= -2.0 && re == std::round(re) && std::fmod(re, 2.0) == 0.0;
}

namespace {

bool is_xi_native(StrategyId id) {
  switch (id) {
    case StrategyId::xi_theta_tilde:
    case StrategyId::xi_symmetric:
    case StrategyId::xi_elliptic:
    case StrategyId::xi_q_x:
    case StrategyId::xi_q_t:
    case StrategyId::xi_q_unit:
    case StrategyId::xi_hermite:
    case StrategyId::xi_power_series:
      return true;
    default:
      return false;
  }
}

SeriesParams series_params(const StrategyParams& p) {
  SeriesParams sp;
  if (p.tolerance) sp.tolerance = *p.tolerance;
  if (p.max_terms) sp.max_terms = *p.max_terms;
  return sp;
}

RecursionParams recursion_params(const StrategyParams& p, int default_delta) {
  RecursionParams r;
  r.delta = p.delta.value_or(default_delta);
  if (p.n) r.n = *p.n;
  if (p.p) r.p = *p.p;
  if (p.tolerance) r.tolerance = *p.tolerance;
  if (p.max_terms) r.max_terms = *p.max_terms;
  return r;
}

EvalOutcome from_xi(const XiValue& v, StrategyId id) {
  EvalOutcome out;
  out.value = v.xi;
  out.error_estimate = v.quadrature_error;
  out.terms_used = v.nodes;
  out.strategy = id;
  out.truncation_reason = TruncationReason::tolerance_met;
  return out;
}

using CoeffKey = std::tuple<int, int, double, int>;

// Power-series coefficients are independent of s; computed once per
// (order, quadrature) and shared between threads.
std::vector<double> cached_coeffs(int k_max, const QuadratureSpec& q) {
  static std::mutex mu;
  static std::map<CoeffKey, std::vector<double>> cache;
  const CoeffKey key{k_max, q.level, q.abs_tol, static_cast<int>(q.scheme)};
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto c = xi_power_series_coeffs(k_max, q);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(c)).first->second;
}

// Outcome in the strategy's own space: zeta for series, recursive and the
// exponential integral, xi for the rest.
EvalOutcome dispatch(Complex s, StrategyId id, const StrategyParams& p) {
  const QuadratureSpec q = p.quadrature();
  switch (id) {
    case StrategyId::dirichlet: return zeta_dirichlet(s, series_params(p));
    case StrategyId::eta: return zeta_eta(s, series_params(p));
    case StrategyId::three_term: return zeta_three_term(s, series_params(p));
    case StrategyId::four_term: return zeta_four_term(s, series_params(p));
    case StrategyId::six_term_a: return zeta_six_term_a(s, series_params(p));
    case StrategyId::six_term_b: return zeta_six_term_b(s, series_params(p));
    case StrategyId::euler_maclaurin: {
      EulerMaclaurinParams em = default_euler_maclaurin_params(s);
      if (p.n) em.n = *p.n;
      if (p.delta) em.delta = *p.delta;
      return zeta_euler_maclaurin(s, em);
    }
    case StrategyId::stark: return zeta_stark(s, recursion_params(p, default_stark_delta(s)));
    case StrategyId::ramaswami: return zeta_ramaswami(s, series_params(p));
    case StrategyId::ramaswami_general:
      return zeta_ramaswami_general(s, recursion_params(p, default_ramaswami_general_delta(s)));
    case StrategyId::integral_free:
      return zeta_integral_free(s, recursion_params(p, default_integral_free_delta(s)));
    case StrategyId::exp_integral: {
      const int delta = p.delta.value_or(std::max(0, static_cast<int>(std::floor(-s.real())) + 2));
      return zeta_exp_integral(s, delta, q);
    }
    case StrategyId::xi_theta_tilde: return from_xi(xi_theta_tilde(s, q), id);
    case StrategyId::xi_symmetric: return from_xi(xi_symmetric(s, q), id);
    case StrategyId::xi_elliptic: return from_xi(xi_elliptic(s, q), id);
    case StrategyId::xi_q_x: return from_xi(xi_q_variants(s, QForm::x_line, q), id);
    case StrategyId::xi_q_t: return from_xi(xi_q_variants(s, QForm::t_halfline, q), id);
    case StrategyId::xi_q_unit: return from_xi(xi_q_variants(s, QForm::q_unit, q), id);
    case StrategyId::xi_hermite: {
      const int n = p.n.value_or(16);
      const XiValue full = xi_hermite_approx(s, n, ApproxBasis::hermite, q);
      EvalOutcome out = from_xi(full, id);
      // the approximant converges slowly; compare against half the order
      if (n >= 2) {
        const XiValue half = xi_hermite_approx(s, n / 2, ApproxBasis::hermite, q);
        out.error_estimate += std::abs(full.xi - half.xi);
        out.terms_used += half.nodes;
      } else {
        out.error_estimate = kNaN;
      }
      out.truncation_reason = TruncationReason::max_terms;
      return out;
    }
    case StrategyId::xi_power_series: {
      const int k_max = p.n.value_or(40);
      if (k_max < 0) throw DomainError("order must be >= 0");
      const auto coeffs = cached_coeffs(k_max, q);
      double tail = 0.0;
      EvalOutcome out;
      out.value = xi_power_series_eval(s, coeffs, &tail);
      double magnitude = 0.0;
      const double w = std::norm(s - 0.5);
      double power = 1.0;
      for (double c : coeffs) {
        magnitude += std::abs(c) * power;
        power *= w;
      }
      out.error_estimate = 2.0 * tail + q.abs_tol * magnitude + 8.0 * kEps * magnitude;
      out.terms_used = static_cast<std::int64_t>(coeffs.size());
      out.strategy = id;
      out.truncation_reason = TruncationReason::max_terms;
      return out;
    }
  }
  throw DomainError("unknown strategy");
}

[[noreturn]] void rethrow_named(StrategyId id) {
  const std::string name(to_string(id));
  auto tag = [&](const std::exception& e) {
    const std::string msg = e.what();
    return msg.rfind(name + ":", 0) == 0 ? msg : name + ": " + msg;
  };
  try {
    throw;
  } catch (const SingularPrefactorError& e) {
    throw SingularPrefactorError(tag(e), e.index());
  } catch (const PoleError& e) {
    throw PoleError(tag(e));
  } catch (const DomainError& e) {
    throw DomainError(tag(e));
  } catch (const QuadratureFailure& e) {
    throw QuadratureFailure(tag(e));
  } catch (const AllStrategiesFailed& e) {
    throw AllStrategiesFailed(tag(e));
  } catch (const ZetaError& e) {
    throw ZetaError(tag(e));
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

EvalOutcome evaluate(const EvalRequest& req) {
  try {
    req.params.validate();
    if (!std::isfinite(req.s.real()) || !std::isfinite(req.s.imag())) throw DomainError("s must be finite");
    if (std::abs(req.s - 1.0) < 1e-14 && !(req.output_xi && is_xi_native(req.strategy))) {
      throw PoleError("pole at s = 1");
    }
    EvalOutcome out = dispatch(req.s, req.strategy, req.params);
    const bool native_xi = is_xi_native(req.strategy);
    if (native_xi != req.output_xi) {
      const Complex pref = xi_prefactor(req.s);
      if (std::abs(pref) == 0.0) throw PoleError("xi prefactor vanishes");
      if (req.output_xi) {
        out.value = xi_from_zeta(req.s, out.value);
        out.error_estimate *= std::abs(pref);
      } else {
        out.value = zeta_from_xi(req.s, out.value);
        out.error_estimate /= std::abs(pref);
      }
    }
    out.strategy = req.strategy;
    return out;
  } catch (const ZetaError&) {
    rethrow_named(req.strategy);
  }
}

ComparisonReport compare(Complex s, std::span<const StrategyId> strategies, const CompareOptions& opts) {
  ComparisonReport rep;
  rep.s = s;
  for (StrategyId id : strategies) {
    ComparisonRow row;
    row.strategy = id;
    const auto start = std::chrono::steady_clock::now();
    try {
      row.outcome = evaluate(EvalRequest{s, id, opts.params, opts.output_xi});
    } catch (const ZetaError& e) {
      row.error = e.what();
    }
    row.wall_time_ms = elapsed_ms(start);
    rep.rows.push_back(std::move(row));
  }
  const std::size_t n = rep.rows.size();
  std::size_t succeeded = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& o = rep.rows[i].outcome;
    if (!o) continue;
    ++succeeded;
    if (o->error_estimate <= opts.admit_error) rep.admitted.push_back(i);
  }
  if (succeeded == 0) {
    std::string msg = "no strategy succeeded at s = (" + format_double(s.real()) + ", " + format_double(s.imag()) + ")";
    for (const auto& r : rep.rows) msg += "; " + r.error;
    throw AllStrategiesFailed(msg);
  }
  rep.disagreement.assign(n, std::vector<double>(n, kNaN));
  std::vector<bool> agrees(n, false);
  for (std::size_t a = 0; a < rep.admitted.size(); ++a) {
    for (std::size_t b = a + 1; b < rep.admitted.size(); ++b) {
      const std::size_t i = rep.admitted[a];
      const std::size_t j = rep.admitted[b];
      const EvalOutcome& x = *rep.rows[i].outcome;
      const EvalOutcome& y = *rep.rows[j].outcome;
      const double d = std::abs(x.value - y.value);
      rep.disagreement[i][j] = rep.disagreement[j][i] = d;
      rep.max_pairwise_disagreement = std::max(rep.max_pairwise_disagreement, d);
      const double slack = 4.0 * kEps * std::max(std::abs(x.value), std::abs(y.value));
      if (d <= x.error_estimate + y.error_estimate + slack) agrees[i] = agrees[j] = true;
    }
  }
  if (succeeded >= 2) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i : rep.admitted) {
      if (!agrees[i]) continue;
      const EvalOutcome& o = *rep.rows[i].outcome;
      if (o.error_estimate < best) {
        best = o.error_estimate;
        rep.consensus = o.value;
        rep.consensus_strategy = rep.rows[i].strategy;
      }
    }
  }
  return rep;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const Table& t) {
  auto cell = [](const std::string& c) {
    if (c.find_first_of(",\"\n") == std::string::npos) return c;
    std::string q = "\"";
    for (char ch : c) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cell(cells[i]);
    out << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out.str();
}

std::optional<SweepParam> sweep_param_from_string(std::string_view name) {
  if (name == "delta") return SweepParam::delta;
  if (name == "n") return SweepParam::n;
  if (name == "p") return SweepParam::p;
  if (name == "tol" || name == "tolerance") return SweepParam::tolerance;
  if (name == "max_terms" || name == "max-terms") return SweepParam::max_terms;
  if (name == "quad_level" || name == "quad-level") return SweepParam::quad_level;
  return std::nullopt;
}

Table convergence_study(Complex s, StrategyId strategy, const Sweep& sweep, const StrategyParams& base,
                        bool output_xi) {
  if (sweep.values.empty()) throw DomainError("convergence_study: sweep is empty");
  std::vector<StrategyId> reference;
  for (StrategyId id : kAllStrategies) {
    if (id != StrategyId::xi_hermite && id != StrategyId::xi_power_series) reference.push_back(id);
  }
  CompareOptions copts;
  copts.output_xi = output_xi;
  std::optional<Complex> truth;
  try {
    truth = compare(s, reference, copts).consensus;
  } catch (const AllStrategiesFailed&) {
  }

  Table t;
  t.header = {"param", "value", "value_re", "value_im", "error_estimate", "error_vs_consensus",
              "terms_used", "tail_ratio", "wall_time_ms", "status", "message"};
  static constexpr const char* kNames[] = {"delta", "n", "p", "tolerance", "max_terms", "quad_level"};
  for (double v : sweep.values) {
    StrategyParams p = base;
    switch (sweep.param) {
      case SweepParam::delta: p.delta = static_cast<int>(v); break;
      case SweepParam::n: p.n = static_cast<int>(v); break;
      case SweepParam::p: p.p = static_cast<int>(v); break;
      case SweepParam::tolerance: p.tolerance = v; break;
      case SweepParam::max_terms: p.max_terms = static_cast<std::int64_t>(v); break;
      case SweepParam::quad_level: p.quad_level = static_cast<int>(v); break;
    }
    std::vector<std::string> row{kNames[static_cast<int>(sweep.param)], format_double(v)};
    const auto start = std::chrono::steady_clock::now();
    try {
      const EvalOutcome o = evaluate(EvalRequest{s, strategy, p, output_xi});
      const double ms = elapsed_ms(start);
      row.insert(row.end(), {format_double(o.value.real()), format_double(o.value.imag()),
                             format_double(o.error_estimate),
                             truth ? format_double(std::abs(o.value - *truth)) : std::string("nan"),
                             std::to_string(o.terms_used), format_double(o.tail_ratio), format_double(ms), "ok",
                             std::string(to_string(o.truncation_reason))});
    } catch (const ZetaError& e) {
      const double ms = elapsed_ms(start);
      row.insert(row.end(), {"", "", "", "", "", "", format_double(ms), "error", e.what()});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("ZETA_FORGE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

std::vector<double> lattice(double lo, double hi, double step) {
  std::vector<double> v;
  if (hi < lo) return v;
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= count; ++i) v.push_back(lo + static_cast<double>(i) * step);
  return v;
}

}  // namespace

Table grid_scan(const Region& region, double step, StrategyId strategy, const ScanOptions& opts) {
  if (!(step > 0.0)) throw DomainError("grid_scan: step must be positive");
  const auto res = lattice(region.re_min, region.re_max, step);
  const auto ims = lattice(region.im_min, region.im_max, step);
  std::vector<Complex> points;
  for (double re : res) {
    for (double im : ims) points.emplace_back(re, im);
  }
  Table t;
  t.header = {"re", "im", "value_re", "value_im", "error_estimate", "terms_used", "status", "message",
              "xi_re", "xi_im", "xi_abs", "note"};
  t.rows.resize(points.size());

  auto work = [&](std::size_t i) {
    const Complex s = points[i];
    std::vector<std::string> row{format_double(s.real()), format_double(s.imag())};
    const bool critical = std::abs(s.real() - 0.5) < 1e-12;
    try {
      const EvalOutcome o = evaluate(EvalRequest{s, strategy, opts.params, opts.output_xi});
      row.insert(row.end(), {format_double(o.value.real()), format_double(o.value.imag()),
                             format_double(o.error_estimate), std::to_string(o.terms_used), "ok", ""});
      if (critical) {
        const Complex xi = opts.output_xi ? o.value : xi_from_zeta(s, o.value);
        row.insert(row.end(), {format_double(xi.real()), format_double(xi.imag()), format_double(std::abs(xi))});
      } else {
        row.insert(row.end(), {"", "", ""});
      }
    } catch (const ZetaError& e) {
      row.insert(row.end(), {"", "", "", "", "error", e.what(), "", "", ""});
    }
    row.push_back(is_trivial_zero(s) ? "trivial_zero" : "");
    t.rows[i] = std::move(row);
  };

  const unsigned threads = std::min<std::size_t>(opts.threads ? opts.threads : default_thread_count(),
                                                 std::max<std::size_t>(points.size(), 1));
  if (threads <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) work(i);
    return t;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < threads; ++k) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < points.size(); i = next++) work(i);
    });
  }
  for (auto& th : pool) th.join();
  return t;
}

}  // namespace zeta
