// zeta-forge: evaluate, cross-check and scan the Riemann zeta function.
//
//   zeta-forge eval    --s 0.5,14.1 --strategy stark [--xi] [--format json|csv]
//   zeta-forge compare --s 2 [--strategies eta,stark,xi_symmetric]
//   zeta-forge study   --s 0.5 --strategy integral_free --sweep p=2,3,5
//   zeta-forge scan    --re 0.5:0.5 --im 10:16 --step 0.05 --strategy xi_symmetric
//
// Exit codes: 0 success, 2 domain or pole error, 3 quadrature or
// convergence failure, 4 bad arguments.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "zeta/harness.hpp"

namespace {

using zeta::Complex;
using json = nlohmann::json;

constexpr int kExitDomain = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitArgs = 4;

struct BadArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw BadArgument("cannot parse " + what + ": '" + text + "'");
  }
  if (used != text.size()) throw BadArgument("cannot parse " + what + ": '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Complex parse_s(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_number(parts[0], "--s"), 0.0};
  if (parts.size() == 2) return {parse_number(parts[0], "--s"), parse_number(parts[1], "--s")};
  throw BadArgument("--s expects <re>,<im>");
}

std::pair<double, double> parse_range(const std::string& text, const std::string& what) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) {
    const double v = parse_number(parts[0], what);
    return {v, v};
  }
  if (parts.size() == 2) return {parse_number(parts[0], what), parse_number(parts[1], what)};
  throw BadArgument(what + " expects <lo>:<hi>");
}

zeta::StrategyId parse_strategy(const std::string& name) {
  if (auto id = zeta::strategy_from_string(name)) return *id;
  throw BadArgument("unknown strategy '" + name + "'");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw BadArgument("cannot open output file '" + path + "'");
  out << text;
}

json outcome_json(Complex s, const zeta::EvalOutcome& o, double ms, bool xi) {
  return json{{"s_re", s.real()},
              {"s_im", s.imag()},
              {"value_re", o.value.real()},
              {"value_im", o.value.imag()},
              {"error_estimate", o.error_estimate},
              {"strategy", std::string(zeta::to_string(o.strategy))},
              {"terms_used", o.terms_used},
              {"wall_time_ms", ms},
              {"quantity", xi ? "xi" : "zeta"},
              {"truncation_reason", std::string(zeta::to_string(o.truncation_reason))}};
}

int exit_code_for(const zeta::ZetaError& e) {
  if (dynamic_cast<const zeta::DomainError*>(&e) || dynamic_cast<const zeta::PoleError*>(&e) ||
      dynamic_cast<const zeta::SingularPrefactorError*>(&e)) {
    return kExitDomain;
  }
  return kExitConvergence;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-strategy evaluator for the Riemann zeta function"};
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<CLI::ConfigINI>());
  app.set_config("--config", "", "Flat key=value file with option defaults; flags override it");

  std::string s_text = "2";
  std::string strategy_name = "euler_maclaurin";
  std::string strategies_text;
  std::string out_path;
  std::string format;
  std::string sweep_text;
  std::string re_text = "0.5";
  std::string im_text = "0";
  std::string scheme = "de";
  double step = 0.1;
  unsigned threads = 0;
  bool xi = false;
  zeta::StrategyParams params;
  int delta = 0, n = 0, p = 0, quad_level = 0;
  double tol = 0.0, quad_tol = 0.0;
  std::int64_t max_terms = 0;
  double admit = 1e-8;

  app.add_option("--s", s_text, "Argument as <re>,<im>")->expected(1, 2)->join(',');
  app.add_option("--strategy", strategy_name, "Strategy name");
  app.add_option("--strategies", strategies_text, "Comma-separated strategies for compare (default: all)")
      ->expected(1, 64)
      ->join(',');
  auto* o_delta = app.add_option("--delta", delta, "Correction order");
  auto* o_n = app.add_option("--n", n, "Cutoff n, or approximant order for xi_hermite / xi_power_series");
  auto* o_p = app.add_option("--p", p, "Geometric base for integral_free");
  auto* o_tol = app.add_option("--tol", tol, "Series tolerance");
  auto* o_max = app.add_option("--max-terms", max_terms, "Series term cap");
  auto* o_ql = app.add_option("--quad-level", quad_level, "Quadrature refinement levels");
  auto* o_qt = app.add_option("--quad-tol", quad_tol, "Quadrature absolute tolerance");
  app.add_option("--quad-scheme", scheme, "Quadrature scheme: de | gl")->check(CLI::IsMember({"de", "gl"}));
  app.add_flag("--xi", xi, "Report xi(s) instead of zeta(s)");
  app.add_option("--out", out_path, "Output file (default: stdout)");
  app.add_option("--format", format, "Output format: csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--sweep", sweep_text, "Study sweep as <param>=<v1>,<v2>,...")->expected(1, 256)->join(',');
  app.add_option("--re", re_text, "Scan range of Re s as <lo>:<hi>");
  app.add_option("--im", im_text, "Scan range of Im s as <lo>:<hi>");
  app.add_option("--step", step, "Scan lattice step");
  app.add_option("--threads", threads, "Scan worker threads (default: ZETA_FORGE_THREADS or hardware)");
  app.add_option("--admit", admit, "Largest error estimate admitted into compare consensus");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate with one strategy");
  auto* compare_cmd = app.add_subcommand("compare", "Run several strategies and report consensus");
  auto* study_cmd = app.add_subcommand("study", "Sweep one parameter of a strategy");
  auto* scan_cmd = app.add_subcommand("scan", "Evaluate over a lattice in the complex plane");
  for (auto* sub : {eval_cmd, compare_cmd, study_cmd, scan_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitArgs;
  }

  try {
    if (*o_delta) params.delta = delta;
    if (*o_n) params.n = n;
    if (*o_p) params.p = p;
    if (*o_tol) params.tolerance = tol;
    if (*o_max) params.max_terms = max_terms;
    if (*o_ql) params.quad_level = quad_level;
    if (*o_qt) params.quad_tol = quad_tol;
    params.scheme = scheme == "gl" ? zeta::QuadratureSpec::Scheme::gauss_legendre_panels
                                   : zeta::QuadratureSpec::Scheme::double_exponential;
    try {
      params.validate();
    } catch (const zeta::DomainError& e) {
      throw BadArgument(e.what());
    }

    if (eval_cmd->parsed()) {
      const Complex s = parse_s(s_text);
      const auto id = parse_strategy(strategy_name);
      const auto start = std::chrono::steady_clock::now();
      const auto o = zeta::evaluate({s, id, params, xi});
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (format == "csv") {
        zeta::Table t;
        t.header = {"s_re", "s_im", "value_re", "value_im", "error_estimate", "strategy", "terms_used",
                    "truncation_reason", "quantity", "wall_time_ms"};
        t.rows.push_back({zeta::format_double(s.real()), zeta::format_double(s.imag()),
                          zeta::format_double(o.value.real()), zeta::format_double(o.value.imag()),
                          zeta::format_double(o.error_estimate), std::string(zeta::to_string(id)),
                          std::to_string(o.terms_used), std::string(zeta::to_string(o.truncation_reason)),
                          xi ? "xi" : "zeta", zeta::format_double(ms)});
        emit(zeta::to_csv(t), out_path);
      } else {
        emit(outcome_json(s, o, ms, xi).dump(2) + "\n", out_path);
      }
      return o.truncation_reason == zeta::TruncationReason::max_terms &&
                     id != zeta::StrategyId::xi_hermite && id != zeta::StrategyId::xi_power_series
                 ? kExitConvergence
                 : 0;
    }

    if (compare_cmd->parsed()) {
      const Complex s = parse_s(s_text);
      std::vector<zeta::StrategyId> ids;
      if (strategies_text.empty()) {
        ids.assign(std::begin(zeta::kAllStrategies), std::end(zeta::kAllStrategies));
      } else {
        for (const auto& name : split(strategies_text, ',')) ids.push_back(parse_strategy(name));
      }
      zeta::CompareOptions opts;
      opts.params = params;
      opts.output_xi = xi;
      opts.admit_error = admit;
      const auto rep = zeta::compare(s, ids, opts);
      if (format == "csv") {
        zeta::Table t;
        t.header = {"strategy", "value_re", "value_im", "error_estimate", "terms_used", "wall_time_ms", "admitted",
                    "error"};
        for (std::size_t i = 0; i < rep.rows.size(); ++i) {
          const auto& r = rep.rows[i];
          const bool admitted = std::find(rep.admitted.begin(), rep.admitted.end(), i) != rep.admitted.end();
          if (r.outcome) {
            t.rows.push_back({std::string(zeta::to_string(r.strategy)), zeta::format_double(r.outcome->value.real()),
                              zeta::format_double(r.outcome->value.imag()),
                              zeta::format_double(r.outcome->error_estimate), std::to_string(r.outcome->terms_used),
                              zeta::format_double(r.wall_time_ms), admitted ? "1" : "0", ""});
          } else {
            t.rows.push_back({std::string(zeta::to_string(r.strategy)), "", "", "", "",
                              zeta::format_double(r.wall_time_ms), "0", r.error});
          }
        }
        emit(zeta::to_csv(t), out_path);
      } else {
        json rows = json::array();
        for (const auto& r : rep.rows) {
          if (r.outcome) {
            rows.push_back(outcome_json(s, *r.outcome, r.wall_time_ms, xi));
          } else {
            rows.push_back({{"strategy", std::string(zeta::to_string(r.strategy))},
                            {"error", r.error},
                            {"wall_time_ms", r.wall_time_ms}});
          }
        }
        json doc{{"s_re", s.real()},
                 {"s_im", s.imag()},
                 {"rows", rows},
                 {"max_pairwise_disagreement", rep.max_pairwise_disagreement}};
        if (rep.consensus) {
          doc["consensus_re"] = rep.consensus->real();
          doc["consensus_im"] = rep.consensus->imag();
          doc["consensus_strategy"] = std::string(zeta::to_string(*rep.consensus_strategy));
        } else {
          doc["consensus_re"] = nullptr;
          doc["consensus_im"] = nullptr;
        }
        emit(doc.dump(2) + "\n", out_path);
      }
      return 0;
    }

    if (study_cmd->parsed()) {
      const Complex s = parse_s(s_text);
      const auto id = parse_strategy(strategy_name);
      const auto eq = sweep_text.find('=');
      if (eq == std::string::npos) throw BadArgument("--sweep expects <param>=<v1>,<v2>,...");
      const auto param = zeta::sweep_param_from_string(sweep_text.substr(0, eq));
      if (!param) throw BadArgument("unknown sweep parameter '" + sweep_text.substr(0, eq) + "'");
      zeta::Sweep sweep{*param, {}};
      for (const auto& v : split(sweep_text.substr(eq + 1), ',')) sweep.values.push_back(parse_number(v, "--sweep"));
      if (sweep.values.empty()) throw BadArgument("--sweep has no values");
      emit(zeta::to_csv(zeta::convergence_study(s, id, sweep, params, xi)), out_path);
      return 0;
    }

    if (scan_cmd->parsed()) {
      const auto id = parse_strategy(strategy_name);
      const auto [re_lo, re_hi] = parse_range(re_text, "--re");
      const auto [im_lo, im_hi] = parse_range(im_text, "--im");
      if (!(step > 0.0)) throw BadArgument("--step must be positive");
      zeta::ScanOptions opts;
      opts.params = params;
      opts.output_xi = xi;
      opts.threads = threads;
      emit(zeta::to_csv(zeta::grid_scan({re_lo, re_hi, im_lo, im_hi}, step, id, opts)), out_path);
      return 0;
    }
  } catch (const BadArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgs;
  } catch (const zeta::ZetaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitArgs;
}
