#include "zeta/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "zeta/detail/summation.hpp"

namespace zeta {

using detail::CompensatedSum;
using detail::kEps;

void QuadratureSpec::validate() const {
  if (level < 1) throw DomainError("quadrature: level must be >= 1");
  if (!(abs_tol > 0.0)) throw DomainError("quadrature: abs_tol must be positive");
}

namespace {

constexpr int kMinLevel = 3;

// A point of the transformed variable u: the original abscissa, the gap to
// the upper endpoint and dx/du.
struct Node {
  double x;
  double gap;
  double jac;
};

using Map = std::function<Node(double u)>;

Complex checked(Complex v, double x) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw QuadratureFailure("quadrature: integrand not finite at x = " + std::to_string(x));
  }
  return v;
}

QuadratureResult finish(std::vector<Complex> levels, double magnitude, long evals, const QuadratureSpec& q,
                        const char* who) {
  QuadratureResult r;
  r.value = levels.back();
  r.levels_used = static_cast<int>(levels.size());
  r.evaluations = evals;
  for (std::size_t k = 1; k < levels.size(); ++k) r.level_errors.push_back(std::abs(levels[k] - levels[k - 1]));
  r.error = r.level_errors.empty() ? kNaN : r.level_errors.back();
  const double floor = 64.0 * kEps * magnitude;
  if (!(r.error <= std::max(q.abs_tol, floor))) {
    throw QuadratureFailure(std::string(who) + ": tolerance " + std::to_string(q.abs_tol) +
                            " not reached at level " + std::to_string(q.level) +
                            " (estimate " + std::to_string(r.error) + ")");
  }
  return r;
}

bool converged(const std::vector<Complex>& levels, double magnitude, const QuadratureSpec& q) {
  if (static_cast<int>(levels.size()) < kMinLevel) return false;
  const double err = std::abs(levels.back() - levels[levels.size() - 2]);
  return err <= std::max(q.abs_tol, 64.0 * kEps * magnitude) * 0.5;
}

// Trapezoid rule on [lo, hi] in u with the step halved at every level.
QuadratureResult trapezoid(const EndpointIntegrand& f, const Map& map, double lo, double hi, double h0,
                           const QuadratureSpec& q, const char* who) {
  const int n0 = static_cast<int>(std::lround((hi - lo) / h0));
  const double h = (hi - lo) / n0;
  CompensatedSum<Complex> sum;
  long evals = 0;
  auto eval = [&](double u, double weight) {
    const Node nd = map(u);
    if (nd.jac == 0.0) return;
    ++evals;
    sum.add(weight * nd.jac * checked(f(nd.x, nd.gap), nd.x));
  };
  for (int j = 0; j <= n0; ++j) eval(lo + j * h, (j == 0 || j == n0) ? 0.5 : 1.0);
  std::vector<Complex> levels{h * sum.value()};
  double step = h;
  for (int k = 1; k <= q.level; ++k) {
    const long count = static_cast<long>(n0) << (k - 1);
    for (long j = 0; j < count; ++j) eval(lo + (2 * j + 1) * (step * 0.5), 1.0);
    step *= 0.5;
    levels.push_back(step * sum.value());
    if (converged(levels, step * sum.magnitude(), q)) break;
  }
  return finish(std::move(levels), step * sum.magnitude(), evals, q, who);
}

// 20-point Gauss-Legendre panels on [lo, hi] in u, doubling the panel count.
QuadratureResult gl_panels(const EndpointIntegrand& f, const Map& map, double lo, double hi, const QuadratureSpec& q,
                           const char* who) {
  using GL = boost::math::quadrature::gauss<double, 20>;
  const auto& abscissa = GL::abscissa();
  const auto& weights = GL::weights();
  std::vector<Complex> levels;
  double magnitude = 0.0;
  long evals = 0;
  for (int k = 0; k <= q.level; ++k) {
    const long panels = 1L << k;
    const double width = (hi - lo) / static_cast<double>(panels);
    CompensatedSum<Complex> sum;
    for (long p = 0; p < panels; ++p) {
      const double mid = lo + (static_cast<double>(p) + 0.5) * width;
      for (std::size_t i = 0; i < abscissa.size(); ++i) {
        for (int sign : {-1, 1}) {
          if (abscissa[i] == 0.0 && sign < 0) continue;
          const Node nd = map(mid + sign * 0.5 * width * abscissa[i]);
          if (nd.jac == 0.0) continue;
          ++evals;
          sum.add(0.5 * width * weights[i] * nd.jac * checked(f(nd.x, nd.gap), nd.x));
        }
      }
    }
    levels.push_back(sum.value());
    magnitude = sum.magnitude();
    if (converged(levels, magnitude, q)) break;
  }
  return finish(std::move(levels), magnitude, evals, q, who);
}

QuadratureResult run(const EndpointIntegrand& f, const Map& map, double lo, double hi, double h0,
                     const QuadratureSpec& q, const char* who) {
  q.validate();
  if (q.scheme == QuadratureSpec::Scheme::gauss_legendre_panels) return gl_panels(f, map, lo, hi, q, who);
  return trapezoid(f, map, lo, hi, h0, q, who);
}

constexpr double kHalfPi = 0.5 * kPi;

}  // namespace

QuadratureResult integrate_interval(const EndpointIntegrand& f, double a, double b, const QuadratureSpec& q) {
  if (!(b > a)) throw DomainError("integrate_interval: requires a < b");
  const double half = 0.5 * (b - a);
  const Map map = [=](double u) {
    const double v = kHalfPi * std::sinh(u);
    const double ch = std::cosh(v);
    const double jac = half * kHalfPi * std::cosh(u) / (ch * ch);
    // distances to each endpoint without forming 1 - tanh(v)
    const double upper = half * 2.0 / (std::exp(2.0 * v) + 1.0);
    const double lower = half * 2.0 / (std::exp(-2.0 * v) + 1.0);
    if (upper == 0.0 || lower == 0.0) return Node{0.0, 0.0, 0.0};
    const double x = u < 0.0 ? a + lower : b - upper;
    return Node{x, upper, jac};
  };
  return run(f, map, -4.5, 4.5, 0.5, q, "integrate_interval");
}

QuadratureResult integrate_halfline(const Integrand& f, double a, const QuadratureSpec& q) {
  const Map map = [=](double u) {
    const double e = std::exp(kHalfPi * std::sinh(u));
    const double jac = kHalfPi * std::cosh(u) * e;
    if (e == 0.0) return Node{0.0, 0.0, 0.0};
    return Node{a + e, kNaN, jac};
  };
  const EndpointIntegrand g = [&](double x, double) { return f(x); };
  return run(g, map, -4.5, 3.5, 0.5, q, "integrate_halfline");
}

QuadratureResult integrate_line(const Integrand& f, const QuadratureSpec& q) {
  q.validate();
  const double cutoff = q.abs_tol * 1e-2;
  double lo = -2.0;
  double hi = 2.0;
  // probe two points per side so an oscillating integrand cannot pass by a node
  auto tail = [&](double x) { return std::max(std::abs(f(x)), std::abs(f(0.97 * x))); };
  while (tail(lo) >= cutoff && lo > -1e3) lo *= 1.25;
  while (tail(hi) >= cutoff && hi < 1e3) hi *= 1.25;
  if (tail(lo) >= cutoff || tail(hi) >= cutoff) {
    throw QuadratureFailure("integrate_line: integrand does not decay within |x| < 1000");
  }
  const Map map = [](double u) { return Node{u, kNaN, 1.0}; };
  const EndpointIntegrand g = [&](double x, double) { return f(x); };
  const double width = hi - lo;
  return run(g, map, lo, hi, width / std::ceil(width), q, "integrate_line");
}

}  // namespace zeta
