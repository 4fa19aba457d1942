#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

namespace zeta::detail {

/// Neumaier-compensated running sum, applied componentwise.
template <typename T>
class CompensatedSum {
 public:
  void add(T x) {
    add_component(sum_re_, comp_re_, re(x));
    add_component(sum_im_, comp_im_, im(x));
    abs_sum_ += std::abs(x);
  }
  T value() const {
    if constexpr (is_complex) {
      return T(sum_re_ + comp_re_, sum_im_ + comp_im_);
    } else {
      return sum_re_ + comp_re_;
    }
  }
  /// Sum of term magnitudes, used for rounding-floor estimates.
  double magnitude() const { return abs_sum_; }

 private:
  static constexpr bool is_complex = !std::is_arithmetic_v<T>;
  static double re(T x) {
    if constexpr (is_complex) return x.real(); else return x;
  }
  static double im(T x) {
    if constexpr (is_complex) return x.imag(); else return 0.0;
  }
  static void add_component(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double sum_re_ = 0.0, comp_re_ = 0.0;
  double sum_im_ = 0.0, comp_im_ = 0.0;
  double abs_sum_ = 0.0;
};

inline constexpr double kEps = 2.220446049250313e-16;

}  // namespace zeta::detail
