// Scalar auxiliary functions behind the weight bounds, and grid scans of the
// inequalities they are claimed to satisfy.
#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "hardy/dd.hpp"

namespace hardy {

enum class ScalarId { H, G, F, K, J, L, Y, g, G_cubic, Q };

struct Interval {
  double lo = 0.0, hi = 0.0;
  bool lo_open = false, hi_open = false;
  [[nodiscard]] bool contains(double x) const {
    return (lo_open ? x > lo : x >= lo) && (hi_open ? x < hi : x <= hi);
  }
};

// H_α, G_α on x; F_α, K_α, Y on x ∈ [1, 3/2]; J_α, L_α on Y ∈ [3/4, 1];
// g, G_cubic, Q take α as their argument.
struct ScalarFunction {
  ScalarId id = ScalarId::H;
  double alpha = 0.0;
  static ScalarFunction parse(const std::string& name, double alpha = 0.0);
  [[nodiscard]] std::string name() const;
  [[nodiscard]] Interval domain() const;
};

// Throws std::out_of_range outside domain().
double scalar_eval(const ScalarFunction& fn, double x);
// ~32 significant digits; cancellation-safe forms for H, G, F near their base point.
DD scalar_eval_dd(const ScalarFunction& fn, const DD& x);

struct ScanReport {
  std::string what;
  double min_margin = 0.0;
  double at = 0.0;  // grid point of the minimum
  std::size_t points = 0;
  bool strict = true;
  bool pass = false;
};

// Evaluates margin(x) on `points` equispaced interior points of [lo, hi]
// (plus the endpoints when included). Passes iff min > 0 (strict) or >= 0.
ScanReport lower_bound_scan(const std::string& what, const std::function<double(double)>& margin, double lo, double hi,
                            std::size_t points, bool include_lo, bool include_hi, bool strict);

inline constexpr std::size_t kScanPoints = 4000;
inline constexpr double kAlphaStep = 1e-3;

// H_α(x) > ((1-α)²/4) x² on (0,1).
ScanReport scan_H(double alpha, std::size_t points = kScanPoints);
// G_α(x) >= ((α-1)²/4) x² on (0,1].
ScanReport scan_G(double alpha, std::size_t points = kScanPoints);
// F_α(x) >= ((α-1)²/4)(x-1)² on (1,3/2].
ScanReport scan_F(double alpha, std::size_t points = kScanPoints);
// Q(α) - (α-1)²/2 > threshold on [1+step, 3-step].
ScanReport scan_Q(double step = kAlphaStep, double threshold = 1e-9);
// -G(α) > 0 on [1+step, 3-step].
ScanReport scan_G_cubic(double step = kAlphaStep);
// min over the grid of g(α) and g(α_i) - g(α_{i+1}) on [1,3].
ScanReport scan_g(double step = kAlphaStep);

}  // namespace hardy
