#pragma once

#include "tttest/curve.hpp"
#include "tttest/sample.hpp"

#include <span>
#include <vector>

namespace ttt {

/**
 * Empirical total-time-on-test values at p = k/n, k = 0..n, from sorted data:
 *
 *   T(k/n) = ((n - k) X_(k) + sum_{i<=k} X_(i)) / n,   X_(0) := 0.
 *
 * T(0) = 0 and T(1) is the sample mean, computed with the same summation
 * order as Sample::mean() so the two agree bit for bit.
 */
[[nodiscard]] std::vector<double> ttt_knot_values(std::span<const double> sorted);

/// Knot abscissae k/n, k = 0..n.
[[nodiscard]] std::vector<double> uniform_grid(std::size_t n);

[[nodiscard]] PiecewiseCurve ttt_empirical(const Sample& s, CurveKind kind);

/// T_{F_n} divided by the sample mean. Throws ZeroMean for an all-zero sample.
[[nodiscard]] PiecewiseCurve scaled_ttt(const Sample& s, CurveKind kind);

/// Excess-wealth knot values mean - T_k, with the mean taken as T_n. Each is
/// the correctly rounded difference, so W_k + T_k equals the mean to within
/// half an ulp of W_k.
[[nodiscard]] std::vector<double> excess_wealth_knot_values(std::span<const double> ttt_knots);

/// Excess wealth W_{F_n}(p) = mean - T_{F_n}(p); W(0) = mean, W(1) = 0.
[[nodiscard]] PiecewiseCurve excess_wealth_empirical(const Sample& s, CurveKind kind);

}  // namespace ttt
