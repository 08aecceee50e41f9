#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

namespace ttt {

enum class CurveKind {
    Linear,  ///< interpolates linearly between knots
    Step,    ///< holds the right-hand knot value on (p_{k-1}, p_k]
};

[[nodiscard]] std::string_view to_string(CurveKind kind) noexcept;
[[nodiscard]] CurveKind parse_curve_kind(std::string_view text);

/**
 * A function on [0,1] given by knots (p_k, v_k) with p_0 = 0 < p_1 < ... < p_K = 1.
 *
 * Step curves are left-continuous: the value on (p_{k-1}, p_k] is v_k, and the
 * value at p = 0 is v_0. This is the shape of p -> int_0^{F_n^{-1}(p)} (1 - F_n),
 * whose quantile jumps just after each k/n.
 */
class PiecewiseCurve {
public:
    PiecewiseCurve(std::vector<double> abscissae, std::vector<double> values, CurveKind kind);

    [[nodiscard]] CurveKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::size_t knot_count() const noexcept { return p_.size(); }
    [[nodiscard]] std::span<const double> abscissae() const noexcept { return p_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return v_; }

    [[nodiscard]] double operator()(double p) const;

    [[nodiscard]] PiecewiseCurve scaled(double c) const;

private:
    std::vector<double> p_;
    std::vector<double> v_;
    CurveKind kind_;
};

/// a - b on the union of both knot grids. Throws KindMismatch.
[[nodiscard]] PiecewiseCurve curve_difference(const PiecewiseCurve& a, const PiecewiseCurve& b);
[[nodiscard]] PiecewiseCurve curve_sum(const PiecewiseCurve& a, const PiecewiseCurve& b);

/// Sorted union of two knot grids (exact comparison).
[[nodiscard]] std::vector<double> merge_grids(std::span<const double> a, std::span<const double> b);

/// Writes "p,value" rows at every knot.
void write_curve_csv(const PiecewiseCurve& curve, std::ostream& out);

}  // namespace ttt
