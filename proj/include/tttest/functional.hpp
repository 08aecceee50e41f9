#pragma once

#include "tttest/curve.hpp"

#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace ttt {

/// Order r >= 1 (or infinity) of the one-sided deviation functional
/// Phi_r(delta) = || max(0, delta) ||_r on [0,1].
class PhiR {
public:
    /// Throws InvalidR when r < 1 or r is NaN.
    [[nodiscard]] static PhiR finite(double r);
    [[nodiscard]] static PhiR infinity() noexcept { return PhiR(kInfinity); }
    /// Accepts "inf", "infinity" or a number >= 1.
    [[nodiscard]] static PhiR parse(std::string_view text);

    [[nodiscard]] bool is_infinite() const noexcept { return r_ == kInfinity; }
    [[nodiscard]] double order() const noexcept { return r_; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PhiR&, const PhiR&) = default;

private:
    static constexpr double kInfinity = std::numeric_limits<double>::infinity();
    explicit PhiR(double r) noexcept : r_(r) {}
    double r_;
};

/**
 * Phi_r of a curve.
 *
 * Step curves: the supremum includes every knot value (p = 0 and p = 1
 * included); the L^r integral runs over the segments (p_{k-1}, p_k] with
 * value v_k. Linear curves: crossings of zero are located exactly and each
 * positive sub-segment is integrated in closed form, so the result is exact
 * up to rounding for every r.
 */
[[nodiscard]] double phi(const PhiR& functional, const PiecewiseCurve& curve);

/// Largest |a(p) - b(p)| over the merged grid (the sup norm, exactly).
[[nodiscard]] double sup_distance(const PiecewiseCurve& a, const PiecewiseCurve& b);

struct PhiPropertyViolation {
    int property = 0;  // 1..7
    std::string description;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct PhiPropertyReport {
    std::vector<PhiPropertyViolation> violations;
    bool domination_applicable = false;  // property 2 needs delta1 <= 0
    [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

struct PhiPropertyOptions {
    double homogeneity_factor = 2.0;
    /// Relative tolerance for the equalities (zero map, homogeneity).
    double equality_tolerance = 1e-12;
    /// Relative slack on the inequalities. Zero means they must hold as computed.
    double inequality_slack = 0.0;
};

/**
 * Checks the structural properties of Phi_r on (delta1, delta2) for 1 <= r <= s:
 * zero map, domination under a nonpositive shift (when delta1 <= 0), strict
 * positivity, Lipschitz bound in the sup norm, positive homogeneity, midpoint
 * convexity and monotonicity in r. Violations are reported, never thrown.
 */
[[nodiscard]] PhiPropertyReport check_phi_properties(const PiecewiseCurve& delta1,
                                                     const PiecewiseCurve& delta2, double r,
                                                     double s, PhiPropertyOptions options = {});

}  // namespace ttt
