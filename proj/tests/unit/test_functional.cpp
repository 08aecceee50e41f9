#include "support/expect_error.hpp"
#include "support/oracles.hpp"
#include "tttest/functional.hpp"
#include "tttest/random.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using ttt::CurveKind;
using ttt::ErrorCode;
using ttt::PhiR;
using ttt::PiecewiseCurve;

namespace {

const PiecewiseCurve kRamp({0.0, 1.0}, {-0.5, 0.5}, CurveKind::Linear);  // p - 1/2

PiecewiseCurve random_curve(ttt::Rng& rng, CurveKind kind) {
    const std::size_t knots = 2 + rng.uniform_index(12);
    std::vector<double> p(knots);
    std::vector<double> v(knots);
    for (std::size_t i = 0; i < knots; ++i) {
        p[i] = static_cast<double>(i) / static_cast<double>(knots - 1);
        v[i] = 2.0 * rng.uniform01() - 1.0;
    }
    return {p, v, kind};
}

}  // namespace

TEST(PhiRTest, ParsesAndValidates) {
    EXPECT_TRUE(PhiR::parse("inf").is_infinite());
    EXPECT_TRUE(PhiR::parse("infinity").is_infinite());
    EXPECT_EQ(PhiR::parse("2").order(), 2.0);
    EXPECT_EQ(PhiR::parse("1").to_string(), "1");
    EXPECT_EQ(PhiR::infinity().to_string(), "inf");
    EXPECT_TTT_ERROR(PhiR::finite(0.5), ErrorCode::InvalidR);
    EXPECT_TTT_ERROR(PhiR::parse("0.99"), ErrorCode::InvalidR);
    EXPECT_TTT_ERROR(PhiR::parse("abc"), ErrorCode::InvalidR);
}

TEST(Phi, RampExamples) {
    EXPECT_DOUBLE_EQ(ttt::phi(PhiR::infinity(), kRamp), 0.5);
    EXPECT_DOUBLE_EQ(ttt::phi(PhiR::finite(1), kRamp), 0.125);
    // (integral of (p - 1/2)^2 over [1/2, 1])^{1/2} = sqrt(1/24)
    EXPECT_NEAR(ttt::phi(PhiR::finite(2), kRamp), std::sqrt(1.0 / 24), 1e-15);
}

TEST(Phi, NonpositiveCurveGivesZero) {
    for (const auto kind : {CurveKind::Linear, CurveKind::Step}) {
        const PiecewiseCurve negative({0.0, 0.3, 1.0}, {0.0, -1.0, -0.2}, kind);
        for (const auto r : {PhiR::finite(1), PhiR::finite(2.5), PhiR::infinity()}) {
            EXPECT_EQ(ttt::phi(r, negative), 0.0);
        }
    }
}

TEST(Phi, StepUsesSegmentValuesForIntegralsAndAllKnotsForSup) {
    // Value on (0, 0.5] is -1 and on (0.5, 1] is 2; v_0 = 3 matters only for the sup.
    const PiecewiseCurve step({0.0, 0.5, 1.0}, {3.0, -1.0, 2.0}, CurveKind::Step);
    EXPECT_EQ(ttt::phi(PhiR::infinity(), step), 3.0);
    EXPECT_DOUBLE_EQ(ttt::phi(PhiR::finite(1), step), 1.0);
    EXPECT_DOUBLE_EQ(ttt::phi(PhiR::finite(2), step), std::sqrt(2.0));
}

TEST(Phi, MatchesQuadratureOnRandomCurves) {
    ttt::Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        for (const auto kind : {CurveKind::Linear, CurveKind::Step}) {
            const auto c = random_curve(rng, kind);
            for (const double r : {1.0, 1.5, 2.0, 3.0, 7.25}) {
                const double expected = ttt::oracle::phi_by_quadrature(c, r);
                EXPECT_NEAR(ttt::phi(PhiR::finite(r), c), expected, 1e-10 * (1.0 + expected))
                    << "trial " << trial << " r " << r;
            }
        }
    }
}

TEST(Phi, LargeOrderApproachesTheSup) {
    ttt::Rng rng(3);
    const auto c = random_curve(rng, CurveKind::Linear);
    const double sup = ttt::phi(PhiR::infinity(), c);
    double previous = 0.0;
    for (const double r : {1.0, 4.0, 16.0, 64.0, 256.0}) {
        const double value = ttt::phi(PhiR::finite(r), c);
        EXPECT_GE(value, previous);
        EXPECT_LE(value, sup);
        previous = value;
    }
    EXPECT_NEAR(previous, sup, 0.05 * sup);
}

TEST(SupDistance, IsExactOnMergedGrid) {
    const PiecewiseCurve a({0.0, 0.5, 1.0}, {0.0, 1.0, 0.0}, CurveKind::Linear);
    const PiecewiseCurve b({0.0, 1.0}, {0.0, 0.0}, CurveKind::Linear);
    EXPECT_EQ(ttt::sup_distance(a, b), 1.0);
}

TEST(PhiProperties, HoldOnRandomCurves) {
    ttt::Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const auto kind = trial % 2 == 0 ? CurveKind::Linear : CurveKind::Step;
        const auto d1 = random_curve(rng, kind);
        const auto d2 = random_curve(rng, kind);
        const auto report = ttt::check_phi_properties(d1, d2, 1.0, 3.0);
        EXPECT_TRUE(report.ok()) << report.violations.front().description;
    }
}

TEST(PhiProperties, DominationIsCheckedForNonpositiveShift) {
    const PiecewiseCurve d1({0.0, 0.5, 1.0}, {0.0, -0.4, -0.1}, CurveKind::Linear);
    const PiecewiseCurve d2({0.0, 0.25, 1.0}, {0.3, -0.2, 0.6}, CurveKind::Linear);
    const auto report = ttt::check_phi_properties(d1, d2, 2.0, std::numeric_limits<double>::infinity());
    EXPECT_TRUE(report.domination_applicable);
    EXPECT_TRUE(report.ok());
}

TEST(PhiProperties, RejectsBadOrders) {
    EXPECT_TTT_ERROR(ttt::check_phi_properties(kRamp, kRamp, 2.0, 1.0), ErrorCode::InvalidR);
    EXPECT_TTT_ERROR(ttt::check_phi_properties(kRamp, kRamp, 0.5, 1.0), ErrorCode::InvalidR);
}
