#include "support/expect_error.hpp"
#include "support/oracles.hpp"
#include "tttest/curve.hpp"
#include "tttest/distributions.hpp"
#include "tttest/random.hpp"
#include "tttest/transforms.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using ttt::CurveKind;
using ttt::ErrorCode;
using ttt::PiecewiseCurve;
using ttt::Sample;

namespace {

std::vector<double> values_of(const PiecewiseCurve& c) { return {c.values().begin(), c.values().end()}; }
std::vector<double> grid_of(const PiecewiseCurve& c) {
    return {c.abscissae().begin(), c.abscissae().end()};
}

const Sample kOneTwoThree = Sample::ingest(std::vector<double>{1, 2, 3});

}  // namespace

TEST(Curve, RejectsMalformedKnots) {
    EXPECT_TTT_ERROR(PiecewiseCurve({0.0, 0.5}, {1, 2}, CurveKind::Linear),
                     ErrorCode::InvalidParameter);
    EXPECT_TTT_ERROR(PiecewiseCurve({0.0, 0.5, 0.5, 1.0}, {1, 2, 3, 4}, CurveKind::Linear),
                     ErrorCode::InvalidParameter);
    EXPECT_TTT_ERROR(PiecewiseCurve({0.0, 1.0}, {1}, CurveKind::Linear),
                     ErrorCode::LengthMismatch);
}

TEST(Curve, LinearInterpolatesAndStepHoldsRightKnot) {
    const PiecewiseCurve linear({0.0, 0.5, 1.0}, {0.0, 1.0, 3.0}, CurveKind::Linear);
    EXPECT_DOUBLE_EQ(linear(0.25), 0.5);
    EXPECT_DOUBLE_EQ(linear(0.75), 2.0);
    EXPECT_EQ(linear(1.0), 3.0);

    const PiecewiseCurve step({0.0, 0.5, 1.0}, {0.0, 1.0, 3.0}, CurveKind::Step);
    EXPECT_EQ(step(0.0), 0.0);
    EXPECT_EQ(step(0.25), 1.0);
    EXPECT_EQ(step(0.5), 1.0);
    EXPECT_EQ(step(0.75), 3.0);
    EXPECT_EQ(step(1.0), 3.0);
    EXPECT_TTT_ERROR(step(1.5), ErrorCode::DomainError);
}

TEST(Curve, DifferenceOfEqualCurvesIsZero) {
    const auto t = ttt::ttt_empirical(kOneTwoThree, CurveKind::Linear);
    const auto d = ttt::curve_difference(t, t);
    for (const double v : d.values()) EXPECT_EQ(v, 0.0);
}

TEST(Curve, DifferenceUsesMergedGrid) {
    const PiecewiseCurve thirds({0.0, 1.0 / 3, 2.0 / 3, 1.0}, {0, 1, 2, 3}, CurveKind::Step);
    const PiecewiseCurve halves({0.0, 0.5, 1.0}, {0, 1, 2}, CurveKind::Step);
    const auto d = ttt::curve_difference(thirds, halves);
    EXPECT_EQ(grid_of(d), (std::vector<double>{0.0, 1.0 / 3, 0.5, 2.0 / 3, 1.0}));
    // step values on the merged grid: thirds - halves, each holding its right knot
    EXPECT_EQ(values_of(d), (std::vector<double>{0, 0, 1, 0, 1}));
    EXPECT_TTT_ERROR(
        ttt::curve_difference(thirds, PiecewiseCurve({0.0, 1.0}, {0, 1}, CurveKind::Linear)),
        ErrorCode::KindMismatch);
}

TEST(Curve, CsvHasHeaderAndOneRowPerKnot) {
    const PiecewiseCurve c({0.0, 0.5, 1.0}, {0, 0.25, 1}, CurveKind::Linear);
    std::ostringstream out;
    ttt::write_curve_csv(c, out);
    EXPECT_EQ(out.str(), "p,value\n0,0\n0.5,0.25\n1,1\n");
}

TEST(TttEmpirical, KnotsOfOneTwoThree) {
    for (const auto kind : {CurveKind::Linear, CurveKind::Step}) {
        const auto t = ttt::ttt_empirical(kOneTwoThree, kind);
        EXPECT_EQ(grid_of(t), (std::vector<double>{0.0, 1.0 / 3, 2.0 / 3, 1.0}));
        const auto v = values_of(t);
        ASSERT_EQ(v.size(), 4u);
        EXPECT_EQ(v[0], 0.0);
        EXPECT_DOUBLE_EQ(v[1], 1.0);
        EXPECT_DOUBLE_EQ(v[2], 5.0 / 3);
        EXPECT_DOUBLE_EQ(v[3], 2.0);
    }
}

TEST(TttEmpirical, StepAtOneHalfFollowsTheIntegralDefinition) {
    // F_n^{-1}(0.5) = 2, and the integral of 1 - F_n over [0, 2] is 1 + 2/3.
    const auto step = ttt::ttt_empirical(kOneTwoThree, CurveKind::Step);
    EXPECT_DOUBLE_EQ(step(0.5), 5.0 / 3);
    const auto linear = ttt::ttt_empirical(kOneTwoThree, CurveKind::Linear);
    EXPECT_DOUBLE_EQ(linear(0.5), (1.0 + 5.0 / 3) / 2);
}

TEST(TttEmpirical, ConstantSampleJumpsToTheConstant) {
    // A point mass at c has T(p) = c for every p > 0; only the first
    // interpolated segment rises, from 0 to c.
    const auto s = Sample::ingest(std::vector<double>{4, 4, 4, 4});
    const auto linear = ttt::ttt_empirical(s, CurveKind::Linear);
    const auto v = values_of(linear);
    EXPECT_EQ(v[0], 0.0);
    for (std::size_t k = 1; k < v.size(); ++k) EXPECT_EQ(v[k], 4.0);
    EXPECT_DOUBLE_EQ(linear(0.125), 2.0);
}

TEST(TttEmpirical, MatchesIntegralDefinitionOnRandomSamples) {
    ttt::Rng rng(11);
    const auto d = ttt::Distribution::weibull(1.5, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = d.sample(2 + rng.uniform_index(60), rng);
        const auto expected = ttt::oracle::ttt_knots_by_definition(s.values());
        const auto got = ttt::ttt_knot_values(s.values());
        ASSERT_EQ(got.size(), expected.size());
        for (std::size_t k = 0; k < got.size(); ++k) {
            EXPECT_NEAR(got[k], expected[k], 1e-12 * (1.0 + expected[k]));
        }
        EXPECT_EQ(got.back(), s.mean());
    }
}

TEST(ScaledTtt, KnotsOfOneTwoThree) {
    const auto v = values_of(ttt::scaled_ttt(kOneTwoThree, CurveKind::Linear));
    EXPECT_EQ(v[0], 0.0);
    EXPECT_DOUBLE_EQ(v[1], 0.5);
    EXPECT_DOUBLE_EQ(v[2], 5.0 / 6);
    EXPECT_EQ(v[3], 1.0);
}

TEST(ScaledTtt, ConstantSampleIsOneAfterTheOrigin) {
    const auto s = Sample::ingest(std::vector<double>{2.5, 2.5, 2.5, 2.5, 2.5});
    const auto c = ttt::scaled_ttt(s, CurveKind::Step);
    EXPECT_EQ(c.values()[0], 0.0);
    for (std::size_t k = 1; k < c.knot_count(); ++k) EXPECT_EQ(c.values()[k], 1.0);
}

TEST(ScaledTtt, EndsAtOne) {
    ttt::Rng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = ttt::Distribution::unit_exponential().sample(2 + rng.uniform_index(50), rng);
        EXPECT_EQ(ttt::scaled_ttt(s, CurveKind::Linear).values().back(), 1.0);
    }
}

TEST(ScaledTtt, ZeroMeanIsAnError) {
    const auto zeros = Sample::ingest(std::vector<double>{0, 0, 0});
    EXPECT_TTT_ERROR(ttt::scaled_ttt(zeros, CurveKind::Linear), ErrorCode::ZeroMean);
}

TEST(ExcessWealth, KnotsOfOneTwoThree) {
    const auto v = values_of(ttt::excess_wealth_empirical(kOneTwoThree, CurveKind::Linear));
    EXPECT_EQ(v[0], 2.0);
    EXPECT_DOUBLE_EQ(v[1], 1.0);
    EXPECT_DOUBLE_EQ(v[2], 1.0 / 3);
    EXPECT_EQ(v[3], 0.0);
}

TEST(ExcessWealth, EndpointsAreMeanAndZero) {
    ttt::Rng rng(5);
    const auto s = ttt::Distribution::singh_maddala(2, 1.5, 1).sample(37, rng);
    const auto w = ttt::excess_wealth_empirical(s, CurveKind::Step);
    EXPECT_EQ(w.values().front(), s.mean());
    EXPECT_EQ(w.values().back(), 0.0);
}

TEST(ExcessWealth, DualityWithTttAtEveryKnot) {
    ttt::Rng rng(9);
    const auto d = ttt::Distribution::weibull(0.8, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = d.sample(2 + rng.uniform_index(300), rng);
        const auto t = ttt::ttt_empirical(s, CurveKind::Step);
        const auto w = ttt::excess_wealth_empirical(s, CurveKind::Step);
        for (std::size_t k = 0; k < t.knot_count(); ++k) {
            // W_k is the correctly rounded mean - T_k ...
            EXPECT_EQ(w.values()[k], s.mean() - t.values()[k]);
            // ... so the exact real sum W_k + T_k misses the mean by at most half an ulp of W_k.
            const auto exact = ttt::oracle::two_sum(w.values()[k], t.values()[k]);
            const double residual = (exact.sum - s.mean()) + exact.error;
            EXPECT_LE(std::abs(residual),
                      0.5 * (std::nextafter(w.values()[k], 2 * s.mean()) - w.values()[k]) + 0.0);
        }
    }
}
