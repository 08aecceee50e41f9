#pragma once

#include "tttest/bootstrap.hpp"
#include "tttest/curve.hpp"
#include "tttest/functional.hpp"
#include "tttest/sample.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ttt {

enum class TestKind {
    TTTOrder,           ///< H0: X >=_ttt Y
    ExcessWealthOrder,  ///< H0: X >=_ew Y
    NBUE,               ///< H0: X / mu >=_ttt unit exponential
};

[[nodiscard]] std::string_view to_string(TestKind test) noexcept;
/// "ttt", "ew" or "nbue".
[[nodiscard]] TestKind parse_test_kind(std::string_view text);

struct TestConfig {
    TestKind test = TestKind::TTTOrder;
    PhiR r = PhiR::infinity();
    double alpha = 0.1;
    BootstrapConfig bootstrap;
    CurveKind kind = CurveKind::Step;

    /// alpha must lie in (0, 1/2).
    void validate() const;
};

struct ReplicateSummary {
    double min = 0.0;
    double median = 0.0;
    double max = 0.0;
};

struct TestReport {
    TestKind test = TestKind::TTTOrder;
    PhiR r = PhiR::infinity();
    double alpha = 0.0;
    std::size_t n = 0;
    std::optional<std::size_t> m;
    double statistic = 0.0;         ///< Phi_r(delta_hat)
    double scaled_statistic = 0.0;  ///< sqrt(nm/(n+m)) or sqrt(n) times the statistic
    double p_value = 1.0;
    bool reject = false;  ///< p_value < alpha
    std::size_t replications = 0;
    std::uint64_t seed = 0;
    Scheme scheme = Scheme::Independent;
    CurveKind kind = CurveKind::Step;
    ReplicateSummary replicates;
};

/**
 * Observed difference for the two-sample tests on the merged grid:
 * T_{G_m} - T_{F_n} for the TTT order, W_{G_m} - W_{F_n} for excess wealth,
 * with x ~ F and y ~ G.
 */
[[nodiscard]] PiecewiseCurve two_sample_difference(const Sample& x, const Sample& y,
                                                   TestKind test, CurveKind kind);

/// p - S_{F_n}(p) at the knots k/n. For step curves the identity is read at the knots.
[[nodiscard]] PiecewiseCurve nbue_difference(const Sample& x, CurveKind kind);

// Two-sample tests. The Sample overloads need the independent scheme and the
// PairedSample overloads the matched-pairs scheme; anything else is SchemeMismatch.
// The observed statistic is Phi_r(delta_hat); replicate k is
// Phi_r(delta_hat*_k - delta_hat), and the p-value is the fraction of replicates
// strictly above the observed statistic. The sqrt(r_{n,m}) factor multiplies both
// sides of that comparison and is left out of it.

[[nodiscard]] TestReport test_ttt_order(const Sample& x, const Sample& y, const TestConfig& cfg);
[[nodiscard]] TestReport test_ttt_order(const PairedSample& xy, const TestConfig& cfg);
[[nodiscard]] TestReport test_ew_order(const Sample& x, const Sample& y, const TestConfig& cfg);
[[nodiscard]] TestReport test_ew_order(const PairedSample& xy, const TestConfig& cfg);

/// NBUE goodness of fit: replicate k is Phi_r(S_{F_n} - S_{F*_n}). Throws ZeroMean.
[[nodiscard]] TestReport test_nbue(const Sample& x, const TestConfig& cfg);

/// Stable JSON object: test, r, alpha, n, m, statistic, scaled_statistic,
/// p_value, reject, K, seed, scheme, kind, replicates{min,median,max}.
[[nodiscard]] std::string to_json(const TestReport& report, int indent = 2);

}  // namespace ttt
