#include "tttest/hypothesis.hpp"

#include "tttest/error.hpp"
#include "tttest/parallel.hpp"
#include "tttest/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace ttt {

std::string_view to_string(TestKind test) noexcept {
    switch (test) {
        case TestKind::TTTOrder: return "ttt";
        case TestKind::ExcessWealthOrder: return "ew";
        case TestKind::NBUE: return "nbue";
    }
    return "unknown";
}

TestKind parse_test_kind(std::string_view text) {
    if (text == "ttt") return TestKind::TTTOrder;
    if (text == "ew") return TestKind::ExcessWealthOrder;
    if (text == "nbue") return TestKind::NBUE;
    throw Error(ErrorCode::ParseError, "unknown test '" + std::string(text) + "'");
}

void TestConfig::validate() const {
    if (!(alpha > 0.0 && alpha < 0.5)) {
        throw Error(ErrorCode::InvalidParameter, "alpha must lie in (0, 1/2)");
    }
    bootstrap.validate();
}

namespace {

// Transform values at k/n for sorted data; excess wealth uses T(1) as the mean.
std::vector<double> transform_knots(std::span<const double> sorted, TestKind test) {
    auto values = ttt_knot_values(sorted);
    if (test == TestKind::ExcessWealthOrder) return excess_wealth_knot_values(values);
    return values;
}

// Evaluates the curve with knots k/n (k = 0..n) at every point of a sorted
// grid containing those knots. Same arithmetic as PiecewiseCurve::operator().
std::vector<double> evaluate_on_grid(std::span<const double> values, std::span<const double> grid,
                                     CurveKind kind) {
    const std::size_t n = values.size() - 1;
    const double dn = static_cast<double>(n);
    std::vector<double> out(grid.size());
    std::size_t k = 0;
    double knot = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double g = grid[j];
        while (knot < g) {
            ++k;
            knot = static_cast<double>(k) / dn;
        }
        if (knot == g || kind == CurveKind::Step) {
            out[j] = values[k];
        } else {
            const double left = static_cast<double>(k - 1) / dn;
            const double t = (g - left) / (knot - left);
            out[j] = values[k - 1] + t * (values[k] - values[k - 1]);
        }
    }
    return out;
}

std::vector<double> two_sample_grid(std::size_t n, std::size_t m) {
    if (n == m) return uniform_grid(n);
    const auto a = uniform_grid(n);
    const auto b = uniform_grid(m);
    return merge_grids(a, b);
}

// (G side) - (F side) on the grid.
std::vector<double> difference_on_grid(std::span<const double> x_sorted,
                                       std::span<const double> y_sorted,
                                       std::span<const double> grid, TestKind test,
                                       CurveKind kind) {
    const auto fx = evaluate_on_grid(transform_knots(x_sorted, test), grid, kind);
    auto out = evaluate_on_grid(transform_knots(y_sorted, test), grid, kind);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= fx[j];
    return out;
}

ReplicateSummary summarize(std::vector<double> stats) {
    std::sort(stats.begin(), stats.end());
    const std::size_t k = stats.size();
    const double median =
        k % 2 == 1 ? stats[k / 2] : 0.5 * (stats[k / 2 - 1] + stats[k / 2]);
    return {stats.front(), median, stats.back()};
}

// Runs K replicates (each on its own substream) and fills in the decision.
TestReport finish(TestReport report, const TestConfig& cfg,
                  const std::function<double(Rng&)>& replicate) {
    const auto& boot = cfg.bootstrap;
    std::vector<double> stats(boot.replications);
    parallel_for(stats.size(), boot.workers, [&](std::size_t k) {
        Rng rng = Rng::substream(boot.seed, {static_cast<std::uint64_t>(k)});
        stats[k] = replicate(rng);
    });
    report.p_value = bootstrap_pvalue(report.statistic, stats);
    report.reject = report.p_value < cfg.alpha;
    report.replicates = summarize(std::move(stats));
    return report;
}

TestReport base_report(const TestConfig& cfg, std::size_t n, std::optional<std::size_t> m) {
    TestReport report;
    report.test = cfg.test;
    report.r = cfg.r;
    report.alpha = cfg.alpha;
    report.n = n;
    report.m = m;
    report.replications = cfg.bootstrap.replications;
    report.seed = cfg.bootstrap.seed;
    report.scheme = cfg.bootstrap.scheme;
    report.kind = cfg.kind;
    return report;
}

double two_sample_scale(std::size_t n, std::size_t m) {
    const double dn = static_cast<double>(n);
    const double dm = static_cast<double>(m);
    return std::sqrt(dn * dm / (dn + dm));
}

void expect_test(const TestConfig& cfg, TestKind test) {
    cfg.validate();
    if (cfg.test != test) {
        throw Error(ErrorCode::InvalidParameter,
                    "configuration is for the '" + std::string(to_string(cfg.test)) +
                        "' test, not '" + std::string(to_string(test)) + "'");
    }
}

TestReport run_independent(const Sample& x, const Sample& y, const TestConfig& cfg, TestKind test) {
    expect_test(cfg, test);
    if (cfg.bootstrap.scheme != Scheme::Independent) {
        throw Error(ErrorCode::SchemeMismatch, "matched pairs need paired input");
    }
    const std::size_t n = x.size();
    const std::size_t m = y.size();
    const auto grid = two_sample_grid(n, m);
    const auto observed = difference_on_grid(x.values(), y.values(), grid, test, cfg.kind);

    TestReport report = base_report(cfg, n, m);
    report.statistic = phi(cfg.r, PiecewiseCurve(grid, observed, cfg.kind));
    report.scaled_statistic = two_sample_scale(n, m) * report.statistic;

    return finish(std::move(report), cfg, [&](Rng& rng) {
        const auto wx = draw_weights(n, rng);
        const auto wy = draw_weights(m, rng);
        auto d = difference_on_grid(resampled_values(x.values(), wx),
                                    resampled_values(y.values(), wy), grid, test, cfg.kind);
        for (std::size_t j = 0; j < d.size(); ++j) d[j] -= observed[j];
        return phi(cfg.r, PiecewiseCurve(grid, std::move(d), cfg.kind));
    });
}

TestReport run_paired(const PairedSample& xy, const TestConfig& cfg, TestKind test) {
    expect_test(cfg, test);
    if (cfg.bootstrap.scheme != Scheme::MatchedPairs) {
        throw Error(ErrorCode::SchemeMismatch, "paired input needs the matched-pairs scheme");
    }
    const std::size_t n = xy.size();
    const auto grid = uniform_grid(n);
    const Sample x = xy.x();
    const Sample y = xy.y();
    const auto observed = difference_on_grid(x.values(), y.values(), grid, test, cfg.kind);

    TestReport report = base_report(cfg, n, n);
    report.statistic = phi(cfg.r, PiecewiseCurve(grid, observed, cfg.kind));
    report.scaled_statistic = two_sample_scale(n, n) * report.statistic;

    return finish(std::move(report), cfg, [&](Rng& rng) {
        const auto w = draw_weights(n, rng);
        const auto [xs, ys] = paired_resample(xy, w);
        auto d = difference_on_grid(xs.values(), ys.values(), grid, test, cfg.kind);
        for (std::size_t j = 0; j < d.size(); ++j) d[j] -= observed[j];
        return phi(cfg.r, PiecewiseCurve(grid, std::move(d), cfg.kind));
    });
}

std::vector<double> scaled_knots(std::span<const double> sorted) {
    auto values = ttt_knot_values(sorted);
    const double mean = values.back();
    if (!(mean > 0.0)) throw Error(ErrorCode::ZeroMean, "scaled TTT needs a positive mean");
    for (double& v : values) v /= mean;
    return values;
}

}  // namespace

PiecewiseCurve two_sample_difference(const Sample& x, const Sample& y, TestKind test,
                                     CurveKind kind) {
    if (test == TestKind::NBUE) {
        throw Error(ErrorCode::InvalidParameter, "NBUE is a one-sample test");
    }
    auto grid = two_sample_grid(x.size(), y.size());
    auto values = difference_on_grid(x.values(), y.values(), grid, test, kind);
    return {std::move(grid), std::move(values), kind};
}

PiecewiseCurve nbue_difference(const Sample& x, CurveKind kind) {
    auto grid = uniform_grid(x.size());
    auto values = scaled_knots(x.values());
    for (std::size_t k = 0; k < values.size(); ++k) values[k] = grid[k] - values[k];
    return {std::move(grid), std::move(values), kind};
}

TestReport test_ttt_order(const Sample& x, const Sample& y, const TestConfig& cfg) {
    return run_independent(x, y, cfg, TestKind::TTTOrder);
}

TestReport test_ttt_order(const PairedSample& xy, const TestConfig& cfg) {
    return run_paired(xy, cfg, TestKind::TTTOrder);
}

TestReport test_ew_order(const Sample& x, const Sample& y, const TestConfig& cfg) {
    return run_independent(x, y, cfg, TestKind::ExcessWealthOrder);
}

TestReport test_ew_order(const PairedSample& xy, const TestConfig& cfg) {
    return run_paired(xy, cfg, TestKind::ExcessWealthOrder);
}

TestReport test_nbue(const Sample& x, const TestConfig& cfg) {
    expect_test(cfg, TestKind::NBUE);
    const std::size_t n = x.size();
    const auto grid = uniform_grid(n);
    const auto s = scaled_knots(x.values());

    TestReport report = base_report(cfg, n, std::nullopt);
    report.statistic = phi(cfg.r, nbue_difference(x, cfg.kind));
    report.scaled_statistic = std::sqrt(static_cast<double>(n)) * report.statistic;

    return finish(std::move(report), cfg, [&](Rng& rng) {
        const auto star = scaled_knots(resampled_values(x.values(), draw_weights(n, rng)));
        std::vector<double> d(s.size());
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = s[k] - star[k];
        return phi(cfg.r, PiecewiseCurve(grid, std::move(d), cfg.kind));
    });
}

}  // namespace ttt
