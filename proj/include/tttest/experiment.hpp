#pragma once

#include "tttest/distributions.hpp"
#include "tttest/hypothesis.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ttt {

/// X ~ x and, for the two-sample tests, Y ~ y. NBUE tests use x only.
struct Scenario {
    std::string id;
    Distribution x;
    std::optional<Distribution> y;
};

struct SizePair {
    std::size_t n = 0;
    std::size_t m = 0;
};

struct ExperimentSpec {
    std::vector<Scenario> scenarios;
    std::vector<SizePair> sizes{{50, 50}, {100, 100}, {200, 200}, {500, 500}};
    std::size_t reps = 200;
    /// All tests see the same simulated data and bootstrap weights in a repetition.
    std::vector<TestConfig> tests;
    std::uint64_t seed = 0;
    unsigned workers = 0;  // 0 = default_worker_count()

    void validate() const;
};

struct RejectionRow {
    std::string scenario;
    TestKind test = TestKind::TTTOrder;
    PhiR r = PhiR::infinity();
    double alpha = 0.0;
    CurveKind kind = CurveKind::Step;
    std::size_t n = 0;
    std::optional<std::size_t> m;
    std::size_t reps = 0;
    std::size_t rejections = 0;
    double rejection_rate = 0.0;  // rejections / reps
    double mc_std_err = 0.0;      // sqrt(rate (1 - rate) / reps)
    double mean_p_value = 0.0;
};

struct RejectionTable {
    std::vector<RejectionRow> rows;

    [[nodiscard]] const RejectionRow& find(const std::string& scenario, TestKind test,
                                           const PhiR& r, std::size_t n) const;
    void write_csv(std::ostream& out) const;
};

/**
 * Monte Carlo rejection rates. Every (scenario, n, m, repetition) draws its
 * data from its own substream keyed by the scenario id, so results do not
 * depend on the worker count or on which other scenarios are present.
 */
[[nodiscard]] RejectionTable run_experiment(const ExperimentSpec& spec);

/// p, scaled_ttt, identity on the grid i/511, i = 0..511.
void emit_transform_plot(const Distribution& d, std::ostream& out);

/// Same grid merged with the sample's knots k/n, so every knot value appears.
void emit_transform_plot(const Sample& s, CurveKind kind, std::ostream& out);

}  // namespace ttt
