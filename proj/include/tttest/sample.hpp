#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace ttt {

/**
 * An ordered sample of nonnegative observations.
 *
 * Values are sorted on construction and never change afterwards, so a Sample
 * can be shared freely between bootstrap workers. Ties and zeros are legal;
 * the large-sample guarantees of the tests assume a continuous distribution
 * with no mass at zero, but every estimator here is well defined without it.
 */
class Sample {
public:
    /// Validates and sorts. Throws EmptyInput, TooFewObservations (n < 2),
    /// NonFiniteValue or NegativeValue.
    [[nodiscard]] static Sample ingest(std::span<const double> raw);
    [[nodiscard]] static Sample ingest(std::vector<double> raw);

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] double mean() const noexcept { return mean_; }

    /// k-th smallest value for k in 1..n; k = 0 yields 0 (X_(0) := 0).
    [[nodiscard]] double order_statistic(std::size_t k) const;

    /// (1/n) #{i : X_i <= x}.
    [[nodiscard]] double empirical_cdf(double x) const noexcept;

    /// Every value multiplied by c > 0.
    [[nodiscard]] Sample scaled(double c) const;

private:
    explicit Sample(std::vector<double> sorted);

    std::vector<double> values_;
    double mean_ = 0.0;
};

/// Matched pairs (X_i, Y_i); pairing order is preserved.
class PairedSample {
public:
    [[nodiscard]] static PairedSample ingest(std::span<const std::pair<double, double>> pairs);

    [[nodiscard]] std::size_t size() const noexcept { return pairs_.size(); }
    [[nodiscard]] std::span<const std::pair<double, double>> pairs() const noexcept {
        return pairs_;
    }

    [[nodiscard]] Sample x() const;
    [[nodiscard]] Sample y() const;

private:
    explicit PairedSample(std::vector<std::pair<double, double>> pairs)
        : pairs_(std::move(pairs)) {}

    std::vector<std::pair<double, double>> pairs_;
};

}  // namespace ttt
