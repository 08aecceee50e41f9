#pragma once

#include "tttest/curve.hpp"
#include "tttest/random.hpp"
#include "tttest/sample.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace ttt {

enum class Scheme { Independent, MatchedPairs };

[[nodiscard]] std::string_view to_string(Scheme scheme) noexcept;
/// "independent" or "paired".
[[nodiscard]] Scheme parse_scheme(std::string_view text);

struct BootstrapConfig {
    std::size_t replications = 500;  // K
    std::uint64_t seed = 0;
    Scheme scheme = Scheme::Independent;
    unsigned workers = 0;  // 0 = default_worker_count()

    void validate() const;
};

/// Multinomial(n; 1/n, ..., 1/n) counts; the counts always sum to n.
class WeightVector {
public:
    explicit WeightVector(std::vector<std::uint32_t> counts) : counts_(std::move(counts)) {}

    [[nodiscard]] std::size_t size() const noexcept { return counts_.size(); }
    [[nodiscard]] std::span<const std::uint32_t> counts() const noexcept { return counts_; }
    [[nodiscard]] std::uint64_t total() const noexcept;

private:
    std::vector<std::uint32_t> counts_;
};

/// Counts of n index draws with replacement.
[[nodiscard]] WeightVector draw_weights(std::size_t n, Rng& rng);

enum class TransformType { TTT, ScaledTTT, ExcessWealth };

/// values[i] repeated counts[i] times. Sorted input gives sorted output.
[[nodiscard]] std::vector<double> resampled_values(std::span<const double> values,
                                                   const WeightVector& weights);

/// Transform of the weighted empirical CDF (1/n) sum M_i 1(X_(i) <= x).
/// Weight i applies to the i-th order statistic. Throws LengthMismatch.
[[nodiscard]] PiecewiseCurve resample_transform(const Sample& s, const WeightVector& weights,
                                                TransformType transform, CurveKind kind);

/// Resamples whole pairs with one weight vector; returns the two margins.
[[nodiscard]] std::pair<Sample, Sample> paired_resample(const PairedSample& ps,
                                                        const WeightVector& weights);

/// Fraction of replicate statistics strictly greater than the observed one.
[[nodiscard]] double bootstrap_pvalue(double observed, std::span<const double> replicates);

}  // namespace ttt
