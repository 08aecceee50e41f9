#include "tttest/bootstrap.hpp"

#include "tttest/error.hpp"
#include "tttest/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ttt {

std::string_view to_string(Scheme scheme) noexcept {
    return scheme == Scheme::Independent ? "independent" : "paired";
}

Scheme parse_scheme(std::string_view text) {
    if (text == "independent") return Scheme::Independent;
    if (text == "paired" || text == "matched-pairs") return Scheme::MatchedPairs;
    throw Error(ErrorCode::ParseError, "unknown sampling scheme '" + std::string(text) + "'");
}

void BootstrapConfig::validate() const {
    if (replications < 1) throw Error(ErrorCode::InvalidParameter, "K must be at least 1");
}

std::uint64_t WeightVector::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

WeightVector draw_weights(std::size_t n, Rng& rng) {
    if (n == 0) throw Error(ErrorCode::InvalidParameter, "weights need n >= 1");
    std::vector<std::uint32_t> counts(n, 0);
    for (std::size_t draw = 0; draw < n; ++draw) ++counts[rng.uniform_index(n)];
    return WeightVector(std::move(counts));
}

std::vector<double> resampled_values(std::span<const double> values, const WeightVector& weights) {
    if (weights.size() != values.size()) {
        throw Error(ErrorCode::LengthMismatch, "weight vector length " +
                                                   std::to_string(weights.size()) +
                                                   " != sample size " +
                                                   std::to_string(values.size()));
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(weights.total()));
    const auto counts = weights.counts();
    for (std::size_t i = 0; i < values.size(); ++i) out.insert(out.end(), counts[i], values[i]);
    return out;
}

PiecewiseCurve resample_transform(const Sample& s, const WeightVector& weights,
                                  TransformType transform, CurveKind kind) {
    const Sample resampled = Sample::ingest(resampled_values(s.values(), weights));
    switch (transform) {
        case TransformType::TTT: return ttt_empirical(resampled, kind);
        case TransformType::ScaledTTT: return scaled_ttt(resampled, kind);
        case TransformType::ExcessWealth: return excess_wealth_empirical(resampled, kind);
    }
    throw Error(ErrorCode::InvalidParameter, "unknown transform");
}

std::pair<Sample, Sample> paired_resample(const PairedSample& ps, const WeightVector& weights) {
    if (weights.size() != ps.size()) {
        throw Error(ErrorCode::LengthMismatch, "weight vector length does not match pair count");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    xs.reserve(ps.size());
    ys.reserve(ps.size());
    const auto counts = weights.counts();
    const auto pairs = ps.pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        xs.insert(xs.end(), counts[i], pairs[i].first);
        ys.insert(ys.end(), counts[i], pairs[i].second);
    }
    return {Sample::ingest(std::move(xs)), Sample::ingest(std::move(ys))};
}

double bootstrap_pvalue(double observed, std::span<const double> replicates) {
    if (replicates.empty()) throw Error(ErrorCode::InvalidParameter, "no bootstrap replicates");
    const auto exceed = std::count_if(replicates.begin(), replicates.end(),
                                      [observed](double t) { return t > observed; });
    return static_cast<double>(exceed) / static_cast<double>(replicates.size());
}

}  // namespace ttt
