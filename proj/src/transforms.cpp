#include "tttest/transforms.hpp"

#include "tttest/error.hpp"

namespace ttt {

std::vector<double> ttt_knot_values(std::span<const double> sorted) {
    const std::size_t n = sorted.size();
    const double dn = static_cast<double>(n);
    std::vector<double> out(n + 1);
    out[0] = 0.0;
    double cumulative = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        cumulative += sorted[k - 1];
        out[k] = (static_cast<double>(n - k) * sorted[k - 1] + cumulative) / dn;
    }
    return out;
}

std::vector<double> uniform_grid(std::size_t n) {
    std::vector<double> grid(n + 1);
    const double dn = static_cast<double>(n);
    for (std::size_t k = 0; k <= n; ++k) grid[k] = static_cast<double>(k) / dn;
    return grid;
}

PiecewiseCurve ttt_empirical(const Sample& s, CurveKind kind) {
    return {uniform_grid(s.size()), ttt_knot_values(s.values()), kind};
}

PiecewiseCurve scaled_ttt(const Sample& s, CurveKind kind) {
    const double mean = s.mean();
    if (!(mean > 0.0)) throw Error(ErrorCode::ZeroMean, "scaled TTT needs a positive sample mean");
    auto values = ttt_knot_values(s.values());
    for (double& v : values) v /= mean;
    return {uniform_grid(s.size()), std::move(values), kind};
}

std::vector<double> excess_wealth_knot_values(std::span<const double> ttt_knots) {
    const double mean = ttt_knots.back();
    std::vector<double> out(ttt_knots.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = mean - ttt_knots[k];
    return out;
}

PiecewiseCurve excess_wealth_empirical(const Sample& s, CurveKind kind) {
    return {uniform_grid(s.size()), excess_wealth_knot_values(ttt_knot_values(s.values())), kind};
}

}  // namespace ttt
