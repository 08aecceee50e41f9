#include "tttest/sample.hpp"

#include "tttest/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ttt {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::TooFewObservations: return "TooFewObservations";
        case ErrorCode::NegativeValue: return "NegativeValue";
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::ZeroMean: return "ZeroMean";
        case ErrorCode::KindMismatch: return "KindMismatch";
        case ErrorCode::InvalidR: return "InvalidR";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::SchemeMismatch: return "SchemeMismatch";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::ParameterOutOfDomain: return "ParameterOutOfDomain";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

namespace {

void check_value(double v, std::size_t index) {
    if (!std::isfinite(v)) {
        throw Error(ErrorCode::NonFiniteValue,
                    "observation " + std::to_string(index) + " is not finite");
    }
    if (v < 0.0) {
        throw Error(ErrorCode::NegativeValue, "observation " + std::to_string(index) +
                                                  " is negative (" + std::to_string(v) + ")");
    }
}

void check_size(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::EmptyInput, "no observations");
    if (n < 2) throw Error(ErrorCode::TooFewObservations, "need at least two observations");
}

}  // namespace

Sample::Sample(std::vector<double> sorted) : values_(std::move(sorted)) {
    // T_{F_n}(1) sums in this same order, which keeps it bit-identical to the mean.
    const double sum = std::accumulate(values_.begin(), values_.end(), 0.0);
    mean_ = sum / static_cast<double>(values_.size());
}

Sample Sample::ingest(std::span<const double> raw) {
    return ingest(std::vector<double>(raw.begin(), raw.end()));
}

Sample Sample::ingest(std::vector<double> raw) {
    check_size(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) check_value(raw[i], i);
    std::sort(raw.begin(), raw.end());
    return Sample(std::move(raw));
}

double Sample::order_statistic(std::size_t k) const {
    if (k == 0) return 0.0;
    if (k > values_.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "rank " + std::to_string(k) + " exceeds n = " +
                                                    std::to_string(values_.size()));
    }
    return values_[k - 1];
}

double Sample::empirical_cdf(double x) const noexcept {
    const auto count = std::upper_bound(values_.begin(), values_.end(), x) - values_.begin();
    return static_cast<double>(count) / static_cast<double>(values_.size());
}

Sample Sample::scaled(double c) const {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw Error(ErrorCode::InvalidParameter, "scale factor must be positive and finite");
    }
    std::vector<double> out(values_);
    for (double& v : out) v *= c;
    return Sample(std::move(out));
}

PairedSample PairedSample::ingest(std::span<const std::pair<double, double>> pairs) {
    check_size(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        check_value(pairs[i].first, i);
        check_value(pairs[i].second, i);
    }
    return PairedSample({pairs.begin(), pairs.end()});
}

Sample PairedSample::x() const {
    std::vector<double> v;
    v.reserve(pairs_.size());
    for (const auto& [x, y] : pairs_) v.push_back(x);
    return Sample::ingest(std::move(v));
}

Sample PairedSample::y() const {
    std::vector<double> v;
    v.reserve(pairs_.size());
    for (const auto& [x, y] : pairs_) v.push_back(y);
    return Sample::ingest(std::move(v));
}

}  // namespace ttt
